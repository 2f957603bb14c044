//! Formal power series in an auxiliary variable `t` with ring coefficients.

use alloc::{sync::Arc, vec::Vec};

use crate::ring::{Presentation, RingElement};

/// `a(t) = Σ a_k t^k` with finite support; negative or missing indices read as 0.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalSeries {
    ring: Arc<Presentation>,
    coeffs: Vec<RingElement>,
}

impl FormalSeries {
    /// Series with coefficients `a_0, a_1, ...`.
    pub fn new(ring: &Arc<Presentation>, coeffs: Vec<RingElement>) -> Self {
        FormalSeries {
            ring: Arc::clone(ring),
            coeffs,
        }
    }

    /// Total-Chern-type series `1 + a_1 t + a_2 t^2 + ...`.
    pub fn with_unit_constant(ring: &Arc<Presentation>, tail: &[RingElement]) -> Self {
        let mut coeffs = Vec::with_capacity(tail.len() + 1);
        coeffs.push(ring.one());
        coeffs.extend(tail.iter().cloned());
        Self::new(ring, coeffs)
    }

    pub fn ring(&self) -> &Arc<Presentation> {
        &self.ring
    }

    pub fn get(&self, k: i64) -> RingElement {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.coeffs.get(k).cloned())
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn coefficients(&self) -> &[RingElement] {
        &self.coeffs
    }

    /// Product truncated at `t^n`.
    pub fn mul_truncated(&self, other: &Self, n: usize) -> Self {
        let mut coeffs = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.ring.zero();
            for i in 0..=k {
                let a = self.get(i as i64);
                if a.is_zero() {
                    continue;
                }
                acc += &(&a * &other.get((k - i) as i64));
            }
            coeffs.push(acc);
        }
        Self::new(&self.ring, coeffs)
    }
}
