//! Formal bundles and their characteristic classes.
//!
//! Chern roots are never materialized; everything goes through power sums
//! `p_k = Σ x_i^k`, which Newton's identities tie to the Chern classes:
//!
//! ```text
//! p_n - c_1 p_{n-1} + c_2 p_{n-2} - ... + (-1)^n n c_n = 0.
//! ```

use alloc::{sync::Arc, vec::Vec};

use num_traits::{One, Zero};

use crate::{
    ring::{Presentation, RingElement},
    series::FormalSeries,
    Error, Rational, Result,
};

/// A bundle given by rank and Chern classes `c_1, c_2, ...` (missing ones are
/// zero). Virtual bundles may have negative rank and Chern classes beyond it.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalBundle {
    ring: Arc<Presentation>,
    rank: i64,
    chern: Vec<RingElement>,
    is_virtual: bool,
}

/// Power sums `p_1 .. p_N` of the Chern roots.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSums {
    sums: Vec<RingElement>,
}

impl PowerSums {
    pub fn new(sums: Vec<RingElement>) -> Self {
        PowerSums { sums }
    }

    /// `p_k` for `k >= 1`; `None` beyond the stored range.
    pub fn get(&self, k: usize) -> Option<&RingElement> {
        k.checked_sub(1).and_then(|i| self.sums.get(i))
    }

    pub fn as_slice(&self) -> &[RingElement] {
        &self.sums
    }

    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| {
        acc * Rational::from_integer(k.into())
    })
}

/// Binomial coefficient `C(n, k)` for any integer `n`.
fn binomial(n: i64, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= Rational::from_integer((n - i as i64).into());
    }
    acc / factorial(k)
}

fn trim(mut chern: Vec<RingElement>) -> Vec<RingElement> {
    while chern.last().is_some_and(RingElement::is_zero) {
        chern.pop();
    }
    chern
}

impl FormalBundle {
    /// An honest bundle: `rank >= 0`, `c_i` homogeneous of degree `2i` and zero
    /// for `i > rank`.
    pub fn new(ring: &Arc<Presentation>, rank: i64, chern: Vec<RingElement>) -> Result<Self> {
        if rank < 0 {
            return Err(Error::NegativeRank(rank));
        }
        let chern = Self::validated(ring, chern)?;
        if chern.len() as i64 > rank {
            return Err(Error::InvalidParameter(alloc::format!(
                "c_{} is nonzero on a bundle of rank {rank}",
                chern.len()
            )));
        }
        Ok(FormalBundle {
            ring: Arc::clone(ring),
            rank,
            chern,
            is_virtual: false,
        })
    }

    /// A K-theory class with arbitrary rank and Chern data.
    pub fn new_virtual(
        ring: &Arc<Presentation>,
        rank: i64,
        chern: Vec<RingElement>,
    ) -> Result<Self> {
        let chern = Self::validated(ring, chern)?;
        Ok(FormalBundle {
            ring: Arc::clone(ring),
            rank,
            chern,
            is_virtual: true,
        })
    }

    fn validated(ring: &Arc<Presentation>, chern: Vec<RingElement>) -> Result<Vec<RingElement>> {
        for (i, c) in chern.iter().enumerate() {
            if !Arc::ptr_eq(c.ring(), ring) && **c.ring() != **ring {
                return Err(Error::IncompatiblePresentations);
            }
            let expected = 2 * (i as u32 + 1);
            if !c.is_homogeneous(expected) {
                return Err(Error::NotHomogeneous { expected });
            }
        }
        Ok(trim(chern))
    }

    pub fn trivial(ring: &Arc<Presentation>, rank: u32) -> Self {
        FormalBundle {
            ring: Arc::clone(ring),
            rank: rank.into(),
            chern: Vec::new(),
            is_virtual: false,
        }
    }

    /// Line bundle with first Chern class `l`.
    pub fn line(l: &RingElement) -> Result<Self> {
        Self::new(l.ring(), 1, alloc::vec![l.clone()])
    }

    pub fn ring(&self) -> &Arc<Presentation> {
        &self.ring
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn is_virtual(&self) -> bool {
        self.is_virtual
    }

    /// `c_i`, with `c_0 = 1` and zero past the stored classes.
    pub fn chern(&self, i: usize) -> RingElement {
        match i {
            0 => self.ring.one(),
            _ => self
                .chern
                .get(i - 1)
                .cloned()
                .unwrap_or_else(|| self.ring.zero()),
        }
    }

    /// The stored classes `c_1 .. c_k` (trailing zeros trimmed).
    pub fn chern_classes(&self) -> &[RingElement] {
        &self.chern
    }

    /// Newton's identities: `p_n = Σ_{i<n} (-1)^{i-1} c_i p_{n-i} + (-1)^{n-1} n c_n`.
    pub fn power_sums(&self, n: usize) -> PowerSums {
        let mut sums: Vec<RingElement> = Vec::with_capacity(n);
        for k in 1..=n {
            let mut p = self.chern(k).scale_int(k as i64);
            if k % 2 == 0 {
                p = -&p;
            }
            for i in 1..k {
                let c = self.chern(i);
                if c.is_zero() {
                    continue;
                }
                let term = &c * &sums[k - i - 1];
                if i % 2 == 1 {
                    p += &term;
                } else {
                    p -= &term;
                }
            }
            sums.push(p);
        }
        PowerSums { sums }
    }

    /// Inverse of [`FormalBundle::power_sums`] via `n c_n = Σ_{r=1}^n (-1)^{r-1} p_r c_{n-r}`.
    ///
    /// The result is flagged virtual when `rank < 0` or a Chern class survives
    /// past the rank.
    pub fn from_power_sums(ring: &Arc<Presentation>, rank: i64, p: &PowerSums, n: usize) -> Self {
        let mut chern: Vec<RingElement> = Vec::with_capacity(n);
        for k in 1..=n {
            let mut acc = ring.zero();
            for r in 1..=k {
                let Some(pr) = p.get(r) else { continue };
                let prev = if r == k {
                    ring.one()
                } else {
                    chern[k - r - 1].clone()
                };
                if prev.is_zero() {
                    continue;
                }
                let term = pr * &prev;
                if r % 2 == 1 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            chern.push(acc.scale(&Rational::new(1.into(), (k as i64).into())));
        }
        let chern = trim(chern);
        let is_virtual = rank < 0 || chern.len() as i64 > rank;
        FormalBundle {
            ring: Arc::clone(ring),
            rank,
            chern,
            is_virtual,
        }
    }

    /// `ch = rank + Σ_{k=1}^n p_k / k!`, i.e. all parts up to degree `2n`.
    pub fn chern_character(&self, n: usize) -> RingElement {
        let p = self.power_sums(n);
        let mut ch = self.ring.constant(Rational::from_integer(self.rank.into()));
        for (k, pk) in p.sums.iter().enumerate() {
            let k = k + 1;
            ch += &pk.scale(&(Rational::one() / factorial(k)));
        }
        ch
    }

    /// `td = Π x_i / (1 - e^{-x_i}) = exp(Σ a_k p_k)` where
    /// `Σ a_k x^k = log(x / (1 - e^{-x}))`; parts up to degree `2n`.
    pub fn todd(&self, n: usize) -> RingElement {
        let a = univariate::todd_log_coefficients(n);
        let p = self.power_sums(n);
        let mut z = self.ring.zero();
        for (k, pk) in p.sums.iter().enumerate() {
            z += &pk.scale(&a[k + 1]);
        }
        exp_nilpotent(&z, 2 * n as u32)
    }

    /// `E ⊗ L` where `c_1(L) = l`:
    /// `c_k(E ⊗ L) = Σ_{i<=k} C(r-i, k-i) c_i l^{k-i}`.
    pub fn tensor_line(&self, l: &RingElement) -> Result<Self> {
        if !l.is_homogeneous(2) {
            return Err(Error::NotHomogeneous { expected: 2 });
        }
        if !Arc::ptr_eq(l.ring(), &self.ring) && **l.ring() != *self.ring {
            return Err(Error::IncompatiblePresentations);
        }
        let top = if self.is_virtual {
            (self.ring.truncation() / 2) as usize
        } else {
            self.rank as usize
        };
        let mut powers = alloc::vec![self.ring.one()];
        for k in 1..=top {
            let next = &powers[k - 1] * l;
            powers.push(next);
        }
        let mut chern = Vec::with_capacity(top);
        for k in 1..=top {
            let mut acc = self.ring.zero();
            for i in 0..=k {
                let c = self.chern(i);
                if c.is_zero() || powers[k - i].is_zero() {
                    continue;
                }
                let coeff = binomial(self.rank - i as i64, k - i);
                acc += &(&c * &powers[k - i]).scale(&coeff);
            }
            chern.push(acc);
        }
        Ok(FormalBundle {
            ring: Arc::clone(&self.ring),
            rank: self.rank,
            chern: trim(chern),
            is_virtual: self.is_virtual,
        })
    }

    /// Root negation: `c_i ↦ (-1)^i c_i`.
    pub fn dual(&self) -> Self {
        let chern = self
            .chern
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { -c } else { c.clone() })
            .collect();
        FormalBundle {
            ring: Arc::clone(&self.ring),
            rank: self.rank,
            chern,
            is_virtual: self.is_virtual,
        }
    }

    /// Whitney sum through the total Chern class `c(E ⊕ F) = c(E) c(F)`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&other.ring, &self.ring) && *other.ring != *self.ring {
            return Err(Error::IncompatiblePresentations);
        }
        let top = self.chern.len() + other.chern.len();
        let product = self.total_chern().mul_truncated(&other.total_chern(), top);
        let chern = product.coefficients()[1..].to_vec();
        Ok(FormalBundle {
            ring: Arc::clone(&self.ring),
            rank: self.rank + other.rank,
            chern: trim(chern),
            is_virtual: self.is_virtual || other.is_virtual,
        })
    }

    /// `c_t(E) = 1 + c_1 t + c_2 t^2 + ...`.
    pub fn total_chern(&self) -> FormalSeries {
        FormalSeries::with_unit_constant(&self.ring, &self.chern)
    }

    /// `c_t(-E) = 1 / c_t(E)` through `t^n`: `s_k = -Σ_{i=1}^k c_i s_{k-i}`.
    pub fn inverse_total_chern(&self, n: usize) -> FormalSeries {
        let mut coeffs = alloc::vec![self.ring.one()];
        for k in 1..=n {
            let mut acc = self.ring.zero();
            for i in 1..=k {
                let c = self.chern(i);
                if c.is_zero() {
                    continue;
                }
                acc -= &(&c * &coeffs[k - i]);
            }
            coeffs.push(acc);
        }
        FormalSeries::new(&self.ring, coeffs)
    }
}

/// `exp(z)` for `z` without constant term, keeping degrees `<= max_degree`.
pub(crate) fn exp_nilpotent(z: &RingElement, max_degree: u32) -> RingElement {
    debug_assert!(z.constant_term().is_zero());
    let mut result = z.ring().one();
    let mut term = z.ring().one();
    let mut j = 1i64;
    loop {
        term = term
            .mul_truncated(z, max_degree)
            .expect("same presentation")
            .scale(&Rational::new(1.into(), j.into()));
        if term.is_zero() {
            break;
        }
        result += &term;
        j += 1;
    }
    result
}

/// Exact univariate series over the rationals, stored as coefficient vectors.
pub(crate) mod univariate {
    use alloc::{vec, vec::Vec};

    use num_traits::{One, Zero};

    use crate::Rational;

    fn inverse(f: &[Rational], n: usize) -> Vec<Rational> {
        let f0_inv = Rational::one() / &f[0];
        let mut g = vec![Rational::zero(); n + 1];
        g[0] = f0_inv.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for i in 1..=k.min(f.len() - 1) {
                acc += &f[i] * &g[k - i];
            }
            g[k] = -acc * &f0_inv;
        }
        g
    }

    /// `log f` for `f_0 = 1`, via `(log f)' = f' / f`.
    fn log(f: &[Rational], n: usize) -> Vec<Rational> {
        let inv = inverse(f, n);
        let deriv: Vec<Rational> = (1..f.len())
            .map(|k| &f[k] * Rational::from_integer(k.into()))
            .collect();
        let mut out = vec![Rational::zero(); n + 1];
        for k in 1..=n {
            // coefficient of x^{k-1} in f'/f
            let mut acc = Rational::zero();
            for i in 0..k.min(deriv.len()) {
                acc += &deriv[i] * &inv[k - 1 - i];
            }
            out[k] = acc / Rational::from_integer(k.into());
        }
        out
    }

    /// Coefficients `a_0 .. a_n` of `log(x / (1 - e^{-x}))` (`a_0 = 0`).
    pub fn todd_log_coefficients(n: usize) -> Vec<Rational> {
        // (1 - e^{-x}) / x = Σ (-1)^k x^k / (k+1)!
        let mut denom = Vec::with_capacity(n + 1);
        let mut fact = Rational::one();
        for k in 0..=n {
            fact *= Rational::from_integer((k + 1).into());
            let c = Rational::one() / &fact;
            denom.push(if k % 2 == 0 { c } else { -c });
        }
        let f = inverse(&denom, n);
        log(&f, n)
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        #[test]
        fn first_todd_log_coefficients() {
            let a = todd_log_coefficients(3);
            assert_eq!(a[1], Rational::new(1.into(), 2.into()));
            // log(1 + x/2 + x^2/12) = x/2 + (1/12 - 1/8) x^2 + ...
            assert_eq!(a[2], Rational::new((-1).into(), 24.into()));
            assert!(a[3].is_zero());
        }
    }
}
