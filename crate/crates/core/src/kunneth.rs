//! Classes on a product `R × C` with `C` a curve, and the pushforward along
//! the projection to `R`.
//!
//! Every class splits uniquely as `z = c + Σ b^j δ_j + f η` with `c, b^j, f`
//! free of curve classes; integrating over the fiber returns `f`.

use alloc::{format, string::String, vec::Vec};

use num_traits::{One, ToPrimitive};

use crate::{
    chern::{FormalBundle, PowerSums},
    ring::{FiberFactor, RingElement},
    Error, Rational, Result,
};

#[derive(Clone, Debug, PartialEq)]
pub struct KunnethClass {
    pub base: RingElement,
    /// Coefficient of `δ_j` at index `j - 1`.
    pub deltas: Vec<RingElement>,
    pub eta: RingElement,
}

impl KunnethClass {
    /// `base + Σ deltas[j] δ_j + eta η`.
    pub fn recompose(&self) -> RingElement {
        let ring = self.base.ring();
        let mut z = self.base.clone();
        for (j, b) in self.deltas.iter().enumerate() {
            z += &(b * &ring.delta(j + 1));
        }
        z += &(&self.eta * &ring.eta());
        z
    }
}

pub fn decompose(z: &RingElement) -> Result<KunnethClass> {
    let ring = z.ring();
    let genus = ring.genus() as usize;
    let mut base = ring.zero();
    let mut deltas = alloc::vec![ring.zero(); 2 * genus];
    let mut eta = ring.zero();
    for (m, c) in z.terms() {
        let stripped = ring.strip_fiber(m);
        let part = RingElement::from_term(ring, stripped, c.clone());
        match ring.fiber_factor(m) {
            FiberFactor::One => base += &part,
            FiberFactor::Delta(j) => deltas[j - 1] += &part,
            FiberFactor::Eta => eta += &part,
        }
    }
    let decomposition = KunnethClass { base, deltas, eta };
    if decomposition.recompose() != *z {
        return Err(Error::Invariant(format!(
            "Künneth recomposition failed for {z}"
        )));
    }
    Ok(decomposition)
}

/// Coefficient of `η`: the pushforward along the curve fiber.
pub fn fiber_integrate(z: &RingElement) -> RingElement {
    let ring = z.ring();
    let mut out = ring.zero();
    for (m, c) in z.terms() {
        if ring.fiber_factor(m) == FiberFactor::Eta {
            out += &RingElement::from_term(ring, ring.strip_fiber(m), c.clone());
        }
    }
    out
}

/// Part with no curve factor.
pub fn base_part(z: &RingElement) -> RingElement {
    let ring = z.ring();
    z.filter(|m| ring.fiber_factor(m) == FiberFactor::One)
}

pub fn is_base_only(z: &RingElement) -> bool {
    let ring = z.ring();
    z.terms()
        .all(|(m, _)| ring.fiber_factor(m) == FiberFactor::One)
}

/// Todd class of the relative tangent bundle of `R × C → R`: `1 + (1-g) η`.
pub fn relative_todd(ring: &alloc::sync::Arc<crate::Presentation>) -> RingElement {
    let g = i64::from(ring.genus());
    &ring.one() + &ring.eta().scale_int(1 - g)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PushforwardResult {
    pub bundle: FormalBundle,
    /// `(1-g) rank + ∫ c_1`, evaluated independently of the character pipeline.
    pub rank_formula_check: i64,
    pub discrepancy_notes: Vec<String>,
}

/// Grothendieck-Riemann-Roch along the curve:
/// `ch(π_! F) = π_*(td_π · ch(F))`, through `c_n` of the result.
pub fn grr_pushforward(bundle: &FormalBundle, n: usize) -> Result<PushforwardResult> {
    let ring = bundle.ring();
    let needed = 2 * (n as u32 + 1);
    if needed > ring.truncation() {
        return Err(Error::Truncation {
            needed,
            available: ring.truncation(),
        });
    }
    let ch = bundle.chern_character(n + 1);
    let integrand = relative_todd(ring).mul_truncated(&ch, needed)?;
    let pushed = fiber_integrate(&integrand);

    let ch0 = pushed.graded_part(0).constant_term();
    let rank = integral(&ch0, "pushforward rank")?;

    let g = i64::from(ring.genus());
    let eta_c1 = fiber_integrate(&bundle.chern(1)).constant_term();
    let rank_formula_check =
        (1 - g) * bundle.rank() + integral(&eta_c1, "degree of c_1 on the fiber")?;

    let mut sums = Vec::with_capacity(n);
    let mut fact = Rational::one();
    for k in 1..=n {
        fact *= Rational::from_integer(k.into());
        sums.push(pushed.graded_part(2 * k as u32).scale(&fact));
    }
    let result = FormalBundle::from_power_sums(ring, rank, &PowerSums::new(sums), n);

    for c in result.chern_classes() {
        if !is_base_only(c) {
            return Err(Error::Invariant(format!(
                "pushforward class {c} has a curve factor"
            )));
        }
    }
    let mut discrepancy_notes = Vec::new();
    if rank != rank_formula_check {
        return Err(Error::Invariant(format!(
            "pushforward rank {rank} differs from (1-g)r + deg = {rank_formula_check}"
        )));
    }
    if result.is_virtual() {
        discrepancy_notes.push(format!(
            "virtual pushforward: rank {rank} with {} nonzero Chern classes",
            result.chern_classes().len()
        ));
    }
    Ok(PushforwardResult {
        bundle: result,
        rank_formula_check,
        discrepancy_notes,
    })
}

fn integral(q: &Rational, what: &str) -> Result<i64> {
    if !q.denom().is_one() {
        return Err(Error::Invariant(format!("{what} is not an integer: {q}")));
    }
    q.numer()
        .to_i64()
        .ok_or_else(|| Error::Invariant(format!("{what} overflows: {q}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Generator, Presentation};
    use alloc::{sync::Arc, vec};

    fn ring() -> Arc<Presentation> {
        Presentation::new(
            1,
            vec![
                Generator::new("t1", 2),
                Generator::new("t2", 4),
                Generator::new("u1", 2),
                Generator::new("s1_1", 1),
                Generator::new("s1_2", 1),
                Generator::new("s2_1", 3),
                Generator::new("s2_2", 3),
            ],
            12,
        )
        .unwrap()
    }

    #[test]
    fn decompose_examples() {
        let r = ring();
        let k = decompose(&r.eta()).unwrap();
        assert!(k.base.is_zero());
        assert!(k.deltas.iter().all(RingElement::is_zero));
        assert_eq!(k.eta, r.one());

        let t1 = r.generator("t1").unwrap();
        let s = r.generator("s1_1").unwrap();
        let z = &(&t1 + &(&s * &r.delta(1))) + &r.eta().scale_int(5);
        let k = decompose(&z).unwrap();
        assert_eq!(k.base, t1);
        assert_eq!(k.deltas[0], s);
        assert!(k.deltas[1].is_zero());
        assert_eq!(k.eta, r.constant(Rational::from_integer(5.into())));
        assert_eq!(k.recompose(), z);
    }

    #[test]
    fn fiber_integration() {
        let r = ring();
        assert_eq!(fiber_integrate(&r.eta()), r.one());
        assert!(fiber_integrate(&r.delta(1)).is_zero());
        assert!(fiber_integrate(&r.generator("t1").unwrap()).is_zero());
    }

    #[test]
    fn trivial_bundle_pushforward() {
        let g2 = Presentation::new(2, vec![Generator::new("t1", 2)], 8).unwrap();
        for (ring, g) in [(ring(), 1i64), (g2, 2)] {
            let pf = grr_pushforward(&FormalBundle::trivial(&ring, 3), 3).unwrap();
            assert_eq!(pf.bundle.rank(), 3 * (1 - g));
            assert!(pf.bundle.chern_classes().is_empty());
        }
    }

    #[test]
    fn truncation_error() {
        let r = ring();
        assert_eq!(
            grr_pushforward(&FormalBundle::trivial(&r, 1), 6).unwrap_err(),
            Error::Truncation {
                needed: 14,
                available: 12
            }
        );
    }
}
