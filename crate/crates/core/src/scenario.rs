//! The Brill-Noether pipeline for maps `C → G(2,4)`.
//!
//! A [`Scenario`] fixes the genus `g`, degree `d` and Segre invariant `s` of
//! the pulled-back quotient bundle; the twisting line bundle `L` has degree
//! `a = (d+s)/2` and enters only through `c_1(π_2^* L) = a η`.

use alloc::{format, sync::Arc, vec, vec::Vec};

use crate::{
    chern::FormalBundle,
    kunneth::{grr_pushforward, PushforwardResult},
    ledger::{scenario_discrepancies, Discrepancy},
    porteous::{fundamental_class, ClassRecord},
    ring::{Generator, PairingSign, Presentation, RingElement},
    Error, Result,
};

/// Rank of the universal kernel `K`.
pub const KERNEL_RANK: i64 = 2;
/// Dimension of the ambient space, `G(2, 4)`.
pub const AMBIENT_RANK: i64 = 4;

/// Base generators of the Künneth model: `t_1, t_2, u_1, s_1^j, s_2^j`.
pub fn base_generators(genus: u32) -> Vec<Generator> {
    let mut gens = vec![
        Generator::new("t1", 2),
        Generator::new("t2", 4),
        Generator::new("u1", 2),
    ];
    for i in 1..=2u32 {
        for j in 1..=2 * genus {
            gens.push(Generator::new(format!("s{i}_{j}"), 2 * i - 1));
        }
    }
    gens
}

pub fn scenario_ring(
    genus: u32,
    truncation: u32,
    pairing: PairingSign,
) -> Result<Arc<Presentation>> {
    Presentation::with_pairing(genus, base_generators(genus), truncation, pairing)
}

/// `α_i = Σ_j s_i^j δ_j`.
pub fn alpha(ring: &Arc<Presentation>, i: u32) -> RingElement {
    let mut acc = ring.zero();
    for j in 1..=2 * ring.genus() as usize {
        let s = ring
            .generator(&format!("s{i}_{j}"))
            .expect("Künneth generator");
        acc += &(&s * &ring.delta(j));
    }
    acc
}

fn pair_sum(ring: &Arc<Presentation>, left: u32, right: u32) -> RingElement {
    let g = ring.genus() as usize;
    let mut acc = ring.zero();
    for j in 1..=g {
        let a = ring
            .generator(&format!("s{left}_{j}"))
            .expect("Künneth generator");
        let b = ring
            .generator(&format!("s{right}_{}", j + g))
            .expect("Künneth generator");
        acc += &(&a * &b);
    }
    acc
}

/// `A = Σ_{j<=g} s_1^j s_1^{j+g}`.
pub fn a_class(ring: &Arc<Presentation>) -> RingElement {
    pair_sum(ring, 1, 1)
}

/// `γ = Σ_{j<=g} s_2^j s_2^{j+g}`.
pub fn gamma_class(ring: &Arc<Presentation>) -> RingElement {
    pair_sum(ring, 2, 2)
}

/// `B = Σ_{i<=g} (-s_1^i s_2^{i+g} + s_1^{i+g} s_2^i)`.
pub fn b_class(ring: &Arc<Presentation>) -> RingElement {
    let g = ring.genus() as usize;
    let mut acc = ring.zero();
    for i in 1..=g {
        let s = |k: u32, j: usize| {
            ring.generator(&format!("s{k}_{j}"))
                .expect("Künneth generator")
        };
        acc -= &(&s(1, i) * &s(2, i + g));
        acc += &(&s(1, i + g) * &s(2, i));
    }
    acc
}

/// `χ(E_q) = d + 2(1-g)` for a rank-2 degree-`d` quotient on a genus-`g` curve.
pub fn euler_characteristic(genus: u32, degree: i64) -> i64 {
    degree + 2 * (1 - i64::from(genus))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExistenceRule {
    /// `s > g`: no rank-2 bundle has that Segre invariant.
    SegreAboveGenus,
    /// Elliptic curve, `d >= 3`, `s ∈ {0, 1}`.
    EllipticLowSegre,
    /// `g >= s >= 0` and `d > 2(2g-1)`.
    LargeDegree,
}

impl ExistenceRule {
    pub fn id(self) -> &'static str {
        match self {
            ExistenceRule::SegreAboveGenus => "segre-above-genus",
            ExistenceRule::EllipticLowSegre => "elliptic-low-segre",
            ExistenceRule::LargeDegree => "large-degree",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExistenceStatus {
    Empty(ExistenceRule),
    NonEmpty(ExistenceRule),
    Unknown,
}

impl ExistenceStatus {
    pub fn label(self) -> &'static str {
        match self {
            ExistenceStatus::Empty(_) => "empty",
            ExistenceStatus::NonEmpty(_) => "non-empty",
            ExistenceStatus::Unknown => "unknown",
        }
    }

    pub fn rule(self) -> Option<ExistenceRule> {
        match self {
            ExistenceStatus::Empty(r) | ExistenceStatus::NonEmpty(r) => Some(r),
            ExistenceStatus::Unknown => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeterminantalDims {
    /// `h^0` of the fibres of `π_{1*}(K^∨ ⊗ π_2^* L)`: `2d + s + m(1-g)`.
    pub fiber_h0_dim: i64,
    /// Rank of the source bundle: `2d + s + 2(1-g)`.
    pub source_rank: i64,
    /// Rank of the trivial target: `2d + 2s - 4g + 4`.
    pub target_rank: i64,
    /// `d + s > 2m(g-1)`, which makes the source a vector bundle.
    pub large_d_ok: bool,
}

#[derive(Clone, Debug)]
pub struct Scenario {
    genus: u32,
    degree: i64,
    segre: i64,
    a: i64,
    truncation: u32,
    ring: Arc<Presentation>,
}

impl Scenario {
    /// Validates `(g, d, s)`; `truncation` defaults to
    /// `max(2(2g+4), 2(2g-s))`, enough for the class pipeline.
    pub fn new(genus: u32, degree: i64, segre: i64, truncation: Option<u32>) -> Result<Self> {
        Self::with_pairing(genus, degree, segre, truncation, PairingSign::Positive)
    }

    pub fn with_pairing(
        genus: u32,
        degree: i64,
        segre: i64,
        truncation: Option<u32>,
        pairing: PairingSign,
    ) -> Result<Self> {
        if genus == 0 {
            return Err(Error::GenusZero);
        }
        if degree < 0 {
            return Err(Error::InvalidParameter(format!(
                "degree must be non-negative, got {degree}"
            )));
        }
        if (degree - segre).rem_euclid(2) != 0 {
            return Err(Error::SegreParity { degree, segre });
        }
        let codim = 2 * i64::from(genus) - segre - 1;
        let needed = if codim >= 1 {
            2 * (codim as u32 + 1)
        } else {
            2
        };
        let truncation = match truncation {
            Some(t) if t < needed => {
                return Err(Error::Truncation {
                    needed,
                    available: t,
                })
            }
            Some(t) => t,
            None => (2 * (2 * genus + 4)).max(needed),
        };
        let ring = scenario_ring(genus, truncation, pairing)?;
        Ok(Scenario {
            genus,
            degree,
            segre,
            a: (degree + segre) / 2,
            truncation,
            ring,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn segre(&self) -> i64 {
        self.segre
    }

    /// Degree of the twisting line bundle, `(d+s)/2`.
    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn ring(&self) -> &Arc<Presentation> {
        &self.ring
    }

    fn g(&self) -> i64 {
        i64::from(self.genus)
    }

    /// `2g - s - 1`, cross-checked against the corank product of the
    /// determinantal description.
    pub fn expected_codimension(&self) -> i64 {
        let codim = 2 * self.g() - self.segre - 1;
        assert_eq!(codim, self.expanded_codimension(), "codimension identity");
        codim
    }

    /// `((2d-2g+s+2) - (2d+2s-4g+3)) · ((2d+2s-4g+4) - (2d+2s-4g+3))`.
    pub fn expanded_codimension(&self) -> i64 {
        let (d, s, g) = (self.degree, self.segre, self.g());
        ((2 * d - 2 * g + s + 2) - (2 * d + 2 * s - 4 * g + 3))
            * ((2 * d + 2 * s - 4 * g + 4) - (2 * d + 2 * s - 4 * g + 3))
    }

    pub fn determinantal_dims(&self) -> DeterminantalDims {
        let (d, s, g) = (self.degree, self.segre, self.g());
        DeterminantalDims {
            fiber_h0_dim: 2 * d + s + KERNEL_RANK * (1 - g),
            source_rank: 2 * d + s + 2 * (1 - g),
            target_rank: 2 * d + 2 * s - 4 * g + 4,
            large_d_ok: d + s > 2 * KERNEL_RANK * (g - 1),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        euler_characteristic(self.genus, self.degree)
    }

    /// Lower bound `d + 3 - 2g` on `h^0(E_q ⊗ K_C ⊗ L^{-1})` along the stratum.
    pub fn h0_threshold(&self) -> i64 {
        self.degree + 3 - 2 * self.g()
    }

    pub fn existence(&self) -> ExistenceStatus {
        let (d, s, g) = (self.degree, self.segre, self.g());
        if s > g {
            ExistenceStatus::Empty(ExistenceRule::SegreAboveGenus)
        } else if g == 1 && d >= 3 && (s == 0 || s == 1) {
            ExistenceStatus::NonEmpty(ExistenceRule::EllipticLowSegre)
        } else if s >= 0 && d > 2 * (2 * g - 1) {
            ExistenceStatus::NonEmpty(ExistenceRule::LargeDegree)
        } else {
            ExistenceStatus::Unknown
        }
    }

    /// `K^∨` on `R × C` with `c_i = t_i + α_i + u_{i-1} η` and `u_0 = d`.
    pub fn kernel_bundle(&self) -> FormalBundle {
        let r = &self.ring;
        let eta = r.eta();
        let gen = |name: &str| r.generator(name).expect("Künneth generator");
        let c1 = &(&gen("t1") + &alpha(r, 1)) + &eta.scale_int(self.degree);
        let c2 = &(&gen("t2") + &alpha(r, 2)) + &(&gen("u1") * &eta);
        FormalBundle::new(r, KERNEL_RANK, vec![c1, c2]).expect("rank-2 Künneth bundle")
    }

    /// `K^∨ ⊗ π_2^* L` with `c_1(π_2^* L) = a η`.
    pub fn twisted_bundle(&self) -> FormalBundle {
        let l = self.ring.eta().scale_int(self.a);
        self.kernel_bundle()
            .tensor_line(&l)
            .expect("a η has degree 2")
    }

    /// `π_{1*}(K^∨ ⊗ π_2^* L)` through `c_n`.
    pub fn pushforward(&self, n: usize) -> Result<PushforwardResult> {
        grr_pushforward(&self.twisted_bundle(), n)
    }

    pub fn brill_noether_class(&self) -> Result<StratumReport> {
        let codim = self.expected_codimension();
        if codim <= 0 {
            return Err(Error::Codimension(codim));
        }
        let pushforward = self.pushforward(codim as usize)?;
        let class = fundamental_class(&pushforward, self.genus, self.segre)?;
        let discrepancies = scenario_discrepancies(self, &pushforward, &class);
        Ok(StratumReport {
            genus: self.genus,
            degree: self.degree,
            segre: self.segre,
            a: self.a,
            codim_expected: codim,
            euler_characteristic: self.euler_characteristic(),
            h0_threshold: self.h0_threshold(),
            dims: self.determinantal_dims(),
            pushforward_rank: pushforward.bundle.rank(),
            target_rank: self.determinantal_dims().target_rank,
            existence: self.existence(),
            pushforward,
            class,
            discrepancies,
        })
    }
}

#[derive(Clone, Debug)]
pub struct StratumReport {
    pub genus: u32,
    pub degree: i64,
    pub segre: i64,
    pub a: i64,
    pub codim_expected: i64,
    pub euler_characteristic: i64,
    pub h0_threshold: i64,
    pub dims: DeterminantalDims,
    pub pushforward_rank: i64,
    pub target_rank: i64,
    pub existence: ExistenceStatus,
    pub pushforward: PushforwardResult,
    pub class: ClassRecord,
    pub discrepancies: Vec<Discrepancy>,
}
