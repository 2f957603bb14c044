//! Seeded random kernels and splitting-type surveys.
//!
//! Trial `t` of a survey with seed `s` draws from `ChaCha8Rng::seed_from_u64(s)`
//! on stream `t`, so trials are independent of evaluation order.

use alloc::{collections::BTreeMap, vec::Vec};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    form::HomForm,
    kernel::{KernelMatrix, QuotientMatrix, SplittingType},
};
use crate::{Error, Rational, Result};

pub const DEFAULT_BOUND: i64 = 10;
pub const RESAMPLE_BUDGET: u32 = 32;

pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Coefficients uniform in `[-bound, bound]`.
pub fn random_form<R: Rng + ?Sized>(rng: &mut R, degree: u32, bound: i64) -> HomForm {
    let coeffs = (0..=degree)
        .map(|_| Rational::from_integer(rng.random_range(-bound..=bound).into()))
        .collect();
    HomForm::new(coeffs)
}

/// Column degrees used for degree-`d` samples: `(ceil(d/2), floor(d/2))`.
pub fn balanced_degrees(d: u32) -> [u32; 2] {
    [d.div_ceil(2), d / 2]
}

/// Draws 4×2 kernels with the given column degrees until one is a subbundle.
pub fn sample_kernel_with<R: Rng + ?Sized>(
    rng: &mut R,
    column_degrees: [u32; 2],
    bound: i64,
) -> Result<KernelMatrix> {
    for _ in 0..RESAMPLE_BUDGET {
        let rows = (0..4)
            .map(|_| {
                column_degrees
                    .iter()
                    .map(|&b| random_form(rng, b, bound))
                    .collect()
            })
            .collect();
        let k = KernelMatrix::new(rows)?;
        if k.is_valid() {
            return Ok(k);
        }
    }
    Err(Error::SamplingExhausted(RESAMPLE_BUDGET))
}

pub fn sample(d: u32, seed: u64, bound: i64) -> Result<KernelMatrix> {
    if bound <= 0 {
        return Err(Error::InvalidParameter(
            "coefficient bound must be positive".into(),
        ));
    }
    sample_kernel_with(&mut trial_rng(seed, 0), balanced_degrees(d), bound)
}

/// Draws 2×4 quotients with the given row degrees until one is surjective.
pub fn sample_quotient<R: Rng + ?Sized>(
    rng: &mut R,
    row_degrees: [u32; 2],
    bound: i64,
) -> Result<QuotientMatrix> {
    for _ in 0..RESAMPLE_BUDGET {
        let rows = row_degrees
            .iter()
            .map(|&e| (0..4).map(|_| random_form(rng, e, bound)).collect())
            .collect();
        let m = QuotientMatrix::new(rows)?;
        if m.is_surjective() {
            return Ok(m);
        }
    }
    Err(Error::SamplingExhausted(RESAMPLE_BUDGET))
}

/// Splitting type of the kernel drawn for one trial.
pub fn survey_trial(d: u32, seed: u64, trial: u64, bound: i64) -> Result<SplittingType> {
    let k = sample_kernel_with(&mut trial_rng(seed, trial), balanced_degrees(d), bound)?;
    k.splitting_type()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyTable {
    pub degree: u32,
    pub trials: u64,
    pub counts: BTreeMap<SplittingType, u64>,
}

impl SurveyTable {
    pub fn new(degree: u32) -> Self {
        SurveyTable {
            degree,
            trials: 0,
            counts: BTreeMap::new(),
        }
    }

    pub fn record(&mut self, split: SplittingType) {
        self.trials += 1;
        *self.counts.entry(split).or_default() += 1;
    }

    pub fn merge(&mut self, other: &SurveyTable) {
        assert_eq!(
            self.degree, other.degree,
            "merging surveys of different degree"
        );
        self.trials += other.trials;
        for (k, v) in &other.counts {
            *self.counts.entry(*k).or_default() += v;
        }
    }

    pub fn from_results(degree: u32, results: impl IntoIterator<Item = SplittingType>) -> Self {
        let mut t = Self::new(degree);
        for s in results {
            t.record(s);
        }
        t
    }
}

pub fn survey(d: u32, trials: u64, seed: u64) -> Result<SurveyTable> {
    let results: Vec<SplittingType> = (0..trials)
        .map(|t| survey_trial(d, seed, t, DEFAULT_BOUND))
        .collect::<Result<_>>()?;
    Ok(SurveyTable::from_results(d, results))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_sampling_is_reproducible() {
        assert_eq!(
            sample(5, 7, DEFAULT_BOUND).unwrap(),
            sample(5, 7, DEFAULT_BOUND).unwrap()
        );
        assert_ne!(
            sample(5, 7, DEFAULT_BOUND).unwrap(),
            sample(5, 8, DEFAULT_BOUND).unwrap()
        );
    }

    #[test]
    fn generic_kernels_are_balanced() {
        let table = survey(4, 20, 1).unwrap();
        assert_eq!(table.trials, 20);
        assert_eq!(table.counts.get(&SplittingType { a: 2, b: 2 }), Some(&20));
    }

    #[test]
    fn merge_adds_counts() {
        let mut a = survey(3, 5, 3).unwrap();
        let b = survey(3, 4, 4).unwrap();
        a.merge(&b);
        assert_eq!(a.trials, 9);
        assert_eq!(a.counts.values().sum::<u64>(), 9);
    }

    #[test]
    fn sampled_quotient_kernel_has_matching_degree() {
        let mut rng = trial_rng(11, 0);
        let m = sample_quotient(&mut rng, [1, 3], 5).unwrap();
        let k = m.kernel().unwrap();
        assert_eq!(k.degree(), 4);
        assert!(k.euler_check().unwrap());
    }
}
