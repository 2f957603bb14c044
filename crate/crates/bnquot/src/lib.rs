//! Reports, verification suite and parallel surveys on top of `bnquot-core`.

pub mod oracle;
pub mod render;
pub mod report;
pub mod verify;

use bnquot_core::{
    lab::sample::{survey_trial, SurveyTable, DEFAULT_BOUND},
    Error,
};
use rayon::prelude::*;

/// Largest degree accepted by `lab survey` unless overridden.
pub const DEFAULT_MAX_DEGREE: u32 = 12;

/// A failed command, classified by exit code.
#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("{0}")]
    Parameter(String),
    #[error("{0}")]
    Invariant(String),
    #[error("{0}")]
    Sampling(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Invariant(_) => 1,
            Failure::Parameter(_) => 2,
            Failure::Sampling(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::SamplingExhausted(_) => Failure::Sampling(msg),
            Error::Invariant(_)
            | Error::InvalidKernel
            | Error::NotSurjective
            | Error::IncompatiblePresentations => Failure::Invariant(msg),
            _ => Failure::Parameter(msg),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Parameter(format!("cannot write output: {e}"))
    }
}

/// Splitting-type survey over trials `0..trials`; every trial owns its own
/// random stream, so the table does not depend on `jobs`.
pub fn survey(d: u32, trials: u64, seed: u64, jobs: usize) -> Result<SurveyTable, Failure> {
    let run = || {
        (0..trials)
            .into_par_iter()
            .map(|t| survey_trial(d, seed, t, DEFAULT_BOUND))
            .collect::<Result<Vec<_>, _>>()
    };
    let results = if jobs <= 1 {
        (0..trials)
            .map(|t| survey_trial(d, seed, t, DEFAULT_BOUND))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Failure::Parameter(format!("cannot start {jobs} workers: {e}")))?
            .install(run)?
    };
    Ok(SurveyTable::from_results(d, results))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::from(Error::SamplingExhausted(32)).exit_code(), 3);
        assert_eq!(Failure::from(Error::Invariant("x".into())).exit_code(), 1);
        assert_eq!(
            Failure::from(Error::SegreParity {
                degree: 4,
                segre: 1
            })
            .exit_code(),
            2
        );
    }

    #[test]
    fn survey_ignores_worker_count() {
        assert_eq!(survey(5, 12, 3, 1).unwrap(), survey(5, 12, 3, 3).unwrap());
    }
}
