//! Genus-0 experiments: maps `P^1 → G(2,4)` as explicit matrices of forms.

pub mod form;
pub mod kernel;
pub mod matrix;
pub mod sample;

use alloc::{format, vec};

pub use form::HomForm;
pub use kernel::{KernelMatrix, QuotientMatrix, SplittingType};
pub use sample::SurveyTable;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StratumDimension {
    pub formula: i64,
    pub lab: i64,
    pub agree: bool,
}

/// Dimension of the stratum of quotients `O^4 → O(a) ⊕ O(d-a)`: the closed
/// form `3d + 2a + 5` against `4 h^0(E) - h^0(End E)`, with `h^0(End E)`
/// measured on an explicit kernel.
pub fn stratum_dimension(d: u32, a: u32) -> Result<StratumDimension> {
    if 2 * a > d {
        return Err(Error::InvalidParameter(format!(
            "a = {a} exceeds d/2 for d = {d}"
        )));
    }
    let b = d - a;
    let pair = |e: u32| vec![HomForm::monomial(e, e), HomForm::monomial(e, 0)];
    let zero = |e: u32| vec![HomForm::zero(e), HomForm::zero(e)];
    let rows = vec![[pair(a), zero(a)].concat(), [zero(b), pair(b)].concat()];
    let k = QuotientMatrix::new(rows)?.kernel()?;
    let end = k.twisted_dual_sections(i64::from(a))? + k.twisted_dual_sections(i64::from(b))?;
    let sections = 4 * (i64::from(a) + 1) + 4 * (i64::from(b) + 1);
    let lab = sections - end as i64;
    let formula = 3 * i64::from(d) + 2 * i64::from(a) + 5;
    Ok(StratumDimension {
        formula,
        lab,
        agree: formula == lab,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unbalanced_strata_match() {
        for (d, a) in [(3, 0), (3, 1), (4, 1), (5, 2), (6, 0)] {
            let s = stratum_dimension(d, a).unwrap();
            assert!(s.agree, "d = {d}, a = {a}: {s:?}");
        }
    }

    #[test]
    fn balanced_stratum_is_one_lower() {
        let s = stratum_dimension(4, 2).unwrap();
        assert_eq!(s.formula, 21);
        assert_eq!(s.lab, 20);
        assert!(!s.agree);
    }

    #[test]
    fn rejects_a_above_half() {
        assert!(stratum_dimension(4, 3).is_err());
    }
}
