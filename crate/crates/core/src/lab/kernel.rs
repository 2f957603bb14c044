//! Degree-`d` maps `P^1 → G(2,4)` stored through the kernel of the pulled-back
//! quotient: `0 → O(-b_1) ⊕ O(-b_2) → O^4 → E → 0` with `b_1 + b_2 = d`.

use alloc::{format, vec, vec::Vec};
use core::fmt;

use super::{
    form::{no_common_zero, HomForm},
    matrix::{flatten_forms, PolyMatrix},
};
use crate::{linalg::QMatrix, Error, Result};

/// `E ≅ O(a) ⊕ O(d-a)` with `a <= d - a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SplittingType {
    pub a: u32,
    pub b: u32,
}

impl SplittingType {
    pub fn new(a: u32, degree: u32) -> Result<Self> {
        if 2 * a > degree {
            return Err(Error::InvalidParameter(format!(
                "splitting ({a}, {degree}-{a}) needs a <= d/2"
            )));
        }
        Ok(SplittingType { a, b: degree - a })
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b
    }

    /// Segre invariant on `P^1`: `2a - d`.
    pub fn segre(&self) -> i64 {
        2 * i64::from(self.a) - i64::from(self.degree())
    }

    pub fn is_balanced(&self) -> bool {
        self.b - self.a <= 1
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A 4×2 matrix whose column `j` consists of forms of degree `b_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelMatrix {
    matrix: PolyMatrix,
    column_degrees: [u32; 2],
}

impl KernelMatrix {
    pub fn new(rows: Vec<Vec<HomForm>>) -> Result<Self> {
        if rows.len() != 4 || rows.iter().any(|r| r.len() != 2) {
            return Err(Error::InvalidParameter("kernel matrix must be 4x2".into()));
        }
        let column_degrees = [rows[0][0].degree(), rows[0][1].degree()];
        for row in &rows {
            for (j, f) in row.iter().enumerate() {
                if f.degree() != column_degrees[j] {
                    return Err(Error::InvalidParameter(format!(
                        "column {j} mixes degrees {} and {}",
                        column_degrees[j],
                        f.degree()
                    )));
                }
            }
        }
        Ok(KernelMatrix {
            matrix: PolyMatrix::from_rows(rows),
            column_degrees,
        })
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn column_degrees(&self) -> [u32; 2] {
        self.column_degrees
    }

    pub fn degree(&self) -> u32 {
        self.column_degrees[0] + self.column_degrees[1]
    }

    pub fn entry(&self, i: usize, j: usize) -> &HomForm {
        self.matrix.get(i, j)
    }

    pub fn minors(&self) -> Vec<HomForm> {
        self.matrix.minors_of_two_columns()
    }

    /// Injective with locally free cokernel: the six minors have no common
    /// zero on `P^1`.
    pub fn is_valid(&self) -> bool {
        no_common_zero(&self.minors())
    }

    fn require_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidKernel)
        }
    }

    fn dual_sections(&self, k: i64) -> usize {
        if k < 0 {
            return 0;
        }
        let system = self.matrix.transpose().multiplication_matrix(&[k; 4]);
        system.cols() - system.rank()
    }

    /// `h^0(E^∨(k))`: rows `w` of four degree-`k` forms with `w · K = 0`.
    pub fn twisted_dual_sections(&self, k: i64) -> Result<usize> {
        self.require_valid()?;
        Ok(self.dual_sections(k))
    }

    /// `a = min{k : h^0(E^∨(k)) > 0}`, searched over `k <= d/2`.
    pub fn splitting_type(&self) -> Result<SplittingType> {
        self.require_valid()?;
        let d = self.degree();
        for k in 0..=d / 2 {
            if self.dual_sections(i64::from(k)) > 0 {
                return SplittingType::new(k, d);
            }
        }
        Err(Error::Invariant(format!(
            "no twist up to {} has sections; kernel is not a subbundle",
            d / 2
        )))
    }

    /// `h^0(E(m))` from the long exact sequence of
    /// `0 → N(m) → O(m)^4 → E(m) → 0`, with both connecting ranks computed
    /// by exact elimination (the `H^1` map through its Serre dual `K^T`).
    pub fn h0_twist(&self, m: i64) -> Result<usize> {
        self.require_valid()?;
        let [b1, b2] = self.column_degrees.map(i64::from);
        let from_sections = if m >= 0 {
            let image = self.matrix.multiplication_matrix(&[m - b1, m - b2]).rank();
            4 * (m as usize + 1) - image
        } else {
            0
        };
        let h1_kernel: usize = [b1, b2].iter().map(|&b| (b - m - 1).max(0) as usize).sum();
        let k = -m - 2;
        let h1_map_rank = if k >= 0 {
            self.matrix
                .transpose()
                .multiplication_matrix(&[k; 4])
                .rank()
        } else {
            0
        };
        Ok(from_sections + h1_kernel - h1_map_rank)
    }

    /// `h^0(E) - h^1(E) = d + 2`, with `h^1` read off the detected splitting.
    pub fn euler_check(&self) -> Result<bool> {
        let h0 = self.h0_twist(0)? as i64;
        let split = self.splitting_type()?;
        let h1: i64 = [split.a, split.b]
            .iter()
            .map(|&e| (-i64::from(e) - 1).max(0))
            .sum();
        Ok(h0 - h1 == i64::from(self.degree()) + 2)
    }

    pub fn segre_p1(&self) -> Result<i64> {
        Ok(self.splitting_type()?.segre())
    }
}

/// A 2×4 matrix `O^4 → O(e_1) ⊕ O(e_2)`; row `r` has forms of degree `e_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMatrix {
    matrix: PolyMatrix,
    row_degrees: [u32; 2],
}

impl QuotientMatrix {
    pub fn new(rows: Vec<Vec<HomForm>>) -> Result<Self> {
        if rows.len() != 2 || rows.iter().any(|r| r.len() != 4) {
            return Err(Error::InvalidParameter(
                "quotient matrix must be 2x4".into(),
            ));
        }
        let row_degrees = [rows[0][0].degree(), rows[1][0].degree()];
        for (r, row) in rows.iter().enumerate() {
            if row.iter().any(|f| f.degree() != row_degrees[r]) {
                return Err(Error::InvalidParameter(format!(
                    "row {r} is not homogeneous"
                )));
            }
        }
        Ok(QuotientMatrix {
            matrix: PolyMatrix::from_rows(rows),
            row_degrees,
        })
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn row_degrees(&self) -> [u32; 2] {
        self.row_degrees
    }

    pub fn is_surjective(&self) -> bool {
        no_common_zero(&self.matrix.transpose().minors_of_two_columns())
    }

    /// Kernel inclusion `K` with `M · K = 0`, built from the two minimal
    /// syzygies found degree by degree.
    pub fn kernel(&self) -> Result<KernelMatrix> {
        if !self.is_surjective() {
            return Err(Error::NotSurjective);
        }
        let d = self.row_degrees[0] + self.row_degrees[1];
        // kernel ≅ O(-b_1) ⊕ O(-b_2) with b_1 + b_2 = d, so only two degrees matter
        let Some((b1, first)) = (0..=d / 2).find_map(|e| {
            let syz = self.matrix.right_syzygies(e);
            (!syz.is_empty()).then_some((e, syz))
        }) else {
            return Err(Error::Invariant(format!(
                "no syzygy up to degree {}",
                d / 2
            )));
        };
        let mut generators: Vec<(u32, Vec<HomForm>)> = Vec::new();
        if first.len() >= 2 {
            generators.extend(first.into_iter().take(2).map(|c| (b1, c)));
        } else {
            let g = first.into_iter().next().expect("nonempty");
            let b2 = d - b1;
            let span: Vec<Vec<crate::Rational>> = (0..=b2 - b1)
                .map(|k| {
                    let mono = HomForm::monomial(b2 - b1, k);
                    flatten_forms(&g.iter().map(|f| f.mul(&mono)).collect::<Vec<_>>())
                })
                .collect();
            let base_rank = span.len();
            let second = self.matrix.right_syzygies(b2).into_iter().find(|c| {
                let mut rows = span.clone();
                rows.push(flatten_forms(c));
                QMatrix::from_rows(rows).rank() > base_rank
            });
            generators.push((b1, g));
            if let Some(c) = second {
                generators.push((b2, c));
            }
        }
        if generators.len() != 2 {
            return Err(Error::Invariant(format!(
                "found {} syzygy generators up to degree {d}",
                generators.len()
            )));
        }
        let (b1, b2) = (generators[0].0, generators[1].0);
        if b1 + b2 != d {
            return Err(Error::Invariant(format!(
                "syzygy degrees {b1} + {b2} != {d}"
            )));
        }
        let rows = (0..4)
            .map(|i| vec![generators[0].1[i].clone(), generators[1].1[i].clone()])
            .collect();
        let k = KernelMatrix::new(rows)?;
        if !k.is_valid() || !self.matrix.mul(k.matrix()).is_zero() {
            return Err(Error::Invariant(
                "kernel of a surjection is not a subbundle".into(),
            ));
        }
        Ok(k)
    }
}
