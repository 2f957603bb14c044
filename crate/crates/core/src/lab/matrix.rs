//! Matrices of binary forms and their graded linear algebra.

use alloc::{vec, vec::Vec};

use num_traits::Zero;

use super::form::HomForm;
use crate::{linalg::QMatrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<HomForm>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<HomForm>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        PolyMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &HomForm {
        &self.entries[r * self.cols + c]
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols)
            .map(|c| (0..self.rows).map(|r| self.get(r, c).clone()).collect())
            .collect();
        Self::from_rows(rows)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let rows = (0..self.rows)
            .map(|r| {
                (0..other.cols)
                    .map(|c| {
                        (0..self.cols)
                            .map(|k| self.get(r, k).mul(other.get(k, c)))
                            .reduce(|a, b| a.add(&b))
                            .expect("inner dimension is positive")
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(HomForm::is_zero)
    }

    /// The 2×2 minors of a two-column matrix, over row pairs `(i, j)`, `i < j`.
    pub fn minors_of_two_columns(&self) -> Vec<HomForm> {
        assert_eq!(self.cols, 2, "expected two columns");
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in i + 1..self.rows {
                let a = self.get(i, 0).mul(self.get(j, 1));
                let b = self.get(i, 1).mul(self.get(j, 0));
                out.push(a.sub(&b));
            }
        }
        out
    }

    /// Matrix of `v ↦ self · v` on column vectors whose `j`-th form has
    /// degree `input_degrees[j]` (negative degrees contribute nothing).
    ///
    /// Unknowns are ordered by column then by `x`-power; equations by row then
    /// by `x`-power. Each row of `self` must be homogeneous of a single degree
    /// after multiplication.
    pub fn multiplication_matrix(&self, input_degrees: &[i64]) -> QMatrix {
        assert_eq!(input_degrees.len(), self.cols);
        let in_sizes: Vec<usize> = input_degrees
            .iter()
            .map(|&e| (e + 1).max(0) as usize)
            .collect();
        let in_offsets = prefix(&in_sizes);
        let out_degrees: Vec<i64> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .find(|&j| input_degrees[j] >= 0)
                    .map_or(-1, |j| {
                        i64::from(self.get(r, j).degree()) + input_degrees[j]
                    })
            })
            .collect();
        let out_sizes: Vec<usize> = out_degrees
            .iter()
            .map(|&e| (e + 1).max(0) as usize)
            .collect();
        let out_offsets = prefix(&out_sizes);
        let n_in = in_sizes.iter().sum();
        let n_out = out_sizes.iter().sum();

        let mut m = QMatrix::zeros(n_out, n_in);
        for r in 0..self.rows {
            for j in 0..self.cols {
                if input_degrees[j] < 0 {
                    continue;
                }
                let entry = self.get(r, j);
                debug_assert_eq!(i64::from(entry.degree()) + input_degrees[j], out_degrees[r]);
                for (k, c) in entry.coeffs().iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for l in 0..in_sizes[j] {
                        *m.get_mut(out_offsets[r] + k + l, in_offsets[j] + l) += c;
                    }
                }
            }
        }
        m
    }

    /// Basis of `{v : self · v = 0}` with every entry of `v` of degree `e`.
    pub fn right_syzygies(&self, e: u32) -> Vec<Vec<HomForm>> {
        let system = self.multiplication_matrix(&vec![i64::from(e); self.cols]);
        system
            .nullspace()
            .into_iter()
            .map(|v| split_forms(&v, self.cols, e))
            .collect()
    }
}

fn prefix(sizes: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .iter()
        .map(|s| {
            let o = acc;
            acc += s;
            o
        })
        .collect()
}

/// Splits a flat coefficient vector into `n` forms of degree `e`.
pub(crate) fn split_forms(v: &[Rational], n: usize, e: u32) -> Vec<HomForm> {
    let size = e as usize + 1;
    (0..n)
        .map(|j| HomForm::new(v[j * size..(j + 1) * size].to_vec()))
        .collect()
}

pub(crate) fn flatten_forms(forms: &[HomForm]) -> Vec<Rational> {
    forms
        .iter()
        .flat_map(|f| f.coeffs().iter().cloned())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syzygies_of_a_row() {
        // [x, y] · v = 0 with v of degree 1: v = λ (y, -x)
        let a = PolyMatrix::from_rows(vec![vec![
            HomForm::from_ints(&[0, 1]),
            HomForm::from_ints(&[1, 0]),
        ]]);
        assert!(a.right_syzygies(0).is_empty());
        let syz = a.right_syzygies(1);
        assert_eq!(syz.len(), 1);
        let v = PolyMatrix::from_rows(syz[0].iter().map(|f| vec![f.clone()]).collect());
        assert!(a.mul(&v).is_zero());
        assert_eq!(a.right_syzygies(2).len(), 2);
    }
}
