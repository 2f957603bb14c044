//! Porteous determinants `Δ_{p,q}(a) = det(a_{p+j-i})_{1<=i,j<=q}` and the
//! fundamental-class evaluation for the Brill-Noether strata.

use alloc::{vec, vec::Vec};

use crate::{kunneth::PushforwardResult, ring::RingElement, series::FormalSeries, Error, Result};

/// Division-free determinant (Berkowitz) over the commuting even subring.
///
/// Entries may be nilpotent, so elimination schemes that divide by pivots are
/// not available here.
pub fn determinant(matrix: &[Vec<RingElement>]) -> Result<RingElement> {
    let n = matrix.len();
    let Some(first) = matrix.first().and_then(|row| row.first()) else {
        return Err(Error::InvalidParameter("empty matrix".into()));
    };
    let ring = first.ring().clone();
    for row in matrix {
        if row.len() != n {
            return Err(Error::InvalidParameter("matrix is not square".into()));
        }
        if row.iter().any(|e| !e.is_even()) {
            return Err(Error::OddEntry);
        }
    }

    // Coefficients of det(λI - A_r), highest power first.
    let mut poly = vec![ring.one()];
    for r in 0..n {
        // A_r = [[A_{r-1}, S], [R, a_rr]] with S = column r above the diagonal
        // and R = row r left of it.
        let mut column = vec![ring.one(), -&matrix[r][r]];
        let mut v: Vec<RingElement> = (0..r).map(|i| matrix[i][r].clone()).collect();
        for _ in 0..r {
            let mut dot = ring.zero();
            for (k, vk) in v.iter().enumerate() {
                dot += &(&matrix[r][k] * vk);
            }
            column.push(-&dot);
            v = (0..r)
                .map(|i| {
                    let mut acc = ring.zero();
                    for (k, vk) in v.iter().enumerate() {
                        acc += &(&matrix[i][k] * vk);
                    }
                    acc
                })
                .collect();
        }
        // Lower-triangular Toeplitz product: next[i] = Σ_k column[i-k] poly[k].
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut acc = ring.zero();
            for (k, pk) in poly.iter().enumerate() {
                if k <= i && i - k < column.len() {
                    acc += &(&column[i - k] * pk);
                }
            }
            next.push(acc);
        }
        poly = next;
    }
    let constant = poly
        .pop()
        .expect("characteristic polynomial has n+1 coefficients");
    Ok(if n.is_multiple_of(2) { constant } else { -&constant })
}

/// The `q × q` matrix `(a_{p+j-i})`.
pub fn porteous_matrix(a: &FormalSeries, p: i64, q: usize) -> Vec<Vec<RingElement>> {
    (0..q)
        .map(|i| (0..q).map(|j| a.get(p + j as i64 - i as i64)).collect())
        .collect()
}

pub fn delta_pq(a: &FormalSeries, p: i64, q: usize) -> Result<RingElement> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidParameter(alloc::format!(
            "Δ_{{p,q}} needs p, q >= 1, got ({p}, {q})"
        )));
    }
    determinant(&porteous_matrix(a, p, q))
}

/// Both candidate expressions for the stratum class.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassRecord {
    pub codimension: u32,
    /// `Δ_{p,1}(c_t(-V))` with `p` the codimension.
    pub porteous: RingElement,
    /// `-c_p(V)`.
    pub minus_chern: RingElement,
    pub agree: bool,
    /// `porteous - minus_chern`.
    pub difference: RingElement,
}

/// Evaluates the class of the stratum of codimension `p = 2g - s - 1` from the
/// pushforward `V`.
pub fn fundamental_class(pf: &PushforwardResult, genus: u32, segre: i64) -> Result<ClassRecord> {
    let p = 2 * i64::from(genus) - segre - 1;
    if p <= 0 {
        return Err(Error::Codimension(p));
    }
    let ring = pf.bundle.ring();
    let needed = 2 * p as u32;
    if needed > ring.truncation() {
        return Err(Error::Truncation {
            needed,
            available: ring.truncation(),
        });
    }
    let series = pf.bundle.inverse_total_chern(p as usize);
    let porteous = delta_pq(&series, p, 1)?;
    let minus_chern = -&pf.bundle.chern(p as usize);
    let difference = &porteous - &minus_chern;
    Ok(ClassRecord {
        codimension: p as u32,
        agree: difference.is_zero(),
        porteous,
        minus_chern,
        difference,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{
        chern::FormalBundle,
        ring::{Generator, Presentation},
    };
    use alloc::sync::Arc;

    fn ring() -> Arc<Presentation> {
        Presentation::new(
            0,
            vec![
                Generator::new("a1", 2),
                Generator::new("a2", 4),
                Generator::new("a3", 6),
                Generator::new("a4", 8),
                Generator::new("o", 1),
            ],
            24,
        )
        .unwrap()
    }

    fn series(r: &Arc<Presentation>) -> FormalSeries {
        let tail: Vec<_> = ["a1", "a2", "a3", "a4"]
            .iter()
            .map(|n| r.generator(n).unwrap())
            .collect();
        FormalSeries::with_unit_constant(r, &tail)
    }

    #[test]
    fn one_by_one() {
        let r = ring();
        let a = series(&r);
        for p in 1..=4 {
            assert_eq!(delta_pq(&a, p, 1).unwrap(), a.get(p));
        }
    }

    #[test]
    fn two_by_two() {
        let r = ring();
        let a = series(&r);
        let expected = &(&a.get(2) * &a.get(2)) - &(&a.get(1) * &a.get(3));
        assert_eq!(delta_pq(&a, 2, 2).unwrap(), expected);
    }

    #[test]
    fn three_by_three_cofactor() {
        let r = ring();
        let a = series(&r);
        let m = porteous_matrix(&a, 2, 3);
        let e = |i: usize, j: usize| m[i][j].clone();
        let minor = |i1: usize, j1: usize, i2: usize, j2: usize| {
            &(&e(i1, j1) * &e(i2, j2)) - &(&e(i1, j2) * &e(i2, j1))
        };
        let expected = &(&(&e(0, 0) * &minor(1, 1, 2, 2)) - &(&e(0, 1) * &minor(1, 0, 2, 2)))
            + &(&e(0, 2) * &minor(1, 0, 2, 1));
        assert_eq!(delta_pq(&a, 2, 3).unwrap(), expected);
    }

    #[test]
    fn odd_entries_rejected() {
        let r = ring();
        let o = r.generator("o").unwrap();
        let a = FormalSeries::new(&r, vec![r.one(), o]);
        assert_eq!(delta_pq(&a, 1, 1).unwrap_err(), Error::OddEntry);
    }

    #[test]
    fn codimension_errors() {
        let r = Presentation::new(1, vec![Generator::new("x", 2)], 8).unwrap();
        let pf = PushforwardResult {
            bundle: FormalBundle::trivial(&r, 2),
            rank_formula_check: 2,
            discrepancy_notes: vec![],
        };
        assert_eq!(
            fundamental_class(&pf, 1, 1).unwrap_err(),
            Error::Codimension(0)
        );
        assert!(fundamental_class(&pf, 1, 0).unwrap().agree);
    }

    #[test]
    fn codimension_two_difference_is_c1_squared() {
        let r =
            Presentation::new(2, vec![Generator::new("x", 2), Generator::new("y", 4)], 12).unwrap();
        let x = r.generator("x").unwrap();
        let y = r.generator("y").unwrap();
        let v = FormalBundle::new(&r, 2, vec![x.clone(), y.clone()]).unwrap();
        let pf = PushforwardResult {
            bundle: v,
            rank_formula_check: 2,
            discrepancy_notes: vec![],
        };
        let rec = fundamental_class(&pf, 2, 1).unwrap();
        assert_eq!(rec.codimension, 2);
        assert_eq!(rec.porteous, &(&x * &x) - &y);
        assert_eq!(rec.minus_chern, -&y);
        assert!(!rec.agree);
        assert_eq!(rec.difference, &x * &x);
    }
}
