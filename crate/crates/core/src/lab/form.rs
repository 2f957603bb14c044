//! Binary forms in `x, y` and univariate gcds on the affine charts.

use alloc::{vec, vec::Vec};
use core::fmt;

use num_traits::{One, Zero};

use crate::Rational;

/// Homogeneous form of degree `degree`; `coeffs[k]` multiplies `x^k y^{degree-k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomForm {
    degree: u32,
    coeffs: Vec<Rational>,
}

impl HomForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a form of degree d has d+1 coefficients"
        );
        HomForm {
            degree: coeffs.len() as u32 - 1,
            coeffs,
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero(degree: u32) -> Self {
        HomForm {
            degree,
            coeffs: vec![Rational::zero(); degree as usize + 1],
        }
    }

    /// `x^k y^{degree-k}`.
    pub fn monomial(degree: u32, k: u32) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[k as usize] = Rational::one();
        f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree, other.degree,
            "adding forms of different degree"
        );
        HomForm {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree, other.degree,
            "subtracting forms of different degree"
        );
        HomForm {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Value at `(x, y)`.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let xk = pow(x, k as u32);
            let yk = pow(y, self.degree - k as u32);
            acc += c * xk * yk;
        }
        acc
    }

    /// Chart `y = 1`: a polynomial in `x`, coefficients by ascending power.
    pub fn chart_y(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    /// Chart `x = 1`: a polynomial in `y`.
    pub fn chart_x(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().rev().cloned().collect())
    }
}

fn pow(x: &Rational, n: u32) -> Rational {
    (0..n).fold(Rational::one(), |acc, _| acc * x)
}

impl fmt::Display for HomForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Dense univariate polynomial, ascending powers, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn rem(&self, divisor: &Self) -> Self {
        let lead = divisor.coeffs.last().expect("division by zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let factor = r.last().unwrap() / lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                r[shift + i] -= &factor * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    fn monic(self) -> Self {
        match self.coeffs.last() {
            None => self,
            Some(lead) => {
                let inv = Rational::one() / lead;
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Whether binary forms of a common degree have no common zero on `P^1`.
/// Both affine charts must have constant gcd; all-zero input has common zeros.
pub fn no_common_zero(forms: &[HomForm]) -> bool {
    if forms.iter().all(HomForm::is_zero) {
        return false;
    }
    let constant_gcd = |chart: &dyn Fn(&HomForm) -> UniPoly| {
        let g = forms
            .iter()
            .map(chart)
            .fold(UniPoly::new(Vec::new()), |acc, p| acc.gcd(&p));
        g.degree() == Some(0)
    };
    constant_gcd(&HomForm::chart_y) && constant_gcd(&HomForm::chart_x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::new(
            c.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect(),
        )
    }

    #[test]
    fn gcd_examples() {
        // (x-1)(x-2) and (x-1)(x+3)
        let g = p(&[2, -3, 1]).gcd(&p(&[-3, 2, 1]));
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[2])).degree(), Some(0));
        assert!(p(&[]).gcd(&p(&[])).is_zero());
    }

    #[test]
    fn common_zero_detection() {
        let x2 = HomForm::from_ints(&[0, 0, 1]);
        let y2 = HomForm::from_ints(&[1, 0, 0]);
        let xy = HomForm::from_ints(&[0, 1, 0]);
        assert!(no_common_zero(&[x2.clone(), y2.clone(), xy.clone()]));
        // x^2 and xy vanish at [0:1]
        assert!(!no_common_zero(&[x2.clone(), xy.clone()]));
        // y^2 and xy vanish at [1:0], seen only on the x = 1 chart
        assert!(!no_common_zero(&[y2, xy]));
        assert!(!no_common_zero(&[HomForm::zero(2)]));
        assert!(no_common_zero(&[HomForm::from_ints(&[3])]));
    }

    #[test]
    fn form_product() {
        let a = HomForm::from_ints(&[1, 1]); // y + x
        let b = HomForm::from_ints(&[-1, 1]); // -y + x
        assert_eq!(a.mul(&b), HomForm::from_ints(&[-1, 0, 1]));
        let x = Rational::from_integer(2.into());
        let y = Rational::from_integer(3.into());
        assert_eq!(a.mul(&b).eval(&x, &y), Rational::from_integer((-5).into()));
    }
}
