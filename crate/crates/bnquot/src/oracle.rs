//! Independent reference computations used by the verification suite.
//!
//! None of these call the engine routine they check.

use std::sync::Arc;

use bnquot_core::{Presentation, Rational, RingElement};

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn s(ring: &Arc<Presentation>, i: u32, j: u32) -> RingElement {
    ring.generator(&format!("s{i}_{j}"))
        .expect("Künneth generator")
}

/// `(A, γ, B)` from their defining sums over a symplectic basis.
pub fn pairing_classes(ring: &Arc<Presentation>) -> (RingElement, RingElement, RingElement) {
    let g = ring.genus();
    let mut a = ring.zero();
    let mut gamma = ring.zero();
    let mut b = ring.zero();
    for j in 1..=g {
        a = &a + &(&s(ring, 1, j) * &s(ring, 1, j + g));
        gamma = &gamma + &(&s(ring, 2, j) * &s(ring, 2, j + g));
        b = &b - &(&s(ring, 1, j) * &s(ring, 2, j + g));
        b = &b + &(&s(ring, 1, j + g) * &s(ring, 2, j));
    }
    (a, gamma, b)
}

/// `Σ_j s_i^j δ_j` assembled from words, so the Koszul signs come from the
/// ordered product rather than from term-by-term multiplication.
pub fn alpha_from_words(ring: &Arc<Presentation>, i: u32) -> RingElement {
    let mut acc = ring.zero();
    for j in 1..=2 * ring.genus() {
        let name = format!("s{i}_{j}");
        let delta = format!("delta_{j}");
        acc = &acc + &ring.word(&[&name, &delta]).expect("known generators");
    }
    acc
}

/// Cofactor expansion along the first row.
pub fn laplace(m: &[Vec<RingElement>]) -> RingElement {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let ring = Arc::clone(m[0][0].ring());
    let mut acc = ring.zero();
    for j in 0..m.len() {
        let minor: Vec<Vec<RingElement>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &laplace(&minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

/// Bernoulli numbers with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Vec<Rational> {
    let mut b = vec![rat(1)];
    for m in 1..=n {
        let mut acc = rat(0);
        let mut binom = rat(1);
        for (j, bj) in b.iter().enumerate() {
            acc += &binom * bj;
            binom = binom * rat((m + 1 - j) as i64) / rat(j as i64 + 1);
        }
        b.push(-acc / rat(m as i64 + 1));
    }
    b
}

/// Coefficients of `x / (1 - e^{-x}) = Σ (-1)^k B_k x^k / k!`.
pub fn todd_line(n: usize) -> Vec<Rational> {
    let b = bernoulli(n);
    let mut fact = rat(1);
    let mut out = Vec::with_capacity(n + 1);
    for (k, bk) in b.iter().enumerate() {
        if k > 0 {
            fact *= rat(k as i64);
        }
        let sign = if k % 2 == 1 { -1 } else { 1 };
        out.push(bk * rat(sign) / &fact);
    }
    out
}

/// `p_k = Σ x_i^k` over explicit roots.
pub fn power_sums_of_roots(roots: &[RingElement], n: usize) -> Vec<RingElement> {
    (1..=n)
        .map(|k| {
            roots
                .iter()
                .fold(roots[0].ring().zero(), |acc, x| &acc + &x.pow(k as u32))
        })
        .collect()
}

/// `e_k` of the roots.
pub fn elementary_of_roots(roots: &[RingElement]) -> Vec<RingElement> {
    let ring = roots[0].ring();
    let mut e = vec![ring.one()];
    for x in roots {
        let mut next = e.clone();
        next.push(ring.zero());
        for k in 1..next.len() {
            next[k] = &e.get(k).cloned().unwrap_or_else(|| ring.zero()) + &(&e[k - 1] * x);
        }
        e = next;
    }
    e.remove(0);
    e
}

pub fn pushforward_rank(g: i64, d: i64, s: i64) -> (i64, i64) {
    let a = (d + s) / 2;
    (d + 2 * a + 2 * (1 - g), 2 * d + s + 2 * (1 - g))
}

/// Status label of the existence rules, written out clause by clause.
pub fn existence(g: i64, d: i64, s: i64) -> &'static str {
    if s > g {
        return "empty";
    }
    let elliptic = g == 1 && d >= 3 && (s == 0 || s == 1);
    let large = g >= s && s >= 0 && d > 2 * (2 * g - 1);
    if elliptic || large {
        "non-empty"
    } else {
        "unknown"
    }
}
