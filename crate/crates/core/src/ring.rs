//! Free graded-supercommutative algebra over the rationals with the cohomology
//! relations of a genus-`g` curve.
//!
//! A [`Presentation`] lists named generators with a cohomological degree. Odd
//! generators anticommute and square to zero. Every presentation also carries
//! the curve classes `delta_1 .. delta_2g` (degree 1) and the point class `eta`
//! (degree 2), placed after all base generators, subject to
//!
//! ```text
//! eta^2 = 0,   eta * delta_j = 0,   delta_j * delta_{j+g} = eta,
//! delta_j * delta_k = 0   for k not in {j, j+g, j-g}.
//! ```
//!
//! Monomials are kept in canonical order (generator index ascending), so a
//! normal monomial has one of the fiber factors `1`, `delta_j` or `eta`.

use alloc::{
    boxed::Box,
    collections::BTreeMap,
    format,
    string::{String, ToString},
    sync::Arc,
    vec,
    vec::Vec,
};
use core::{cmp::Ordering, fmt, ops};

use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

/// Name of the point class of the curve.
pub const ETA: &str = "eta";
/// Prefix of the degree-one curve classes `delta_1 .. delta_2g`.
pub const DELTA_PREFIX: &str = "delta";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_degree(degree: u32) -> Self {
        if degree.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    name: String,
    degree: u32,
    parity: Parity,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator {
            name: name.into(),
            degree,
            parity: Parity::of_degree(degree),
        }
    }

    /// Builds a generator with an explicit parity, which must match the degree.
    pub fn with_parity(name: impl Into<String>, degree: u32, parity: Parity) -> Result<Self> {
        let name = name.into();
        if Parity::of_degree(degree) != parity {
            return Err(Error::ParityMismatch { name, degree });
        }
        Ok(Generator {
            name,
            degree,
            parity,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }
}

/// Sign of the pairing `delta_j * delta_{j+g}`.
///
/// `Positive` (`= +eta`) is the convention under which `alpha_1^2 = -2 A eta`.
/// Flipping it flips the signs of `A`, `B` and `gamma` simultaneously.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PairingSign {
    #[default]
    Positive,
    Negative,
}

/// Which curve factor a normal monomial carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberFactor {
    One,
    /// `delta_j`, 1-based.
    Delta(usize),
    Eta,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    genus: u32,
    generators: Vec<Generator>,
    base_count: usize,
    truncation: u32,
    pairing: PairingSign,
    odd_mask: u128,
    delta_mask: u128,
}

fn is_reserved(name: &str) -> bool {
    name == ETA || name == "η" || name.starts_with(DELTA_PREFIX) || name.starts_with('δ')
}

impl Presentation {
    /// Builds the ring for a curve of genus `genus` with the given base
    /// generators. Classes of degree above `truncation` are zero.
    pub fn new(genus: u32, base: Vec<Generator>, truncation: u32) -> Result<Arc<Self>> {
        Self::with_pairing(genus, base, truncation, PairingSign::Positive)
    }

    pub fn with_pairing(
        genus: u32,
        base: Vec<Generator>,
        truncation: u32,
        pairing: PairingSign,
    ) -> Result<Arc<Self>> {
        if truncation < 2 {
            return Err(Error::TruncationTooSmall(truncation));
        }
        for (i, g) in base.iter().enumerate() {
            if is_reserved(&g.name) {
                return Err(Error::ReservedName(g.name.clone()));
            }
            if base[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        let base_count = base.len();
        let total = base_count + 2 * genus as usize + 1;
        if total > 128 {
            return Err(Error::TooManyGenerators(total));
        }
        let mut generators = base;
        for j in 1..=2 * genus {
            generators.push(Generator::new(format!("{DELTA_PREFIX}_{j}"), 1));
        }
        generators.push(Generator::new(ETA, 2));

        let mut odd_mask = 0u128;
        for (i, g) in generators.iter().enumerate() {
            if g.is_odd() {
                odd_mask |= 1 << i;
            }
        }
        let mut delta_mask = 0u128;
        for j in 0..2 * genus as usize {
            delta_mask |= 1 << (base_count + j);
        }
        Ok(Arc::new(Presentation {
            genus,
            generators,
            base_count,
            truncation,
            pairing,
            odd_mask,
            delta_mask,
        }))
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn pairing(&self) -> PairingSign {
        self.pairing
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn base_generators(&self) -> &[Generator] {
        &self.generators[..self.base_count]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Index of `delta_j` (1-based `j`).
    pub fn delta_index(&self, j: usize) -> Option<usize> {
        (1..=2 * self.genus as usize)
            .contains(&j)
            .then(|| self.base_count + j - 1)
    }

    pub fn eta_index(&self) -> usize {
        self.generators.len() - 1
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial {
            degree: 0,
            odd: 0,
            exps: vec![0; self.generators.len()].into_boxed_slice(),
        }
    }

    fn single(&self, index: usize) -> Monomial {
        let mut m = self.one_monomial();
        m.exps[index] = 1;
        m.degree = self.generators[index].degree;
        if self.generators[index].is_odd() {
            m.odd = 1 << index;
        }
        m
    }

    /// Builds a normal-form monomial from `(name, exponent)` factors, listed in
    /// any order. The result carries no sign; use [`Presentation::word`] for
    /// ordered products.
    pub fn monomial(&self, factors: &[(&str, u16)]) -> Result<Monomial> {
        let mut m = self.one_monomial();
        for &(name, e) in factors {
            let i = self
                .index_of(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            m.exps[i] += e;
        }
        let mut degree = 0;
        for (i, g) in self.generators.iter().enumerate() {
            if g.is_odd() && m.exps[i] > 1 {
                return Err(Error::NotNormal(format!("{} squared", g.name)));
            }
            if m.exps[i] > 0 && g.is_odd() {
                m.odd |= 1 << i;
            }
            degree += g.degree * m.exps[i] as u32;
        }
        m.degree = degree;
        let eta = m.exps[self.eta_index()];
        let deltas = (m.odd & self.delta_mask).count_ones();
        if eta > 1 || deltas > 1 || (eta == 1 && deltas == 1) {
            return Err(Error::NotNormal(
                "fiber part must be 1, delta_j or eta".into(),
            ));
        }
        Ok(m)
    }

    /// Product of two normal monomials: `None` when it vanishes, otherwise the
    /// normal monomial together with a flag for a negative sign.
    pub(crate) fn mul_monomials(
        &self,
        a: &Monomial,
        b: &Monomial,
        max_degree: u32,
    ) -> Option<(bool, Monomial)> {
        let degree = a.degree + b.degree;
        if degree > max_degree || a.odd & b.odd != 0 {
            return None;
        }
        // Koszul sign: every odd factor of b moves left past the odd factors of
        // a with a larger index.
        let mut negative = false;
        let mut rest = b.odd;
        while rest != 0 {
            let i = rest.trailing_zeros();
            rest &= rest - 1;
            let above = if i == 127 { 0 } else { a.odd >> (i + 1) };
            negative ^= above.count_ones() % 2 == 1;
        }
        let mut exps = a.exps.clone();
        for (e, f) in exps.iter_mut().zip(b.exps.iter()) {
            *e += *f;
        }
        let mut odd = a.odd | b.odd;

        let eta = self.eta_index();
        let deltas = odd & self.delta_mask;
        match (exps[eta], deltas.count_ones()) {
            (0, 0) | (0, 1) | (1, 0) => {}
            (0, 2) => {
                let j = deltas.trailing_zeros() as usize;
                let k = 127 - deltas.leading_zeros() as usize;
                if k - j != self.genus as usize {
                    return None;
                }
                // delta_j and delta_{j+g} are the last two odd factors, adjacent
                // in canonical order.
                exps[j] = 0;
                exps[k] = 0;
                odd &= !deltas;
                exps[eta] = 1;
                negative ^= self.pairing == PairingSign::Negative;
            }
            _ => return None,
        }
        Some((negative, Monomial { degree, odd, exps }))
    }

    pub fn fiber_factor(&self, m: &Monomial) -> FiberFactor {
        let deltas = m.odd & self.delta_mask;
        if deltas != 0 {
            FiberFactor::Delta(deltas.trailing_zeros() as usize - self.base_count + 1)
        } else if m.exps[self.eta_index()] > 0 {
            FiberFactor::Eta
        } else {
            FiberFactor::One
        }
    }

    /// Removes the curve factor of a normal monomial. Since the curve factor is
    /// last in canonical order, `m = strip(m) * fiber` with no sign.
    pub(crate) fn strip_fiber(&self, m: &Monomial) -> Monomial {
        let mut out = m.clone();
        match self.fiber_factor(m) {
            FiberFactor::One => {}
            FiberFactor::Delta(j) => {
                let i = self.base_count + j - 1;
                out.exps[i] = 0;
                out.odd &= !(1 << i);
                out.degree -= 1;
            }
            FiberFactor::Eta => {
                out.exps[self.eta_index()] = 0;
                out.degree -= 2;
            }
        }
        out
    }

    /// All normal monomials of exactly the given degree, in monomial order.
    pub fn monomials_of_degree(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = self.one_monomial();
        self.base_monomials(0, degree, &mut current, &mut out);
        if degree >= 1 {
            let mut base = Vec::new();
            let mut current = self.one_monomial();
            self.base_monomials(0, degree - 1, &mut current, &mut base);
            for m in base {
                for j in 1..=2 * self.genus as usize {
                    let i = self.base_count + j - 1;
                    let mut n = m.clone();
                    n.exps[i] = 1;
                    n.odd |= 1 << i;
                    n.degree += 1;
                    out.push(n);
                }
            }
        }
        if degree >= 2 {
            let mut base = Vec::new();
            let mut current = self.one_monomial();
            self.base_monomials(0, degree - 2, &mut current, &mut base);
            for mut m in base {
                m.exps[self.eta_index()] = 1;
                m.degree += 2;
                out.push(m);
            }
        }
        out.sort();
        out
    }

    fn base_monomials(
        &self,
        index: usize,
        remaining: u32,
        current: &mut Monomial,
        out: &mut Vec<Monomial>,
    ) {
        if index == self.base_count {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let g = &self.generators[index];
        let max_exp = if g.degree == 0 {
            0
        } else if g.is_odd() {
            1.min(remaining / g.degree)
        } else {
            remaining / g.degree
        };
        for e in 0..=max_exp {
            current.exps[index] = e as u16;
            current.degree += e * g.degree;
            if e == 1 && g.is_odd() {
                current.odd |= 1 << index;
            }
            self.base_monomials(index + 1, remaining - e * g.degree, current, out);
            current.degree -= e * g.degree;
            current.odd &= !(1 << index);
        }
        current.exps[index] = 0;
    }

    pub fn zero(self: &Arc<Self>) -> RingElement {
        RingElement::zero(self)
    }

    pub fn one(self: &Arc<Self>) -> RingElement {
        RingElement::one(self)
    }

    pub fn constant(self: &Arc<Self>, c: impl Into<Rational>) -> RingElement {
        RingElement::constant(self, c.into())
    }

    pub fn generator(self: &Arc<Self>, name: &str) -> Result<RingElement> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(RingElement::from_monomial(self, self.single(i)))
    }

    /// `delta_j`, 1-based.
    pub fn delta(self: &Arc<Self>, j: usize) -> RingElement {
        let i = self.delta_index(j).expect("delta index out of range");
        RingElement::from_monomial(self, self.single(i))
    }

    pub fn eta(self: &Arc<Self>) -> RingElement {
        RingElement::from_monomial(self, self.single(self.eta_index()))
    }

    /// Ordered product of generators, e.g. `["delta_2", "s1_1"]`; reordering
    /// into canonical form picks up the Koszul sign.
    pub fn word(self: &Arc<Self>, names: &[&str]) -> Result<RingElement> {
        let mut acc = self.one();
        for name in names {
            acc = &acc * &self.generator(name)?;
        }
        Ok(acc)
    }
}

/// A normal-form monomial: exponents indexed by generator position.
///
/// Ordered by degree first; within a degree, larger exponents on earlier
/// generators come first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    odd: u128,
    exps: Box<[u16]>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.exps[index]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0 && self.exps.iter().all(|&e| e == 0)
    }

    /// Nonzero `(generator index, exponent)` pairs in canonical order.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
    }

    pub fn render(&self, ring: &Presentation) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, e) in self.factors() {
            let name = ring.generators[i].name();
            if e == 1 {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An exact rational combination of normal monomials. Zero coefficients are
/// never stored.
#[derive(Clone, Debug)]
pub struct RingElement {
    ring: Arc<Presentation>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for RingElement {}

fn same_ring(a: &Arc<Presentation>, b: &Arc<Presentation>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl RingElement {
    pub fn zero(ring: &Arc<Presentation>) -> Self {
        RingElement {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<Presentation>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<Presentation>, c: Rational) -> Self {
        Self::from_term(ring, ring.one_monomial(), c)
    }

    pub fn from_monomial(ring: &Arc<Presentation>, m: Monomial) -> Self {
        Self::from_term(ring, m, Rational::one())
    }

    pub fn from_term(ring: &Arc<Presentation>, m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() && m.degree <= ring.truncation {
            terms.insert(m, c);
        }
        RingElement {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Presentation> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in rendering order: by degree, then monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial named by `factors`; unknown names give zero.
    pub fn coeff_of(&self, factors: &[(&str, u16)]) -> Rational {
        match self.ring.monomial(factors) {
            Ok(m) => self.coeff(&m),
            Err(_) => Rational::zero(),
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&self.ring.one_monomial())
    }

    pub fn graded_part(&self, k: u32) -> Self {
        self.filter(|m| m.degree == k)
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncated(&self, max_degree: u32) -> Self {
        self.filter(|m| m.degree <= max_degree)
    }

    pub(crate) fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        RingElement {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree).max()
    }

    /// True when every term has degree `k` (zero is homogeneous of any degree).
    pub fn is_homogeneous(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.degree == k)
    }

    /// True when every term has even degree, i.e. the element is central.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.degree % 2 == 0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        RingElement {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Rational::from_integer(c.into()))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::IncompatiblePresentations)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_terms(other, false);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_terms(other, true);
        Ok(out)
    }

    fn add_terms(&mut self, other: &Self, negate: bool) {
        for (m, c) in &other.terms {
            let c = if negate { -c } else { c.clone() };
            accumulate(&mut self.terms, m.clone(), c);
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.mul_truncated(other, self.ring.truncation)
    }

    /// Product with every term of degree above `max_degree` discarded.
    pub fn mul_truncated(&self, other: &Self, max_degree: u32) -> Result<Self> {
        self.check(other)?;
        let cap = max_degree.min(self.ring.truncation);
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((negative, m)) = self.ring.mul_monomials(ma, mb, cap) {
                    let c = ca * cb;
                    accumulate(&mut terms, m, if negative { -c } else { c });
                }
            }
        }
        Ok(RingElement {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    use alloc::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl fmt::Display for RingElement {
    /// Canonical text: terms by degree then monomial order, coefficients as
    /// reduced fractions, e.g. `-2*s1_1*s1_2*eta`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&m.render(&self.ring))?;
            } else {
                write!(f, "{abs}*{}", m.render(&self.ring))?;
            }
        }
        Ok(())
    }
}

impl ops::Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.checked_add(rhs).expect("ring presentations differ")
    }
}

impl ops::Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self.checked_sub(rhs).expect("ring presentations differ")
    }
}

impl ops::Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.checked_mul(rhs).expect("ring presentations differ")
    }
}

impl ops::Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl ops::AddAssign<&RingElement> for RingElement {
    fn add_assign(&mut self, rhs: &RingElement) {
        self.check(rhs).expect("ring presentations differ");
        self.add_terms(rhs, false);
    }
}

impl ops::SubAssign<&RingElement> for RingElement {
    fn sub_assign(&mut self, rhs: &RingElement) {
        self.check(rhs).expect("ring presentations differ");
        self.add_terms(rhs, true);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn genus_one() -> Arc<Presentation> {
        let base = vec![
            Generator::new("t1", 2),
            Generator::new("t2", 4),
            Generator::new("u1", 2),
            Generator::new("s1_1", 1),
            Generator::new("s1_2", 1),
            Generator::new("s2_1", 3),
            Generator::new("s2_2", 3),
        ];
        Presentation::new(1, base, 10).unwrap()
    }

    #[test]
    fn generator_counts() {
        let r0 = Presentation::new(0, vec![Generator::new("t1", 2)], 8).unwrap();
        assert_eq!(r0.generators().len(), 2);
        assert!(r0.index_of(ETA).is_some());
        assert!(r0.delta_index(1).is_none());

        let r1 = genus_one();
        assert_eq!(
            r1.generators()
                .iter()
                .filter(|g| g.name().starts_with("delta"))
                .count(),
            2
        );

        let r2 = Presentation::new(2, vec![], 8).unwrap();
        assert_eq!(r2.generators().len(), 5);
    }

    #[test]
    fn presentation_errors() {
        let dup = vec![Generator::new("t1", 2), Generator::new("t1", 2)];
        assert_eq!(
            Presentation::new(1, dup, 8).unwrap_err(),
            Error::DuplicateGenerator("t1".into())
        );
        assert!(matches!(
            Presentation::new(1, vec![Generator::new("eta", 2)], 8),
            Err(Error::ReservedName(_))
        ));
        assert!(matches!(
            Presentation::new(1, vec![Generator::new("delta_1", 1)], 8),
            Err(Error::ReservedName(_))
        ));
        assert!(matches!(
            Generator::with_parity("x", 2, Parity::Odd),
            Err(Error::ParityMismatch { .. })
        ));
        assert!(Presentation::new(1, vec![], 1).is_err());
    }

    #[test]
    fn curve_relations() {
        let r = genus_one();
        let eta = r.eta();
        assert!((&eta * &eta).is_zero());
        let d1 = r.delta(1);
        let d2 = r.delta(2);
        assert!((&d1 * &d1).is_zero());
        assert!((&eta * &d1).is_zero());
        assert_eq!(&d1 * &d2, eta);
        assert_eq!(&d2 * &d1, -&eta);
    }

    #[test]
    fn alpha_squared_genus_one() {
        let r = genus_one();
        let alpha1 = &(&r.generator("s1_1").unwrap() * &r.delta(1))
            + &(&r.generator("s1_2").unwrap() * &r.delta(2));
        let sq = &alpha1 * &alpha1;
        let m = r.monomial(&[("s1_1", 1), ("s1_2", 1), ("eta", 1)]).unwrap();
        assert_eq!(sq.coeff(&m), q(-2));
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.to_string(), "-2*s1_1*s1_2*eta");
    }

    #[test]
    fn coeff_and_graded_part() {
        let r = genus_one();
        let z = &r.eta().scale_int(3) + &r.delta(1);
        let eta = r.monomial(&[("eta", 1)]).unwrap();
        assert_eq!(z.coeff(&eta), q(3));
        assert_eq!(r.zero().coeff(&eta), q(0));
        let rest = &z - &RingElement::from_term(&r, eta.clone(), z.coeff(&eta));
        assert_eq!(rest.coeff(&eta), q(0));

        let t1 = r.generator("t1").unwrap();
        let z = &(&r.one() + &t1) + &(&t1 * &t1);
        assert_eq!(z.graded_part(2), t1);
        assert!(r.eta().graded_part(1).is_zero());
    }

    #[test]
    fn truncation_kills_high_degree() {
        let r = genus_one();
        let t2 = r.generator("t2").unwrap();
        assert!(!(&t2 * &t2).is_zero());
        assert!((&(&t2 * &t2) * &t2).is_zero());
    }

    #[test]
    fn words_pick_up_koszul_signs() {
        let r = genus_one();
        let a = r.word(&["s1_1", "s2_1"]).unwrap();
        let b = r.word(&["s2_1", "s1_1"]).unwrap();
        assert_eq!(a, -&b);
        let c = r.word(&["t1", "s1_1"]).unwrap();
        let d = r.word(&["s1_1", "t1"]).unwrap();
        assert_eq!(c, d);
        let e = r.word(&["delta_2", "s1_1", "delta_1"]).unwrap();
        // delta_2 s delta_1 = -s delta_2 delta_1 = s delta_1 delta_2 = s eta
        assert_eq!(e, r.word(&["s1_1", "eta"]).unwrap());
    }

    #[test]
    fn incompatible_presentations() {
        let a = genus_one();
        let b = Presentation::new(2, vec![], 8).unwrap();
        assert_eq!(
            a.eta().checked_mul(&b.eta()).unwrap_err(),
            Error::IncompatiblePresentations
        );
    }

    #[test]
    fn monomials_of_degree_counts() {
        let r =
            Presentation::new(1, vec![Generator::new("x", 2), Generator::new("o", 1)], 8).unwrap();
        // degree 2: x, o*delta_1, o*delta_2, eta
        assert_eq!(r.monomials_of_degree(2).len(), 4);
        // degree 1: o, delta_1, delta_2
        assert_eq!(r.monomials_of_degree(1).len(), 3);
    }

    #[test]
    fn rendering() {
        let r = genus_one();
        let t1 = r.generator("t1").unwrap();
        let u1 = r.generator("u1").unwrap();
        let z = &(&t1.scale(&Rational::new(q(1).to_integer(), 2.into())) - &u1) + &r.constant(q(3));
        assert_eq!(z.to_string(), "3 + 1/2*t1 - u1");
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!((&t1 * &t1).to_string(), "t1^2");
    }
}
