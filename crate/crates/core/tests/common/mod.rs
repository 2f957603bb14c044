#![allow(dead_code)]

use std::sync::Arc;

use bnquot_core::{FormalBundle, Generator, Presentation, Rational, RingElement};
use proptest::prelude::*;

/// Two even degree-2 classes, one degree-4 class and a pair of odd classes.
pub fn sample_ring(truncation: u32) -> Arc<Presentation> {
    Presentation::new(
        1,
        vec![
            Generator::new("x", 2),
            Generator::new("y", 2),
            Generator::new("z", 4),
            Generator::new("o1", 1),
            Generator::new("o2", 3),
        ],
        truncation,
    )
    .unwrap()
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Homogeneous element of degree `deg` from `(monomial index, coefficient)` picks.
pub fn homogeneous(ring: &Arc<Presentation>, deg: u32, picks: &[(usize, i64)]) -> RingElement {
    let monos = ring.monomials_of_degree(deg);
    let mut acc = ring.zero();
    if monos.is_empty() {
        return acc;
    }
    for &(i, c) in picks {
        acc += &RingElement::from_term(ring, monos[i % monos.len()].clone(), rat(c));
    }
    acc
}

/// Even element: a sum of homogeneous parts of degree `0, 2, ..., 2*max_half`.
pub fn even_element(ring: &Arc<Presentation>, parts: &[Vec<(usize, i64)>]) -> RingElement {
    let mut acc = ring.zero();
    for (k, picks) in parts.iter().enumerate() {
        acc += &homogeneous(ring, 2 * k as u32, picks);
    }
    acc
}

pub fn picks() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..64, -4i64..=4), 0..4)
}

/// Honest bundle data: rank in `1..=max_rank` and one pick list per Chern class.
pub fn bundle_data(max_rank: i64) -> impl Strategy<Value = (i64, Vec<Vec<(usize, i64)>>)> {
    (1..=max_rank).prop_flat_map(|r| (Just(r), prop::collection::vec(picks(), r as usize)))
}

pub fn bundle(ring: &Arc<Presentation>, rank: i64, data: &[Vec<(usize, i64)>]) -> FormalBundle {
    let chern = data
        .iter()
        .enumerate()
        .map(|(i, p)| homogeneous(ring, 2 * (i as u32 + 1), p))
        .collect();
    FormalBundle::new(ring, rank, chern).unwrap()
}
