mod common;

use bnquot_core::{
    ring::PairingSign,
    scenario::{a_class, alpha, b_class, gamma_class, scenario_ring},
    RingElement,
};
use common::*;
use proptest::prelude::*;

const NAMES: [&str; 8] = ["x", "y", "z", "o1", "o2", "delta_1", "delta_2", "eta"];

fn degree(name: &str) -> u32 {
    match name {
        "x" | "y" | "eta" => 2,
        "z" => 4,
        "o2" => 3,
        _ => 1,
    }
}

fn mixed(
    ring: &std::sync::Arc<bnquot_core::Presentation>,
    parts: &[Vec<(usize, i64)>],
) -> RingElement {
    let mut acc = ring.zero();
    for (k, p) in parts.iter().enumerate() {
        acc += &homogeneous(ring, k as u32, p);
    }
    acc
}

proptest! {
    #[test]
    fn adjacent_swap_costs_koszul_sign(word in prop::collection::vec(0usize..NAMES.len(), 2..5), at in 0usize..4) {
        let ring = sample_ring(12);
        let names: Vec<&str> = word.iter().map(|&i| NAMES[i]).collect();
        let i = at % (names.len() - 1);
        let mut swapped = names.clone();
        swapped.swap(i, i + 1);
        let lhs = ring.word(&swapped).unwrap();
        let rhs = ring.word(&names).unwrap();
        let sign = if degree(names[i]) * degree(names[i + 1]) % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(lhs, rhs.scale_int(sign));
    }

    #[test]
    fn multiplication_is_associative(
        a in prop::collection::vec(picks(), 0..4),
        b in prop::collection::vec(picks(), 0..4),
        c in prop::collection::vec(picks(), 0..4),
    ) {
        let ring = sample_ring(8);
        let (a, b, c) = (mixed(&ring, &a), mixed(&ring, &b), mixed(&ring, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn normal_form_is_idempotent(a in prop::collection::vec(picks(), 0..5)) {
        let ring = sample_ring(8);
        let a = mixed(&ring, &a);
        prop_assert_eq!(&(&a * &ring.one()), &a);
        prop_assert_eq!(&a.truncated(8), &a);
        prop_assert_eq!(&(&a - &a), &ring.zero());
    }

    #[test]
    fn even_elements_commute(a in prop::collection::vec(picks(), 0..3), b in prop::collection::vec(picks(), 0..4)) {
        let ring = sample_ring(10);
        let a = even_element(&ring, &a);
        let b = mixed(&ring, &b);
        prop_assert_eq!(&a * &b, &b * &a);
    }
}

#[test]
fn alpha_relations_hold_for_low_genus() {
    for g in 1..=3 {
        let ring = scenario_ring(g, 12, PairingSign::Positive).unwrap();
        let (a1, a2, eta) = (alpha(&ring, 1), alpha(&ring, 2), ring.eta());
        assert_eq!(&a1 * &a1, (&a_class(&ring) * &eta).scale_int(-2), "g = {g}");
        assert_eq!(
            &a2 * &a2,
            (&gamma_class(&ring) * &eta).scale_int(-2),
            "g = {g}"
        );
        assert_eq!(&a1 * &a2, &b_class(&ring) * &eta, "g = {g}");
        assert!(a1.pow(3).is_zero() && a2.pow(3).is_zero(), "g = {g}");
    }
}

#[test]
fn flipped_pairing_breaks_alpha_square() {
    let ring = scenario_ring(1, 8, PairingSign::Negative).unwrap();
    let a1 = alpha(&ring, 1);
    let expected = (&a_class(&ring) * &ring.eta()).scale_int(-2);
    assert_ne!(&a1 * &a1, expected);
    assert_eq!(&a1 * &a1, -&expected);
}
