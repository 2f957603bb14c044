mod common;

use std::sync::Arc;

use bnquot_core::{
    kunneth::{decompose, grr_pushforward, is_base_only},
    porteous::{delta_pq, determinant, porteous_matrix},
    ring::PairingSign,
    scenario::scenario_ring,
    FormalBundle, FormalSeries, Presentation, RingElement, Scenario,
};
use common::*;
use proptest::prelude::*;

fn curve_ring() -> Arc<Presentation> {
    scenario_ring(1, 10, PairingSign::Positive).unwrap()
}

fn line(ring: &Arc<Presentation>, p: &[(usize, i64)], fiber_degree: i64) -> FormalBundle {
    let c1 = &homogeneous(ring, 2, p) + &ring.eta().scale_int(fiber_degree);
    FormalBundle::line(&c1).unwrap()
}

/// Cofactor expansion along the first row.
fn laplace(m: &[Vec<RingElement>]) -> RingElement {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let ring = m[0][0].ring().clone();
    let mut acc = ring.zero();
    for j in 0..n {
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
        if j % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn pushforward_is_additive(p1 in picks(), p2 in picks(), d1 in -2i64..4, d2 in -2i64..4) {
        let ring = curve_ring();
        let (l1, l2) = (line(&ring, &p1, d1), line(&ring, &p2, d2));
        let n = 3;
        let whole = grr_pushforward(&l1.direct_sum(&l2).unwrap(), n).unwrap().bundle;
        let parts = grr_pushforward(&l1, n).unwrap().bundle
            .direct_sum(&grr_pushforward(&l2, n).unwrap().bundle).unwrap();
        prop_assert_eq!(whole.rank(), parts.rank());
        for i in 1..=n {
            prop_assert_eq!(whole.chern(i), parts.chern(i), "c_{}", i);
        }
    }

    #[test]
    fn pushforward_is_base_only((rank, data) in bundle_data(2), d in 0i64..5) {
        let ring = curve_ring();
        let mut chern: Vec<RingElement> = data.iter().enumerate()
            .map(|(i, p)| homogeneous(&ring, 2 * (i as u32 + 1), p))
            .collect();
        chern[0] += &ring.eta().scale_int(d);
        let b = FormalBundle::new(&ring, rank, chern).unwrap();
        let fiber_degree = b.chern(1).coeff_of(&[("eta", 1)]);
        let pf = grr_pushforward(&b, 4).unwrap();
        prop_assert_eq!(rat(pf.bundle.rank()), fiber_degree);
        prop_assert_eq!(pf.rank_formula_check, pf.bundle.rank());
        for c in pf.bundle.chern_classes() {
            prop_assert!(is_base_only(c));
        }
    }

    #[test]
    fn kunneth_decomposition_recomposes(parts in prop::collection::vec(picks(), 0..6)) {
        let ring = curve_ring();
        let mut z = ring.zero();
        for (k, p) in parts.iter().enumerate() {
            z += &homogeneous(&ring, k as u32, p);
        }
        let k = decompose(&z).unwrap();
        prop_assert_eq!(k.recompose(), z);
        prop_assert!(is_base_only(&k.base) && is_base_only(&k.eta));
    }

    #[test]
    fn delta_matches_laplace(size in 2usize..=3, p in 1i64..4, coeffs in prop::collection::vec(picks(), 6)) {
        let ring = sample_ring(24);
        let tail: Vec<RingElement> = coeffs.iter().enumerate()
            .map(|(i, c)| homogeneous(&ring, 2 * (i as u32 + 1), c))
            .collect();
        let a = FormalSeries::with_unit_constant(&ring, &tail);
        let m = porteous_matrix(&a, p, size);
        prop_assert_eq!(delta_pq(&a, p, size).unwrap(), laplace(&m));
        prop_assert_eq!(determinant(&m).unwrap(), laplace(&m));
    }

    #[test]
    fn porteous_one_row_is_inverse_series((rank, data) in bundle_data(4), p in 1i64..6) {
        let ring = sample_ring(16);
        let v = bundle(&ring, rank, &data);
        let inv = v.inverse_total_chern(p as usize);
        prop_assert_eq!(delta_pq(&inv, p, 1).unwrap(), inv.get(p));
        prop_assert_eq!(delta_pq(&inv, 1, 1).unwrap(), -&v.chern(1));
    }
}

#[test]
fn genus_one_class_extraction_rule() {
    for d in 3..=10 {
        if d % 2 == 1 {
            assert!(Scenario::new(1, d, 0, None).is_err(), "s = 0 needs even d");
            continue;
        }
        let sc = Scenario::new(1, d, 0, None).unwrap();
        let report = sc.brill_noether_class().unwrap();
        let c = &report.class.minus_chern;
        assert_eq!(c.coeff_of(&[("t1", 1)]), rat(-(d + sc.a())), "d = {d}");
        assert_eq!(c.coeff_of(&[("u1", 1)]), rat(1), "d = {d}");
        assert_eq!(report.pushforward_rank, 2 * d);
        assert!(report.class.agree);
    }
}
