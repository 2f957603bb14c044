use bnquot_core::lab::{
    kernel::SplittingType,
    sample::{sample_kernel_with, sample_quotient, trial_rng},
    stratum_dimension,
};

#[test]
fn constructed_quotients_round_trip() {
    for d in 1..=6u32 {
        for a in 0..=d / 2 {
            for trial in 0..4 {
                let mut rng = trial_rng(u64::from(100 * d + a), trial);
                let k = sample_quotient(&mut rng, [a, d - a], 10)
                    .unwrap()
                    .kernel()
                    .unwrap();
                assert_eq!(
                    k.splitting_type().unwrap(),
                    SplittingType { a, b: d - a },
                    "d = {d}, a = {a}"
                );
                assert!(k.euler_check().unwrap());
            }
        }
    }
}

#[test]
fn section_counts_are_monotone_and_eventually_step_by_two() {
    for d in 1..=7u32 {
        for trial in 0..3 {
            let mut rng = trial_rng(7, u64::from(10 * d) + trial);
            let k = sample_kernel_with(&mut rng, [d.div_ceil(2), d / 2], 10).unwrap();
            let split = k.splitting_type().unwrap();
            let counts: Vec<usize> = (0..=d as i64 + 2)
                .map(|j| k.twisted_dual_sections(j).unwrap())
                .collect();
            for (j, w) in counts.windows(2).enumerate() {
                assert!(w[0] <= w[1], "d = {d}");
                if j as u32 >= split.b {
                    assert_eq!(w[1] - w[0], 2, "d = {d}, k = {j}");
                }
            }
            assert_eq!(k.segre_p1().unwrap().rem_euclid(2), i64::from(d % 2));
            assert!(split.a <= split.b);
            assert!(k.euler_check().unwrap());
        }
    }
}

#[test]
fn stratum_dimensions() {
    for d in 1..=8u32 {
        for a in 0..=d / 2 {
            let s = stratum_dimension(d, a).unwrap();
            if 2 * a < d {
                assert!(s.agree, "d = {d}, a = {a}");
            } else {
                assert_eq!(s.formula - s.lab, 1, "balanced d = {d}");
            }
        }
    }
}
