//! Cross-module invariants and property tests.

mod common;

use bargmann_fock::fock::{
    a2_inner_quadrature_default, bargmann_of_expansion, bargmann_of_samples, ComplexPoint,
    SampledFunction,
};
use bargmann_fock::hermite::{l2_inner, HermiteExpansion};
use bargmann_fock::io;
use bargmann_fock::multi_index::{enumerate_multi_indices, MultiIndex};
use bargmann_fock::radial::{
    eval_f0, eval_via_e0, extract_profile, radial_test, reduce_dimension, synth_gaussian,
    synth_radial, unitary_pullback_residual, OrthogonalMatrix, RadialProfile,
};
use bargmann_fock::stft::{bridge_residual, stft_from_fock, stft_gaussian, PhasePoint};
use common::{random_expansion, random_orthogonal, random_point};
use num_complex::Complex;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c64(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

fn binomial(n: u64, k: u64) -> u64 {
    let mut b = 1u64;
    for i in 0..k {
        b = b * (n - i) / (i + 1);
    }
    b
}

proptest! {
    #[test]
    fn enumeration_is_sorted_unique_and_counted(dim in 1usize..5, max_degree in 0u32..7) {
        let list = enumerate_multi_indices(dim, max_degree);
        prop_assert_eq!(
            list.len() as u64,
            binomial((dim as u64) + u64::from(max_degree), dim as u64)
        );
        for w in list.windows(2) {
            prop_assert!(w[0] < w[1], "not strictly increasing: {} !< {}", w[0], w[1]);
        }
        for alpha in &list {
            prop_assert_eq!(alpha.dim(), dim);
            prop_assert!(alpha.degree() <= max_degree);
        }
    }

    #[test]
    fn expansion_json_round_trip(seed in 0u64..500) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = rng.gen_range(1..=3);
        let degree = rng.gen_range(0..=5);
        let f = random_expansion(&mut rng, dim, degree);
        let back = io::expansion_from_json::<f64>(&io::expansion_to_json(&f)).unwrap();
        prop_assert_eq!(f, back);
    }

    #[test]
    fn profile_synth_extract_round_trip(seed in 0u64..200) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = rng.gen_range(1..=3);
        let shells = rng.gen_range(1..=11);
        let c: Vec<Complex<f64>> = (0..shells)
            .map(|_| c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let p = RadialProfile::new(dim, c);
        let f = synth_radial(&p, dim);
        let q = extract_profile(&f, 1e-9).unwrap();
        for (a, b) in p.c.iter().zip(&q.c) {
            prop_assert!((a - b).norm() < 1e-13);
        }
    }
}

#[test]
fn bargmann_isometry() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..20 {
        let f = random_expansion(&mut rng, 2, 10);
        let norm_l2 = l2_inner(&f, &f).unwrap().re;
        let series = bargmann_of_expansion(&f);
        let norm_a2 = a2_inner_quadrature_default(&series, &series).unwrap().re;
        assert!(
            (norm_l2 - norm_a2).abs() <= 1e-8 * (1.0 + norm_l2),
            "trial {trial}: L²={norm_l2} A²={norm_a2}"
        );
    }
}

#[test]
fn kernel_vs_series_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for dim in 1..=2usize {
        for _ in 0..5 {
            let f = random_expansion(&mut rng, dim, 8);
            let sampled = SampledFunction::from_expansion(&f, 24);
            let ev = bargmann_of_expansion(&f).evaluator();
            for _ in 0..8 {
                let z = random_point(&mut rng, dim, 2.0);
                let kernel = bargmann_of_samples(&sampled, &z).unwrap();
                let series = ev.eval(&z).unwrap();
                assert!(
                    (kernel - series).norm() <= 1e-9,
                    "dim={dim} kernel={kernel} series={series}"
                );
            }
        }
    }
}

#[test]
fn bargmann_linearity_at_coefficient_level() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let f = random_expansion(&mut rng, 2, 6);
    let g = random_expansion(&mut rng, 2, 6);
    let lambda = c64(0.3, -1.7);
    let combined = bargmann_of_expansion(&f.scaled(lambda).add(&g).unwrap());
    let vf = bargmann_of_expansion(&f);
    let vg = bargmann_of_expansion(&g);
    for (alpha, c) in combined.terms() {
        let want = vf.coeff(alpha) * lambda + vg.coeff(alpha);
        assert_eq!(*c, want, "alpha={alpha}");
    }
}

#[test]
fn bridge_identity_random_expansions() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for dim in 1..=2usize {
        for _ in 0..3 {
            let f = random_expansion(&mut rng, dim, 6);
            let mut points = Vec::new();
            for i in -2i32..=2 {
                for j in -2i32..=2 {
                    let x = vec![0.75 * f64::from(i); dim];
                    let xi = vec![0.75 * f64::from(j); dim];
                    points.push(PhasePoint::new(x, xi));
                }
            }
            let r = bridge_residual(&f, &points).unwrap();
            assert!(r <= 1e-8, "dim={dim} residual={r}");
        }
    }
}

#[test]
fn inverse_bridge_recovers_stft() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for dim in 1..=2usize {
        let f = random_expansion(&mut rng, dim, 6);
        let ev = bargmann_of_expansion(&f).evaluator();
        for i in -2i32..=2 {
            for j in -2i32..=2 {
                let p = PhasePoint::new(
                    vec![0.75 * f64::from(i); dim],
                    vec![0.75 * f64::from(j); dim],
                );
                let direct = stft_gaussian(&f, &p).unwrap();
                let via_fock = stft_from_fock(|z| ev.eval(z).unwrap(), &p);
                assert!(
                    (direct - via_fock).norm() <= 1e-8,
                    "dim={dim} direct={direct} via={via_fock}"
                );
            }
        }
    }
}

#[test]
fn window_self_transform_modulus() {
    for dim in 1..=2usize {
        let h0 = HermiteExpansion::<f64>::basis(MultiIndex::zeros(dim));
        for i in -2i32..=2 {
            for j in -2i32..=2 {
                let x = vec![0.6 * f64::from(i); dim];
                let xi = vec![0.6 * f64::from(j); dim];
                let sq: f64 = x.iter().chain(&xi).map(|t| t * t).sum();
                let p = PhasePoint::new(x, xi);
                let v = stft_gaussian(&h0, &p).unwrap();
                let want = (2.0 * std::f64::consts::PI).powf(-0.5 * dim as f64) * (-sq / 4.0).exp();
                assert!((v.norm() - want).abs() <= 1e-10);
            }
        }
    }
}

#[test]
fn radial_implies_pullback_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for dim in 2..=3usize {
        let shells = 5;
        let c: Vec<Complex<f64>> = (0..shells)
            .map(|_| c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let f = synth_radial(&RadialProfile::new(dim, c), dim);
        assert!(radial_test(&f, 1e-10).is_radial);
        for _ in 0..10 {
            let u = random_orthogonal(&mut rng, dim);
            let points: Vec<_> = (0..10).map(|_| random_point(&mut rng, dim, 2.0)).collect();
            let r = unitary_pullback_residual(&f, &u, &points).unwrap();
            assert!(r <= 1e-9, "dim={dim} residual={r}");
        }
    }
}

#[test]
fn radial_implies_f0_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for dim in 2..=3usize {
        let c: Vec<Complex<f64>> = (0..6)
            .map(|_| c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let f = synth_radial(&RadialProfile::new(dim, c), dim);
        let profile = extract_profile(&f, 1e-10).unwrap();
        let ev = bargmann_of_expansion(&f).evaluator();
        for _ in 0..10 {
            let z = random_point(&mut rng, dim, 2.0);
            let lhs = ev.eval(&z).unwrap();
            let rhs = eval_f0(&profile, z.quadratic());
            assert!(
                (lhs - rhs).norm() <= 1e-10 * (1.0 + lhs.norm()),
                "dim={dim} lhs={lhs} rhs={rhs}"
            );
        }
    }
}

#[test]
fn reduction_consistency() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    let c: Vec<Complex<f64>> = (0..7)
        .map(|_| c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let f = synth_radial(&RadialProfile::new(3, c.clone()), 3);
    let profile = extract_profile(&f, 1e-10).unwrap();
    let f0 = reduce_dimension(&f, 1e-10).unwrap();
    let one_d = bargmann_of_expansion(&f0);
    // coefficient of z^{2k} in 𝔙₁f₀ is (c_k/k!)·√((2k)!)
    for (k, ck) in c.iter().enumerate() {
        let k_fact: f64 = (1..=k).map(|i| i as f64).product();
        let two_k_fact: f64 = (1..=2 * k).map(|i| i as f64).product();
        let want = ck / k_fact * two_k_fact.sqrt();
        let got = one_d.coeff(&MultiIndex::new(vec![2 * k as u32]));
        assert!((got - want).norm() <= 1e-12, "k={k} got={got} want={want}");
    }
    // and the evaluation identity 𝔙₁f₀(z) = F₀(z²)
    let ev = one_d.evaluator();
    for _ in 0..10 {
        let z = random_point(&mut rng, 1, 2.0);
        let lhs = ev.eval(&z).unwrap();
        let rhs = eval_f0(&profile, z.quadratic());
        assert!((lhs - rhs).norm() <= 1e-10 * (1.0 + lhs.norm()));
    }
}

#[test]
fn negative_control_antisymmetric_shell() {
    let mut f = HermiteExpansion::<f64>::new(2, 2);
    f.set(MultiIndex::new(vec![2, 0]), c64(1.0, 0.0)).unwrap();
    f.set(MultiIndex::new(vec![0, 2]), c64(-1.0, 0.0)).unwrap();
    let report = radial_test(&f, 1e-10);
    assert!(!report.is_radial);
    let u = OrthogonalMatrix::rotation_2d(2, std::f64::consts::PI / 4.0);
    let z = ComplexPoint::new(vec![c64(1.0, 0.0), c64(0.0, 0.0)]);
    let r = unitary_pullback_residual(&f, &u, &[z]).unwrap();
    assert!(r >= 0.1, "residual {r}");
}

#[test]
fn e0_path_matches_f0_for_presets() {
    // h0 (d=2), h2-shell (d=2), gaussian a=1 (d=1)
    let h0 = HermiteExpansion::<f64>::basis(MultiIndex::zeros(2));
    let mut shell = HermiteExpansion::<f64>::new(2, 2);
    shell
        .set(MultiIndex::new(vec![2, 0]), c64(1.0, 0.0))
        .unwrap();
    shell
        .set(MultiIndex::new(vec![0, 2]), c64(1.0, 0.0))
        .unwrap();
    let gauss = synth_gaussian::<f64>(1.0, 1, 20);
    let presets: Vec<(HermiteExpansion<f64>, Vec<Vec<f64>>)> = vec![
        (h0, vec![vec![0.0, 0.0], vec![1.0, 1.0], vec![-1.4, 0.2]]),
        (shell, vec![vec![1.0, 1.0], vec![0.5, -0.5], vec![2.0, 0.0]]),
        (gauss, vec![vec![0.0], vec![1.0], vec![-2.0]]),
    ];
    for (f, points) in &presets {
        let profile = extract_profile(f, 1e-9).unwrap();
        for x in points {
            let s: f64 = x.iter().map(|t| t * t).sum();
            let via_e0 = eval_via_e0(f, x, None).unwrap();
            let via_f0 = eval_f0(&profile, c64(s, 0.0));
            assert!(
                (via_e0 - via_f0).norm() <= 1e-8,
                "x={x:?} e0={via_e0} f0={via_f0}"
            );
        }
    }
}
