//! Acceptance suite: each test checks one numbered criterion at its pinned
//! tolerance and prints a single PASS/FAIL line with the worst residual.
//! Criterion 10 (the `verify` command) lives in the CLI crate's tests.

mod common;

use bargmann_fock::fock::{
    a2_inner_quadrature, bargmann_of_expansion, bargmann_of_samples, ComplexPoint, FockSeries,
    SampledFunction,
};
use bargmann_fock::hermite::HermiteExpansion;
use bargmann_fock::multi_index::{enumerate_multi_indices, MultiIndex};
use bargmann_fock::radial::{
    eval_f0, eval_via_e0, extract_profile, radial_test, reduce_dimension, synth_gaussian,
    synth_radial, unitary_pullback_residual, OrthogonalMatrix, RadialProfile,
};
use bargmann_fock::special::sqrt_factorial;
use bargmann_fock::stft::{bridge_residual, stft_from_fock, stft_gaussian, PhasePoint};
use common::{random_expansion, random_orthogonal, random_point};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c64(re: f64, im: f64) -> Complex<f64> {
    Complex::new(re, im)
}

fn report(num: u32, name: &str, worst: f64, tol: f64) {
    let verdict = if worst <= tol { "PASS" } else { "FAIL" };
    println!("criterion {num:2} [{verdict}] {name}: worst residual {worst:.3e} (tol {tol:.1e})");
    assert!(
        worst <= tol,
        "criterion {num} failed: {worst:.3e} > {tol:.1e}"
    );
}

#[test]
fn criterion_01_monomial_image() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut worst = 0.0f64;
    for dim in 1..=3usize {
        let points: Vec<_> = (0..20).map(|_| random_point(&mut rng, dim, 2.0)).collect();
        for alpha in enumerate_multi_indices(dim, 8) {
            let h = HermiteExpansion::<f64>::basis(alpha.clone());
            let sampled = SampledFunction::from_expansion(&h, 24);
            let scale = sqrt_factorial::<f64>(&alpha);
            for z in &points {
                let got = bargmann_of_samples(&sampled, z).unwrap();
                let want = z
                    .coords()
                    .iter()
                    .zip(alpha.exponents())
                    .map(|(zj, &aj)| zj.powu(aj))
                    .product::<Complex<f64>>()
                    / scale;
                let rel = (got - want).norm() / (1.0 + want.norm());
                worst = worst.max(rel);
            }
        }
    }
    report(1, "monomial image via kernel integral", worst, 1e-8);
}

#[test]
fn criterion_02_isometry() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let f = random_expansion(&mut rng, 2, 10);
        let norm_l2 = f.norm_sq();
        let series = bargmann_of_expansion(&f);
        let m = 12usize; // degree 10 ⇒ ρ-polynomials of degree ≤ 10 per axis
        let q = 24usize;
        let norm_a2 = a2_inner_quadrature(&series, &series, m, q).unwrap().re;
        worst = worst.max((norm_l2 - norm_a2).abs() / (1.0 + norm_l2));
    }
    report(2, "isometry L2 vs A2 quadrature", worst, 1e-8);
}

#[test]
fn criterion_03_measure_normalization() {
    let mut worst = 0.0f64;
    for dim in 1..=3usize {
        let one = FockSeries::<f64>::constant_one(dim);
        let got = a2_inner_quadrature(&one, &one, 4, 4).unwrap();
        worst = worst.max((got - c64(1.0, 0.0)).norm());
    }
    report(3, "dμ normalization", worst, 1e-10);
}

#[test]
fn criterion_04_radial_positive_direction() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let mut f = HermiteExpansion::<f64>::new(2, 2);
    f.set(MultiIndex::new(vec![2, 0]), c64(1.0, 0.0)).unwrap();
    f.set(MultiIndex::new(vec![0, 2]), c64(1.0, 0.0)).unwrap();

    let rep = radial_test(&f, 1e-10);
    assert!(rep.is_radial, "h_(2,0)+h_(0,2) must pass radial_test");

    let points: Vec<_> = (0..10).map(|_| random_point(&mut rng, 2, 2.0)).collect();
    let mut worst_pullback = 0.0f64;
    for trial in 0..10 {
        let u = if trial == 0 {
            OrthogonalMatrix::reflection(2)
        } else {
            random_orthogonal(&mut rng, 2)
        };
        let r = unitary_pullback_residual(&f, &u, &points).unwrap();
        worst_pullback = worst_pullback.max(r);
    }
    report(
        4,
        "radial positive: pullback residual",
        worst_pullback,
        1e-9,
    );

    let profile = extract_profile(&f, 1e-10).unwrap();
    let ev = bargmann_of_expansion(&f).evaluator();
    let mut worst_f0 = 0.0f64;
    for z in &points {
        let lhs = ev.eval(z).unwrap();
        let rhs = eval_f0(&profile, z.quadratic());
        worst_f0 = worst_f0.max((lhs - rhs).norm());
    }
    report(4, "radial positive: F0 consistency", worst_f0, 1e-10);
}

#[test]
fn criterion_05_radial_negative_controls() {
    let odd = HermiteExpansion::<f64>::basis(MultiIndex::new(vec![1, 0]));
    let rep = radial_test(&odd, 1e-10);
    let odd_mass = rep.odd_mass;
    assert!(
        !rep.is_radial && odd_mass > 0.9,
        "h_(1,0) must fail via odd_mass"
    );

    let mut anti = HermiteExpansion::<f64>::new(2, 2);
    anti.set(MultiIndex::new(vec![2, 0]), c64(1.0, 0.0))
        .unwrap();
    anti.set(MultiIndex::new(vec![0, 2]), c64(-1.0, 0.0))
        .unwrap();
    let rep = radial_test(&anti, 1e-10);
    assert!(!rep.is_radial);
    let dev = rep.shell_deviations.iter().cloned().fold(0.0f64, f64::max);
    assert!((dev - 1.0).abs() < 1e-12, "shell deviation {dev} not ≈ 1");

    let u = OrthogonalMatrix::rotation_2d(2, std::f64::consts::PI / 4.0);
    let z = ComplexPoint::new(vec![c64(1.0, 0.0), c64(0.0, 0.0)]);
    let r = unitary_pullback_residual(&anti, &u, &[z]).unwrap();
    assert!(r >= 0.1, "pullback residual {r} below 0.1");
    println!(
        "criterion  5 [PASS] negative controls: odd_mass {odd_mass:.3e}, shell dev {dev:.3e}, 45° residual {r:.3e}"
    );
}

#[test]
fn criterion_06_reduction() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let mut f = HermiteExpansion::<f64>::new(2, 2);
    f.set(MultiIndex::new(vec![2, 0]), c64(1.0, 0.0)).unwrap();
    f.set(MultiIndex::new(vec![0, 2]), c64(1.0, 0.0)).unwrap();
    let f0 = reduce_dimension(&f, 1e-10).unwrap();
    let h2 = HermiteExpansion::<f64>::basis(MultiIndex::new(vec![2]));
    let mut worst_coeff = 0.0f64;
    for alpha in enumerate_multi_indices(1, 4) {
        worst_coeff = worst_coeff.max((f0.coeff(&alpha) - h2.coeff(&alpha)).norm());
    }
    report(6, "reduce h2-shell to h2", worst_coeff, 1e-12);

    let mut worst = 0.0f64;
    for _ in 0..10 {
        let c: Vec<Complex<f64>> = (0..=8)
            .map(|_| c64(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let profile = RadialProfile::new(3, c);
        let f = synth_radial(&profile, 3);
        let f0 = reduce_dimension(&f, 1e-10).unwrap();
        let ev = bargmann_of_expansion(&f0).evaluator();
        for _ in 0..10 {
            let z = random_point(&mut rng, 1, 2.0);
            let lhs = ev.eval(&z).unwrap();
            let rhs = eval_f0(&profile, z.quadratic());
            worst = worst.max((lhs - rhs).norm());
        }
    }
    report(6, "random radial synth reduction", worst, 1e-10);
}

#[test]
fn criterion_07_gaussian_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let f = synth_gaussian::<f64>(1.0, 1, 20);
    let sampled = SampledFunction::from_expansion(&f, 48);
    let lambda = -1.0 / 6.0;
    let c = std::f64::consts::PI.powf(0.25) / 1.5f64.sqrt();
    let mut worst = 0.0f64;
    for _ in 0..40 {
        let z = random_point(&mut rng, 1, 2.0 / 2f64.sqrt());
        let got = bargmann_of_samples(&sampled, &z).unwrap();
        let zz = z.coords()[0] * z.coords()[0];
        let want = (zz * lambda).exp() * c;
        worst = worst.max((got - want).norm() / want.norm());
    }
    report(7, "gaussian closed form via kernel path", worst, 1e-6);
}

#[test]
fn criterion_08_stft_bridge() {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let grid = |dim: usize| {
        let mut points = Vec::new();
        for i in -2i32..=2 {
            for j in -2i32..=2 {
                points.push(PhasePoint::new(
                    vec![0.75 * f64::from(i); dim],
                    vec![0.75 * f64::from(j); dim],
                ));
            }
        }
        points
    };
    let mut worst_fwd = 0.0f64;
    let mut worst_inv = 0.0f64;
    for dim in 1..=2usize {
        for _ in 0..3 {
            let f = random_expansion(&mut rng, dim, 6);
            let points = grid(dim);
            worst_fwd = worst_fwd.max(bridge_residual(&f, &points).unwrap());
            let ev = bargmann_of_expansion(&f).evaluator();
            for p in &points {
                let direct = stft_gaussian(&f, p).unwrap();
                let via = stft_from_fock(|z| ev.eval(z).unwrap(), p);
                worst_inv = worst_inv.max((direct - via).norm());
            }
        }
    }
    report(8, "STFT bridge forward", worst_fwd, 1e-8);
    report(8, "STFT bridge inverse", worst_inv, 1e-8);
}

#[test]
fn criterion_09_e0_path() {
    let h0 = HermiteExpansion::<f64>::basis(MultiIndex::zeros(2));
    let mut shell = HermiteExpansion::<f64>::new(2, 2);
    shell
        .set(MultiIndex::new(vec![2, 0]), c64(1.0, 0.0))
        .unwrap();
    shell
        .set(MultiIndex::new(vec![0, 2]), c64(1.0, 0.0))
        .unwrap();
    let gauss = synth_gaussian::<f64>(1.0, 1, 20);
    let mut worst = 0.0f64;
    let cases: Vec<(HermiteExpansion<f64>, Vec<Vec<f64>>)> = vec![
        (
            h0,
            vec![
                vec![0.0, 0.0],
                vec![1.0, 1.0],
                vec![1.4, -0.3],
                vec![-2.0, 0.0],
            ],
        ),
        (shell, vec![vec![0.5, 0.5], vec![1.0, -1.0], vec![0.0, 2.0]]),
        (gauss, vec![vec![0.0], vec![0.7], vec![-1.5], vec![2.0]]),
    ];
    for (f, points) in &cases {
        let profile = extract_profile(f, 1e-9).unwrap();
        for x in points {
            let s: f64 = x.iter().map(|t| t * t).sum();
            let via_e0 = eval_via_e0(f, x, None).unwrap();
            let via_f0 = eval_f0(&profile, c64(s, 0.0));
            worst = worst.max((via_e0 - via_f0).norm());
        }
    }
    report(9, "E0 path vs F0 profile", worst, 1e-8);
}
