//! Radial-symmetry detection, profile extraction, and dimension reduction.
//!
//! A finite expansion f = Σ a_α h_α is radial iff every coefficient with an
//! odd exponent vanishes and the weighted even coefficients
//! v_γ = (γ!/√((2γ)!))·a_{2γ} are constant on each shell |γ| = k. The
//! shell constants c_k determine the entire function F₀ with
//! (𝔙f)(z) = F₀(⟨z,z⟩), and the canonical 1-D representative f₀ with
//! (𝔙₁f₀)(z) = F₀(z²).

use crate::error::{Error, NotRadial};
use crate::fock::{bargmann_of_expansion, ComplexPoint};
use crate::hermite::HermiteExpansion;
use crate::multi_index::{enumerate_shell, MultiIndex};
use crate::quadrature::{gauss_hermite, tensor_indices};
use crate::scalar::{Cx, Scalar};
use crate::special::{ln_factorial, shell_weight};

/// Relative-deviation floor: an all-zero shell passes vacuously.
const SHELL_FLOOR: f64 = 1e-14;

/// Shell constants (c₀, …, c_K) encoding
/// F(z) = Σ_k c_k Σ_{|γ|=k} z^{2γ}/γ!, equivalently
/// F₀(w) = Σ_k (c_k/k!) w^k.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile<R: Scalar> {
    pub origin_dim: usize,
    pub c: Vec<Cx<R>>,
}

impl<R: Scalar> RadialProfile<R> {
    pub fn new(origin_dim: usize, c: Vec<Cx<R>>) -> Self {
        assert!(origin_dim >= 1);
        assert!(!c.is_empty());
        RadialProfile { origin_dim, c }
    }

    pub fn max_shell(&self) -> usize {
        self.c.len() - 1
    }
}

/// Diagnosis returned by [`radial_test`]; always produced, never an error.
#[derive(Debug, Clone)]
pub struct RadialReport<R: Scalar> {
    pub is_radial: bool,
    /// max |a_α| over indices with at least one odd exponent.
    pub odd_mass: R,
    /// Relative shell deviation per degree k = 0, …, ⌊N/2⌋.
    pub shell_deviations: Vec<R>,
    /// Shell means c_k; present only when the test passes.
    pub profile: Option<RadialProfile<R>>,
    pub tol: R,
}

/// Condition-(4) test: no odd-index mass, and the weighted even
/// coefficients constant on every shell, up to `tol`.
pub fn radial_test<R: Scalar>(f: &HermiteExpansion<R>, tol: R) -> RadialReport<R> {
    assert!(tol > R::zero(), "tolerance must be positive");
    let zero = Cx::new(R::zero(), R::zero());
    let odd_mass = f
        .terms()
        .filter(|(alpha, _)| alpha.has_odd_entry())
        .map(|(_, c)| c.norm())
        .fold(R::zero(), R::max);

    let max_shell = (f.degree_bound() / 2) as usize;
    let floor = R::of(SHELL_FLOOR);
    let mut deviations = Vec::with_capacity(max_shell + 1);
    let mut means = Vec::with_capacity(max_shell + 1);
    for k in 0..=max_shell as u32 {
        let shell = enumerate_shell(f.dim(), k);
        let values: Vec<Cx<R>> = shell
            .iter()
            .map(|gamma| f.coeff(&gamma.doubled()).scale(shell_weight::<R>(gamma)))
            .collect();
        let count = R::of(values.len() as f64);
        let mean = values
            .iter()
            .fold(zero, |acc, v| acc + v)
            .scale(count.recip());
        let max_mag = values.iter().map(|v| v.norm()).fold(R::zero(), R::max);
        let deviation = values
            .iter()
            .map(|v| (*v - mean).norm())
            .fold(R::zero(), R::max)
            / max_mag.max(floor);
        deviations.push(deviation);
        means.push(mean);
    }

    let is_radial = odd_mass <= tol && deviations.iter().all(|&d| d <= tol);
    RadialReport {
        is_radial,
        odd_mass,
        shell_deviations: deviations,
        profile: is_radial.then(|| RadialProfile::new(f.dim(), means)),
        tol,
    }
}

/// Shell means c_k of a radial expansion; rejects non-radial input with
/// the full report attached.
pub fn extract_profile<R: Scalar>(
    f: &HermiteExpansion<R>,
    tol: R,
) -> Result<RadialProfile<R>, NotRadial<R>> {
    let report = radial_test(f, tol);
    match report.profile {
        Some(p) => Ok(p),
        None => Err(NotRadial(report)),
    }
}

/// F₀(w) = Σ_k (c_k/k!) w^k.
pub fn eval_f0<R: Scalar>(p: &RadialProfile<R>, w: Cx<R>) -> Cx<R> {
    let mut acc = Cx::new(R::zero(), R::zero());
    let mut w_pow = Cx::new(R::one(), R::zero());
    let mut k_fact = R::one();
    for (k, c) in p.c.iter().enumerate() {
        if k > 0 {
            k_fact *= R::of(k as f64);
            w_pow *= w;
        }
        acc += (*c * w_pow).scale(k_fact.recip());
    }
    acc
}

/// Real-orthogonal d×d matrix (UᵀU = I, |det U| = 1); acts on Cᵈ by
/// Uz = U(Re z) + iU(Im z).
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalMatrix<R: Scalar> {
    dim: usize,
    // row-major
    entries: Vec<R>,
}

impl<R: Scalar> OrthogonalMatrix<R> {
    /// Validate and wrap a row-major d×d matrix.
    pub fn new(dim: usize, entries: Vec<R>) -> Result<Self, Error> {
        if dim < 1 || entries.len() != dim * dim {
            return Err(Error::InvalidParameter("entry count must be dim²"));
        }
        let u = OrthogonalMatrix { dim, entries };
        let tol = R::of(1e-12).max(R::epsilon() * R::of(100.0));
        for i in 0..dim {
            for j in 0..dim {
                let dot: R = (0..dim).map(|r| u.at(r, i) * u.at(r, j)).sum();
                let want = if i == j { R::one() } else { R::zero() };
                if (dot - want).abs() > tol {
                    return Err(Error::NotOrthogonal("UᵀU deviates from the identity"));
                }
            }
        }
        if (u.det().abs() - R::one()).abs() > tol {
            return Err(Error::NotOrthogonal("|det U| deviates from 1"));
        }
        Ok(u)
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![R::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = R::one();
        }
        OrthogonalMatrix { dim, entries }
    }

    /// Rotation by `angle` in the (0,1) plane, identity elsewhere.
    pub fn rotation_2d(dim: usize, angle: R) -> Self {
        assert!(dim >= 2);
        let mut u = Self::identity(dim);
        let (s, c) = angle.sin_cos();
        u.entries[0] = c;
        u.entries[1] = -s;
        u.entries[dim] = s;
        u.entries[dim + 1] = c;
        u
    }

    /// Reflection negating the first axis.
    pub fn reflection(dim: usize) -> Self {
        let mut u = Self::identity(dim);
        u.entries[0] = -R::one();
        u
    }

    /// Orthonormalize the columns of an arbitrary matrix (modified
    /// Gram–Schmidt); fails on rank deficiency. Feeding random Gaussian
    /// entries yields orthogonal matrices covering both determinant signs.
    pub fn from_gram_schmidt(dim: usize, entries: Vec<R>) -> Result<Self, Error> {
        if dim < 1 || entries.len() != dim * dim {
            return Err(Error::InvalidParameter("entry count must be dim²"));
        }
        // work on columns
        let mut cols: Vec<Vec<R>> = (0..dim)
            .map(|j| (0..dim).map(|i| entries[i * dim + j]).collect())
            .collect();
        for j in 0..dim {
            let (done, rest) = cols.split_at_mut(j);
            let col = &mut rest[0];
            for prev in done.iter() {
                let proj: R = col.iter().zip(prev).map(|(&a, &b)| a * b).sum();
                for (v, &p) in col.iter_mut().zip(prev) {
                    *v -= proj * p;
                }
            }
            let norm: R = col.iter().map(|&v| v * v).sum::<R>().sqrt();
            if norm < R::of(1e-10) {
                return Err(Error::InvalidParameter(
                    "rank-deficient matrix in Gram-Schmidt",
                ));
            }
            for v in col.iter_mut() {
                *v /= norm;
            }
        }
        let mut out = vec![R::zero(); dim * dim];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..dim {
                out[i * dim + j] = col[i];
            }
        }
        OrthogonalMatrix::new(dim, out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, i: usize, j: usize) -> R {
        self.entries[i * self.dim + j]
    }

    pub fn det(&self) -> R {
        // LU with partial pivoting; d is small
        let d = self.dim;
        let mut m = self.entries.clone();
        let mut det = R::one();
        for col in 0..d {
            let pivot = (col..d)
                .max_by(|&a, &b| {
                    m[a * d + col]
                        .abs()
                        .partial_cmp(&m[b * d + col].abs())
                        .unwrap()
                })
                .unwrap();
            if m[pivot * d + col] == R::zero() {
                return R::zero();
            }
            if pivot != col {
                for j in 0..d {
                    m.swap(col * d + j, pivot * d + j);
                }
                det = -det;
            }
            det *= m[col * d + col];
            for row in col + 1..d {
                let factor = m[row * d + col] / m[col * d + col];
                for j in col..d {
                    let v = m[col * d + j];
                    m[row * d + j] -= factor * v;
                }
            }
        }
        det
    }

    pub fn apply(&self, x: &[R]) -> Vec<R> {
        assert_eq!(x.len(), self.dim);
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.at(i, j) * x[j]).sum())
            .collect()
    }

    /// Uz = U(Re z) + iU(Im z).
    pub fn apply_complex(&self, z: &ComplexPoint<R>) -> ComplexPoint<R> {
        let re: Vec<R> = z.coords().iter().map(|c| c.re).collect();
        let im: Vec<R> = z.coords().iter().map(|c| c.im).collect();
        ComplexPoint::from_parts(&self.apply(&re), &self.apply(&im))
    }
}

/// Condition-(2) residual: max over points of
/// |(𝔙f)(Uz) − (𝔙f)(z)| / (1 + |(𝔙f)(z)|).
pub fn unitary_pullback_residual<R: Scalar>(
    f: &HermiteExpansion<R>,
    u: &OrthogonalMatrix<R>,
    points: &[ComplexPoint<R>],
) -> Result<R, Error> {
    if u.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: u.dim(),
        });
    }
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let ev = bargmann_of_expansion(f).evaluator();
    let mut worst = R::zero();
    for z in points {
        let at_z = ev.eval(z)?;
        let at_uz = ev.eval(&u.apply_complex(z))?;
        let res = (at_uz - at_z).norm() / (R::one() + at_z.norm());
        worst = worst.max(res);
    }
    Ok(worst)
}

/// Evaluate (𝔙f)(x) = F₀(|x|²) for radial f through the mean-field kernel
/// E₀(s,y) = π^{-d/4} e^{−(s+|y|²)/2} Σ_k (2y₁²s)^k/(2k)!, truncated at
/// `truncation` terms past k = 0 (defaulted so the first dropped term is
/// below 1e-16 on the node range).
///
/// Radiality of `f` is caller-asserted; for non-radial input the value is
/// still the pairing ⟨f, E₀(|x|²,·)⟩ but no longer equals (𝔙f)(x).
pub fn eval_via_e0<R: Scalar>(
    f: &HermiteExpansion<R>,
    x: &[R],
    truncation: Option<usize>,
) -> Result<Cx<R>, Error> {
    if x.len() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: x.len(),
        });
    }
    if truncation == Some(0) {
        return Err(Error::InvalidParameter("truncation order must be ≥ 1"));
    }
    let s: R = x.iter().map(|&t| t * t).sum();
    let n_bound = f.degree_bound() as usize;

    // pick quadrature order and series truncation together: the series
    // length depends on the node range, which depends on the order
    let mut order = (n_bound / 2 + 8).max(32);
    let (order, k_max) = loop {
        let max_node_sq = 2.0 * order as f64 + 1.0;
        let k =
            truncation.unwrap_or_else(|| default_e0_truncation(s.to_f64().unwrap(), max_node_sq));
        let need = ((n_bound + 2 * k) / 2 + 4).max(32);
        if need <= order {
            break (order, k);
        }
        order = need;
    };

    let rule = gauss_hermite::<R>(order);
    let d = f.dim();
    let prefactor = R::PI().powf(R::of(-0.25 * d as f64)) * (-s * R::of(0.5)).exp();
    // per-node value of the truncated series Σ (2y₁²s)^k/(2k)!
    let series: Vec<R> = rule
        .nodes()
        .iter()
        .map(|&y1| {
            let base = R::of(2.0) * y1 * y1 * s;
            let mut term = R::one();
            let mut acc = R::one();
            for k in 0..k_max {
                let k2 = R::of(2.0 * k as f64);
                term = term * base / ((k2 + R::one()) * (k2 + R::of(2.0)));
                acc += term;
            }
            acc
        })
        .collect();
    let mut acc = Cx::new(R::zero(), R::zero());
    for idx in tensor_indices(rule.len(), d) {
        let y: Vec<R> = idx.iter().map(|&i| rule.nodes()[i]).collect();
        let w: R = idx.iter().map(|&i| rule.weights()[i]).product();
        acc += f.eval_weighted(&y)?.scale(w * series[idx[0]]);
    }
    Ok(acc.scale(prefactor))
}

fn default_e0_truncation(s: f64, max_node_sq: f64) -> usize {
    let base = 2.0 * s.abs() * max_node_sq;
    let mut term = 1.0f64;
    let mut k = 0usize;
    while term >= 1e-16 && k < 500 {
        let k2 = 2.0 * k as f64;
        term *= base / ((k2 + 1.0) * (k2 + 2.0));
        k += 1;
    }
    k.max(1)
}

/// The canonical 1-D representative f₀ = Σ_k b_{2k} h_{2k} with
/// b_{2k} = (c_k/k!)·√((2k)!), so that (𝔙₁f₀)(z) = F₀(z²).
pub fn reduce_dimension<R: Scalar>(
    f: &HermiteExpansion<R>,
    tol: R,
) -> Result<HermiteExpansion<R>, NotRadial<R>> {
    let profile = extract_profile(f, tol)?;
    Ok(expansion_from_profile_1d(&profile))
}

/// 1-D expansion Σ_k (c_k/k!)·√((2k)!)·h_{2k} built straight from a profile.
pub fn expansion_from_profile_1d<R: Scalar>(p: &RadialProfile<R>) -> HermiteExpansion<R> {
    let k_max = p.max_shell() as u32;
    let mut out = HermiteExpansion::new(1, 2 * k_max);
    for (k, c) in p.c.iter().enumerate() {
        let k = k as u32;
        let scale = (ln_factorial::<R>(2 * k) * R::of(0.5) - ln_factorial::<R>(k)).exp();
        out.set(MultiIndex::new(vec![2 * k]), c.scale(scale))
            .unwrap();
    }
    out
}

/// Inverse of [`extract_profile`]: the d-dimensional radial expansion with
/// a_{2γ} = c_{|γ|}·√((2γ)!)/γ! (= c_{|γ|}/shell_weight(γ)).
pub fn synth_radial<R: Scalar>(p: &RadialProfile<R>, dim: usize) -> HermiteExpansion<R> {
    assert!(dim >= 1);
    let k_max = p.max_shell() as u32;
    let mut out = HermiteExpansion::new(dim, 2 * k_max);
    for (k, c) in p.c.iter().enumerate() {
        for gamma in enumerate_shell(dim, k as u32) {
            let a = c.scale(shell_weight::<R>(&gamma).recip());
            out.set(gamma.doubled(), a).unwrap();
        }
    }
    out
}

/// Degree-2K truncation of the Gaussian e^{−a|x|²}, built from its exact
/// radial profile c_k = C λ^k with λ = (1−2a)/(2(2a+1)) and
/// C = π^{d/4}(a+½)^{-d/2}.
pub fn synth_gaussian<R: Scalar>(a: R, dim: usize, k_max: usize) -> HermiteExpansion<R> {
    assert!(a > R::zero(), "gaussian width must be positive");
    let lambda = (R::one() - R::of(2.0) * a) / (R::of(2.0) * (R::of(2.0) * a + R::one()));
    let c0 =
        R::PI().powf(R::of(0.25 * dim as f64)) * (a + R::of(0.5)).powf(R::of(-0.5 * dim as f64));
    let mut c = Vec::with_capacity(k_max + 1);
    let mut v = c0;
    for k in 0..=k_max {
        if k > 0 {
            v *= lambda;
        }
        c.push(Cx::new(v, R::zero()));
    }
    synth_radial(&RadialProfile::new(dim, c), dim)
}
