//! Gaussian-window short-time Fourier transform and the exact identities
//! linking it to the Bargmann transform:
//!
//! (𝔙f)(x+iξ) = (2π)^{d/2} e^{(|x|²+|ξ|²)/2} e^{-i⟨x,ξ⟩} V_φf(√2x, −√2ξ)
//!
//! and its inverse. The sign and argument conventions are taken verbatim,
//! including the −√2ξ dilation.

use crate::error::Error;
use crate::fock::{bargmann_of_expansion, ComplexPoint, SampledFunction};
use crate::hermite::HermiteExpansion;
use crate::multi_index::MultiIndex;
use crate::quadrature::{gauss_hermite, tensor_indices};
use crate::scalar::{Cx, Scalar};

/// Phase-space point (x, ξ) ∈ ℝᵈ × ℝᵈ.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasePoint<R: Scalar> {
    x: Vec<R>,
    xi: Vec<R>,
}

impl<R: Scalar> PhasePoint<R> {
    pub fn new(x: Vec<R>, xi: Vec<R>) -> Self {
        assert_eq!(x.len(), xi.len(), "x and ξ must have equal length");
        assert!(!x.is_empty());
        PhasePoint { x, xi }
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[R] {
        &self.x
    }

    pub fn xi(&self) -> &[R] {
        &self.xi
    }

    /// z = x + iξ.
    pub fn to_complex(&self) -> ComplexPoint<R> {
        ComplexPoint::from_parts(&self.x, &self.xi)
    }

    fn norm_sq(&self) -> R {
        let xx: R = self.x.iter().map(|&t| t * t).sum();
        let ss: R = self.xi.iter().map(|&t| t * t).sum();
        xx + ss
    }

    fn x_dot_xi(&self) -> R {
        self.x.iter().zip(&self.xi).map(|(&a, &b)| a * b).sum()
    }

    fn norm_sq_x(&self) -> R {
        self.x.iter().map(|&t| t * t).sum()
    }
}

/// The fixed window φ(x) = π^{-d/4} e^{-|x|²/2}, i.e. h₀ tensored.
pub fn gaussian_window<R: Scalar>(dim: usize) -> HermiteExpansion<R> {
    HermiteExpansion::basis(MultiIndex::zeros(dim))
}

/// Default quadrature order for the windowed integrals.
fn stft_order(degree_bound: u32) -> usize {
    (2 * degree_bound as usize + 8).max(32)
}

/// V_φf(x,ξ) = (2π)^{-d/2} ∫ f(y) φ(y−x) e^{-i⟨y,ξ⟩} dy for a finite
/// Hermite expansion, with φ the Gaussian window.
///
/// The combined Gaussian e^{-|y−x|²/2 − |y|²/2} recenters to
/// e^{-|u|² − |x|²/4} with u = y − x/2, so Gauss–Hermite nodes shifted by
/// x/2 keep exactness for the polynomial part of f. The oscillatory
/// factor is evaluated directly at the nodes.
pub fn stft_gaussian<R: Scalar>(
    f: &HermiteExpansion<R>,
    p: &PhasePoint<R>,
) -> Result<Cx<R>, Error> {
    if p.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: p.dim(),
        });
    }
    let d = f.dim();
    let rule = gauss_hermite::<R>(stft_order(f.degree_bound()));
    let half = R::of(0.5);
    let quarter = R::of(0.25);
    let zero = R::zero();
    let prefactor = (R::of(2.0) * R::PI()).powf(R::of(-0.5 * d as f64))
        * R::PI().powf(R::of(-0.25 * d as f64))
        * (-p.norm_sq_x() * quarter).exp();
    // per-axis complex factors wᵢ e^{-i (uᵢ + xⱼ/2) ξⱼ}
    let axes: Vec<Vec<Cx<R>>> = (0..d)
        .map(|j| {
            rule.iter()
                .map(|(u, w)| {
                    let phase = -(u + p.x[j] * half) * p.xi[j];
                    Cx::new(zero, phase).exp().scale(w)
                })
                .collect()
        })
        .collect();
    let mut acc = Cx::new(zero, zero);
    for idx in tensor_indices(rule.len(), d) {
        let y: Vec<R> = idx
            .iter()
            .enumerate()
            .map(|(j, &i)| rule.nodes()[i] + p.x[j] * half)
            .collect();
        let mut factor = Cx::new(R::one(), zero);
        for (j, &i) in idx.iter().enumerate() {
            factor *= axes[j][i];
        }
        acc += factor * f.eval_weighted(&y)?;
    }
    Ok(acc.scale(prefactor))
}

/// STFT of a sampled function on its own Gauss–Hermite grid. Accurate for
/// window centers within the node range; no recentering is possible since
/// the samples are fixed.
pub fn stft_gaussian_samples<R: Scalar>(
    f: &SampledFunction<R>,
    p: &PhasePoint<R>,
) -> Result<Cx<R>, Error> {
    if p.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: p.dim(),
        });
    }
    let d = f.dim();
    let rule = f.rule();
    let zero = R::zero();
    let half = R::of(0.5);
    let prefactor = (R::of(2.0) * R::PI()).powf(R::of(-0.5 * d as f64))
        * R::PI().powf(R::of(-0.25 * d as f64))
        * (-p.norm_sq_x() * half).exp();
    // g(y) e^{-|y|²/2} φ(y−x) e^{-i⟨y,ξ⟩} = g(y) π^{-d/4} e^{⟨x,y⟩−|x|²/2}
    // e^{-i⟨y,ξ⟩} against the e^{-|y|²} weight
    let axes: Vec<Vec<Cx<R>>> = (0..d)
        .map(|j| {
            rule.iter()
                .map(|(y, w)| Cx::new(p.x[j] * y, -y * p.xi[j]).exp().scale(w))
                .collect()
        })
        .collect();
    let mut acc = Cx::new(zero, zero);
    for (flat, idx) in tensor_indices(rule.len(), d).enumerate() {
        let mut factor = Cx::new(R::one(), zero);
        for (j, &i) in idx.iter().enumerate() {
            factor *= axes[j][i];
        }
        acc += factor * f.values()[flat];
    }
    Ok(acc.scale(prefactor))
}

/// The weight-and-dilation operator:
/// (U_𝔙F)(x,ξ) = (2π)^{d/2} e^{(|x|²+|ξ|²)/2} e^{-i⟨x,ξ⟩} F(√2x, −√2ξ).
pub fn uv_apply<R: Scalar, F>(f: F, p: &PhasePoint<R>) -> Cx<R>
where
    F: Fn(&PhasePoint<R>) -> Cx<R>,
{
    let d = p.dim();
    let sqrt2 = R::of(2.0).sqrt();
    let inner = PhasePoint::new(
        p.x.iter().map(|&t| sqrt2 * t).collect(),
        p.xi.iter().map(|&t| -(sqrt2 * t)).collect(),
    );
    let amp = (R::of(2.0) * R::PI()).powf(R::of(0.5 * d as f64)) * (p.norm_sq() * R::of(0.5)).exp();
    let phase = Cx::new(R::zero(), -p.x_dot_xi()).exp();
    phase.scale(amp) * f(&inner)
}

/// The inverse identity: recover V_φf(x,ξ) from an evaluator of 𝔙f as
/// (2π)^{-d/2} e^{-(|x|²+|ξ|²)/4} e^{-i⟨x,ξ⟩/2} (𝔙f)((x−iξ)/√2).
pub fn stft_from_fock<R: Scalar, F>(fock_eval: F, p: &PhasePoint<R>) -> Cx<R>
where
    F: Fn(&ComplexPoint<R>) -> Cx<R>,
{
    let d = p.dim();
    let inv_sqrt2 = R::of(0.5).sqrt();
    let z = ComplexPoint::new(
        p.x.iter()
            .zip(&p.xi)
            .map(|(&x, &xi)| Cx::new(x * inv_sqrt2, -(xi * inv_sqrt2)))
            .collect(),
    );
    let amp =
        (R::of(2.0) * R::PI()).powf(R::of(-0.5 * d as f64)) * (-p.norm_sq() * R::of(0.25)).exp();
    let phase = Cx::new(R::zero(), -p.x_dot_xi() * R::of(0.5)).exp();
    phase.scale(amp) * fock_eval(&z)
}

/// Max over the point set of
/// |(𝔙f)(x+iξ) − (U_𝔙 V_φf)(x,ξ)| / (1 + |(𝔙f)(x+iξ)|),
/// with 𝔙f evaluated by the coefficient series and V_φf by quadrature.
pub fn bridge_residual<R: Scalar>(
    f: &HermiteExpansion<R>,
    points: &[PhasePoint<R>],
) -> Result<R, Error> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let ev = bargmann_of_expansion(f).evaluator();
    let mut worst = R::zero();
    for p in points {
        let lhs = ev.eval(&p.to_complex())?;
        // dimensions were checked against f already, so the inner STFT
        // cannot fail
        let rhs = uv_apply(|q| stft_gaussian(f, q).expect("dims checked"), p);
        let res = (lhs - rhs).norm() / (R::one() + lhs.norm());
        worst = worst.max(res);
    }
    Ok(worst)
}
