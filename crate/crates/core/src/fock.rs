//! The Bargmann transform and the geometry of A²(Cᵈ).
//!
//! Two evaluation routes are kept side by side: the coefficient route
//! h_α ↦ z^α/√(α!) on finite expansions, and the kernel-integral route on
//! sampled functions via tensor Gauss–Hermite quadrature. The A² inner
//! product likewise exists in coefficient form and as a polar-coordinate
//! quadrature, and the two must agree.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::hermite::HermiteExpansion;
use crate::multi_index::MultiIndex;
use crate::quadrature::{gauss_hermite, gauss_laguerre, tensor_indices, QuadratureRule};
use crate::scalar::{Cx, Scalar};
use crate::special;

/// Point z ∈ Cᵈ.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPoint<R: Scalar>(Vec<Cx<R>>);

impl<R: Scalar> ComplexPoint<R> {
    pub fn new(coords: Vec<Cx<R>>) -> Self {
        assert!(!coords.is_empty());
        ComplexPoint(coords)
    }

    pub fn from_parts(re: &[R], im: &[R]) -> Self {
        assert_eq!(re.len(), im.len());
        ComplexPoint(re.iter().zip(im).map(|(&x, &y)| Cx::new(x, y)).collect())
    }

    pub fn from_real(x: &[R]) -> Self {
        ComplexPoint(x.iter().map(|&t| Cx::new(t, R::zero())).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Cx<R>] {
        &self.0
    }

    /// Bilinear form ⟨z,w⟩ = Σ zⱼwⱼ, no conjugation.
    pub fn bilinear(&self, other: &ComplexPoint<R>) -> Cx<R> {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Cx::new(R::zero(), R::zero()), |acc, (a, b)| acc + a * b)
    }

    /// The quadratic invariant ⟨z,z⟩ = Σ zⱼ².
    pub fn quadratic(&self) -> Cx<R> {
        self.bilinear(self)
    }

    /// Hermitian |z|² = Σ |zⱼ|².
    pub fn norm_sq(&self) -> R {
        self.0.iter().map(|c| c.norm_sqr()).sum()
    }
}

/// Entire series F(z) = Σ a_α z^α/√(α!) on Cᵈ.
///
/// The monomials z^α/√(α!) are orthonormal under dμ, so
/// ‖F‖²_{A²} = Σ |a_α|².
#[derive(Debug, Clone, PartialEq)]
pub struct FockSeries<R: Scalar> {
    dim: usize,
    degree_bound: u32,
    terms: BTreeMap<MultiIndex, Cx<R>>,
}

impl<R: Scalar> FockSeries<R> {
    pub fn new(dim: usize, degree_bound: u32) -> Self {
        assert!(dim >= 1);
        FockSeries {
            dim,
            degree_bound,
            terms: BTreeMap::new(),
        }
    }

    /// Normalized monomial H_α = z^α/√(α!).
    pub fn monomial(alpha: MultiIndex) -> Self {
        let mut s = FockSeries::new(alpha.dim(), alpha.degree());
        s.set(alpha, Cx::new(R::one(), R::zero())).unwrap();
        s
    }

    /// Constant series F ≡ 1 on Cᵈ.
    pub fn constant_one(dim: usize) -> Self {
        FockSeries::monomial(MultiIndex::zeros(dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn set(&mut self, alpha: MultiIndex, coeff: Cx<R>) -> Result<(), Error> {
        if alpha.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: alpha.dim(),
            });
        }
        if alpha.degree() > self.degree_bound {
            return Err(Error::DegreeExceedsBound {
                degree: alpha.degree(),
                bound: self.degree_bound,
            });
        }
        if coeff == Cx::new(R::zero(), R::zero()) {
            self.terms.remove(&alpha);
        } else {
            self.terms.insert(alpha, coeff);
        }
        Ok(())
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> Cx<R> {
        self.terms
            .get(alpha)
            .copied()
            .unwrap_or_else(|| Cx::new(R::zero(), R::zero()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Cx<R>)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// ‖F‖²_{A²} = Σ |a_α|².
    pub fn norm_sq(&self) -> R {
        self.terms.values().map(|c| c.norm_sqr()).sum()
    }

    /// Precompute the monomial scalings a_α/√(α!) for repeated evaluation.
    pub fn evaluator(&self) -> FockEvaluator<R> {
        let terms = self
            .terms
            .iter()
            .map(|(alpha, c)| {
                let scale = (special::ln_factorial_multi::<R>(alpha) * R::of(-0.5)).exp();
                (alpha.exponents().to_vec(), c.scale(scale))
            })
            .collect();
        FockEvaluator {
            dim: self.dim,
            max_degree: self.degree_bound,
            terms,
        }
    }

    /// F(z) = Σ a_α z^α/√(α!), summed in graded order.
    pub fn eval(&self, z: &ComplexPoint<R>) -> Result<Cx<R>, Error> {
        self.evaluator().eval(z)
    }
}

/// Prepared form of a [`FockSeries`] for evaluation at many points.
pub struct FockEvaluator<R: Scalar> {
    dim: usize,
    max_degree: u32,
    // (exponents, a_α/√(α!)) in graded order
    terms: Vec<(Vec<u32>, Cx<R>)>,
}

impl<R: Scalar> FockEvaluator<R> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval(&self, z: &ComplexPoint<R>) -> Result<Cx<R>, Error> {
        if z.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: z.dim(),
            });
        }
        // per-axis power tables by repeated multiplication
        let one = Cx::new(R::one(), R::zero());
        let tables: Vec<Vec<Cx<R>>> = z
            .coords()
            .iter()
            .map(|&c| {
                let mut t = Vec::with_capacity(self.max_degree as usize + 1);
                t.push(one);
                for k in 0..self.max_degree as usize {
                    let prev = t[k];
                    t.push(prev * c);
                }
                t
            })
            .collect();
        let mut acc = Cx::new(R::zero(), R::zero());
        for (exps, c) in &self.terms {
            let mut p = one;
            for (j, &a) in exps.iter().enumerate() {
                p *= tables[j][a as usize];
            }
            acc += *c * p;
        }
        Ok(acc)
    }
}

/// h_α ↦ H_α is coefficient-preserving, so the coefficient map carries
/// over unchanged.
pub fn bargmann_of_expansion<R: Scalar>(f: &HermiteExpansion<R>) -> FockSeries<R> {
    let mut out = FockSeries::new(f.dim(), f.degree_bound());
    for (alpha, c) in f.terms() {
        out.set(alpha.clone(), *c).unwrap();
    }
    out
}

/// Coefficient-preserving inverse of [`bargmann_of_expansion`].
pub fn inverse_bargmann<R: Scalar>(series: &FockSeries<R>) -> HermiteExpansion<R> {
    let mut out = HermiteExpansion::new(series.dim(), series.degree_bound());
    for (alpha, c) in series.terms() {
        out.set(alpha.clone(), *c).unwrap();
    }
    out
}

/// Bargmann kernel 𝔄_d(z,y) = π^{-d/4} exp(−½(⟨z,z⟩+|y|²) + √2⟨z,y⟩).
pub fn bargmann_kernel<R: Scalar>(z: &ComplexPoint<R>, y: &[R]) -> Result<Cx<R>, Error> {
    if y.len() != z.dim() {
        return Err(Error::DimensionMismatch {
            expected: z.dim(),
            got: y.len(),
        });
    }
    let d = z.dim();
    let zz = z.quadratic();
    let y_sq: R = y.iter().map(|&t| t * t).sum();
    let zy = z
        .coords()
        .iter()
        .zip(y)
        .fold(Cx::new(R::zero(), R::zero()), |acc, (c, &t)| {
            acc + c.scale(t)
        });
    let half = R::of(0.5);
    let exponent = -(zz + Cx::new(y_sq, R::zero())).scale(half) + zy.scale(R::of(2.0).sqrt());
    let norm = R::PI().powf(R::of(-0.25 * d as f64));
    Ok(exponent.exp().scale(norm))
}

/// Samples of a function on a tensor Gauss–Hermite grid, stored with the
/// Gaussian factored out: values hold g(y) = f(y)·e^{|y|²/2} so that
/// kernel integrals reduce to the native e^{−|y|²} quadrature weight.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction<R: Scalar> {
    dim: usize,
    rule: QuadratureRule<R>,
    values: Vec<Cx<R>>, // row-major over the tensor grid
}

impl<R: Scalar> SampledFunction<R> {
    /// Wrap gaussian-factored values laid out row-major over the grid of
    /// `rule` repeated on each axis.
    pub fn from_values(
        dim: usize,
        rule: QuadratureRule<R>,
        values: Vec<Cx<R>>,
    ) -> Result<Self, Error> {
        if dim < 1 {
            return Err(Error::InvalidParameter("dimension must be at least 1"));
        }
        let expect = rule.len().pow(dim as u32);
        if values.len() != expect {
            return Err(Error::InvalidParameter(
                "value count must equal n^dim for the quadrature grid",
            ));
        }
        if let Some(index) = values
            .iter()
            .position(|v| !v.re.is_finite() || !v.im.is_finite())
        {
            return Err(Error::NonFiniteSample { index });
        }
        Ok(SampledFunction { dim, rule, values })
    }

    /// Sample a finite Hermite expansion on a Gauss–Hermite grid of the
    /// given order.
    pub fn from_expansion(f: &HermiteExpansion<R>, order: usize) -> Self {
        let rule = gauss_hermite::<R>(order);
        let dim = f.dim();
        let values = tensor_indices(rule.len(), dim)
            .map(|idx| {
                let y: Vec<R> = idx.iter().map(|&i| rule.nodes()[i]).collect();
                f.eval_weighted(&y).unwrap()
            })
            .collect();
        SampledFunction { dim, rule, values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.rule.len()
    }

    pub fn rule(&self) -> &QuadratureRule<R> {
        &self.rule
    }

    pub fn values(&self) -> &[Cx<R>] {
        &self.values
    }
}

/// Kernel-integral Bargmann transform (𝔙f)(z) = ∫ 𝔄_d(z,y) f(y) dy by
/// tensor Gauss–Hermite quadrature.
///
/// The kernel and stored samples both carry the Gaussian split so the
/// node values are π^{-d/4} e^{−⟨z,z⟩/2 + √2⟨z,y⟩} g(y) against the
/// e^{−|y|²} weight; the axes factor, so the sum contracts one axis at a
/// time.
pub fn bargmann_of_samples<R: Scalar>(
    f: &SampledFunction<R>,
    z: &ComplexPoint<R>,
) -> Result<Cx<R>, Error> {
    if z.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: z.dim(),
        });
    }
    let half = R::of(0.5);
    let sqrt2 = R::of(2.0).sqrt();
    let axis_norm = R::PI().powf(R::of(-0.25));
    // per-axis vectors wᵢ π^{-1/4} exp(−zⱼ²/2 + √2 zⱼ yᵢ)
    let axes: Vec<Vec<Cx<R>>> = z
        .coords()
        .iter()
        .map(|&c| {
            f.rule
                .iter()
                .map(|(y, w)| {
                    let expo = -(c * c).scale(half) + c.scale(sqrt2 * y);
                    expo.exp().scale(w * axis_norm)
                })
                .collect()
        })
        .collect();
    Ok(contract(&f.values, &axes))
}

fn contract<R: Scalar>(values: &[Cx<R>], axes: &[Vec<Cx<R>>]) -> Cx<R> {
    let zero = Cx::new(R::zero(), R::zero());
    match axes {
        [last] => values
            .iter()
            .zip(last)
            .fold(zero, |acc, (v, a)| acc + v * a),
        [first, rest @ ..] => {
            let chunk = values.len() / first.len();
            first.iter().enumerate().fold(zero, |acc, (i, a)| {
                acc + a * contract(&values[i * chunk..(i + 1) * chunk], rest)
            })
        }
        [] => unreachable!("dimension is at least 1"),
    }
}

/// Coefficient-form A² pairing Σ a_α conj(b_α).
pub fn a2_inner<R: Scalar>(f: &FockSeries<R>, g: &FockSeries<R>) -> Result<Cx<R>, Error> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: g.dim(),
        });
    }
    let mut acc = Cx::new(R::zero(), R::zero());
    for (alpha, a) in f.terms() {
        acc += *a * g.coeff(alpha).conj();
    }
    Ok(acc)
}

/// (F,G)_{A²} = ∫ F conj(G) dμ by quadrature, per complex coordinate in
/// polar form: Gauss–Laguerre of order `radial_order` in ρ = r² and
/// `angular_order` equally spaced angles.
pub fn a2_inner_quadrature<R: Scalar>(
    f: &FockSeries<R>,
    g: &FockSeries<R>,
    radial_order: usize,
    angular_order: usize,
) -> Result<Cx<R>, Error> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            got: g.dim(),
        });
    }
    assert!(radial_order >= 1 && angular_order >= 1);
    let dim = f.dim();
    let laguerre = gauss_laguerre::<R>(radial_order);
    // dμ per coordinate in ρ = r²: (1/q) Σ_θ Σ_i lwᵢ F(√ρᵢ e^{iθ}) …
    let q = R::of(angular_order as f64);
    let two_pi = R::of(2.0) * R::PI();
    let mut points: Vec<(Cx<R>, R)> = Vec::with_capacity(radial_order * angular_order);
    for (rho, lw) in laguerre.iter() {
        let r = rho.sqrt();
        for t in 0..angular_order {
            let theta = two_pi * R::of(t as f64) / q;
            points.push((Cx::new(r * theta.cos(), r * theta.sin()), lw / q));
        }
    }
    let ef = f.evaluator();
    let eg = g.evaluator();
    let mut acc = Cx::new(R::zero(), R::zero());
    for idx in tensor_indices(points.len(), dim) {
        let mut coords = Vec::with_capacity(dim);
        let mut w = R::one();
        for &i in &idx {
            coords.push(points[i].0);
            w *= points[i].1;
        }
        let z = ComplexPoint::new(coords);
        acc += (ef.eval(&z)? * eg.eval(&z)?.conj()).scale(w);
    }
    Ok(acc)
}

/// [`a2_inner_quadrature`] with the default orders m = N+2, q = 2N+4,
/// exact for polynomial integrands of degree ≤ 2N.
pub fn a2_inner_quadrature_default<R: Scalar>(
    f: &FockSeries<R>,
    g: &FockSeries<R>,
) -> Result<Cx<R>, Error> {
    let n = f.degree_bound().max(g.degree_bound()) as usize;
    a2_inner_quadrature(f, g, n + 2, 2 * n + 4)
}

/// Outcome of a sampled decay-bound check.
#[derive(Debug, Clone)]
pub struct DecayReport<R: Scalar> {
    pub worst_margin: R,
    pub pass: bool,
    /// The sample point attaining the worst margin.
    pub worst_point: ComplexPoint<R>,
}

/// Check |F(z)| ≤ C e^{|z|²/2 − ε M_{s,t}(z)} over a sample set, with
/// M_{s,t}(x+iξ) = |x|^{1/t} + |ξ|^{1/s}.
///
/// Reports the minimum of margin(z) = C e^{|z|²/2 − ε M_{s,t}(z)} − |F(z)|
/// and passes iff it is nonnegative.
pub fn decay_margin<R: Scalar>(
    f: &FockSeries<R>,
    s: R,
    t: R,
    eps: R,
    c: R,
    samples: &[ComplexPoint<R>],
) -> Result<DecayReport<R>, Error> {
    let half = R::of(0.5);
    if s <= half || t <= half {
        return Err(Error::InvalidParameter("s and t must exceed 1/2"));
    }
    if eps <= R::zero() || c <= R::zero() {
        return Err(Error::InvalidParameter("eps and C must be positive"));
    }
    if samples.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let ev = f.evaluator();
    let mut worst_margin = R::infinity();
    let mut worst_point = samples[0].clone();
    for z in samples {
        let x_norm = z.coords().iter().map(|v| v.re * v.re).sum::<R>().sqrt();
        let xi_norm = z.coords().iter().map(|v| v.im * v.im).sum::<R>().sqrt();
        let m = x_norm.powf(t.recip()) + xi_norm.powf(s.recip());
        let bound = c * (z.norm_sq() * half - eps * m).exp();
        let margin = bound - ev.eval(z)?.norm();
        if margin < worst_margin {
            worst_margin = margin;
            worst_point = z.clone();
        }
    }
    Ok(DecayReport {
        worst_margin,
        pass: worst_margin >= R::zero(),
        worst_point,
    })
}
