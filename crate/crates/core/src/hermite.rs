//! Hermite functions and finite Hermite expansions.
//!
//! The 1-D values come from the stable three-term recurrence
//! h_{k+1}(t) = √(2/(k+1))·t·h_k(t) − √(k/(k+1))·h_{k−1}(t),
//! seeded by h₀(t) = π^{-1/4} e^{-t²/2}; d-dimensional functions are the
//! tensor products h_α(x) = Π h_{αⱼ}(xⱼ).

use std::collections::BTreeMap;

use crate::error::Error;
use crate::multi_index::MultiIndex;
use crate::scalar::{Cx, Scalar};

/// 1-D orthonormal Hermite function values h_0(t), …, h_max(t).
pub fn hermite_values_1d<R: Scalar>(max_degree: u32, t: R) -> Vec<R> {
    scaled_values_1d(max_degree, t, (-t * t * R::of(0.5)).exp())
}

/// Gaussian-factored values h̃_k(t) = e^{t²/2} h_k(t) (the polynomial part,
/// still orthonormally scaled). Same recurrence, seeded without the
/// Gaussian.
pub fn hermite_values_1d_weighted<R: Scalar>(max_degree: u32, t: R) -> Vec<R> {
    scaled_values_1d(max_degree, t, R::one())
}

fn scaled_values_1d<R: Scalar>(max_degree: u32, t: R, gaussian: R) -> Vec<R> {
    let norm = R::PI().powf(R::of(-0.25));
    let mut vals = Vec::with_capacity(max_degree as usize + 1);
    vals.push(norm * gaussian);
    if max_degree >= 1 {
        vals.push(R::of(2.0).sqrt() * t * vals[0]);
    }
    for k in 1..max_degree as usize {
        let kf = R::of(k as f64);
        let k1 = R::of(k as f64 + 1.0);
        let next = (R::of(2.0) / k1).sqrt() * t * vals[k] - (kf / k1).sqrt() * vals[k - 1];
        vals.push(next);
    }
    vals
}

/// h_α(x) = Π h_{αⱼ}(xⱼ).
pub fn hermite_eval<R: Scalar>(alpha: &MultiIndex, x: &[R]) -> Result<R, Error> {
    if x.len() != alpha.dim() {
        return Err(Error::DimensionMismatch {
            expected: alpha.dim(),
            got: x.len(),
        });
    }
    let mut p = R::one();
    for (a, &t) in alpha.iter().zip(x) {
        p *= hermite_values_1d(a, t)[a as usize];
    }
    Ok(p)
}

/// Finite complex Hermite expansion f = Σ a_α h_α on ℝᵈ.
///
/// Terms are keyed graded-lexicographically, so iteration and
/// serialization order are deterministic. By orthonormality of {h_α},
/// ‖f‖²_{L²} = Σ |a_α|².
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteExpansion<R: Scalar> {
    dim: usize,
    degree_bound: u32,
    terms: BTreeMap<MultiIndex, Cx<R>>,
}

impl<R: Scalar> HermiteExpansion<R> {
    pub fn new(dim: usize, degree_bound: u32) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        HermiteExpansion {
            dim,
            degree_bound,
            terms: BTreeMap::new(),
        }
    }

    /// Single basis function h_α with unit coefficient.
    pub fn basis(alpha: MultiIndex) -> Self {
        let mut f = HermiteExpansion::new(alpha.dim(), alpha.degree());
        f.set(alpha, Cx::new(R::one(), R::zero())).unwrap();
        f
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

    /// Terms in graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Cx<R>)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// ‖f‖²_{L²} = Σ |a_α|².
    pub fn norm_sq(&self) -> R {
        self.terms.values().map(|c| c.norm_sqr()).sum()
    }

    pub fn scaled(&self, lambda: Cx<R>) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= lambda;
        }
        out.terms.retain(|_, c| *c != Cx::new(R::zero(), R::zero()));
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut out = self.clone();
        out.degree_bound = self.degree_bound.max(other.degree_bound);
        for (alpha, c) in &other.terms {
            let v = out.coeff(alpha) + *c;
            out.terms.insert(alpha.clone(), v);
        }
        out.terms.retain(|_, c| *c != Cx::new(R::zero(), R::zero()));
        Ok(out)
    }

    /// Pointwise value f(x) = Σ a_α h_α(x).
    pub fn eval(&self, x: &[R]) -> Result<Cx<R>, Error> {
        self.eval_scaled(x, false)
    }

    /// Gaussian-factored value e^{|x|²/2} f(x); polynomial in x.
    pub fn eval_weighted(&self, x: &[R]) -> Result<Cx<R>, Error> {
        self.eval_scaled(x, true)
    }

    fn eval_scaled(&self, x: &[R], weighted: bool) -> Result<Cx<R>, Error> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        // per-axis value tables up to the degree bound, computed once
        let tables: Vec<Vec<R>> = x
            .iter()
            .map(|&t| {
                if weighted {
                    hermite_values_1d_weighted(self.degree_bound, t)
                } else {
                    hermite_values_1d(self.degree_bound, t)
                }
            })
            .collect();
        let mut acc = Cx::new(R::zero(), R::zero());
        for (alpha, c) in &self.terms {
            let mut p = R::one();
            for (j, a) in alpha.iter().enumerate() {
                p *= tables[j][a as usize];
            }
            acc += *c * p;
        }
        Ok(acc)
    }
}

/// L² pairing Σ a_α conj(b_α); equals (f,g)_{L²} by orthonormality.
pub fn l2_inner<R: Scalar>(
    f: &HermiteExpansion<R>,
    g: &HermiteExpansion<R>,
) -> Result<Cx<R>, Error> {
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
