//! Gauss–Hermite and Gauss–Laguerre rules via Golub–Welsch.
//!
//! Nodes are eigenvalues of the symmetric tridiagonal Jacobi matrix of the
//! orthogonal-polynomial recurrence; weights come from the first components
//! of the eigenvectors. Stable up to n ≈ 200.

use crate::scalar::Scalar;

/// Nodes and positive weights of a Gaussian quadrature rule.
///
/// A rule of order n integrates w(x)·p(x) exactly for polynomials p of
/// degree ≤ 2n−1, where w is the weight the rule was built for.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule<R: Scalar> {
    nodes: Vec<R>,
    weights: Vec<R>,
}

impl<R: Scalar> QuadratureRule<R> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[R] {
        &self.nodes
    }

    pub fn weights(&self) -> &[R] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = (R, R)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// Σ wᵢ f(xᵢ).
    pub fn integrate(&self, f: impl Fn(R) -> R) -> R {
        self.iter().map(|(x, w)| w * f(x)).sum()
    }
}

/// Gauss–Hermite rule of order n for the weight e^{−x²} on ℝ.
///
/// Weights sum to √π; nodes are exactly symmetric about 0.
pub fn gauss_hermite<R: Scalar>(n: usize) -> QuadratureRule<R> {
    assert!(n >= 1, "quadrature order must be at least 1");
    // Jacobi matrix: diagonal 0, off-diagonal sqrt((i+1)/2)
    let diag = vec![R::zero(); n];
    let off: Vec<R> = (0..n.saturating_sub(1))
        .map(|i| (R::of(i as f64 + 1.0) * R::of(0.5)).sqrt())
        .collect();
    let mu0 = R::PI().sqrt();
    let mut rule = golub_welsch(diag, off, mu0);
    symmetrize(&mut rule);
    rule
}

/// Gauss–Laguerre rule of order n for the weight e^{−x} on [0,∞).
///
/// Weights sum to 1.
pub fn gauss_laguerre<R: Scalar>(n: usize) -> QuadratureRule<R> {
    assert!(n >= 1, "quadrature order must be at least 1");
    // Jacobi matrix for Laguerre (α = 0): diagonal 2i+1, off-diagonal i+1
    let diag: Vec<R> = (0..n).map(|i| R::of(2.0 * i as f64 + 1.0)).collect();
    let off: Vec<R> = (0..n.saturating_sub(1))
        .map(|i| R::of(i as f64 + 1.0))
        .collect();
    golub_welsch(diag, off, R::one())
}

fn golub_welsch<R: Scalar>(diag: Vec<R>, off: Vec<R>, mu0: R) -> QuadratureRule<R> {
    let n = diag.len();
    let mut d = diag;
    let mut e = off;
    e.push(R::zero());
    // first row of the eigenvector matrix is all we need for the weights
    let mut z = vec![R::zero(); n];
    z[0] = R::one();
    tridiagonal_ql(&mut d, &mut e, &mut z);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let nodes: Vec<R> = order.iter().map(|&i| d[i]).collect();
    let weights: Vec<R> = order.iter().map(|&i| mu0 * z[i] * z[i]).collect();
    QuadratureRule { nodes, weights }
}

/// QL with implicit shifts on a symmetric tridiagonal matrix, rotating the
/// tracked first eigenvector row `z` along. `e[i]` couples rows i and i+1.
fn tridiagonal_ql<R: Scalar>(d: &mut [R], e: &mut [R], z: &mut [R]) {
    let n = d.len();
    if n == 1 {
        return;
    }
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= R::epsilon() * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter <= 50, "tridiagonal QL failed to converge");
            let mut g = (d[l + 1] - d[l]) / (R::of(2.0) * e[l]);
            let mut r = g.hypot(R::one());
            let denom = g + if g >= R::zero() { r.abs() } else { -r.abs() };
            g = d[m] - d[l] + e[l] / denom;
            let mut s = R::one();
            let mut c = R::one();
            let mut p = R::zero();
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == R::zero() {
                    d[i + 1] -= p;
                    e[m] = R::zero();
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + R::of(2.0) * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = R::zero();
        }
    }
}

/// Row-major iterator over the index tuples of a dim-fold tensor grid with
/// n points per axis (last axis varies fastest).
pub fn tensor_indices(n: usize, dim: usize) -> impl Iterator<Item = Vec<usize>> {
    assert!(dim >= 1);
    let total = n.checked_pow(dim as u32).expect("grid size overflow");
    (0..total).map(move |flat| {
        let mut idx = vec![0usize; dim];
        let mut rem = flat;
        for axis in (0..dim).rev() {
            idx[axis] = rem % n;
            rem /= n;
        }
        idx
    })
}

/// Force exact ± symmetry of a Hermite rule (the eigen route delivers it
/// only to rounding).
fn symmetrize<R: Scalar>(rule: &mut QuadratureRule<R>) {
    let n = rule.nodes.len();
    let half = R::of(0.5);
    for i in 0..n / 2 {
        let j = n - 1 - i;
        let m = (rule.nodes[j] - rule.nodes[i]) * half;
        rule.nodes[i] = -m;
        rule.nodes[j] = m;
        let w = (rule.weights[i] + rule.weights[j]) * half;
        rule.weights[i] = w;
        rule.weights[j] = w;
    }
    if n % 2 == 1 {
        rule.nodes[n / 2] = R::zero();
    }
}
