//! Stable factorial ratios via log-gamma sums.
//!
//! Every factorial in the library enters through a ratio such as
//! γ!/√((2γ)!) or z^α/√(α!); those are assembled in log space so that
//! nothing overflows even though (2α)! leaves the f64 range near |α| = 86.

use crate::multi_index::MultiIndex;
use crate::scalar::Scalar;

/// ln Γ(k+1) = ln(k!).
///
/// For k ≤ 170 the factorial fits an f64 and the log of the exact product
/// is the most accurate route; beyond that a Stirling series takes over.
pub fn ln_factorial<R: Scalar>(k: u32) -> R {
    if k <= 170 {
        let mut p = R::one();
        for i in 2..=k {
            p *= R::of(f64::from(i));
        }
        p.ln()
    } else {
        stirling_ln_gamma(R::of(f64::from(k) + 1.0))
    }
}

/// Stirling series for ln Γ(x), accurate to ~1e-14 for x ≥ 20.
fn stirling_ln_gamma<R: Scalar>(x: R) -> R {
    let half = R::of(0.5);
    let base = (x - half) * x.ln() - x + half * (R::of(2.0) * R::PI()).ln();
    // asymptotic corrections 1/(12x) - 1/(360x^3) + 1/(1260x^5)
    let inv = x.recip();
    let inv2 = inv * inv;
    base + inv * (R::of(1.0 / 12.0) - inv2 * (R::of(1.0 / 360.0) - inv2 * R::of(1.0 / 1260.0)))
}

/// Σⱼ ln(αⱼ!).
pub fn ln_factorial_multi<R: Scalar>(alpha: &MultiIndex) -> R {
    alpha.iter().map(|a| ln_factorial::<R>(a)).sum()
}

/// √(α!) assembled in log space.
pub fn sqrt_factorial<R: Scalar>(alpha: &MultiIndex) -> R {
    (ln_factorial_multi::<R>(alpha) * R::of(0.5)).exp()
}

/// The shell weight γ!/√((2γ)!) from the radial characterization.
pub fn shell_weight<R: Scalar>(gamma: &MultiIndex) -> R {
    let log: R = gamma
        .iter()
        .map(|g| ln_factorial::<R>(g) - R::of(0.5) * ln_factorial::<R>(2 * g))
        .sum();
    log.exp()
}
