use bargmann_fock::fock::ComplexPoint;
use bargmann_fock::hermite::HermiteExpansion;
use bargmann_fock::multi_index::enumerate_multi_indices;
use bargmann_fock::radial::OrthogonalMatrix;
use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

pub fn random_expansion<R: Rng>(rng: &mut R, dim: usize, degree: u32) -> HermiteExpansion<f64> {
    let mut f = HermiteExpansion::new(dim, degree);
    for alpha in enumerate_multi_indices(dim, degree) {
        let c = Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        f.set(alpha, c).unwrap();
    }
    f
}

pub fn random_point<R: Rng>(rng: &mut R, dim: usize, radius: f64) -> ComplexPoint<f64> {
    ComplexPoint::new(
        (0..dim)
            .map(|_| {
                Complex::new(
                    rng.gen_range(-radius..radius),
                    rng.gen_range(-radius..radius),
                )
            })
            .collect(),
    )
}

/// Random orthogonal matrix by Gram-Schmidt of a Gaussian matrix; covers
/// both determinant signs.
pub fn random_orthogonal<R: Rng>(rng: &mut R, dim: usize) -> OrthogonalMatrix<f64> {
    loop {
        let entries: Vec<f64> = (0..dim * dim).map(|_| rng.sample(StandardNormal)).collect();
        if let Ok(u) = OrthogonalMatrix::from_gram_schmidt(dim, entries) {
            return u;
        }
    }
}
