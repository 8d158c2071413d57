//! Seedable random inputs: Haar unitaries, skew-Hermitian generators and
//! complex vectors. Everything is drawn through `f64` and then converted.

use num_complex::Complex;
use num_traits::Zero;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::matrix::CMatrix;
use crate::modules::vec_norm;
use crate::scalar::Real;

fn gaussian<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Complex<T> {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(T::lit(re), T::lit(im))
}

/// Matrix of independent standard complex Gaussians.
pub fn gaussian_matrix<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix<T> {
    CMatrix::from_fn(n, |_, _| gaussian(rng))
}

/// Matrix with real and imaginary parts uniform on `[−1, 1)`.
pub fn random_matrix<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix<T> {
    CMatrix::from_fn(n, |_, _| {
        Complex::new(
            T::lit(rng.random_range(-1.0..1.0)),
            T::lit(rng.random_range(-1.0..1.0)),
        )
    })
}

/// Haar-distributed unitary: Gram–Schmidt (two passes) over the columns of
/// a complex Gaussian matrix.
pub fn haar_unitary<T: Real, R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix<T> {
    loop {
        let g = gaussian_matrix::<T, R>(n, rng);
        if let Some(q) = orthonormalize_columns(&g) {
            return q;
        }
    }
}

fn orthonormalize_columns<T: Real>(g: &CMatrix<T>) -> Option<CMatrix<T>> {
    let n = g.n();
    let mut cols: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);
    for k in 0..n {
        let mut v: Vec<Complex<T>> = (0..n).map(|i| g.get(i, k)).collect();
        for _pass in 0..2 {
            for q in &cols {
                let proj = q
                    .iter()
                    .zip(&v)
                    .fold(Complex::zero(), |acc: Complex<T>, (a, b)| {
                        acc + a.conj() * b
                    });
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi = *vi - proj * qi;
                }
            }
        }
        let norm = vec_norm(&v);
        if norm <= T::epsilon() {
            return None;
        }
        v.iter_mut().for_each(|x| *x = *x / norm);
        cols.push(v);
    }
    Some(CMatrix::from_fn(n, |i, j| cols[j][i]))
}

/// Uniformly oriented unit vector in `C^len`.
pub fn random_unit_vector<T: Real, R: Rng + ?Sized>(len: usize, rng: &mut R) -> Vec<Complex<T>> {
    loop {
        let v: Vec<Complex<T>> = (0..len).map(|_| gaussian(rng)).collect();
        let norm = vec_norm(&v);
        if norm > T::lit(1e-3) {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

/// Random vector whose norm is uniform on `[0, max_norm)`.
pub fn random_complex_vector<T: Real, R: Rng + ?Sized>(
    len: usize,
    max_norm: f64,
    rng: &mut R,
) -> Vec<Complex<T>> {
    let r = T::lit(rng.random_range(0.0..max_norm.max(f64::MIN_POSITIVE)));
    random_unit_vector::<T, R>(len, rng)
        .into_iter()
        .map(|x| x * r)
        .collect()
}

/// Skew-Hermitian matrix with Frobenius norm uniform on `[0, max_norm)`;
/// its spectral radius is bounded by the same value.
pub fn random_skew_hermitian<T: Real, R: Rng + ?Sized>(
    n: usize,
    max_norm: f64,
    rng: &mut R,
) -> CMatrix<T> {
    let g = gaussian_matrix::<T, R>(n, rng);
    let half = T::lit(0.5);
    let x = CMatrix::from_fn(n, |i, j| (g.get(i, j) - g.get(j, i).conj()) * half);
    let fro = x
        .as_slice()
        .iter()
        .map(|z| z.norm_sqr())
        .fold(T::zero(), |a, b| a + b)
        .sqrt();
    if fro.is_zero() {
        return x;
    }
    let target = T::lit(rng.random_range(0.0..max_norm));
    x.scale(Complex::new(target / fro, T::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::unitary_error;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn haar_samples_are_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=16 {
            let u = haar_unitary::<f64, _>(n, &mut rng);
            assert!(unitary_error(&u) < 1e-13, "n={n}");
        }
    }

    #[test]
    fn haar_is_deterministic_under_seed() {
        let a = haar_unitary::<f64, _>(5, &mut ChaCha8Rng::seed_from_u64(9));
        let b = haar_unitary::<f64, _>(5, &mut ChaCha8Rng::seed_from_u64(9));
        assert_eq!(a, b);
    }

    #[test]
    fn skew_hermitian_has_bounded_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let x = random_skew_hermitian::<f64, _>(6, 2.0, &mut rng);
        let xd = x.dagger().scale(Complex::new(-1.0, 0.0));
        assert_eq!(x, xd);
        let fro: f64 = x
            .as_slice()
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt();
        assert!(fro < 2.0);
    }
}
