//! Dense complex square matrices and the handful of operations the rest of
//! the crate is built on.

use std::fmt;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Dense `n × n` complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct CMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> CMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_diagonal(diag: &[Complex<T>]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    /// Builds a matrix from row-major entries, rejecting wrong lengths and
    /// non-finite values.
    pub fn from_row_major(n: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(0, 1));
        }
        if data.len() != n * n {
            return Err(Error::BadShape {
                expected: n * n,
                got: data.len(),
            });
        }
        if let Some(k) = data
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite {
                row: k / n,
                col: k % n,
            });
        }
        Ok(Self { n, data })
    }

    /// Builds a matrix from nested rows; panics if the rows are ragged.
    /// Intended for literals in tests and constructors.
    pub fn from_rows<R: AsRef<[Complex<T>]>>(rows: &[R]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), n, "ragged matrix literal");
            data.extend_from_slice(r);
        }
        Self { n, data }
    }

    /// Builds a matrix by evaluating `f(row, col)` for every entry.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.data[row * self.n + col]
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, col: usize, value: Complex<T>) {
        self.data[row * self.n + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Complex<T>] {
        &self.data[row * self.n..(row + 1) * self.n]
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Standard matrix product `self · rhs`.
    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        check_dims(self, rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub(crate) fn mul_unchecked(&self, rhs: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            let out_row = &mut out.data[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                let rhs_row = &rhs.data[k * n..(k + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o = *o + a * b;
                }
            }
        }
        out
    }

    /// `self^k` by repeated squaring; `k = 0` gives the identity.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut acc = Self::identity(self.n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let n = self.n;
        Self::from_fn(n, |i, j| self.data[j * n + i].conj())
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        check_dims(self, rhs)?;
        Ok(Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        check_dims(self, rhs)?;
        Ok(Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.n).fold(Complex::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Leading `k × k` block.
    pub fn leading_block(&self, k: usize) -> Self {
        assert!(k <= self.n);
        Self::from_fn(k, |i, j| self.get(i, j))
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> Complex<T> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = Complex::new(T::one(), T::zero());
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&p, &q| {
                    a[p * n + col]
                        .norm()
                        .partial_cmp(&a[q * n + col].norm())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .expect("non-empty pivot range");
            if a[pivot * n + col].is_zero() {
                return Complex::zero();
            }
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det = det * p;
            for r in col + 1..n {
                let f = a[r * n + col] / p;
                if f.is_zero() {
                    continue;
                }
                for k in col..n {
                    let v = a[col * n + k];
                    a[r * n + k] = a[r * n + k] - f * v;
                }
            }
        }
        det
    }
}

fn check_dims<T>(a: &CMatrix<T>, b: &CMatrix<T>) -> Result<()> {
    if a.n != b.n {
        Err(Error::DimensionMismatch {
            left: a.n,
            right: b.n,
        })
    } else {
        Ok(())
    }
}

/// Largest entry modulus of `a − b`.
pub fn max_abs_diff<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>) -> Result<T> {
    check_dims(a, b)?;
    Ok(a.data
        .iter()
        .zip(&b.data)
        .map(|(&x, &y)| (x - y).norm())
        .fold(T::zero(), T::max))
}

/// Largest entry modulus of `U†U − I`; zero exactly when `u` is unitary.
pub fn unitary_error<T: Real>(u: &CMatrix<T>) -> T {
    let g = u.dagger().mul_unchecked(u);
    max_abs_diff(&g, &CMatrix::identity(u.n)).expect("same dimension")
}

/// Truncated Taylor sum `Σ_{k=0}^{terms} X^k / k!`.
///
/// No scaling and squaring: this is a reference for the closed-form module
/// exponential, so keep `‖X‖` moderate (≲ π√n with 64 terms).
pub fn mat_exp_series<T: Real>(x: &CMatrix<T>, terms: usize) -> CMatrix<T> {
    let n = x.n;
    let mut sum = CMatrix::identity(n);
    let mut term = CMatrix::identity(n);
    for k in 1..=terms.max(1) {
        let inv_k = Complex::new(T::one() / T::count(k), T::zero());
        term = term.mul_unchecked(x).scale(inv_k);
        for (s, &t) in sum.data.iter_mut().zip(&term.data) {
            *s = *s + t;
        }
    }
    sum
}

impl<T: Real> fmt::Debug for CMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix({}x{}) [", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, "  ")?;
            for z in self.row(i) {
                write!(
                    f,
                    "{:+.6}{:+.6}i  ",
                    z.re.to_f64().unwrap_or(f64::NAN),
                    z.im.to_f64().unwrap_or(f64::NAN)
                )?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{c, random_matrix, random_skew_hermitian};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn naive_product(a: &CMatrix<f64>, b: &CMatrix<f64>) -> CMatrix<f64> {
        let n = a.n();
        CMatrix::from_fn(n, |i, j| {
            let mut s = c(0.0, 0.0);
            for k in 0..n {
                s += a.get(i, k) * b.get(k, j);
            }
            s
        })
    }

    #[test]
    fn identity_is_neutral() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = random_matrix::<f64, _>(3, &mut rng);
        let i3 = CMatrix::identity(3);
        assert_eq!(i3.matmul(&m).unwrap(), m);
    }

    #[test]
    fn product_matches_triple_loop() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random_matrix::<f64, _>(4, &mut rng);
        let b = random_matrix::<f64, _>(4, &mut rng);
        let got = a.matmul(&b).unwrap();
        assert!(max_abs_diff(&got, &naive_product(&a, &b)).unwrap() < 1e-14);
    }

    #[test]
    fn shift_squared_moves_rows_by_two() {
        let one = c(1.0, 0.0);
        let z = c(0.0, 0.0);
        let s1 = CMatrix::from_rows(&[[z, z, one], [one, z, z], [z, one, z]]);
        let want = CMatrix::from_rows(&[[z, one, z], [z, z, one], [one, z, z]]);
        assert_eq!(s1.matmul(&s1).unwrap(), want);
    }

    #[test]
    fn mismatched_dimensions_fail() {
        let a = CMatrix::<f64>::identity(2);
        let b = CMatrix::<f64>::identity(3);
        assert!(matches!(
            a.matmul(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
        assert!(max_abs_diff(&a, &b).is_err());
    }

    #[test]
    fn dagger_of_imaginary_diagonal() {
        let m = CMatrix::from_diagonal(&[c(0.0, 1.0), c(0.0, -1.0)]);
        let want = CMatrix::from_diagonal(&[c(0.0, -1.0), c(0.0, 1.0)]);
        assert_eq!(m.dagger(), want);
    }

    #[test]
    fn dagger_reverses_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_matrix::<f64, _>(5, &mut rng);
        let b = random_matrix::<f64, _>(5, &mut rng);
        let lhs = a.matmul(&b).unwrap().dagger();
        let rhs = b.dagger().matmul(&a.dagger()).unwrap();
        assert!(max_abs_diff(&lhs, &rhs).unwrap() < 1e-14);
    }

    #[test]
    fn unitary_error_values() {
        assert_eq!(unitary_error(&CMatrix::<f64>::identity(4)), 0.0);
        let two = CMatrix::<f64>::identity(3).scale(c(2.0, 0.0));
        assert_eq!(unitary_error(&two), 3.0);
    }

    #[test]
    fn max_abs_diff_identity_vs_pauli_z() {
        let i2 = CMatrix::<f64>::identity(2);
        let z = CMatrix::from_diagonal(&[c(1.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(max_abs_diff(&i2, &i2).unwrap(), 0.0);
        assert_eq!(max_abs_diff(&i2, &z).unwrap(), 2.0);
    }

    #[test]
    fn max_abs_diff_matches_loop() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let a = random_matrix::<f64, _>(6, &mut rng);
        let b = random_matrix::<f64, _>(6, &mut rng);
        let mut want = 0.0f64;
        for i in 0..6 {
            for j in 0..6 {
                let d = a.get(i, j) - b.get(i, j);
                want = want.max((d.re * d.re + d.im * d.im).sqrt());
            }
        }
        assert!((max_abs_diff(&a, &b).unwrap() - want).abs() < 1e-15);
    }

    #[test]
    fn exp_series_of_zero_is_identity() {
        let z = CMatrix::<f64>::zeros(4);
        assert_eq!(mat_exp_series(&z, 64), CMatrix::identity(4));
    }

    #[test]
    fn exp_series_of_rotation_generator() {
        let q = std::f64::consts::FRAC_PI_4;
        let x = CMatrix::from_rows(&[[c(0.0, 0.0), c(q, 0.0)], [c(-q, 0.0), c(0.0, 0.0)]]);
        let (s, co) = q.sin_cos();
        let want = CMatrix::from_rows(&[[c(co, 0.0), c(s, 0.0)], [c(-s, 0.0), c(co, 0.0)]]);
        assert!(max_abs_diff(&mat_exp_series(&x, 64), &want).unwrap() < 1e-15);
    }

    #[test]
    fn exp_series_of_skew_hermitian_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let x = random_skew_hermitian::<f64, _>(6, std::f64::consts::PI, &mut rng);
            assert!(unitary_error(&mat_exp_series(&x, 64)) < 1e-11);
        }
    }

    #[test]
    fn determinant_of_known_matrices() {
        let m = CMatrix::from_rows(&[
            [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)],
            [c(0.0, 0.0), c(1.0, 0.0), c(4.0, 0.0)],
            [c(5.0, 0.0), c(6.0, 0.0), c(0.0, 0.0)],
        ]);
        assert!((m.determinant() - c(1.0, 0.0)).norm() < 1e-13);
        let d = CMatrix::from_diagonal(&[c(0.0, 1.0), c(0.0, 1.0)]);
        assert!((d.determinant() - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let a = random_matrix::<f64, _>(3, &mut rng);
        let mut want = CMatrix::identity(3);
        for _ in 0..5 {
            want = want.matmul(&a).unwrap();
        }
        assert!(max_abs_diff(&a.pow(5), &want).unwrap() < 1e-12);
    }

    #[test]
    fn rejects_bad_shape_and_nan() {
        assert!(CMatrix::<f64>::from_row_major(2, vec![c(0.0, 0.0); 3]).is_err());
        let mut v = vec![c(0.0, 0.0); 4];
        v[3] = c(f64::NAN, 0.0);
        assert!(matches!(
            CMatrix::from_row_major(2, v),
            Err(Error::NonFinite { row: 1, col: 1 })
        ));
    }

    proptest! {
        #[test]
        fn dagger_is_an_involution(seed in any::<u64>(), n in 1usize..9) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_matrix::<f64, _>(n, &mut rng);
            prop_assert_eq!(m.dagger().dagger(), m);
        }

        #[test]
        fn product_is_associative(seed in any::<u64>(), n in 1usize..17) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_matrix::<f64, _>(n, &mut rng);
            let b = random_matrix::<f64, _>(n, &mut rng);
            let c3 = random_matrix::<f64, _>(n, &mut rng);
            let l = a.matmul(&b).unwrap().matmul(&c3).unwrap();
            let r = a.matmul(&b.matmul(&c3).unwrap()).unwrap();
            prop_assert!(max_abs_diff(&l, &r).unwrap() <= 1e-12);
        }

        #[test]
        fn skew_hermitian_exponential_is_unitary(seed in any::<u64>(), n in 1usize..9) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = random_skew_hermitian::<f64, _>(n, std::f64::consts::PI, &mut rng);
            prop_assert!(unitary_error(&mat_exp_series(&x, 64)) <= 1e-11);
        }
    }
}
