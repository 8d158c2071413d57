//! Jarlskog modules: the diagonal phase module `A₀` and the block modules
//! `A_j`, `2 ≤ j ≤ n`, whose ordered product `A₀ A₂ ⋯ A_n` covers `U(n)`.
//!
//! `A_j` acts on the leading `j` coordinates as
//!
//! ```text
//! ⎡ 1 − (1 − cos β)|z̃⟩⟨z̃|   sin β |z̃⟩ ⎤
//! ⎣ −sin β ⟨z̃|              cos β     ⎦
//! ```
//!
//! with `|z̃⟩ ∈ C^{j−1}` a unit vector, and as the identity on the rest.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::{arg, cis, Real};

/// One primitive factor of a [`FactorSequence`].
#[derive(Clone, Debug, PartialEq)]
pub enum ModuleParams<T> {
    /// `A₀ = diag(e^{iθ₁}, …, e^{iθₙ})`.
    Phase { thetas: Vec<T> },
    /// `A_j(z̃; β)` embedded in dimension `n`.
    Block {
        n: usize,
        j: usize,
        z_tilde: Vec<Complex<T>>,
        beta: T,
    },
}

impl<T: Real> ModuleParams<T> {
    pub fn phase(thetas: Vec<T>) -> Self {
        ModuleParams::Phase { thetas }
    }

    /// Block module with a real unit vector, the common case in the recipes.
    pub fn block_real(n: usize, j: usize, z_tilde: &[T], beta: T) -> Self {
        ModuleParams::Block {
            n,
            j,
            z_tilde: z_tilde
                .iter()
                .map(|&x| Complex::new(x, T::zero()))
                .collect(),
            beta,
        }
    }

    pub fn block(n: usize, j: usize, z_tilde: Vec<Complex<T>>, beta: T) -> Self {
        ModuleParams::Block {
            n,
            j,
            z_tilde,
            beta,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ModuleParams::Phase { thetas } => thetas.len(),
            ModuleParams::Block { n, .. } => *n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ModuleParams::Phase { thetas } => check_phase(thetas),
            ModuleParams::Block {
                n,
                j,
                z_tilde,
                beta,
            } => check_block(*n, *j, z_tilde, *beta),
        }
    }

    pub fn to_matrix(&self) -> Result<CMatrix<T>> {
        match self {
            ModuleParams::Phase { thetas } => make_phase_module(thetas),
            ModuleParams::Block {
                n,
                j,
                z_tilde,
                beta,
            } => make_block_module(*n, *j, z_tilde, *beta),
        }
    }

    /// The module whose matrix is the inverse of this one.
    pub fn inverse(&self) -> Self {
        match self {
            ModuleParams::Phase { thetas } => ModuleParams::Phase {
                thetas: thetas.iter().map(|&t| -t).collect(),
            },
            ModuleParams::Block {
                n,
                j,
                z_tilde,
                beta,
            } => ModuleParams::Block {
                n: *n,
                j: *j,
                z_tilde: z_tilde.clone(),
                beta: -*beta,
            },
        }
    }
}

fn check_phase<T: Real>(thetas: &[T]) -> Result<()> {
    if thetas.is_empty() {
        return Err(Error::EmptyPhase);
    }
    if thetas.iter().any(|t| !t.is_finite()) {
        return Err(Error::NonFiniteParameter);
    }
    Ok(())
}

fn check_block<T: Real>(n: usize, j: usize, z_tilde: &[Complex<T>], beta: T) -> Result<()> {
    if j < 2 || j > n {
        return Err(Error::BlockIndex { j, n });
    }
    if z_tilde.len() != j - 1 {
        return Err(Error::BlockVectorLength {
            expected: j - 1,
            got: z_tilde.len(),
        });
    }
    if !beta.is_finite()
        || z_tilde
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        return Err(Error::NonFiniteParameter);
    }
    let norm = vec_norm(z_tilde);
    if (norm - T::one()).abs() > T::UNIT_NORM_TOL {
        return Err(Error::NotUnitVector {
            norm: norm.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

pub(crate) fn vec_norm<T: Real>(v: &[Complex<T>]) -> T {
    v.iter()
        .map(|z| z.norm_sqr())
        .fold(T::zero(), |a, b| a + b)
        .sqrt()
}

/// `A₀(θ₁, …, θₙ)`.
pub fn make_phase_module<T: Real>(thetas: &[T]) -> Result<CMatrix<T>> {
    check_phase(thetas)?;
    let diag: Vec<_> = thetas.iter().map(|&t| cis(t)).collect();
    Ok(CMatrix::from_diagonal(&diag))
}

/// `A_j(z̃; β)` in dimension `n`; `z_tilde` must have unit norm.
pub fn make_block_module<T: Real>(
    n: usize,
    j: usize,
    z_tilde: &[Complex<T>],
    beta: T,
) -> Result<CMatrix<T>> {
    check_block(n, j, z_tilde, beta)?;
    Ok(block_matrix_unchecked(n, j, z_tilde, beta))
}

fn block_matrix_unchecked<T: Real>(n: usize, j: usize, z: &[Complex<T>], beta: T) -> CMatrix<T> {
    let (s, c) = beta.sin_cos();
    let one_minus_c = T::one() - c;
    let last = j - 1;
    let mut m = CMatrix::identity(n);
    for (r, &zr) in z.iter().enumerate() {
        for (k, &zk) in z.iter().enumerate() {
            let v = m.get(r, k) - zr * zk.conj() * one_minus_c;
            m.set(r, k, v);
        }
        m.set(r, last, zr * s);
        m.set(last, r, -zr.conj() * s);
    }
    m.set(last, last, Complex::new(c, T::zero()));
    m
}

/// The skew-Hermitian generator `X_j`: `z` in column `j` above the diagonal,
/// `−z̄` in row `j` left of it, zero elsewhere.
pub fn block_generator<T: Real>(n: usize, j: usize, z: &[Complex<T>]) -> Result<CMatrix<T>> {
    if j < 2 || j > n {
        return Err(Error::BlockIndex { j, n });
    }
    if z.len() != j - 1 {
        return Err(Error::BlockVectorLength {
            expected: j - 1,
            got: z.len(),
        });
    }
    let mut x = CMatrix::zeros(n);
    for (r, &zr) in z.iter().enumerate() {
        x.set(r, j - 1, zr);
        x.set(j - 1, r, -zr.conj());
    }
    Ok(x)
}

/// Closed-form `exp(X_j)`: `β = ‖z‖`, `z̃ = z / β`. Returns the identity for
/// `z = 0`.
pub fn exp_skew_block<T: Real>(n: usize, j: usize, z: &[Complex<T>]) -> Result<CMatrix<T>> {
    if j < 2 || j > n {
        return Err(Error::BlockIndex { j, n });
    }
    if z.len() != j - 1 {
        return Err(Error::BlockVectorLength {
            expected: j - 1,
            got: z.len(),
        });
    }
    if z.iter().any(|w| !w.re.is_finite() || !w.im.is_finite()) {
        return Err(Error::NonFiniteParameter);
    }
    let beta = vec_norm(z);
    if beta.is_zero() {
        return Ok(CMatrix::identity(n));
    }
    let z_tilde: Vec<_> = z.iter().map(|&w| w / beta).collect();
    Ok(block_matrix_unchecked(n, j, &z_tilde, beta))
}

/// Ordered list of modules at a fixed dimension. The product is taken
/// left to right, so `factors[0]` is the leftmost matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorSequence<T> {
    n: usize,
    factors: Vec<ModuleParams<T>>,
}

impl<T: Real> FactorSequence<T> {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDimension(0, 1));
        }
        Ok(Self {
            n,
            factors: Vec::new(),
        })
    }

    pub fn new(n: usize, factors: Vec<ModuleParams<T>>) -> Result<Self> {
        let mut seq = Self::empty(n)?;
        for f in factors {
            seq.push(f)?;
        }
        Ok(seq)
    }

    pub fn push(&mut self, factor: ModuleParams<T>) -> Result<()> {
        if factor.dim() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: factor.dim(),
            });
        }
        factor.validate()?;
        self.factors.push(factor);
        Ok(())
    }

    /// Appends every factor of `other`.
    pub fn extend(&mut self, other: &Self) -> Result<()> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        self.factors.extend(other.factors.iter().cloned());
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[ModuleParams<T>] {
        &self.factors
    }

    /// Matrices of the individual factors, in order.
    pub fn factor_matrices(&self) -> Vec<CMatrix<T>> {
        self.factors
            .iter()
            .map(|f| f.to_matrix().expect("factors validated on insertion"))
            .collect()
    }

    /// The cumulative products `F₁`, `F₁F₂`, …, `F₁⋯F_m`.
    pub fn partial_products(&self) -> Vec<CMatrix<T>> {
        let mut acc = CMatrix::identity(self.n);
        self.factor_matrices()
            .into_iter()
            .map(|m| {
                acc = acc.mul_unchecked(&m);
                acc.clone()
            })
            .collect()
    }
}

/// Left-to-right product of the sequence; the empty sequence gives `Iₙ`.
pub fn compose_sequence<T: Real>(seq: &FactorSequence<T>) -> CMatrix<T> {
    seq.factor_matrices()
        .iter()
        .fold(CMatrix::identity(seq.n), |acc, m| acc.mul_unchecked(m))
}

/// Angles of the `U(2)` Euler form
/// `diag(e^{iφ₁}, e^{iφ₂}) · R(rot) · diag(e^{−iφ_r}, e^{iφ_r})`
/// where `R(rot)` is the real rotation `[[cos, sin], [−sin, cos]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EulerAngles<T> {
    pub phi_left1: T,
    pub phi_left2: T,
    pub rot: T,
    pub phi_right: T,
}

impl<T: Real> EulerAngles<T> {
    pub fn to_matrix(&self) -> CMatrix<T> {
        let left = CMatrix::from_diagonal(&[cis(self.phi_left1), cis(self.phi_left2)]);
        let (s, c) = self.rot.sin_cos();
        let zero = T::zero();
        let rot = CMatrix::from_rows(&[
            [Complex::new(c, zero), Complex::new(s, zero)],
            [Complex::new(-s, zero), Complex::new(c, zero)],
        ]);
        let right = CMatrix::from_diagonal(&[cis(-self.phi_right), cis(self.phi_right)]);
        left.mul_unchecked(&rot).mul_unchecked(&right)
    }
}

/// `e^{X₀} e^{X₂}` for `n = 2`, together with its Euler angles
/// `(θ₁ + α/2, θ₂ − α/2, |z|, α/2)` where `α = arg z` (`arg 0 = 0`).
pub fn euler_u2<T: Real>(theta1: T, theta2: T, z: Complex<T>) -> (CMatrix<T>, EulerAngles<T>) {
    let phase = CMatrix::from_diagonal(&[cis(theta1), cis(theta2)]);
    let block = exp_skew_block(2, 2, &[z]).expect("j = n = 2 is valid");
    let u = phase.mul_unchecked(&block);
    let half = arg(z) / (T::one() + T::one());
    let angles = EulerAngles {
        phi_left1: theta1 + half,
        phi_left2: theta2 - half,
        rot: z.norm(),
        phi_right: half,
    };
    (u, angles)
}
