//! Factoring a unitary back into modules, `U = A₀ A₂ ⋯ Aₙ`.
//!
//! Every `A_j` with `j < n` fixes the last coordinate, so the last row of `U`
//! is `e^{iθₙ}(−sin βₙ ⟨z̃ₙ|, cos βₙ)`. Reading `θₙ`, `βₙ` and `z̃ₙ` off that
//! row and multiplying by `Aₙ⁻¹` on the right leaves `diag(U', e^{iθₙ})` with
//! `U'` of the same form one dimension down.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{max_abs_diff, unitary_error, CMatrix};
use crate::modules::{compose_sequence, make_block_module, FactorSequence, ModuleParams};
use crate::scalar::{arg, Real};

#[derive(Clone, Debug, PartialEq)]
pub struct DecompositionResult<T> {
    /// One phase module followed by blocks `j = 2..=n` in order.
    pub sequence: FactorSequence<T>,
    /// `max_abs_diff(compose_sequence(sequence), input)`.
    pub residual: T,
}

struct Peel<T> {
    theta: T,
    z_tilde: Vec<Complex<T>>,
    beta: T,
}

fn peel_last_row<T: Real>(u: &CMatrix<T>) -> Peel<T> {
    let m = u.n();
    let corner = u.get(m - 1, m - 1);
    let row = &u.row(m - 1)[..m - 1];
    let off_norm = row
        .iter()
        .map(|z| z.norm_sqr())
        .fold(T::zero(), |a, b| a + b)
        .sqrt();
    let c = corner.norm();

    if (T::one() - c) <= T::DEGENERACY_TOL || off_norm.is_zero() {
        let mut z_tilde = vec![Complex::zero(); m - 1];
        z_tilde[0] = Complex::new(T::one(), T::zero());
        return Peel {
            theta: arg(corner),
            z_tilde,
            beta: T::zero(),
        };
    }

    let (theta, beta) = if c <= T::DEGENERACY_TOL {
        (T::zero(), T::FRAC_PI_2())
    } else {
        (arg(corner), off_norm.atan2(c))
    };
    // U_{n,k} = −e^{iθ} sin β conj(z̃_k); normalizing by the row norm
    // instead of sin β keeps ‖z̃‖ = 1 to rounding.
    let phase = Complex::new(theta.cos(), theta.sin());
    let z_tilde = row
        .iter()
        .map(|&x| -(phase * x.conj()) / off_norm)
        .collect();
    Peel {
        theta,
        z_tilde,
        beta,
    }
}

/// Factors a unitary matrix into one phase module and the blocks
/// `A₂, …, Aₙ`. Rejects inputs whose `unitary_error` exceeds the scalar's
/// input tolerance (`1e−10` for `f64`).
pub fn decompose<T: Real>(u: &CMatrix<T>) -> Result<DecompositionResult<T>> {
    let n = u.n();
    if !u.is_finite() {
        return Err(Error::NonUnitary(f64::NAN));
    }
    let err = unitary_error(u);
    if err > T::UNITARY_INPUT_TOL {
        return Err(Error::NonUnitary(err.to_f64().unwrap_or(f64::NAN)));
    }

    let mut thetas = vec![T::zero(); n];
    let mut blocks = Vec::with_capacity(n.saturating_sub(1));
    let mut work = u.clone();
    for m in (2..=n).rev() {
        let p = peel_last_row(&work);
        let inv = make_block_module(m, m, &p.z_tilde, -p.beta)?;
        thetas[m - 1] = p.theta;
        blocks.push((m, p.z_tilde, p.beta));
        work = work.mul_unchecked(&inv).leading_block(m - 1);
    }
    if n >= 1 {
        thetas[0] = arg(work.get(0, 0));
    }

    let mut factors = Vec::with_capacity(n);
    factors.push(ModuleParams::phase(thetas));
    for (j, z_tilde, beta) in blocks.into_iter().rev() {
        factors.push(ModuleParams::block(n, j, z_tilde, beta));
    }
    let sequence = FactorSequence::new(n, factors)?;
    let residual = max_abs_diff(&compose_sequence(&sequence), u)?;
    Ok(DecompositionResult { sequence, residual })
}

/// `max_abs_diff(compose_sequence(decompose(u).sequence), u)`.
pub fn roundtrip_error<T: Real>(u: &CMatrix<T>) -> Result<T> {
    decompose(u).map(|d| d.residual)
}
