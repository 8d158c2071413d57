//! Named qudit gates: the shift `Σ₁`, the clock `Σ₃`, their products, the
//! generalized Walsh–Hadamard matrix `W` and the reversal `K = W²`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::{cis, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    Sigma1,
    Sigma3,
    PauliPower { a: usize, b: usize },
    WalshHadamard,
    KMatrix,
}

/// A gate together with the qudit dimension it acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GateId {
    pub gate: Gate,
    pub n: usize,
}

impl GateId {
    pub fn new(gate: Gate, n: usize) -> Result<Self> {
        check_dim(n)?;
        if let Gate::PauliPower { a, b } = gate {
            for exponent in [a, b] {
                if exponent >= n {
                    return Err(Error::ExponentOutOfRange { exponent, n });
                }
            }
        }
        Ok(Self { gate, n })
    }

    /// The gate matrix from its direct constructor.
    pub fn matrix<T: Real>(&self) -> Result<CMatrix<T>> {
        match self.gate {
            Gate::Sigma1 => sigma1(self.n),
            Gate::Sigma3 => sigma3(self.n),
            Gate::PauliPower { a, b } => pauli_power(self.n, a, b),
            Gate::WalshHadamard => walsh(self.n),
            Gate::KMatrix => k_matrix(self.n),
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Sigma1 => f.write_str("sigma1"),
            Gate::Sigma3 => f.write_str("sigma3"),
            Gate::PauliPower { a, b } => write!(f, "pauli({a},{b})"),
            Gate::WalshHadamard => f.write_str("walsh"),
            Gate::KMatrix => f.write_str("k"),
        }
    }
}

impl FromStr for Gate {
    type Err = Error;

    /// Accepts `sigma1`, `sigma3`, `walsh`, `k` and `pauli(a,b)`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sigma1" => return Ok(Gate::Sigma1),
            "sigma3" => return Ok(Gate::Sigma3),
            "walsh" => return Ok(Gate::WalshHadamard),
            "k" => return Ok(Gate::KMatrix),
            _ => {}
        }
        let bad = || Error::Format(format!("unknown gate '{s}'"));
        let inner = s
            .strip_prefix("pauli(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        Ok(Gate::PauliPower {
            a: a.trim().parse().map_err(|_| bad())?,
            b: b.trim().parse().map_err(|_| bad())?,
        })
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidDimension(n, 2))
    } else {
        Ok(())
    }
}

/// `σ^k` with `σ = e^{2πi/n}`, reducing `k mod n` before evaluating.
/// Quarter turns are returned exactly.
fn root_power<T: Real>(n: usize, k: usize) -> Complex<T> {
    let k = k % n;
    if (4 * k).is_multiple_of(n) {
        let (o, z) = (T::one(), T::zero());
        return match 4 * k / n {
            0 => Complex::new(o, z),
            1 => Complex::new(z, o),
            2 => Complex::new(-o, z),
            _ => Complex::new(z, -o),
        };
    }
    let theta = T::TAU() * T::count(k) / T::count(n);
    cis(theta)
}

/// `σ = e^{2πi/n}`.
pub fn primitive_root<T: Real>(n: usize) -> Result<Complex<T>> {
    check_dim(n)?;
    Ok(root_power(n, 1))
}

/// Cyclic shift: ones at `(0, n−1)` and `(k+1, k)`.
pub fn sigma1<T: Real>(n: usize) -> Result<CMatrix<T>> {
    check_dim(n)?;
    Ok(CMatrix::from_fn(n, |i, j| {
        if i == (j + 1) % n {
            Complex::one()
        } else {
            Complex::zero()
        }
    }))
}

/// Clock matrix `diag(1, σ, …, σ^{n−1})`.
pub fn sigma3<T: Real>(n: usize) -> Result<CMatrix<T>> {
    check_dim(n)?;
    let diag: Vec<_> = (0..n).map(|k| root_power(n, k)).collect();
    Ok(CMatrix::from_diagonal(&diag))
}

/// `Σ₁^a Σ₃^b` with no extra phase. Entry `(i, j)` is `σ^{bj}` when
/// `i ≡ j + a (mod n)`.
pub fn pauli_power<T: Real>(n: usize, a: usize, b: usize) -> Result<CMatrix<T>> {
    check_dim(n)?;
    for exponent in [a, b] {
        if exponent >= n {
            return Err(Error::ExponentOutOfRange { exponent, n });
        }
    }
    Ok(CMatrix::from_fn(n, |i, j| {
        if i == (j + a) % n {
            root_power(n, b * j)
        } else {
            Complex::zero()
        }
    }))
}

/// Generalized Walsh–Hadamard matrix, `W_{ab} = σ^{−ab} / √n`.
pub fn walsh<T: Real>(n: usize) -> Result<CMatrix<T>> {
    check_dim(n)?;
    let norm = T::one() / T::count(n).sqrt();
    Ok(CMatrix::from_fn(n, |a, b| {
        root_power::<T>(n, a * b).conj() * norm
    }))
}

/// `W†`, the DFT coefficient matrix `σ^{ab} / √n`.
pub fn walsh_dagger<T: Real>(n: usize) -> Result<CMatrix<T>> {
    check_dim(n)?;
    let norm = T::one() / T::count(n).sqrt();
    Ok(CMatrix::from_fn(n, |a, b| root_power::<T>(n, a * b) * norm))
}

/// Permutation fixing index 0 and reversing indices `1..n`.
pub fn k_matrix<T: Real>(n: usize) -> Result<CMatrix<T>> {
    check_dim(n)?;
    Ok(CMatrix::from_fn(n, |i, j| {
        if (i + j) % n == 0 {
            Complex::one()
        } else {
            Complex::zero()
        }
    }))
}
