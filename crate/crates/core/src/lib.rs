//! Jarlskog's module parametrization of unitary matrices, applied to qudit
//! gates.
//!
//! Any `U ∈ U(n)` factors as `A₀ A₂ ⋯ Aₙ`, where `A₀` is a diagonal phase
//! matrix and each `A_j` is a rotation mixing coordinate `j` with a unit
//! direction in the first `j − 1` coordinates. This crate provides:
//!
//! * [`matrix`]: dense complex matrices, unitarity error, a Taylor-series
//!   exponential used as a reference.
//! * [`modules`]: the `A₀`/`A_j` constructors, the closed-form `exp(X_j)`,
//!   factor sequences and the `U(2)` Euler-angle form.
//! * [`gates`]: the generalized Pauli shift/clock matrices, the generalized
//!   Walsh–Hadamard matrix and the reversal `K`.
//! * [`synthesis`]: module recipes for those gates.
//! * [`decomposition`]: the inverse direction, factoring any unitary.
//! * [`io`]: the JSON matrix and factor file formats.
//!
//! All numeric code is generic over [`Real`] (`f32` or `f64`); the aliases
//! below fix the scalar to `f64`, which is what the file formats use.

pub mod decomposition;
pub mod error;
pub mod gates;
pub mod io;
pub mod matrix;
pub mod modules;
pub mod random;
pub mod scalar;
pub mod synthesis;

pub use decomposition::{decompose, roundtrip_error};
pub use error::{Error, Result};
pub use gates::{
    k_matrix, pauli_power, primitive_root, sigma1, sigma3, walsh, walsh_dagger, Gate, GateId,
};
pub use matrix::{mat_exp_series, max_abs_diff, unitary_error, CMatrix};
pub use modules::{
    block_generator, compose_sequence, euler_u2, exp_skew_block, make_block_module,
    make_phase_module, EulerAngles, FactorSequence, ModuleParams,
};
pub use scalar::Real;
pub use synthesis::{
    recipe_for, recipe_k, recipe_pauli, recipe_sigma1, recipe_sigma3, recipe_walsh, verify_recipe,
    Recipe, Verification,
};

pub use num_complex::Complex;

pub type C64 = Complex<f64>;
pub type C32 = Complex<f32>;

pub type CMatrix64 = CMatrix<f64>;
pub type CMatrix32 = CMatrix<f32>;
pub type ModuleParams64 = ModuleParams<f64>;
pub type ModuleParams32 = ModuleParams<f32>;
pub type FactorSequence64 = FactorSequence<f64>;
pub type FactorSequence32 = FactorSequence<f32>;
pub type Recipe64 = Recipe<f64>;
pub type Recipe32 = Recipe<f32>;
pub type Decomposition64 = decomposition::DecompositionResult<f64>;
pub type Decomposition32 = decomposition::DecompositionResult<f32>;
