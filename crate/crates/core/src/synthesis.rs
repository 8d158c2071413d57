//! Module recipes for the qudit gates.
//!
//! Each recipe is a [`FactorSequence`] of primitive modules whose product is
//! the target gate. Composite permutation factors (`S`, `S₁`, `S₂` in the
//! Walsh–Hadamard constructions) are stored expanded into their `A₀`/`A_j`
//! constituents, so `module_count` counts primitives, and adjacent phase
//! modules are kept as separate factors in the printed order.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::gates::{Gate, GateId};
use crate::matrix::{max_abs_diff, CMatrix};
use crate::modules::{compose_sequence, make_block_module, FactorSequence, ModuleParams};
use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct Recipe<T> {
    pub target: GateId,
    pub sequence: FactorSequence<T>,
    /// The factorization this recipe spells out, e.g. `"A0 A3 A2 A0'"`.
    pub provenance: String,
}

impl<T: Real> Recipe<T> {
    pub fn module_count(&self) -> usize {
        self.sequence.len()
    }

    pub fn compose(&self) -> CMatrix<T> {
        compose_sequence(&self.sequence)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Verification<T> {
    pub error: T,
    pub pass: bool,
}

/// Compares the composed recipe with the direct constructor of its target.
pub fn verify_recipe<T: Real>(recipe: &Recipe<T>) -> Verification<T> {
    let target = recipe
        .target
        .matrix::<T>()
        .expect("GateId validated on construction");
    let error = match max_abs_diff(&recipe.compose(), &target) {
        Ok(e) => e,
        Err(_) => T::infinity(),
    };
    Verification {
        error,
        pass: error <= T::RECIPE_TOL,
    }
}

fn pi_frac<T: Real>(num: i32, den: i32) -> T {
    T::PI() * T::lit(f64::from(num)) / T::lit(f64::from(den))
}

fn unit_basis<T: Real>(len: usize, one_at: usize) -> Vec<T> {
    (0..len)
        .map(|i| if i == one_at { T::one() } else { T::zero() })
        .collect()
}

fn build<T: Real>(
    gate: Gate,
    n: usize,
    factors: Vec<ModuleParams<T>>,
    provenance: impl Into<String>,
) -> Result<Recipe<T>> {
    Ok(Recipe {
        target: GateId::new(gate, n)?,
        sequence: FactorSequence::new(n, factors)?,
        provenance: provenance.into(),
    })
}

fn check_dim(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidDimension(n, 2))
    } else {
        Ok(())
    }
}

/// `A₀(0, 2π/n, …, 2(n−1)π/n) = Σ₃`.
pub fn recipe_sigma3<T: Real>(n: usize) -> Result<Recipe<T>> {
    check_dim(n)?;
    let thetas = (0..n)
        .map(|k| T::TAU() * T::count(k) / T::count(n))
        .collect();
    build(Gate::Sigma3, n, vec![ModuleParams::phase(thetas)], "A0")
}

/// `A₀(0, π, …, π) A₂ A₃ ⋯ Aₙ = Σ₁` with `A_j = A_j((0, …, 0, 1); π/2)`.
pub fn recipe_sigma1<T: Real>(n: usize) -> Result<Recipe<T>> {
    check_dim(n)?;
    let mut thetas = vec![T::PI(); n];
    thetas[0] = T::zero();
    let mut factors = vec![ModuleParams::phase(thetas)];
    for j in 2..=n {
        factors.push(ModuleParams::block_real(
            n,
            j,
            &unit_basis(j - 1, j - 2),
            T::FRAC_PI_2(),
        ));
    }
    build(Gate::Sigma1, n, factors, "A0 A2 A3 ... An")
}

/// The reversal `K`. For `n = 2k` the phase module has `k + 1` zeros then
/// `k − 1` angles `π`, followed by `A_{k+2} … A_{2k}`; for `n = 2k − 1` it
/// has `k` zeros then `k − 1` angles `π`, followed by `A_{k+1} … A_{2k−1}`.
/// In both cases `A_j` carries `β = π/2` and a basis vector with its one at
/// position `n + 2 − j` (1-based). `K(2) = I₂` gives the empty recipe.
pub fn recipe_k<T: Real>(n: usize) -> Result<Recipe<T>> {
    check_dim(n)?;
    if n == 2 {
        return build(Gate::KMatrix, n, Vec::new(), "empty");
    }
    let (zeros, first_j, provenance) = if n.is_multiple_of(2) {
        let k = n / 2;
        (k + 1, k + 2, "A0 A_{k+2} ... A_{2k} (n = 2k)")
    } else {
        let k = n.div_ceil(2);
        (k, k + 1, "A0 A_{k+1} ... A_{2k-1} (n = 2k-1)")
    };
    let thetas = (0..n)
        .map(|i| if i < zeros { T::zero() } else { T::PI() })
        .collect();
    let mut factors = vec![ModuleParams::phase(thetas)];
    for j in first_j..=n {
        factors.push(ModuleParams::block_real(
            n,
            j,
            &unit_basis(j - 1, n + 1 - j),
            T::FRAC_PI_2(),
        ));
    }
    build(Gate::KMatrix, n, factors, provenance)
}

/// `Σ₁^a Σ₃^b` as `a` copies of the shift recipe followed by `b` copies of
/// the clock recipe.
pub fn recipe_pauli<T: Real>(n: usize, a: usize, b: usize) -> Result<Recipe<T>> {
    let target = GateId::new(Gate::PauliPower { a, b }, n)?;
    let shift = recipe_sigma1::<T>(n)?.sequence;
    let clock = recipe_sigma3::<T>(n)?.sequence;
    let mut seq = FactorSequence::empty(n)?;
    for _ in 0..a {
        seq.extend(&shift)?;
    }
    for _ in 0..b {
        seq.extend(&clock)?;
    }
    Ok(Recipe {
        target,
        sequence: seq,
        provenance: format!("(A0 A2 ... An)^{a} (A0)^{b}"),
    })
}

/// Generalized Walsh–Hadamard recipes, available for `n ∈ {3, 4, 5}`.
pub fn recipe_walsh<T: Real>(n: usize) -> Result<Recipe<T>> {
    match n {
        3 => walsh3(),
        4 => walsh4(),
        5 => walsh5(),
        _ => Err(Error::UnsupportedDimension(n)),
    }
}

/// Recipe for any supported target.
pub fn recipe_for<T: Real>(target: GateId) -> Result<Recipe<T>> {
    match target.gate {
        Gate::Sigma1 => recipe_sigma1(target.n),
        Gate::Sigma3 => recipe_sigma3(target.n),
        Gate::PauliPower { a, b } => recipe_pauli(target.n, a, b),
        Gate::WalshHadamard => recipe_walsh(target.n),
        Gate::KMatrix => recipe_k(target.n),
    }
}

fn clock_phase<T: Real>(n: usize) -> ModuleParams<T> {
    ModuleParams::phase(
        (0..n)
            .map(|k| T::TAU() * T::count(k) / T::count(n))
            .collect(),
    )
}

/// `W = A₀ A₃ A₂ A₀′`.
fn walsh3<T: Real>() -> Result<Recipe<T>> {
    let r2 = T::FRAC_1_SQRT_2();
    let three = T::lit(3.0);
    let factors = vec![
        clock_phase(3),
        ModuleParams::block_real(3, 3, &[r2, r2], (T::one() / three.sqrt()).acos()),
        // e^{−iπ/2} = −i
        ModuleParams::block(
            3,
            2,
            vec![Complex::new(T::zero(), -T::one())],
            T::FRAC_PI_4(),
        ),
        ModuleParams::phase(vec![pi_frac(-1, 12), pi_frac(7, 12), T::zero()]),
    ];
    build(Gate::WalshHadamard, 3, factors, "A0 A3 A2 A0'")
}

/// `S = A₀(0, 0, π, 0) A₃((0, 1); π/2)`, the swap of coordinates 2 and 3.
fn walsh4_swap<T: Real>() -> [ModuleParams<T>; 2] {
    let z = T::zero();
    [
        ModuleParams::phase(vec![z, z, T::PI(), z]),
        ModuleParams::block_real(4, 3, &[z, T::one()], T::FRAC_PI_2()),
    ]
}

/// `W = A₀ A₄ S A₃ A₂ A₀′ S`.
fn walsh4<T: Real>() -> Result<Recipe<T>> {
    let r3 = T::one() / T::lit(3.0).sqrt();
    let r2 = T::FRAC_1_SQRT_2();
    let z = T::zero();
    let mut factors = vec![
        clock_phase(4),
        ModuleParams::block_real(4, 4, &[r3, r3, r3], T::FRAC_PI_3()),
    ];
    factors.extend(walsh4_swap());
    factors.push(ModuleParams::block_real(
        4,
        3,
        &[r2, r2],
        (-T::one() / T::lit(3.0)).acos(),
    ));
    // e^{iπ/2} = i
    factors.push(ModuleParams::block(
        4,
        2,
        vec![Complex::new(z, T::one())],
        T::FRAC_PI_4(),
    ));
    factors.push(ModuleParams::phase(vec![
        pi_frac(1, 4),
        pi_frac(5, 4),
        z,
        z,
    ]));
    factors.extend(walsh4_swap());
    build(Gate::WalshHadamard, 4, factors, "A0 A4 S A3 A2 A0' S")
}

/// Constants of the five-level construction.
///
/// `beta_hat` is the complex constant `ᾱ + t·a·α`, named apart from the
/// module angles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Walsh5Constants<T> {
    pub a: T,
    pub alpha: Complex<T>,
    pub u: T,
    pub s: T,
    pub t: T,
    pub beta_hat: Complex<T>,
    pub v: T,
    pub cos_theta4: T,
    pub cos_theta3: T,
}

impl<T: Real> Walsh5Constants<T> {
    pub fn new() -> Self {
        let two = T::lit(2.0);
        let sqrt5 = T::lit(5.0).sqrt();
        let two_pi_5 = pi_frac::<T>(2, 5);
        let a = two_pi_5.sin();
        let alpha = Complex::new(
            (T::lit(10.0) - two * sqrt5).sqrt() / T::lit(4.0),
            sqrt5 / two,
        );
        let u = (T::lit(4.0) + two_pi_5.cos().powi(2)).sqrt();
        let common = T::one() + a / sqrt5;
        let s = two * (T::lit(35.0) + sqrt5) / T::lit(305.0) * common;
        let t = two * (T::lit(7.0) * sqrt5 + T::one()) / T::lit(61.0) * common;
        let beta_hat = alpha.conj() + alpha * (t * a);
        let ata = a + t * a * a;
        let v = (T::lit(5.0) - ata * ata).sqrt();
        Self {
            a,
            alpha,
            u,
            s,
            t,
            beta_hat,
            v,
            cos_theta4: -a / sqrt5,
            cos_theta3: -ata / sqrt5,
        }
    }

    /// `A₄((a, α, −ᾱ)/u; θ₄)`.
    pub fn a4(&self) -> ModuleParams<T> {
        let z = vec![
            Complex::new(self.a, T::zero()) / self.u,
            self.alpha / self.u,
            -self.alpha.conj() / self.u,
        ];
        ModuleParams::block(5, 4, z, self.cos_theta4.acos())
    }

    /// `A₃((−β̂, β̂̄)/v; θ₃)`.
    pub fn a3(&self) -> ModuleParams<T> {
        let z = vec![-self.beta_hat / self.v, self.beta_hat.conj() / self.v];
        ModuleParams::block(5, 3, z, self.cos_theta3.acos())
    }

    /// Entry-by-entry closed form of `A₄` written with `s`.
    pub fn a4_closed_form(&self) -> CMatrix<T> {
        let (a, al, s) = (self.a, self.alpha, self.s);
        let ac = al.conj();
        let r5 = T::one() / T::lit(5.0).sqrt();
        let one = Complex::new(T::one(), T::zero());
        let re = |x: T| Complex::new(x, T::zero());
        let zero = re(T::zero());
        CMatrix::from_rows(&[
            [
                re(T::one() - s * a * a),
                -ac * (s * a),
                al * (s * a),
                re(a * r5),
                zero,
            ],
            [
                -al * (s * a),
                re(T::one() - s * al.norm_sqr()),
                al * al * s,
                al * r5,
                zero,
            ],
            [
                ac * (s * a),
                ac * ac * s,
                re(T::one() - s * al.norm_sqr()),
                -ac * r5,
                zero,
            ],
            [re(-a * r5), -ac * r5, al * r5, re(-a * r5), zero],
            [zero, zero, zero, zero, one],
        ])
    }

    /// Entry-by-entry closed form of `A₃` written with `t`.
    pub fn a3_closed_form(&self) -> CMatrix<T> {
        let b = self.beta_hat;
        let bc = b.conj();
        let sqrt5 = T::lit(5.0).sqrt();
        let ata = self.a + self.t * self.a * self.a;
        let d = sqrt5 * (sqrt5 - ata);
        let re = |x: T| Complex::new(x, T::zero());
        let zero = re(T::zero());
        let one = re(T::one());
        let diag = re(T::one() - b.norm_sqr() / d);
        CMatrix::from_rows(&[
            [diag, b * b / d, -b / sqrt5, zero, zero],
            [bc * bc / d, diag, bc / sqrt5, zero, zero],
            [bc / sqrt5, -b / sqrt5, re(-ata / sqrt5), zero, zero],
            [zero, zero, zero, one, zero],
            [zero, zero, zero, zero, one],
        ])
    }
}

impl<T: Real> Default for Walsh5Constants<T> {
    fn default() -> Self {
        Self::new()
    }
}

fn walsh5_factors<T: Real>() -> Vec<(&'static str, ModuleParams<T>)> {
    let k = Walsh5Constants::<T>::new();
    let z = T::zero();
    let one = T::one();
    let half = T::lit(0.5);
    let pi = T::PI();
    let right_angle = T::FRAC_PI_2();
    vec![
        ("A0", clock_phase(5)),
        (
            "A5",
            ModuleParams::block_real(
                5,
                5,
                &[half, half, half, half],
                (one / T::lit(5.0).sqrt()).acos(),
            ),
        ),
        ("A4", k.a4()),
        ("S1", ModuleParams::phase(vec![z, pi, pi, z, z])),
        ("S1", ModuleParams::block_real(5, 2, &[one], right_angle)),
        ("S1", ModuleParams::block_real(5, 3, &[z, one], right_angle)),
        ("A3", k.a3()),
        ("S2", ModuleParams::phase(vec![z, z, pi, z, z])),
        ("S2", ModuleParams::block_real(5, 3, &[one, z], right_angle)),
        (
            "A0'",
            ModuleParams::phase(vec![
                pi_frac(9, 10),
                pi_frac(13, 10),
                pi_frac(-3, 10),
                pi_frac(1, 10),
                z,
            ]),
        ),
    ]
}

/// `W = A₀ A₅ A₄ S₁ A₃ S₂ A₀′`.
fn walsh5<T: Real>() -> Result<Recipe<T>> {
    let factors = walsh5_factors().into_iter().map(|(_, f)| f).collect();
    build(Gate::WalshHadamard, 5, factors, "A0 A5 A4 S1 A3 S2 A0'")
}

/// Per-factor comparison of the five-level recipe against the closed-form
/// matrices its constants are meant to produce.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorCheck<T> {
    pub label: &'static str,
    pub error: T,
}

/// Checks every composite factor of the five-level recipe against its
/// expected matrix (the `A₄`/`A₃` closed forms in `s` and `t`, the printed
/// permutations `S₁`, `S₂`, and the `A₅` radicals). Use it to locate the
/// first diverging factor when the full recipe fails verification.
pub fn walsh5_factor_report<T: Real>() -> Vec<FactorCheck<T>> {
    let k = Walsh5Constants::<T>::new();
    let factors = walsh5_factors::<T>();
    let grouped = |label: &str| -> CMatrix<T> {
        factors
            .iter()
            .filter(|(l, _)| *l == label)
            .map(|(_, f)| f.to_matrix().expect("valid factor"))
            .fold(CMatrix::identity(5), |acc, m| acc.mul_unchecked(&m))
    };
    let perm = |cols: [usize; 5]| {
        CMatrix::from_fn(5, |i, j| {
            if cols[i] == j {
                Complex::new(T::one(), T::zero())
            } else {
                Complex::new(T::zero(), T::zero())
            }
        })
    };
    let sqrt5 = T::lit(5.0).sqrt();
    let diag = (T::lit(3.0) * sqrt5 + T::one()) / T::lit(4.0) / sqrt5;
    let off = -(sqrt5 - T::one()) / T::lit(4.0) / sqrt5;
    let edge = T::one() / sqrt5;
    let a5 = CMatrix::from_fn(5, |i, j| {
        let x = match (i, j) {
            (4, 4) => edge,
            (4, _) => -edge,
            (_, 4) => edge,
            _ if i == j => diag,
            _ => off,
        };
        Complex::new(x, T::zero())
    });
    let expected = [
        ("A5", a5),
        ("A4", k.a4_closed_form()),
        // rows: S₁ e_0 = e_1, …; entry (i, cols[i]) is one
        ("S1", perm([2, 0, 1, 3, 4])),
        ("A3", k.a3_closed_form()),
        ("S2", perm([2, 1, 0, 3, 4])),
    ];
    expected
        .into_iter()
        .map(|(label, want)| FactorCheck {
            label,
            error: max_abs_diff(&grouped(label), &want).expect("same dimension"),
        })
        .collect()
}

/// Builds a block module straight from the recipe constants; exposed for
/// callers checking individual factors.
pub fn walsh5_block<T: Real>(label: &str) -> Option<CMatrix<T>> {
    let k = Walsh5Constants::<T>::new();
    let m = match label {
        "A4" => k.a4(),
        "A3" => k.a3(),
        _ => return None,
    };
    match m {
        ModuleParams::Block {
            n,
            j,
            z_tilde,
            beta,
        } => make_block_module(n, j, &z_tilde, beta).ok(),
        ModuleParams::Phase { .. } => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{k_matrix, sigma1, sigma3, walsh};
    use crate::matrix::unitary_error;
    use std::f64::consts::PI;

    #[test]
    fn clock_recipe() {
        let r = recipe_sigma3::<f64>(3).unwrap();
        assert_eq!(r.module_count(), 1);
        match &r.sequence.factors()[0] {
            ModuleParams::Phase { thetas } => {
                let want = [0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0];
                for (g, w) in thetas.iter().zip(want) {
                    assert!((g - w).abs() < 1e-15);
                }
            }
            other => panic!("unexpected {other:?}"),
        }
        let r2 = recipe_sigma3::<f64>(2).unwrap();
        assert!(max_abs_diff(&r2.compose(), &sigma3(2).unwrap()).unwrap() < 1e-15);
        let r9 = recipe_sigma3::<f64>(9).unwrap();
        assert!(max_abs_diff(&r9.compose(), &sigma3(9).unwrap()).unwrap() <= 1e-13);
        assert!(recipe_sigma3::<f64>(1).is_err());
    }

    #[test]
    fn shift_recipe() {
        let r = recipe_sigma1::<f64>(2).unwrap();
        assert_eq!(r.module_count(), 2);
        assert_eq!(
            r.sequence.factors()[1],
            ModuleParams::block_real(2, 2, &[1.0], std::f64::consts::FRAC_PI_2)
        );
        assert!(max_abs_diff(&r.compose(), &sigma1(2).unwrap()).unwrap() <= 1e-13);
        let r3 = recipe_sigma1::<f64>(3).unwrap();
        assert!(max_abs_diff(&r3.compose(), &sigma1(3).unwrap()).unwrap() <= 1e-13);
    }

    #[test]
    fn shift_recipe_without_phase_has_negative_subdiagonal() {
        for n in 2..=7 {
            let r = recipe_sigma1::<f64>(n).unwrap();
            let tail = FactorSequence::new(n, r.sequence.factors()[1..].to_vec()).unwrap();
            let got = compose_sequence(&tail);
            let want = CMatrix::from_fn(n, |i, j| {
                if i == 0 && j == n - 1 {
                    Complex::new(1.0, 0.0)
                } else if i == j + 1 {
                    Complex::new(-1.0, 0.0)
                } else {
                    Complex::new(0.0, 0.0)
                }
            });
            assert!(max_abs_diff(&got, &want).unwrap() <= 1e-13, "n={n}");
        }
    }

    #[test]
    fn reversal_recipe() {
        let r = recipe_k::<f64>(3).unwrap();
        assert_eq!(
            r.sequence.factors(),
            &[
                ModuleParams::phase(vec![0.0, 0.0, PI]),
                ModuleParams::block_real(3, 3, &[0.0, 1.0], std::f64::consts::FRAC_PI_2),
            ]
        );
        assert!(max_abs_diff(&r.compose(), &k_matrix(3).unwrap()).unwrap() <= 1e-13);
        let r2 = recipe_k::<f64>(2).unwrap();
        assert!(r2.sequence.is_empty());
        assert_eq!(r2.compose(), CMatrix::identity(2));
        let r6 = recipe_k::<f64>(6).unwrap();
        assert!(max_abs_diff(&r6.compose(), &k_matrix(6).unwrap()).unwrap() <= 1e-13);
        assert_eq!(r6.module_count(), 1 + 2);
    }

    #[test]
    fn small_walsh_recipes() {
        let r3 = recipe_walsh::<f64>(3).unwrap();
        assert_eq!(r3.module_count(), 4);
        assert!(max_abs_diff(&r3.compose(), &walsh(3).unwrap()).unwrap() <= 1e-12);
        let r4 = recipe_walsh::<f64>(4).unwrap();
        assert_eq!(r4.module_count(), 9);
        assert!(max_abs_diff(&r4.compose(), &walsh(4).unwrap()).unwrap() <= 1e-12);
    }

    #[test]
    fn five_level_walsh_recipe() {
        let r = recipe_walsh::<f64>(5).unwrap();
        let v = verify_recipe(&r);
        assert!(v.pass, "error {}", v.error);
        assert!(v.error <= 1e-11);
        assert_eq!(r.module_count(), 10);
    }

    #[test]
    fn unsupported_walsh_dimensions() {
        for n in [2, 6, 7] {
            assert!(matches!(
                recipe_walsh::<f64>(n),
                Err(Error::UnsupportedDimension(m)) if m == n
            ));
        }
    }

    #[test]
    fn five_level_constants_are_consistent() {
        let k = Walsh5Constants::<f64>::new();
        // |z̃| = 1 for A₄ needs u² = a² + 2|α|²
        assert!((k.u * k.u - (k.a * k.a + 2.0 * k.alpha.norm_sqr())).abs() < 1e-13);
        assert!((k.v - 2f64.sqrt() * k.beta_hat.norm()).abs() < 1e-13);
        for label in ["A4", "A3"] {
            let m = walsh5_block::<f64>(label).unwrap();
            assert!(unitary_error(&m) <= 1e-10, "{label}");
        }
        for check in walsh5_factor_report::<f64>() {
            assert!(
                check.error <= 1e-10,
                "{} off by {}",
                check.label,
                check.error
            );
        }
    }

    #[test]
    fn verification_catches_corruption() {
        let r = recipe_sigma3::<f64>(7).unwrap();
        let v = verify_recipe(&r);
        assert!(v.pass && v.error <= 1e-13);

        let mut thetas = match &r.sequence.factors()[0] {
            ModuleParams::Phase { thetas } => thetas.clone(),
            _ => unreachable!(),
        };
        thetas[3] += 1e-3;
        let bad = Recipe {
            sequence: FactorSequence::new(7, vec![ModuleParams::phase(thetas)]).unwrap(),
            ..r
        };
        assert!(!verify_recipe(&bad).pass);
    }

    #[test]
    fn pauli_recipe() {
        let r = recipe_pauli::<f64>(5, 2, 3).unwrap();
        assert_eq!(r.module_count(), 2 * 5 + 3);
        assert!(verify_recipe(&r).pass);
        assert!(recipe_pauli::<f64>(5, 5, 0).is_err());
    }

    #[test]
    fn squared_walsh_recipes_give_reversal() {
        for n in 3..=5 {
            let r = recipe_walsh::<f64>(n).unwrap();
            let mut twice = r.sequence.clone();
            twice.extend(&r.sequence).unwrap();
            let got = compose_sequence(&twice);
            assert!(max_abs_diff(&got, &k_matrix(n).unwrap()).unwrap() <= 1e-11);
        }
    }

    #[test]
    fn recipes_in_single_precision() {
        for n in 3..=5 {
            let v = verify_recipe(&recipe_walsh::<f32>(n).unwrap());
            assert!(v.pass, "n={n} err={}", v.error);
        }
    }

    #[test]
    fn all_recipes_small_dims() {
        for n in 2..=16 {
            for r in [
                recipe_sigma1::<f64>(n).unwrap(),
                recipe_sigma3(n).unwrap(),
                recipe_k(n).unwrap(),
            ] {
                let v = verify_recipe(&r);
                assert!(v.pass, "{} n={n}: {}", r.target.gate, v.error);
            }
            assert_eq!(recipe_sigma1::<f64>(n).unwrap().module_count(), n);
        }
    }
}
