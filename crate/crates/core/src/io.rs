//! JSON file formats.
//!
//! Matrix file: `{"n": 3, "re": [[..], ..], "im": [[..], ..]}`, row-major.
//!
//! Factor file: `{"n": 3, "factors": [{"kind": "phase", "thetas": [..]},
//! {"kind": "block", "j": 2, "z_re": [..], "z_im": [..], "beta": 0.5}]}`,
//! leftmost factor first. Recipes add `target`, `provenance` and
//! `module_count`; decompositions add `residual`.
//!
//! Every float is written as `{:.16e}` (17 significant digits), and parsing
//! is exact, so a write/read cycle reproduces the same bits.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_complex::Complex;
use serde::{Deserialize, Serialize};
use serde_json::ser::Formatter;

use crate::decomposition::DecompositionResult;
use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::modules::{FactorSequence, ModuleParams};
use crate::synthesis::Recipe;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &CMatrix<f64>) -> Self {
        let n = m.n();
        let rows = |f: fn(&Complex<f64>) -> f64| -> Vec<Vec<f64>> {
            (0..n).map(|i| m.row(i).iter().map(f).collect()).collect()
        };
        Self {
            n,
            re: rows(|z| z.re),
            im: rows(|z| z.im),
        }
    }

    pub fn to_matrix(&self) -> Result<CMatrix<f64>> {
        let n = self.n;
        let shape_ok = |a: &Vec<Vec<f64>>| a.len() == n && a.iter().all(|r| r.len() == n);
        if !shape_ok(&self.re) || !shape_ok(&self.im) {
            return Err(Error::Format(format!(
                "\"re\" and \"im\" must both be {n} x {n}"
            )));
        }
        let data = self
            .re
            .iter()
            .flatten()
            .zip(self.im.iter().flatten())
            .map(|(&re, &im)| Complex::new(re, im))
            .collect();
        CMatrix::from_row_major(n, data)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FactorEntry {
    Phase {
        thetas: Vec<f64>,
    },
    Block {
        j: usize,
        z_re: Vec<f64>,
        z_im: Vec<f64>,
        beta: f64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    pub factors: Vec<FactorEntry>,
}

impl FactorFile {
    pub fn from_sequence(seq: &FactorSequence<f64>) -> Self {
        let factors = seq
            .factors()
            .iter()
            .map(|f| match f {
                ModuleParams::Phase { thetas } => FactorEntry::Phase {
                    thetas: thetas.clone(),
                },
                ModuleParams::Block {
                    j, z_tilde, beta, ..
                } => FactorEntry::Block {
                    j: *j,
                    z_re: z_tilde.iter().map(|z| z.re).collect(),
                    z_im: z_tilde.iter().map(|z| z.im).collect(),
                    beta: *beta,
                },
            })
            .collect();
        Self {
            target: None,
            n: seq.n(),
            provenance: None,
            module_count: None,
            residual: None,
            factors,
        }
    }

    pub fn from_recipe(recipe: &Recipe<f64>) -> Self {
        Self {
            target: Some(recipe.target.gate.to_string()),
            provenance: Some(recipe.provenance.clone()),
            module_count: Some(recipe.module_count()),
            ..Self::from_sequence(&recipe.sequence)
        }
    }

    pub fn from_decomposition(d: &DecompositionResult<f64>) -> Self {
        Self {
            residual: Some(d.residual),
            ..Self::from_sequence(&d.sequence)
        }
    }

    /// Validates every factor and builds the sequence.
    pub fn to_sequence(&self) -> Result<FactorSequence<f64>> {
        let mut seq = FactorSequence::empty(self.n)?;
        for (idx, f) in self.factors.iter().enumerate() {
            let params = match f {
                FactorEntry::Phase { thetas } => ModuleParams::phase(thetas.clone()),
                FactorEntry::Block {
                    j,
                    z_re,
                    z_im,
                    beta,
                } => {
                    if z_re.len() != z_im.len() {
                        return Err(Error::Format(format!(
                            "factor {idx}: z_re and z_im differ in length"
                        )));
                    }
                    let z = z_re
                        .iter()
                        .zip(z_im)
                        .map(|(&re, &im)| Complex::new(re, im))
                        .collect();
                    ModuleParams::block(self.n, *j, z, *beta)
                }
            };
            seq.push(params)
                .map_err(|e| Error::Format(format!("factor {idx}: {e}")))?;
        }
        Ok(seq)
    }
}

/// Compact JSON with floats written as `{:.16e}`.
struct SciFormatter;

impl Formatter for SciFormatter {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()> {
        write!(writer, "{value:.16e}")
    }

    fn write_f32<W: ?Sized + Write>(&mut self, writer: &mut W, value: f32) -> std::io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

fn to_json<S: Serialize>(value: &S) -> Result<String> {
    let mut buf = Vec::new();
    {
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, SciFormatter);
        value.serialize(&mut ser)?;
    }
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}

pub fn matrix_to_json(m: &CMatrix<f64>) -> Result<String> {
    to_json(&MatrixFile::from_matrix(m))
}

pub fn matrix_from_json(s: &str) -> Result<CMatrix<f64>> {
    let file: MatrixFile = serde_json::from_str(s)?;
    file.to_matrix()
}

pub fn factors_to_json(f: &FactorFile) -> Result<String> {
    to_json(f)
}

pub fn factors_from_json(s: &str) -> Result<FactorFile> {
    Ok(serde_json::from_str(s)?)
}

pub fn write_matrix(path: impl AsRef<Path>, m: &CMatrix<f64>) -> Result<()> {
    fs::write(path, matrix_to_json(m)?)?;
    Ok(())
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<CMatrix<f64>> {
    matrix_from_json(&fs::read_to_string(path)?)
}

pub fn write_factors(path: impl AsRef<Path>, f: &FactorFile) -> Result<()> {
    fs::write(path, factors_to_json(f)?)?;
    Ok(())
}

pub fn read_factors(path: impl AsRef<Path>) -> Result<FactorFile> {
    factors_from_json(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{k_matrix, walsh};
    use crate::random::haar_unitary;
    use crate::synthesis::recipe_walsh;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn floats_carry_seventeen_digits() {
        let s = matrix_to_json(&k_matrix::<f64>(2).unwrap()).unwrap();
        assert_eq!(
            s,
            "{\"n\":2,\"re\":[[1.0000000000000000e0,0.0000000000000000e0],\
             [0.0000000000000000e0,1.0000000000000000e0]],\
             \"im\":[[0.0000000000000000e0,0.0000000000000000e0],\
             [0.0000000000000000e0,0.0000000000000000e0]]}\n"
        );
    }

    #[test]
    fn walsh_survives_write_and_read() {
        let w = walsh::<f64>(5).unwrap();
        let back = matrix_from_json(&matrix_to_json(&w).unwrap()).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn recipe_file_has_header() {
        let r = recipe_walsh::<f64>(4).unwrap();
        let f = FactorFile::from_recipe(&r);
        let json = factors_to_json(&f).unwrap();
        assert!(json.starts_with("{\"target\":\"walsh\",\"n\":4,\"provenance\":"));
        assert!(json.contains("\"module_count\":9"));
        let back = factors_from_json(&json).unwrap();
        assert_eq!(back.to_sequence().unwrap(), r.sequence);
    }

    #[test]
    fn malformed_files_are_rejected() {
        assert!(matrix_from_json("{\"n\":2,\"re\":[[1,0]],\"im\":[[0,0],[0,0]]}").is_err());
        assert!(matrix_from_json("not json").is_err());
        let bad_norm =
            r#"{"n":2,"factors":[{"kind":"block","j":2,"z_re":[2.0],"z_im":[0.0],"beta":1.0}]}"#;
        assert!(factors_from_json(bad_norm).unwrap().to_sequence().is_err());
        let bad_dim = r#"{"n":3,"factors":[{"kind":"phase","thetas":[0.0,1.0]}]}"#;
        assert!(factors_from_json(bad_dim).unwrap().to_sequence().is_err());
        let bad_kind = r#"{"n":3,"factors":[{"kind":"rotation"}]}"#;
        assert!(factors_from_json(bad_kind).is_err());
    }

    #[test]
    fn plain_numbers_are_accepted() {
        let m = matrix_from_json(r#"{"n":1,"re":[[1]],"im":[[0]]}"#).unwrap();
        assert_eq!(m, CMatrix::identity(1));
        let f = factors_from_json(r#"{"n":4,"factors":[]}"#).unwrap();
        assert!(f.to_sequence().unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn matrix_text_round_trip_is_bit_exact(seed in any::<u64>(), n in 1usize..8) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = haar_unitary::<f64, _>(n, &mut rng);
            let text = matrix_to_json(&u).unwrap();
            let back = matrix_from_json(&text).unwrap();
            for (a, b) in u.as_slice().iter().zip(back.as_slice()) {
                prop_assert_eq!(a.re.to_bits(), b.re.to_bits());
                prop_assert_eq!(a.im.to_bits(), b.im.to_bits());
            }
            prop_assert_eq!(matrix_to_json(&back).unwrap(), text);
        }
    }
}
