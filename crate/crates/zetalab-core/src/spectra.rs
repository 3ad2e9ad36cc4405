//! Length-spectrum data model: per-class geometric data, validation,
//! file ingestion, and synthetic generation.
//!
//! A [`LengthSpectrum`] is a finite list of primitive classes. Each class
//! carries a geodesic length `l`, an integer Euler-characteristic weight,
//! the unit-modulus eigenvalues of the twist `ω` on the class, and the
//! unit-modulus phases of the contraction action on the two graded root
//! spaces (dimensions `d1` and `d2`). The full contraction eigenvalue of
//! grade `g` is `phase · exp(-g · alpha_norm · l)`; only the phases are
//! stored since the modulus is determined by the length.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Tolerance for the unit-modulus invariant on eigenvalue lists.
pub const MODULUS_TOL: f64 = 1e-12;
/// Tolerance for matching a phase with its complex conjugate.
pub const CONJ_TOL: f64 = 1e-9;

#[derive(Debug, thiserror::Error)]
pub enum SpectraError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid spectrum:\n{}", violations.join("\n"))]
    Invalid { violations: Vec<String> },
    #[error("invalid generator params: {0}")]
    Params(String),
}

/// One primitive conjugacy class of the length spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimitiveClass {
    pub id: String,
    /// Geodesic length `l > 0` of the primitive class.
    pub length: f64,
    /// Integer Euler-characteristic weight of the class.
    pub weight: i64,
    /// Eigenvalues of the unitary twist on the class, all of modulus 1.
    pub omega_eigs: Vec<Complex64>,
    /// Phases of the grade-1 contraction eigenvalues (length must be `d1`).
    pub phases_grade1: Vec<Complex64>,
    /// Phases of the grade-2 contraction eigenvalues (length must be `d2`).
    pub phases_grade2: Vec<Complex64>,
}

impl PrimitiveClass {
    /// Full contraction eigenvalues over both grades:
    /// `phase · exp(-g · alpha_norm · length)` with `g = 1` then `g = 2`.
    pub fn contraction_eigs(&self, alpha_norm: f64) -> Vec<Complex64> {
        let r1 = (-alpha_norm * self.length).exp();
        let r2 = (-2.0 * alpha_norm * self.length).exp();
        self.phases_grade1
            .iter()
            .map(|p| p * r1)
            .chain(self.phases_grade2.iter().map(|p| p * r2))
            .collect()
    }
}

/// A finite length spectrum together with its root-space data.
#[derive(Debug, Clone, PartialEq)]
pub struct LengthSpectrum {
    /// Norm `|α|` of the restricted root.
    pub alpha_norm: f64,
    /// Dimension of the grade-1 root space.
    pub d1: usize,
    /// Dimension of the grade-2 root space.
    pub d2: usize,
    pub classes: Vec<PrimitiveClass>,
}

impl LengthSpectrum {
    /// Derived half-sum norm `|ρ| = alpha_norm · (d1 + 2·d2) / 2`,
    /// consistent with `a^{2ρ} = det(a|n)`.
    pub fn rho_norm(&self) -> f64 {
        self.alpha_norm * (self.d1 as f64 + 2.0 * self.d2 as f64) / 2.0
    }

    /// Shortest class length, `+inf` for an empty spectrum.
    pub fn min_length(&self) -> f64 {
        self.classes
            .iter()
            .map(|c| c.length)
            .fold(f64::INFINITY, f64::min)
    }

    /// Checks every type invariant, collecting all violations.
    pub fn validate(&self) -> Result<(), SpectraError> {
        let mut v = Vec::new();
        if !(self.alpha_norm > 0.0) || !self.alpha_norm.is_finite() {
            v.push(format!("alpha_norm must be positive, got {}", self.alpha_norm));
        }
        let mut seen = BTreeSet::new();
        for c in &self.classes {
            if !seen.insert(c.id.clone()) {
                v.push(format!("class '{}': duplicate id", c.id));
            }
            if !(c.length > 0.0) || !c.length.is_finite() {
                v.push(format!("class '{}': length must be positive, got {}", c.id, c.length));
            }
            for (name, list) in [
                ("omega_eigs", &c.omega_eigs),
                ("phases_grade1", &c.phases_grade1),
                ("phases_grade2", &c.phases_grade2),
            ] {
                for (i, z) in list.iter().enumerate() {
                    if (z.norm() - 1.0).abs() > MODULUS_TOL {
                        v.push(format!(
                            "class '{}': {}[{}] has modulus {} (must be 1 within {:e})",
                            c.id,
                            name,
                            i,
                            z.norm(),
                            MODULUS_TOL
                        ));
                    }
                }
            }
            if c.phases_grade1.len() != self.d1 {
                v.push(format!(
                    "class '{}': {} grade-1 phases, spectrum has d1 = {}",
                    c.id,
                    c.phases_grade1.len(),
                    self.d1
                ));
            }
            if c.phases_grade2.len() != self.d2 {
                v.push(format!(
                    "class '{}': {} grade-2 phases, spectrum has d2 = {}",
                    c.id,
                    c.phases_grade2.len(),
                    self.d2
                ));
            }
            for (name, list) in [("phases_grade1", &c.phases_grade1), ("phases_grade2", &c.phases_grade2)] {
                if !conjugation_closed(list) {
                    v.push(format!(
                        "class '{}': {} is not closed under complex conjugation",
                        c.id, name
                    ));
                }
            }
        }
        if v.is_empty() {
            Ok(())
        } else {
            Err(SpectraError::Invalid { violations: v })
        }
    }
}

/// True when the list equals its own conjugate as a multiset (within
/// [`CONJ_TOL`]). Real entries are self-paired.
pub fn conjugation_closed(list: &[Complex64]) -> bool {
    let mut pool: Vec<Complex64> = list.to_vec();
    while let Some(z) = pool.pop() {
        if z.im.abs() <= CONJ_TOL {
            continue;
        }
        let want = z.conj();
        match pool
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - want).norm().total_cmp(&(b.1 - want).norm()))
        {
            Some((i, w)) if (w - want).norm() <= CONJ_TOL => {
                pool.swap_remove(i);
            }
            _ => return false,
        }
    }
    true
}

/// The data of a primitive class raised to its `m`-th power.
#[derive(Debug, Clone, PartialEq)]
pub struct PoweredClass {
    /// Length `m · l` of the powered class.
    pub length: f64,
    pub omega_eigs: Vec<Complex64>,
    pub phases_grade1: Vec<Complex64>,
    pub phases_grade2: Vec<Complex64>,
}

impl PoweredClass {
    /// Full contraction eigenvalues of the powered class.
    pub fn contraction_eigs(&self, alpha_norm: f64) -> Vec<Complex64> {
        let r1 = (-alpha_norm * self.length).exp();
        let r2 = (-2.0 * alpha_norm * self.length).exp();
        self.phases_grade1
            .iter()
            .map(|p| p * r1)
            .chain(self.phases_grade2.iter().map(|p| p * r2))
            .collect()
    }
}

/// Raises a primitive class to its `m`-th power: length scales by `m`,
/// every eigenvalue list is raised elementwise to the `m`-th power.
pub fn power_class(c: &PrimitiveClass, m: u32) -> PoweredClass {
    assert!(m >= 1, "power_class requires m >= 1");
    let pw = |list: &[Complex64]| list.iter().map(|z| z.powu(m)).collect();
    PoweredClass {
        length: m as f64 * c.length,
        omega_eigs: pw(&c.omega_eigs),
        phases_grade1: pw(&c.phases_grade1),
        phases_grade2: pw(&c.phases_grade2),
    }
}

// ---------------------------------------------------------------------------
// File format

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpectrumFile {
    alpha_norm: f64,
    d1: usize,
    d2: usize,
    classes: Vec<ClassFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassFile {
    id: String,
    length: f64,
    weight: i64,
    omega_eigs: Vec<[f64; 2]>,
    phases_grade1: Vec<[f64; 2]>,
    phases_grade2: Vec<[f64; 2]>,
}

fn to_pairs(l: &[Complex64]) -> Vec<[f64; 2]> {
    l.iter().map(|z| [z.re, z.im]).collect()
}

fn from_pairs(l: &[[f64; 2]]) -> Vec<Complex64> {
    l.iter().map(|p| Complex64::new(p[0], p[1])).collect()
}

/// Serializes a spectrum to the JSON interchange format.
pub fn spectrum_to_json(s: &LengthSpectrum) -> String {
    let f = SpectrumFile {
        alpha_norm: s.alpha_norm,
        d1: s.d1,
        d2: s.d2,
        classes: s
            .classes
            .iter()
            .map(|c| ClassFile {
                id: c.id.clone(),
                length: c.length,
                weight: c.weight,
                omega_eigs: to_pairs(&c.omega_eigs),
                phases_grade1: to_pairs(&c.phases_grade1),
                phases_grade2: to_pairs(&c.phases_grade2),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&f).expect("spectrum serialization cannot fail")
}

/// Parses and validates a spectrum from JSON text.
pub fn spectrum_from_json(text: &str) -> Result<LengthSpectrum, SpectraError> {
    let f: SpectrumFile =
        serde_json::from_str(text).map_err(|e| SpectraError::Parse(e.to_string()))?;
    let s = LengthSpectrum {
        alpha_norm: f.alpha_norm,
        d1: f.d1,
        d2: f.d2,
        classes: f
            .classes
            .into_iter()
            .map(|c| PrimitiveClass {
                id: c.id,
                length: c.length,
                weight: c.weight,
                omega_eigs: from_pairs(&c.omega_eigs),
                phases_grade1: from_pairs(&c.phases_grade1),
                phases_grade2: from_pairs(&c.phases_grade2),
            })
            .collect(),
    };
    s.validate()?;
    Ok(s)
}

/// Loads a spectrum file, failing with a parse error on malformed input or
/// a validation error listing every violated invariant.
pub fn load_spectrum(path: &Path) -> Result<LengthSpectrum, SpectraError> {
    let text = std::fs::read_to_string(path).map_err(|source| SpectraError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    spectrum_from_json(&text)
}

/// Writes a spectrum to a file in the JSON interchange format.
pub fn save_spectrum(path: &Path, s: &LengthSpectrum) -> Result<(), SpectraError> {
    std::fs::write(path, spectrum_to_json(s)).map_err(|source| SpectraError::Write {
        path: path.to_path_buf(),
        source,
    })
}

// ---------------------------------------------------------------------------
// Synthetic generation

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SynthKind {
    /// Lengths `l0, 2·l0, …`, all weights 1, all phases trivial.
    Arithmetic,
    /// Seeded random lengths, weights, and conjugation-closed phase lists.
    Random,
}

#[derive(Debug, Clone)]
pub struct SynthParams {
    pub n_classes: usize,
    /// Base length `l0 > 0`.
    pub length_base: f64,
    pub d1: usize,
    pub d2: usize,
    pub alpha_norm: f64,
    /// Dimension of the twist ω (eigenvalue count per class).
    pub dim_omega: usize,
}

impl Default for SynthParams {
    fn default() -> Self {
        SynthParams {
            n_classes: 5,
            length_base: 1.0,
            d1: 1,
            d2: 0,
            alpha_norm: 1.0,
            dim_omega: 1,
        }
    }
}

/// A conjugation-closed list of `d` unit phases: pairs `(e^{iθ}, e^{-iθ})`
/// plus a real phase when `d` is odd.
fn conj_closed_phases(rng: &mut ChaCha8Rng, d: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(d);
    while out.len() + 2 <= d {
        let theta: f64 = rng.gen_range(0.05..std::f64::consts::PI - 0.05);
        let z = Complex64::from_polar(1.0, theta);
        out.push(z);
        out.push(z.conj());
    }
    if out.len() < d {
        out.push(Complex64::new(if rng.gen::<bool>() { 1.0 } else { -1.0 }, 0.0));
    }
    out
}

/// Deterministic synthetic spectrum generator. Equal seeds give equal
/// spectra; the output always passes [`LengthSpectrum::validate`].
pub fn synth_spectrum(
    kind: SynthKind,
    params: &SynthParams,
    seed: u64,
) -> Result<LengthSpectrum, SpectraError> {
    if !(params.length_base > 0.0) {
        return Err(SpectraError::Params(format!(
            "length_base must be positive, got {}",
            params.length_base
        )));
    }
    if !(params.alpha_norm > 0.0) {
        return Err(SpectraError::Params(format!(
            "alpha_norm must be positive, got {}",
            params.alpha_norm
        )));
    }
    if params.dim_omega == 0 {
        return Err(SpectraError::Params("dim_omega must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ones = |d: usize| vec![Complex64::new(1.0, 0.0); d];
    let classes = (0..params.n_classes)
        .map(|k| match kind {
            SynthKind::Arithmetic => PrimitiveClass {
                id: format!("c{k}"),
                length: params.length_base * (k as f64 + 1.0),
                weight: 1,
                omega_eigs: ones(params.dim_omega),
                phases_grade1: ones(params.d1),
                phases_grade2: ones(params.d2),
            },
            SynthKind::Random => {
                let length = params.length_base * (1.0 + rng.gen::<f64>() + 0.25 * k as f64);
                let weight = *[-2i64, -1, 1, 2]
                    .get(rng.gen_range(0..4usize))
                    .expect("weight choice");
                PrimitiveClass {
                    id: format!("c{k}"),
                    length,
                    weight,
                    omega_eigs: conj_closed_phases(&mut rng, params.dim_omega),
                    phases_grade1: conj_closed_phases(&mut rng, params.d1),
                    phases_grade2: conj_closed_phases(&mut rng, params.d2),
                }
            }
        })
        .collect();
    let s = LengthSpectrum {
        alpha_norm: params.alpha_norm,
        d1: params.d1,
        d2: params.d2,
        classes,
    };
    s.validate()?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal() -> LengthSpectrum {
        LengthSpectrum {
            alpha_norm: 1.0,
            d1: 1,
            d2: 0,
            classes: vec![PrimitiveClass {
                id: "g".into(),
                length: 2.0,
                weight: 1,
                omega_eigs: vec![Complex64::new(1.0, 0.0)],
                phases_grade1: vec![Complex64::new(1.0, 0.0)],
                phases_grade2: vec![],
            }],
        }
    }

    #[test]
    fn empty_spectrum_is_valid() {
        let s = LengthSpectrum {
            alpha_norm: 0.5,
            d1: 2,
            d2: 1,
            classes: vec![],
        };
        assert!(s.validate().is_ok());
        let round = spectrum_from_json(&spectrum_to_json(&s)).unwrap();
        assert_eq!(round, s);
    }

    #[test]
    fn minimal_class_accepted() {
        assert!(minimal().validate().is_ok());
    }

    #[test]
    fn bad_modulus_names_the_class() {
        let mut s = minimal();
        s.classes[0].phases_grade1[0] = Complex64::new(1.1, 0.0);
        let err = s.validate().unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("'g'"), "message should name the class: {msg}");
        assert!(msg.contains("phases_grade1"));
    }

    #[test]
    fn every_single_field_corruption_is_caught() {
        let base = synth_spectrum(SynthKind::Random, &SynthParams { n_classes: 2, d1: 2, d2: 1, dim_omega: 2, ..Default::default() }, 3).unwrap();
        assert!(base.validate().is_ok());

        let mut m = base.clone();
        m.alpha_norm = -1.0;
        assert!(m.validate().is_err(), "negative alpha_norm");

        let mut m = base.clone();
        m.classes[1].length = 0.0;
        assert!(m.validate().is_err(), "zero length");

        let mut m = base.clone();
        m.classes[0].id = m.classes[1].id.clone();
        assert!(m.validate().is_err(), "duplicate ids");

        let mut m = base.clone();
        m.classes[0].omega_eigs[0] *= 1.0 + 1e-6;
        assert!(m.validate().is_err(), "omega modulus");

        let mut m = base.clone();
        m.classes[0].phases_grade1.pop();
        assert!(m.validate().is_err(), "grade-1 count");

        let mut m = base.clone();
        m.classes[0].phases_grade2.push(Complex64::new(0.0, 1.0));
        assert!(m.validate().is_err(), "grade-2 count");

        // break conjugation closure while keeping modulus and counts intact
        let mut m = base.clone();
        m.classes[0].phases_grade1[0] = Complex64::from_polar(1.0, 0.3);
        m.classes[0].phases_grade1[1] = Complex64::from_polar(1.0, 0.9);
        assert!(m.validate().is_err(), "conjugation closure");
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = r#"{"alpha_norm":1.0,"d1":0,"d2":0,"classes":[],"extra":1}"#;
        assert!(matches!(spectrum_from_json(text), Err(SpectraError::Parse(_))));
    }

    #[test]
    fn power_class_identity_and_i_squared() {
        let mut c = minimal().classes.remove(0);
        c.omega_eigs = vec![Complex64::new(0.0, 1.0)];
        let p1 = power_class(&c, 1);
        assert_eq!(p1.omega_eigs, c.omega_eigs);
        assert_eq!(p1.length, c.length);
        let p2 = power_class(&c, 2);
        assert_eq!(p2.omega_eigs[0], Complex64::new(-1.0, 0.0));
        assert_eq!(p2.length, 4.0);
    }

    #[test]
    fn power_class_contraction_modulus() {
        // l = 2, grade-1 phase e^{iπ/3}, |α| = 1, m = 3:
        // phase becomes e^{iπ} = -1 and the modulus is e^{-6}.
        let c = PrimitiveClass {
            id: "x".into(),
            length: 2.0,
            weight: 1,
            omega_eigs: vec![Complex64::new(1.0, 0.0)],
            phases_grade1: vec![
                Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3),
                Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_3),
            ],
            phases_grade2: vec![],
        };
        let p = power_class(&c, 3);
        let v = p.contraction_eigs(1.0);
        assert!((v[0] - Complex64::new(-(-6.0f64).exp(), 0.0)).norm() < 1e-12);
        assert!((v[0].norm() - (-6.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn synth_is_deterministic_and_valid() {
        let p = SynthParams { n_classes: 6, d1: 2, d2: 1, dim_omega: 3, ..Default::default() };
        let a = synth_spectrum(SynthKind::Random, &p, 7).unwrap();
        let b = synth_spectrum(SynthKind::Random, &p, 7).unwrap();
        assert_eq!(a, b);
        let c = synth_spectrum(SynthKind::Random, &p, 8).unwrap();
        assert_ne!(a, c);
        for cl in &a.classes {
            assert_eq!(cl.phases_grade1.len(), 2);
            assert!(conjugation_closed(&cl.phases_grade1));
            assert!(conjugation_closed(&cl.phases_grade2));
        }
    }

    #[test]
    fn synth_arithmetic_shape() {
        let p = SynthParams { n_classes: 3, d1: 1, d2: 0, ..Default::default() };
        let s = synth_spectrum(SynthKind::Arithmetic, &p, 0).unwrap();
        let lengths: Vec<f64> = s.classes.iter().map(|c| c.length).collect();
        assert_eq!(lengths, vec![1.0, 2.0, 3.0]);
        assert!(s.classes.iter().all(|c| c.weight == 1));
    }

    #[test]
    fn synth_rejects_bad_params() {
        let p = SynthParams { length_base: 0.0, ..Default::default() };
        assert!(synth_spectrum(SynthKind::Arithmetic, &p, 0).is_err());
        let p = SynthParams { alpha_norm: -2.0, ..Default::default() };
        assert!(synth_spectrum(SynthKind::Random, &p, 0).is_err());
    }

    #[test]
    fn rho_norm_formula() {
        let s = LengthSpectrum { alpha_norm: 0.5, d1: 2, d2: 1, classes: vec![] };
        assert_eq!(s.rho_norm(), 0.5 * (2.0 + 2.0) / 2.0);
    }
}
