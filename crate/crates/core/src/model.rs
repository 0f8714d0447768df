//! Physical parameters, dressed-state constants, basis indexing and the two
//! initial-state families of the double Jaynes-Cummings model.
//!
//! Units are ħ = 1. The atomic energy is `ω|↑⟩⟨↑|` per atom (ground state at
//! zero energy), which makes the single-excitation dressed energies
//! `λ± = ν + Δ/2 ± δ/2` and fixes the phases of the closed-form amplitudes.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::state::PureState;

/// Default coupling: `g = 0.5` so that `G = 2g = 1` and time is in units of `1/G`.
pub const DEFAULT_COUPLING: f64 = 0.5;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("coupling must be positive (got g = {0})")]
    NonPositiveCoupling(f64),
    #[error("atomic frequency must be positive (got omega = {0})")]
    NonPositiveAtomFrequency(f64),
    #[error("cavity frequency must be positive (got nu = {0})")]
    NonPositiveCavityFrequency(f64),
    #[error("parameter {name} is not finite")]
    NotFinite { name: &'static str },
    #[error("Fock cutoff must be at least 1 (got {0})")]
    CutoffTooSmall(usize),
    #[error("custom amplitude vector has length {got}, expected {expected}")]
    AmplitudeLength { got: usize, expected: usize },
    #[error("custom amplitude vector is not normalized (norm² = {0})")]
    NotNormalized(f64),
    #[error("custom initial state requires an amplitude vector")]
    MissingAmplitudes,
}

/// Frequencies shared by both atom-cavity pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    omega: f64,
    nu: f64,
    g: f64,
}

impl ModelParams {
    pub fn new(omega: f64, nu: f64, g: f64) -> Result<Self, ModelError> {
        for (name, v) in [("omega", omega), ("nu", nu), ("g", g)] {
            if !v.is_finite() {
                return Err(ModelError::NotFinite { name });
            }
        }
        if g <= 0.0 {
            return Err(ModelError::NonPositiveCoupling(g));
        }
        if omega <= 0.0 {
            return Err(ModelError::NonPositiveAtomFrequency(omega));
        }
        if nu <= 0.0 {
            return Err(ModelError::NonPositiveCavityFrequency(nu));
        }
        Ok(Self { omega, nu, g })
    }

    /// Builds parameters from detuning `Δ = ω − ν`, interaction strength
    /// `G = 2g` and cavity frequency `ν`.
    pub fn from_detuning(delta: f64, big_g: f64, nu: f64) -> Result<Self, ModelError> {
        Self::new(nu + delta, nu, big_g / 2.0)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn constants(&self) -> JcConstants {
        derive_constants(self)
    }
}

/// Derived dressed-state constants of a single Jaynes-Cummings pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JcConstants {
    /// Detuning `Δ = ω − ν`.
    pub delta: f64,
    /// `G = 2g`.
    pub big_g: f64,
    /// `δ = √(Δ² + G²) = λ⁺ − λ⁻`.
    pub rabi: f64,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    pub l_coef: f64,
    pub m_coef: f64,
    pub n_coef: f64,
}

impl JcConstants {
    /// Revival period `2π/δ` of every atom-atom concurrence.
    pub fn period(&self) -> f64 {
        2.0 * PI / self.rabi
    }
}

pub fn derive_constants(params: &ModelParams) -> JcConstants {
    let delta = params.omega - params.nu;
    let big_g = 2.0 * params.g;
    let rabi = delta.hypot(big_g);
    let mean = params.nu + delta / 2.0;
    // (δ ∓ Δ) evaluated without cancellation for the smaller of L, M.
    let (plus, minus) = if delta >= 0.0 {
        (rabi + delta, big_g * big_g / (rabi + delta))
    } else {
        (big_g * big_g / (rabi - delta), rabi - delta)
    };
    JcConstants {
        delta,
        big_g,
        rabi,
        lambda_plus: mean + rabi / 2.0,
        lambda_minus: mean - rabi / 2.0,
        l_coef: plus / (2.0 * rabi),
        m_coef: minus / (2.0 * rabi),
        n_coef: big_g / (2.0 * rabi),
    }
}

/// One element of the product basis atomA ⊗ atomB ⊗ modeA ⊗ modeB.
///
/// Atom levels are `0 = ↓` and `1 = ↑`; photon numbers run over `0..=cutoff`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisIndex {
    pub atom_a: u8,
    pub atom_b: u8,
    pub photons_a: usize,
    pub photons_b: usize,
}

impl BasisIndex {
    pub const fn new(atom_a: u8, atom_b: u8, photons_a: usize, photons_b: usize) -> Self {
        Self {
            atom_a,
            atom_b,
            photons_a,
            photons_b,
        }
    }

    pub fn flatten(&self, cutoff: usize) -> usize {
        let levels = cutoff + 1;
        debug_assert!(self.atom_a < 2 && self.atom_b < 2);
        debug_assert!(self.photons_a < levels && self.photons_b < levels);
        ((self.atom_a as usize * 2 + self.atom_b as usize) * levels + self.photons_a) * levels
            + self.photons_b
    }

    pub fn from_flat(index: usize, cutoff: usize) -> Self {
        let levels = cutoff + 1;
        let photons_b = index % levels;
        let rest = index / levels;
        let photons_a = rest % levels;
        let atoms = rest / levels;
        debug_assert!(atoms < 4, "index {index} out of range for cutoff {cutoff}");
        Self {
            atom_a: (atoms / 2) as u8,
            atom_b: (atoms % 2) as u8,
            photons_a,
            photons_b,
        }
    }

    /// Levels in subsystem order (atom A, atom B, mode a, mode b).
    pub fn levels(&self) -> [usize; 4] {
        [
            self.atom_a as usize,
            self.atom_b as usize,
            self.photons_a,
            self.photons_b,
        ]
    }

    /// Total excitation number `|↑⟩⟨↑|_A + |↑⟩⟨↑|_B + a†a + b†b`.
    pub fn excitations(&self) -> usize {
        self.levels().iter().sum()
    }
}

/// Dimension of the truncated space for a given Fock cutoff.
pub fn basis_dim(cutoff: usize) -> usize {
    4 * (cutoff + 1) * (cutoff + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `cos α|↑↓⟩ + sin α|↓↑⟩` with both cavities in vacuum.
    PsiAlpha,
    /// `cos α|↑↑⟩ + sin α|↓↓⟩` with both cavities in vacuum.
    PhiAlpha,
    Custom,
}

impl Family {
    pub fn is_named(&self) -> bool {
        !matches!(self, Family::Custom)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InitialState {
    pub family: Family,
    pub alpha: f64,
    pub custom_amplitudes: Option<Vec<Complex64>>,
}

impl InitialState {
    pub fn psi(alpha: f64) -> Self {
        Self {
            family: Family::PsiAlpha,
            alpha,
            custom_amplitudes: None,
        }
    }

    pub fn phi(alpha: f64) -> Self {
        Self {
            family: Family::PhiAlpha,
            alpha,
            custom_amplitudes: None,
        }
    }

    pub fn named(family: Family, alpha: f64) -> Self {
        Self {
            family,
            alpha,
            custom_amplitudes: None,
        }
    }

    pub fn custom(amplitudes: Vec<Complex64>) -> Self {
        Self {
            family: Family::Custom,
            alpha: 0.0,
            custom_amplitudes: Some(amplitudes),
        }
    }

    /// Initial atom-atom concurrence `|sin 2α|` of the named families.
    pub fn initial_concurrence(&self) -> Option<f64> {
        self.family
            .is_named()
            .then(|| (2.0 * self.alpha).sin().abs())
    }
}

pub fn initial_state_vector(init: &InitialState, cutoff: usize) -> Result<PureState, ModelError> {
    if cutoff < 1 {
        return Err(ModelError::CutoffTooSmall(cutoff));
    }
    let dim = basis_dim(cutoff);
    let (c, s) = (init.alpha.cos(), init.alpha.sin());
    let amplitudes = match init.family {
        Family::PsiAlpha => {
            let mut v = vec![Complex64::default(); dim];
            v[BasisIndex::new(1, 0, 0, 0).flatten(cutoff)] = c.into();
            v[BasisIndex::new(0, 1, 0, 0).flatten(cutoff)] = s.into();
            v
        }
        Family::PhiAlpha => {
            let mut v = vec![Complex64::default(); dim];
            v[BasisIndex::new(1, 1, 0, 0).flatten(cutoff)] = c.into();
            v[BasisIndex::new(0, 0, 0, 0).flatten(cutoff)] = s.into();
            v
        }
        Family::Custom => {
            let v = init
                .custom_amplitudes
                .as_ref()
                .ok_or(ModelError::MissingAmplitudes)?;
            if v.len() != dim {
                return Err(ModelError::AmplitudeLength {
                    got: v.len(),
                    expected: dim,
                });
            }
            let norm_sqr: f64 = v.iter().map(|z| z.norm_sqr()).sum();
            if (norm_sqr - 1.0).abs() > 1e-12 {
                return Err(ModelError::NotNormalized(norm_sqr));
            }
            v.clone()
        }
    };
    Ok(PureState::from_vec(amplitudes, cutoff))
}
