//! Analytic amplitudes, reduced atom-atom density matrices and concurrences
//! for the two named initial-state families.
//!
//! Every time dependence enters through the dressed-state phases
//! `e^{−iλ±t}`; the atom-atom quantities depend on `t` only through
//! `sin²(δt/2)`, so they are periodic with period `2π/δ`.

use nalgebra::Matrix4;
use num_complex::Complex64;

use crate::density::{DensityMatrix, PairLabel, STANDARD_BASIS};
use crate::model::{basis_dim, BasisIndex, JcConstants};
use crate::state::PureState;

/// Ordering used for the Φ-family matrix: `|↑↓⟩, |↑↑⟩, |↓↓⟩, |↓↑⟩`.
pub const PHI_BASIS: [PairLabel; 4] = [
    PairLabel::new(1, 0),
    PairLabel::new(1, 1),
    PairLabel::new(0, 0),
    PairLabel::new(0, 1),
];

/// The two single-pair propagation factors of one Jaynes-Cummings pair that
/// starts with its atom excited and its cavity empty:
/// `stay = L e^{−iλ⁺t} + M e^{−iλ⁻t}` (atom still excited) and
/// `transfer = N (e^{−iλ⁺t} − e^{−iλ⁻t})` (photon in the cavity).
fn pair_factors(k: &JcConstants, t: f64) -> (Complex64, Complex64) {
    let e_plus = Complex64::cis(-k.lambda_plus * t);
    let e_minus = Complex64::cis(-k.lambda_minus * t);
    (
        e_plus * k.l_coef + e_minus * k.m_coef,
        (e_plus - e_minus) * k.n_coef,
    )
}

/// `sin²(δt/2)`, the single quantity through which the concurrences depend on time.
fn transfer_phase(k: &JcConstants, t: f64) -> f64 {
    (k.rabi * t / 2.0).sin().powi(2)
}

/// Amplitudes of `|↑↓00⟩, |↓↑00⟩, |↓↓10⟩, |↓↓01⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiAmplitudes {
    pub x1: Complex64,
    pub x2: Complex64,
    pub x3: Complex64,
    pub x4: Complex64,
    pub t: f64,
}

impl PsiAmplitudes {
    pub const BASIS: [BasisIndex; 4] = [
        BasisIndex::new(1, 0, 0, 0),
        BasisIndex::new(0, 1, 0, 0),
        BasisIndex::new(0, 0, 1, 0),
        BasisIndex::new(0, 0, 0, 1),
    ];

    pub fn as_array(&self) -> [Complex64; 4] {
        [self.x1, self.x2, self.x3, self.x4]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.as_array().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Wootters concurrence of the X-form reduced matrix, `2|x1||x2|`.
    pub fn concurrence(&self) -> f64 {
        2.0 * self.x1.norm() * self.x2.norm()
    }

    pub fn to_state(&self, cutoff: usize) -> PureState {
        embed(&Self::BASIS, &self.as_array(), cutoff)
    }
}

/// Amplitudes of `|↑↑00⟩, |↓↓11⟩, |↑↓01⟩, |↓↑10⟩, |↓↓00⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiAmplitudes {
    pub x1: Complex64,
    pub x2: Complex64,
    pub x3: Complex64,
    pub x4: Complex64,
    pub x5: Complex64,
    pub t: f64,
}

impl PhiAmplitudes {
    pub const BASIS: [BasisIndex; 5] = [
        BasisIndex::new(1, 1, 0, 0),
        BasisIndex::new(0, 0, 1, 1),
        BasisIndex::new(1, 0, 0, 1),
        BasisIndex::new(0, 1, 1, 0),
        BasisIndex::new(0, 0, 0, 0),
    ];

    pub fn as_array(&self) -> [Complex64; 5] {
        [self.x1, self.x2, self.x3, self.x4, self.x5]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.as_array().iter().map(|z| z.norm_sqr()).sum()
    }

    /// Signed pre-concurrence `2|x1||x5| − 2|x3||x4|`.
    pub fn pre_concurrence(&self) -> f64 {
        2.0 * self.x1.norm() * self.x5.norm() - 2.0 * self.x3.norm() * self.x4.norm()
    }

    pub fn to_state(&self, cutoff: usize) -> PureState {
        embed(&Self::BASIS, &self.as_array(), cutoff)
    }
}

fn embed(basis: &[BasisIndex], amps: &[Complex64], cutoff: usize) -> PureState {
    let mut v = vec![Complex64::default(); basis_dim(cutoff)];
    for (idx, z) in basis.iter().zip(amps) {
        v[idx.flatten(cutoff)] = *z;
    }
    PureState::from_vec(v, cutoff)
}

pub fn psi_amplitudes(alpha: f64, k: &JcConstants, t: f64) -> PsiAmplitudes {
    let (stay, transfer) = pair_factors(k, t);
    let (c, s) = (alpha.cos(), alpha.sin());
    PsiAmplitudes {
        x1: stay * c,
        x2: stay * s,
        x3: transfer * c,
        x4: transfer * s,
        t,
    }
}

pub fn phi_amplitudes(alpha: f64, k: &JcConstants, t: f64) -> PhiAmplitudes {
    let (stay, transfer) = pair_factors(k, t);
    let (c, s) = (alpha.cos(), alpha.sin());
    let e_plus = Complex64::cis(-k.lambda_plus * t);
    let e_minus = Complex64::cis(-k.lambda_minus * t);
    let diff = e_plus - e_minus;
    let mixed = transfer * stay * c;
    PhiAmplitudes {
        x1: stay * stay * c,
        x2: diff * diff * (k.l_coef * k.m_coef * c),
        x3: mixed,
        x4: mixed,
        x5: Complex64::new(s, 0.0),
        t,
    }
}

/// Atom-atom reduced matrix of the Ψ family in the standard basis.
pub fn psi_reduced_density(alpha: f64, k: &JcConstants, t: f64) -> DensityMatrix {
    let x = psi_amplitudes(alpha, k, t);
    let mut m = Matrix4::zeros();
    m[(1, 1)] = x.x1.norm_sqr().into();
    m[(1, 2)] = x.x1 * x.x2.conj();
    m[(2, 1)] = x.x1.conj() * x.x2;
    m[(2, 2)] = x.x2.norm_sqr().into();
    m[(3, 3)] = (x.x3.norm_sqr() + x.x4.norm_sqr()).into();
    DensityMatrix::with_basis(m, STANDARD_BASIS)
}

/// Atom-atom reduced matrix of the Φ family in the `↑↓, ↑↑, ↓↓, ↓↑` order of
/// [`PHI_BASIS`].
///
/// The `↓↓` population is `|x2|² + |x5|²` (both `|↓↓11⟩` and `|↓↓00⟩`
/// contribute), which keeps the trace at one.
pub fn phi_reduced_density(alpha: f64, k: &JcConstants, t: f64) -> DensityMatrix {
    let x = phi_amplitudes(alpha, k, t);
    let mut m = Matrix4::zeros();
    m[(0, 0)] = x.x3.norm_sqr().into();
    m[(1, 1)] = x.x1.norm_sqr().into();
    m[(1, 2)] = x.x1 * x.x5.conj();
    m[(2, 1)] = x.x1.conj() * x.x5;
    m[(2, 2)] = (x.x2.norm_sqr() + x.x5.norm_sqr()).into();
    m[(3, 3)] = x.x4.norm_sqr().into();
    DensityMatrix::with_basis(m, PHI_BASIS)
}

/// `C(t) = |sin 2α| [1 − 4N² sin²(δt/2)]`.
pub fn psi_concurrence(alpha: f64, k: &JcConstants, t: f64) -> f64 {
    let n2 = k.n_coef * k.n_coef;
    (2.0 * alpha).sin().abs() * (1.0 - 4.0 * n2 * transfer_phase(k, t))
}

/// Signed pre-concurrence of the Φ family,
/// `f(t) = [1 − 4N² sin²(δt/2)] [|sin 2α| − 8N² sin²(δt/2) cos²α]`.
pub fn phi_f(alpha: f64, k: &JcConstants, t: f64) -> f64 {
    let n2 = k.n_coef * k.n_coef;
    let s2 = transfer_phase(k, t);
    (1.0 - 4.0 * n2 * s2) * ((2.0 * alpha).sin().abs() - 8.0 * n2 * s2 * alpha.cos().powi(2))
}

/// Resonant (`Δ = 0`) form of [`phi_f`]:
/// `cos²(Gt/2) [|sin 2α| − 2 sin²(Gt/2) cos²α]`.
pub fn phi_f_resonant(alpha: f64, big_g: f64, t: f64) -> f64 {
    let half = big_g * t / 2.0;
    half.cos().powi(2) * ((2.0 * alpha).sin().abs() - 2.0 * half.sin().powi(2) * alpha.cos().powi(2))
}

pub fn phi_concurrence(alpha: f64, k: &JcConstants, t: f64) -> f64 {
    phi_f(alpha, k, t).max(0.0)
}
