//! Two-qubit density matrices.

use std::fmt;

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;

pub const HERMITIAN_TOL: f64 = 1e-12;
pub const TRACE_TOL: f64 = 1e-12;
pub const PSD_TOL: f64 = 1e-10;

/// Label of one two-qubit basis vector; `1` is the excited level (`↑` for an
/// atom, one photon for a mode).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PairLabel {
    pub first: u8,
    pub second: u8,
}

impl PairLabel {
    pub const fn new(first: u8, second: u8) -> Self {
        Self { first, second }
    }
}

impl fmt::Display for PairLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrow = |l| if l == 1 { '↑' } else { '↓' };
        write!(f, "{}{}", arrow(self.first), arrow(self.second))
    }
}

/// `|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩`.
pub const STANDARD_BASIS: [PairLabel; 4] = [
    PairLabel::new(1, 1),
    PairLabel::new(1, 0),
    PairLabel::new(0, 1),
    PairLabel::new(0, 0),
];

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DensityError {
    #[error("matrix is not Hermitian (max |ρ - ρ†| = {0:e})")]
    NotHermitian(f64),
    #[error("trace is {0}, expected 1")]
    BadTrace(f64),
    #[error("matrix has eigenvalue {0:e} below the PSD tolerance")]
    NotPositive(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    entries: Matrix4<Complex64>,
    basis_labels: [PairLabel; 4],
}

impl DensityMatrix {
    /// Matrix in an explicit basis ordering. The labels must be a permutation
    /// of the standard basis.
    pub fn with_basis(entries: Matrix4<Complex64>, basis_labels: [PairLabel; 4]) -> Self {
        debug_assert!(STANDARD_BASIS.iter().all(|l| basis_labels.contains(l)));
        Self {
            entries,
            basis_labels,
        }
    }

    pub fn standard(entries: Matrix4<Complex64>) -> Self {
        Self::with_basis(entries, STANDARD_BASIS)
    }

    /// `|ψ⟩⟨ψ|` for a two-qubit vector given in the standard basis.
    pub fn projector(psi: Vector4<Complex64>) -> Self {
        Self::standard(psi * psi.adjoint())
    }

    pub fn entries(&self) -> &Matrix4<Complex64> {
        &self.entries
    }

    pub fn basis_labels(&self) -> &[PairLabel; 4] {
        &self.basis_labels
    }

    pub fn get(&self, row: PairLabel, col: PairLabel) -> Complex64 {
        let pos = |l| self.basis_labels.iter().position(|x| *x == l).unwrap();
        self.entries[(pos(row), pos(col))]
    }

    /// Same operator, re-expressed in the standard `↑↑, ↑↓, ↓↑, ↓↓` order.
    pub fn to_standard_order(&self) -> Self {
        let mut m = Matrix4::zeros();
        for (i, ri) in STANDARD_BASIS.iter().enumerate() {
            for (j, cj) in STANDARD_BASIS.iter().enumerate() {
                m[(i, j)] = self.get(*ri, *cj);
            }
        }
        Self::standard(m)
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }

    pub fn hermiticity_error(&self) -> f64 {
        (self.entries - self.entries.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let herm = (self.entries + self.entries.adjoint()).scale(0.5);
        let mut ev: [f64; 4] = herm.symmetric_eigenvalues().into();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// Checks Hermiticity, unit trace and positivity at the crate tolerances.
    pub fn validate(&self) -> Result<(), DensityError> {
        let herm = self.hermiticity_error();
        if herm > HERMITIAN_TOL {
            return Err(DensityError::NotHermitian(herm));
        }
        let tr = self.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(DensityError::BadTrace(tr.re));
        }
        let min = self.eigenvalues()[0];
        if min < -PSD_TOL {
            return Err(DensityError::NotPositive(min));
        }
        Ok(())
    }

    /// Largest entrywise modulus difference, compared in the standard order.
    pub fn max_abs_diff(&self, other: &DensityMatrix) -> f64 {
        let a = self.to_standard_order();
        let b = other.to_standard_order();
        (a.entries - b.entries)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}
