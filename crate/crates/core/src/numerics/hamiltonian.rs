use nalgebra::DMatrix;
use num_complex::Complex64;

use super::NumericsError;
use crate::model::{basis_dim, BasisIndex, ModelError, ModelParams};

const HERMITIAN_TOL: f64 = 1e-12;

/// Dense Hermitian matrix over the flattened basis of a given cutoff.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    entries: DMatrix<Complex64>,
    cutoff: usize,
}

impl HermitianOperator {
    pub fn new(entries: DMatrix<Complex64>, cutoff: usize) -> Result<Self, NumericsError> {
        let dim = basis_dim(cutoff);
        if entries.nrows() != dim || entries.ncols() != dim {
            return Err(NumericsError::DimensionMismatch {
                operator: entries.nrows(),
                state: dim,
            });
        }
        let err = (&entries - entries.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        let scale = entries.iter().map(|z| z.norm()).fold(1.0, f64::max);
        if err > HERMITIAN_TOL * scale {
            return Err(NumericsError::NotHermitian(err));
        }
        Ok(Self { entries, cutoff })
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// Largest entry of `[self, other]`.
    pub fn commutator_norm(&self, other: &HermitianOperator) -> f64 {
        let c = &self.entries * &other.entries - &other.entries * &self.entries;
        c.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// `H = ω|↑⟩⟨↑|_A + ω|↑⟩⟨↑|_B + ν a†a + ν b†b + g(a†σ₋ᴬ + aσ₊ᴬ) + g(b†σ₋ᴮ + bσ₊ᴮ)`
/// truncated at `cutoff` photons per mode.
pub fn build_hamiltonian(
    params: &ModelParams,
    cutoff: usize,
) -> Result<HermitianOperator, NumericsError> {
    if cutoff < 1 {
        return Err(ModelError::CutoffTooSmall(cutoff).into());
    }
    let dim = basis_dim(cutoff);
    let (omega, nu, g) = (params.omega(), params.nu(), params.g());
    let mut h = DMatrix::<Complex64>::zeros(dim, dim);
    for i in 0..dim {
        let idx = BasisIndex::from_flat(i, cutoff);
        let atoms = (idx.atom_a + idx.atom_b) as f64;
        let photons = (idx.photons_a + idx.photons_b) as f64;
        h[(i, i)] = (omega * atoms + nu * photons).into();

        // a†σ₋ᴬ: |↑, n⟩ → √(n+1) |↓, n+1⟩, and its adjoint
        if idx.atom_a == 1 && idx.photons_a < cutoff {
            let j = BasisIndex {
                atom_a: 0,
                photons_a: idx.photons_a + 1,
                ..idx
            }
            .flatten(cutoff);
            let amp = g * ((idx.photons_a + 1) as f64).sqrt();
            h[(j, i)] = amp.into();
            h[(i, j)] = amp.into();
        }
        if idx.atom_b == 1 && idx.photons_b < cutoff {
            let j = BasisIndex {
                atom_b: 0,
                photons_b: idx.photons_b + 1,
                ..idx
            }
            .flatten(cutoff);
            let amp = g * ((idx.photons_b + 1) as f64).sqrt();
            h[(j, i)] = amp.into();
            h[(i, j)] = amp.into();
        }
    }
    HermitianOperator::new(h, cutoff)
}

/// Total excitation number `|↑⟩⟨↑|_A + |↑⟩⟨↑|_B + a†a + b†b`.
pub fn excitation_operator(cutoff: usize) -> HermitianOperator {
    let dim = basis_dim(cutoff);
    let mut n = DMatrix::<Complex64>::zeros(dim, dim);
    for i in 0..dim {
        n[(i, i)] = (BasisIndex::from_flat(i, cutoff).excitations() as f64).into();
    }
    HermitianOperator { entries: n, cutoff }
}
