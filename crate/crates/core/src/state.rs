use nalgebra::DVector;
use num_complex::Complex64;

use crate::model::{basis_dim, BasisIndex};

/// Pure state over the flattened atomA ⊗ atomB ⊗ modeA ⊗ modeB basis.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: DVector<Complex64>,
    cutoff: usize,
}

impl PureState {
    /// Wraps an amplitude vector. The length must match `basis_dim(cutoff)`.
    pub fn new(amplitudes: DVector<Complex64>, cutoff: usize) -> Self {
        assert_eq!(
            amplitudes.len(),
            basis_dim(cutoff),
            "amplitude vector does not match cutoff {cutoff}"
        );
        Self { amplitudes, cutoff }
    }

    pub fn from_vec(amplitudes: Vec<Complex64>, cutoff: usize) -> Self {
        Self::new(DVector::from_vec(amplitudes), cutoff)
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amplitudes
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitude(&self, index: BasisIndex) -> Complex64 {
        self.amplitudes[index.flatten(self.cutoff)]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    pub fn population(&self, index: BasisIndex) -> f64 {
        self.amplitude(index).norm_sqr()
    }

    /// Expectation value of the total excitation number.
    pub fn mean_excitations(&self) -> f64 {
        self.amplitudes
            .iter()
            .enumerate()
            .map(|(i, z)| z.norm_sqr() * BasisIndex::from_flat(i, self.cutoff).excitations() as f64)
            .sum()
    }

    /// Re-embeds the state at a different cutoff. Amplitudes on levels that do
    /// not exist at the target cutoff must be zero.
    pub fn with_cutoff(&self, cutoff: usize) -> Option<Self> {
        let mut out = vec![Complex64::default(); basis_dim(cutoff)];
        for (i, z) in self.amplitudes.iter().enumerate() {
            let idx = BasisIndex::from_flat(i, self.cutoff);
            if idx.photons_a > cutoff || idx.photons_b > cutoff {
                if *z != Complex64::default() {
                    return None;
                }
                continue;
            }
            out[idx.flatten(cutoff)] = *z;
        }
        Some(Self::from_vec(out, cutoff))
    }

    /// Largest entrywise modulus difference to another state of the same cutoff.
    pub fn max_abs_diff(&self, other: &PureState) -> f64 {
        assert_eq!(self.cutoff, other.cutoff);
        self.amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}
