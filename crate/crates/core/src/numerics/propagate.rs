use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::{HermitianOperator, NumericsError};
use crate::model::BasisIndex;
use crate::state::PureState;

#[derive(Debug, Clone)]
struct Block {
    indices: Vec<usize>,
    /// Mean diagonal energy, removed before diagonalising.
    shift: f64,
    energies: DVector<f64>,
    vectors: DMatrix<Complex64>,
}

/// Exact propagator `exp(−iHt)` built from one Hermitian eigendecomposition,
/// reusable across any number of times.
///
/// When `H` conserves the total excitation number each sector is
/// diagonalised on its own, with its mean diagonal energy factored out as a
/// global phase.
#[derive(Debug, Clone)]
pub struct Propagator {
    blocks: Vec<Block>,
    dim: usize,
    cutoff: usize,
}

fn sectors(h: &HermitianOperator) -> Vec<Vec<usize>> {
    let dim = h.dim();
    let cutoff = h.cutoff();
    let n_of: Vec<usize> = (0..dim).map(|i| BasisIndex::from_flat(i, cutoff).excitations()).collect();
    let m = h.entries();
    let conserving = (0..dim).all(|i| (0..dim).all(|j| n_of[i] == n_of[j] || m[(i, j)].norm() == 0.0));
    if !conserving {
        return vec![(0..dim).collect()];
    }
    let max_n = n_of.iter().copied().max().unwrap_or(0);
    (0..=max_n)
        .map(|n| (0..dim).filter(|&i| n_of[i] == n).collect::<Vec<_>>())
        .filter(|v| !v.is_empty())
        .collect()
}

impl Propagator {
    pub fn new(h: &HermitianOperator) -> Self {
        let m = h.entries();
        let blocks = sectors(h)
            .into_iter()
            .map(|indices| {
                let k = indices.len();
                let shift = indices.iter().map(|&i| m[(i, i)].re).sum::<f64>() / k as f64;
                let sub = DMatrix::from_fn(k, k, |a, b| {
                    let v = m[(indices[a], indices[b])];
                    if a == b { v - shift } else { v }
                });
                let eig = sub.symmetric_eigen();
                Block {
                    indices,
                    shift,
                    energies: eig.eigenvalues,
                    vectors: eig.eigenvectors,
                }
            })
            .collect();
        Self {
            blocks,
            dim: h.dim(),
            cutoff: h.cutoff(),
        }
    }

    /// Eigenvalues of `H`, sector by sector.
    pub fn energies(&self) -> Vec<f64> {
        self.blocks
            .iter()
            .flat_map(|b| b.energies.iter().map(move |e| e + b.shift))
            .collect()
    }

    /// Eigenvectors of `H` in the full basis, ordered as [`Self::energies`].
    pub fn eigenvectors(&self) -> Vec<DVector<Complex64>> {
        let mut out = Vec::with_capacity(self.dim);
        for b in &self.blocks {
            for col in b.vectors.column_iter() {
                let mut v = DVector::zeros(self.dim);
                for (&i, c) in b.indices.iter().zip(col.iter()) {
                    v[i] = *c;
                }
                out.push(v);
            }
        }
        out
    }

    pub fn evolve(&self, state0: &PureState, t: f64) -> Result<PureState, NumericsError> {
        if state0.dim() != self.dim {
            return Err(NumericsError::DimensionMismatch {
                operator: self.dim,
                state: state0.dim(),
            });
        }
        if t == 0.0 {
            return Ok(state0.clone());
        }
        let psi0 = state0.amplitudes();
        let mut out = DVector::zeros(self.dim);
        for b in &self.blocks {
            let local = DVector::from_iterator(b.indices.len(), b.indices.iter().map(|&i| psi0[i]));
            if local.iter().all(|z| *z == Complex64::default()) {
                continue;
            }
            let mut coeffs = b.vectors.ad_mul(&local);
            for (c, e) in coeffs.iter_mut().zip(b.energies.iter()) {
                *c *= Complex64::cis(-e * t);
            }
            let evolved = &b.vectors * coeffs * Complex64::cis(-b.shift * t);
            for (&i, z) in b.indices.iter().zip(evolved.iter()) {
                out[i] = *z;
            }
        }
        Ok(PureState::new(out, self.cutoff))
    }
}

/// `exp(−iHt)|ψ₀⟩` via eigendecomposition of `h`.
pub fn evolve(h: &HermitianOperator, state0: &PureState, t: f64) -> Result<PureState, NumericsError> {
    Propagator::new(h).evolve(state0, t)
}
