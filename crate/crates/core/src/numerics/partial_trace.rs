use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, Matrix4};
use num_complex::Complex64;

use super::wootters::wootters_signed_factor;
use super::NumericsError;
use crate::density::DensityMatrix;
use crate::model::BasisIndex;
use crate::state::PureState;

/// Population above one photon that a retained mode may carry before the
/// qubit truncation is rejected.
pub const QUBIT_LEAKAGE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subsystem {
    AtomA,
    AtomB,
    ModeA,
    ModeB,
}

impl Subsystem {
    /// Position in the atomA ⊗ atomB ⊗ modeA ⊗ modeB product.
    pub fn slot(self) -> usize {
        match self {
            Subsystem::AtomA => 0,
            Subsystem::AtomB => 1,
            Subsystem::ModeA => 2,
            Subsystem::ModeB => 3,
        }
    }

    pub fn is_mode(self) -> bool {
        matches!(self, Subsystem::ModeA | Subsystem::ModeB)
    }
}

impl fmt::Display for Subsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Subsystem::AtomA => "atom A",
            Subsystem::AtomB => "atom B",
            Subsystem::ModeA => "cavity mode a",
            Subsystem::ModeB => "cavity mode b",
        };
        f.write_str(name)
    }
}

/// One of the six subsystem pairs, with a fixed (first ⊗ second) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubsystemPair {
    /// atom A ⊗ atom B
    AB,
    /// mode a ⊗ mode b
    #[allow(non_camel_case_types)]
    ab,
    /// atom A ⊗ mode a
    Aa,
    /// atom B ⊗ mode b
    Bb,
    /// atom A ⊗ mode b
    Ab,
    /// atom B ⊗ mode a
    Ba,
}

impl SubsystemPair {
    pub const ALL: [SubsystemPair; 6] = [
        SubsystemPair::AB,
        SubsystemPair::ab,
        SubsystemPair::Aa,
        SubsystemPair::Bb,
        SubsystemPair::Ab,
        SubsystemPair::Ba,
    ];

    pub fn first(self) -> Subsystem {
        self.parts().0
    }

    pub fn second(self) -> Subsystem {
        self.parts().1
    }

    pub fn parts(self) -> (Subsystem, Subsystem) {
        use Subsystem::*;
        match self {
            SubsystemPair::AB => (AtomA, AtomB),
            SubsystemPair::ab => (ModeA, ModeB),
            SubsystemPair::Aa => (AtomA, ModeA),
            SubsystemPair::Bb => (AtomB, ModeB),
            SubsystemPair::Ab => (AtomA, ModeB),
            SubsystemPair::Ba => (AtomB, ModeA),
        }
    }

    /// The pair containing both subsystems, in either order.
    pub fn from_subsystems(x: Subsystem, y: Subsystem) -> Option<Self> {
        Self::ALL.into_iter().find(|p| {
            let (a, b) = p.parts();
            (a, b) == (x, y) || (a, b) == (y, x)
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            SubsystemPair::AB => "AB",
            SubsystemPair::ab => "ab",
            SubsystemPair::Aa => "Aa",
            SubsystemPair::Bb => "Bb",
            SubsystemPair::Ab => "Ab",
            SubsystemPair::Ba => "Ba",
        }
    }
}

impl fmt::Display for SubsystemPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SubsystemPair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|p| p.label() == s)
            .ok_or_else(|| format!("unknown subsystem pair '{s}' (expected AB, ab, Aa, Bb, Ab or Ba)"))
    }
}

/// Factor `F` (4×K) of the reduced state of `pair`, `ρ = F F†`: column `k`
/// holds the retained-pair amplitudes for the k-th configuration of the
/// traced-out subsystems. Retained modes are cut to their 0/1 photon levels.
fn reduced_factor(
    state: &PureState,
    pair: SubsystemPair,
) -> Result<DMatrix<Complex64>, NumericsError> {
    let (first, second) = pair.parts();
    let (s1, s2) = (first.slot(), second.slot());
    let rest: Vec<usize> = (0..4).filter(|k| *k != s1 && *k != s2).collect();
    let cutoff = state.cutoff();
    let levels = cutoff + 1;
    let rest_dim = |slot: usize| if slot < 2 { 2 } else { levels };

    let mut leaked = [0.0f64; 4];
    let mut factor = DMatrix::<Complex64>::zeros(4, rest_dim(rest[0]) * rest_dim(rest[1]));
    for (i, z) in state.amplitudes().iter().enumerate() {
        let lv = BasisIndex::from_flat(i, cutoff).levels();
        if lv[s1] > 1 || lv[s2] > 1 {
            for s in [s1, s2] {
                if lv[s] > 1 {
                    leaked[s] += z.norm_sqr();
                }
            }
            continue;
        }
        let col = lv[rest[0]] * rest_dim(rest[1]) + lv[rest[1]];
        let row = (1 - lv[s1]) * 2 + (1 - lv[s2]);
        factor[(row, col)] = *z;
    }
    for sub in [first, second] {
        let population = leaked[sub.slot()];
        if population > QUBIT_LEAKAGE_TOL {
            return Err(NumericsError::QubitEquivalence {
                subsystem: sub,
                population,
            });
        }
    }
    // renormalize away the tolerated sub-threshold leakage
    if leaked.iter().any(|p| *p > 0.0) {
        let norm = factor.norm();
        factor /= Complex64::from(norm);
    }
    Ok(factor)
}

/// Reduced 4×4 density matrix of `pair`, ordered (first ⊗ second) in the
/// standard excited-first basis.
///
/// Retained cavity modes are treated as qubits on their 0/1 photon levels;
/// more than [`QUBIT_LEAKAGE_TOL`] population above one photon is an error.
pub fn partial_trace_pair(
    state: &PureState,
    pair: SubsystemPair,
) -> Result<DensityMatrix, NumericsError> {
    let f = reduced_factor(state, pair)?;
    let rho = &f * f.adjoint();
    Ok(DensityMatrix::standard(Matrix4::from_fn(|i, j| rho[(i, j)])))
}

/// Unclamped Wootters value of the reduced state of `pair`, computed from the
/// pure-state amplitudes directly.
pub fn pair_signed_concurrence(
    state: &PureState,
    pair: SubsystemPair,
) -> Result<f64, NumericsError> {
    Ok(wootters_signed_factor(&reduced_factor(state, pair)?))
}

pub fn pair_concurrence(state: &PureState, pair: SubsystemPair) -> Result<f64, NumericsError> {
    Ok(pair_signed_concurrence(state, pair)?.clamp(0.0, 1.0))
}
