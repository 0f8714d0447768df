#![allow(dead_code)]

use std::f64::consts::PI;

use double_jc::density::DensityMatrix;
use double_jc::model::basis_dim;
use double_jc::numerics::spin_flip;
use double_jc::{ModelParams, PureState};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub struct Sample {
    pub alpha: f64,
    pub params: ModelParams,
    pub t: f64,
}

/// α ∈ [0, π/2), Δ ∈ [−2, 2], G ∈ [0.2, 3], ν = 10G, t ∈ [0, 20].
pub fn random_samples(seed: u64, count: usize) -> Vec<Sample> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let alpha = rng.gen_range(0.0..PI / 2.0);
        let delta = rng.gen_range(-2.0..2.0);
        let big_g = rng.gen_range(0.2..3.0);
        let t = rng.gen_range(0.0..20.0);
        if let Ok(params) = ModelParams::from_detuning(delta, big_g, 10.0 * big_g) {
            out.push(Sample { alpha, params, t });
        }
    }
    out
}

pub fn random_state(rng: &mut impl Rng) -> PureState {
    let v: Vec<Complex64> = (0..basis_dim(1))
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    PureState::from_vec(v.into_iter().map(|z| z / norm).collect(), 1)
}

/// Concurrence from a direct non-Hermitian eigen-solve of `ρρ̃`.
pub fn brute_force_concurrence(rho: &DensityMatrix) -> f64 {
    let r = rho.entries() * spin_flip(rho).entries();
    let eig = r.schur().eigenvalues().expect("complex Schur form is triangular");
    let mut roots: Vec<f64> = eig.iter().map(|mu| mu.re.max(0.0).sqrt()).collect();
    roots.sort_by(|a, b| b.total_cmp(a));
    (roots[0] - roots[1] - roots[2] - roots[3]).max(0.0)
}

/// `p |Ψ⁻⟩⟨Ψ⁻| + (1 − p) I/4`.
pub fn werner(p: f64) -> DensityMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let singlet = nalgebra::Vector4::new(0.0.into(), h.into(), (-h).into(), 0.0.into());
    let m: nalgebra::Matrix4<Complex64> = singlet * singlet.adjoint() * Complex64::from(p)
        + nalgebra::Matrix4::identity() * Complex64::from((1.0 - p) / 4.0);
    DensityMatrix::standard(m)
}
