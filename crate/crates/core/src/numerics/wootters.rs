use nalgebra::{DMatrix, Matrix2, Matrix4};
use num_complex::Complex64;

use super::NumericsError;
use crate::density::DensityMatrix;

/// `σ_y ⊗ σ_y` in the standard `↑↑, ↑↓, ↓↑, ↓↓` order, with
/// `σ_y = [[0, −i], [i, 0]]` on `{|↑⟩, |↓⟩}`.
fn sigma_yy() -> Matrix4<Complex64> {
    let i = Complex64::i();
    let zero = Complex64::default();
    let sy = Matrix2::new(zero, -i, i, zero);
    sy.kronecker(&sy)
}

/// Spin-flipped state `ρ̃ = (σ_y ⊗ σ_y) ρ* (σ_y ⊗ σ_y)` in the standard order.
pub fn spin_flip(rho: &DensityMatrix) -> DensityMatrix {
    let yy = sigma_yy();
    let std = rho.to_standard_order();
    DensityMatrix::standard(yy * std.entries().conjugate() * yy)
}

/// Eigenvalues of `ρ` below this are treated as round-off and dropped from the
/// factorization used for the concurrence spectrum.
pub const RANK_TOL: f64 = 1e-13;

/// Descending `√μᵢ` for `ρ = F F†`, where `F` is any 4×K factor.
///
/// The `√μᵢ` are the singular values of `τ = Fᵀ (σ_y ⊗ σ_y) F`. The factor is
/// first compressed to 4×4 through a QR decomposition of `F†`, which leaves
/// the singular values unchanged.
fn spectrum_from_factor(factor: &DMatrix<Complex64>) -> [f64; 4] {
    let k = factor.ncols().max(4);
    let mut padded = DMatrix::<Complex64>::zeros(4, k);
    padded.columns_mut(0, factor.ncols()).copy_from(factor);
    let r = padded.adjoint().qr().unpack_r();
    let lower = Matrix4::from_fn(|i, j| r[(j, i)].conj());
    let tau = lower.transpose() * sigma_yy() * lower;
    let mut s: [f64; 4] = tau.singular_values().into();
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

fn signed_from_spectrum(s: [f64; 4]) -> f64 {
    s[0] - s[1] - s[2] - s[3]
}

/// Unclamped `√μ₁ − √μ₂ − √μ₃ − √μ₄`, where `μᵢ` are the eigenvalues of
/// `ρρ̃` in descending order. Negative values mark separable states.
///
/// `ρ` is factored through its eigendecomposition; eigenvalues in
/// `[−1e-10, 0)` are clamped and those below [`RANK_TOL`] dropped.
pub fn wootters_signed(rho: &DensityMatrix) -> Result<f64, NumericsError> {
    rho.validate()?;
    let std = rho.to_standard_order();
    let herm = (std.entries() + std.entries().adjoint()).scale(0.5);
    let eig = herm.symmetric_eigen();
    let kept: Vec<usize> = (0..4).filter(|&i| eig.eigenvalues[i] > RANK_TOL).collect();
    let mut factor = DMatrix::<Complex64>::zeros(4, kept.len());
    for (col, &i) in kept.iter().enumerate() {
        let w = eig.eigenvectors.column(i) * Complex64::from(eig.eigenvalues[i].sqrt());
        factor.set_column(col, &w);
    }
    Ok(signed_from_spectrum(spectrum_from_factor(&factor)))
}

/// Signed value for `ρ = F F†` given the factor directly, e.g. the grouped
/// amplitudes of a pure state. Avoids taking square roots of round-off
/// eigenvalues.
pub fn wootters_signed_factor(factor: &DMatrix<Complex64>) -> f64 {
    assert_eq!(factor.nrows(), 4, "factor must have four rows");
    signed_from_spectrum(spectrum_from_factor(factor))
}

/// Wootters concurrence `max{0, √μ₁ − √μ₂ − √μ₃ − √μ₄}`, clamped to `[0, 1]`.
pub fn wootters_concurrence(rho: &DensityMatrix) -> Result<f64, NumericsError> {
    Ok(wootters_signed(rho)?.clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::DensityError;
    use nalgebra::Vector4;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn bell_states_are_maximally_entangled() {
        let h = c(FRAC_1_SQRT_2);
        for v in [
            Vector4::new(c(0.0), h, h, c(0.0)),
            Vector4::new(c(0.0), h, -h, c(0.0)),
            Vector4::new(h, c(0.0), c(0.0), h),
            Vector4::new(h, c(0.0), c(0.0), Complex64::new(0.0, FRAC_1_SQRT_2)),
        ] {
            let cval = wootters_concurrence(&DensityMatrix::projector(v)).unwrap();
            assert!((cval - 1.0).abs() < 1e-12, "{cval}");
        }
    }

    #[test]
    fn product_states_are_separable() {
        let a = nalgebra::Vector2::new(c(0.6), Complex64::new(0.0, 0.8));
        let b = nalgebra::Vector2::new(c(FRAC_1_SQRT_2), c(-FRAC_1_SQRT_2));
        let v = a.kronecker(&b);
        let psi = Vector4::new(v[0], v[1], v[2], v[3]);
        assert!(wootters_concurrence(&DensityMatrix::projector(psi)).unwrap() < 1e-12);
        let mixed = DensityMatrix::standard(Matrix4::identity().scale(0.25));
        assert_eq!(wootters_concurrence(&mixed).unwrap(), 0.0);
        assert!(wootters_signed(&mixed).unwrap() < -0.49);
    }

    #[test]
    fn partially_entangled_pure_state() {
        let a: f64 = 0.3;
        let psi = Vector4::new(c(0.0), c(a.cos()), c(a.sin()), c(0.0));
        let cval = wootters_concurrence(&DensityMatrix::projector(psi)).unwrap();
        assert!((cval - (2.0 * a).sin()).abs() < 1e-12);
    }

    #[test]
    fn rejects_invalid_input() {
        let mut m = Matrix4::identity().scale(0.25);
        m[(0, 1)] = c(0.1);
        assert!(matches!(
            wootters_concurrence(&DensityMatrix::standard(m)),
            Err(NumericsError::Density(DensityError::NotHermitian(_)))
        ));
        let m = Matrix4::identity().scale(0.3);
        assert!(matches!(
            wootters_concurrence(&DensityMatrix::standard(m)),
            Err(NumericsError::Density(DensityError::BadTrace(_)))
        ));
    }
}
