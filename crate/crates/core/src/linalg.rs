//! Fixed-size matrix aliases and the handful of helpers shared by the
//! propagation and entropy code.

use nalgebra::{Matrix2, Matrix4, SymmetricEigen};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMat2 = Matrix2<C64>;
pub type CMat4 = Matrix4<C64>;
pub type RMat4 = Matrix4<f64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

/// Pauli matrices σ₁, σ₂, σ₃.
pub fn pauli() -> [CMat2; 3] {
    [
        CMat2::new(ZERO, ONE, ONE, ZERO),
        CMat2::new(ZERO, -I, I, ZERO),
        CMat2::new(ONE, ZERO, ZERO, -ONE),
    ]
}

pub fn to_complex(m: &RMat4) -> CMat4 {
    m.map(|x| C64::new(x, 0.0))
}

/// `a ⊗ b` for two 2×2 matrices; `a` acts on the outer (flavour or block) index.
pub fn kron2(a: &CMat2, b: &CMat2) -> CMat4 {
    CMat4::from_fn(|i, j| a[(i / 2, j / 2)] * b[(i % 2, j % 2)])
}

/// Largest entry of |ρ − ρ†|.
pub fn hermiticity_residual(m: &CMat4) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

pub fn max_abs_diff(a: &CMat4, b: &CMat4) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Eigenvalues of a Hermitian 4×4 matrix, sorted in descending order.
///
/// The input is symmetrised first so that rounding-level anti-Hermitian
/// noise cannot leak into the spectrum.
pub fn hermitian_eigenvalues4(m: &CMat4) -> [f64; 4] {
    let h = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(h);
    let mut out = [0.0; 4];
    for (o, v) in out.iter_mut().zip(eig.eigenvalues.iter()) {
        *o = *v;
    }
    sort_desc(&mut out);
    out
}

pub fn hermitian_eigenvalues2(m: &CMat2) -> [f64; 2] {
    let h = (m + m.adjoint()) * C64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(h);
    let mut out = [eig.eigenvalues[0], eig.eigenvalues[1]];
    sort_desc(&mut out);
    out
}

pub fn real_symmetric_eigenvalues4(m: &RMat4) -> [f64; 4] {
    let eig = SymmetricEigen::new(*m);
    let mut out = [0.0; 4];
    for (o, v) in out.iter_mut().zip(eig.eigenvalues.iter()) {
        *o = *v;
    }
    sort_desc(&mut out);
    out
}

pub fn sort_desc(v: &mut [f64]) {
    v.sort_by(|a, b| b.total_cmp(a));
}

pub fn orthogonality_residual(t: &RMat4) -> f64 {
    (t * t.transpose() - RMat4::identity()).abs().max()
}
