//! Closed-form spectra of the reduced and measured states.
//!
//! Every matrix involved is, after a suitable reordering, block diagonal
//! with 2×2 blocks, so each eigenvalue pair is
//! λ± = (a + d ± √((a − d)² + 4|b|²))/2 for a block [[a, b], [b*, d]].

use crate::basis::{BasisTag, DensityMatrix4};
use crate::error::Result;
use crate::linalg::{sort_desc, CMat2, C64};

use super::measurement::eigenvectors;

/// Eigenvalues of the Hermitian block [[a, b], [b*, d]], descending.
pub fn pair(a: f64, d: f64, b: C64) -> [f64; 2] {
    let root = ((a - d) * (a - d) + 4.0 * b.norm_sqr()).sqrt();
    [0.5 * (a + d + root), 0.5 * (a + d - root)]
}

pub fn eigenvalues2(m: &CMat2) -> [f64; 2] {
    pair(m[(0, 0)].re, m[(1, 1)].re, 0.5 * (m[(0, 1)] + m[(1, 0)].conj()))
}

/// Spectrum of ρ_ν from the flavour-basis entries.
pub fn flavour_eigenvalues(rho: &DensityMatrix4) -> Result<[f64; 2]> {
    rho.require_basis(BasisTag::Flavour)?;
    let m = rho.entries();
    let a = m[(0, 0)].re + m[(1, 1)].re;
    let d = m[(2, 2)].re + m[(3, 3)].re;
    let b = m[(0, 2)] + m[(1, 3)];
    Ok(pair(a, d, b))
}

fn merge(x: [f64; 2], y: [f64; 2]) -> [f64; 4] {
    let mut out = [x[0], x[1], y[0], y[1]];
    sort_desc(&mut out);
    out
}

/// Spectrum of ρ_Rν: one block per helicity, coupling e and μ.
pub fn r_eigenvalues(rho: &DensityMatrix4) -> Result<[f64; 4]> {
    rho.require_basis(BasisTag::Flavour)?;
    let m = rho.entries();
    let right = pair(m[(0, 0)].re, m[(2, 2)].re, m[(0, 2)]);
    let left = pair(m[(1, 1)].re, m[(3, 3)].re, m[(1, 3)]);
    Ok(merge(right, left))
}

/// Spectrum of ρ_Qν, from the ρ_±± entries in the |f, ±⟩ basis with
/// |±⟩ = (|R⟩ ± |L⟩)/√2:
/// ⟨f±|ρ|g±⟩ = ½(ρ_{fR,gR} + ρ_{fL,gL} ± ρ_{fR,gL} ± ρ_{fL,gR}).
pub fn q_eigenvalues(rho: &DensityMatrix4) -> Result<[f64; 4]> {
    rho.require_basis(BasisTag::Flavour)?;
    let m = rho.entries();
    let entry = |f: usize, g: usize, sign: f64| {
        let (fr, fl, gr, gl) = (2 * f, 2 * f + 1, 2 * g, 2 * g + 1);
        (m[(fr, gr)] + m[(fl, gl)] + (m[(fr, gl)] + m[(fl, gr)]) * sign) * 0.5
    };
    let block = |sign: f64| pair(entry(0, 0, sign).re, entry(1, 1, sign).re, entry(0, 1, sign));
    Ok(merge(block(1.0), block(-1.0)))
}

/// Flavour blocks ⟨f, ±n|ρ|g, ±n⟩ of the state measured along n. Their
/// traces are the outcome probabilities and their spectra together form
/// the spectrum of the post-measurement state.
pub fn measured_blocks(rho: &DensityMatrix4, n: &[f64; 3]) -> [CMat2; 2] {
    let m = rho.entries();
    eigenvectors(n).map(|u| {
        CMat2::from_fn(|f, g| {
            let mut acc = C64::new(0.0, 0.0);
            for h in 0..2 {
                for k in 0..2 {
                    acc += u[h].conj() * m[(2 * f + h, 2 * g + k)] * u[k];
                }
            }
            acc
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::{project_q, project_r, project_spin, reduce_flavour};
    use crate::linalg::{hermitian_eigenvalues2, hermitian_eigenvalues4, CMat4};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_state(rng: &mut StdRng) -> DensityMatrix4 {
        let a = CMat4::from_fn(|_, _| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
        let m = a * a.adjoint();
        let tr = m.trace();
        DensityMatrix4::new(m / tr, BasisTag::Flavour).unwrap()
    }

    fn assert_close<const N: usize>(a: [f64; N], b: [f64; N], tol: f64) {
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() < tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn closed_forms_match_eigensolver() {
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..100 {
            let rho = random_state(&mut rng);
            let nu = reduce_flavour(&rho).unwrap();
            assert_close(flavour_eigenvalues(&rho).unwrap(), hermitian_eigenvalues2(&nu), 1e-12);
            assert_close(eigenvalues2(&nu), hermitian_eigenvalues2(&nu), 1e-12);
            let r = project_r(&rho).unwrap();
            assert_close(r_eigenvalues(&rho).unwrap(), hermitian_eigenvalues4(r.entries()), 1e-12);
            let q = project_q(&rho).unwrap();
            assert_close(q_eigenvalues(&rho).unwrap(), hermitian_eigenvalues4(q.entries()), 1e-12);
        }
    }

    #[test]
    fn measured_blocks_match_projection() {
        let mut rng = StdRng::seed_from_u64(22);
        for _ in 0..20 {
            let rho = random_state(&mut rng);
            let (t, p) = (rng.random_range(0.0..3.0f64), rng.random_range(0.0..6.0f64));
            let n = [t.sin() * p.cos(), t.sin() * p.sin(), t.cos()];
            let [a, b] = measured_blocks(&rho, &n);
            let mut blocks = [eigenvalues2(&a), eigenvalues2(&b)].concat();
            sort_desc(&mut blocks);
            let post = project_spin(&rho, &n).unwrap();
            let direct = hermitian_eigenvalues4(post.entries());
            assert_close([blocks[0], blocks[1], blocks[2], blocks[3]], direct, 1e-12);
            assert!((a.trace().re + b.trace().re - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn diagonal_mixture_spectra() {
        let a = [0.1, 0.2, 0.3, 0.4];
        let rho = DensityMatrix4::diagonal_mixture(a).unwrap();
        assert_close(r_eigenvalues(&rho).unwrap(), [0.4, 0.3, 0.2, 0.1], 1e-15);
        // (a₁ + a₃)/2 twice and (a₂ + a₄)/2 twice
        assert_close(q_eigenvalues(&rho).unwrap(), [0.3, 0.3, 0.2, 0.2], 1e-15);
    }
}
