//! Roots of a monic cubic with real coefficients.

use crate::linalg::C64;

/// Roots of λ³ + aλ² + bλ + c, sorted by real part then imaginary part,
/// both descending. Complex roots come out as exact conjugate pairs.
///
/// One real root is taken from Cardano's formula and polished by Newton
/// steps; the remaining quadratic factor is solved directly.
pub fn cubic_roots(a: f64, b: f64, c: f64) -> [C64; 3] {
    let r = polish_real(real_root(a, b, c), a, b, c);
    // λ³ + aλ² + bλ + c = (λ − r)(λ² + pλ + q)
    let p = a + r;
    let q = b + p * r;
    let disc = p * p - 4.0 * q;
    let mut roots = if disc >= 0.0 {
        let s = disc.sqrt();
        let big = -0.5 * (p + p.signum() * s);
        let (x1, x2) = if big == 0.0 { (0.0, 0.0) } else { (big, q / big) };
        [
            C64::new(r, 0.0),
            C64::new(polish_real(x1, a, b, c), 0.0),
            C64::new(polish_real(x2, a, b, c), 0.0),
        ]
    } else {
        let z = polish_complex(C64::new(-0.5 * p, 0.5 * (-disc).sqrt()), a, b, c);
        [C64::new(r, 0.0), z, z.conj()]
    };
    let scale = roots.iter().map(|x| x.norm()).fold(1.0, f64::max);
    roots.sort_by(|x, y| {
        if (x.re - y.re).abs() <= 1e-12 * scale {
            y.im.total_cmp(&x.im)
        } else {
            y.re.total_cmp(&x.re)
        }
    });
    roots
}

fn real_root(a: f64, b: f64, c: f64) -> f64 {
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    if p == 0.0 && q == 0.0 {
        return -shift;
    }
    let disc = C64::new(q * q / 4.0 + p * p * p / 27.0, 0.0).sqrt();
    let half_q = C64::new(-q / 2.0, 0.0);
    let (u1, u2) = (half_q + disc, half_q - disc);
    let u = if u1.norm() >= u2.norm() { u1 } else { u2 }.cbrt();
    let omega = C64::new(-0.5, 3f64.sqrt() / 2.0);
    let mut best = f64::NAN;
    let mut best_im = f64::INFINITY;
    let mut w = C64::new(1.0, 0.0);
    for _ in 0..3 {
        let uk = u * w;
        let t = uk - p / (3.0 * uk);
        if t.im.abs() < best_im {
            best_im = t.im.abs();
            best = t.re;
        }
        w *= omega;
    }
    best - shift
}

fn polish_real(mut x: f64, a: f64, b: f64, c: f64) -> f64 {
    for _ in 0..6 {
        let f = ((x + a) * x + b) * x + c;
        let df = (3.0 * x + 2.0 * a) * x + b;
        if df == 0.0 {
            break;
        }
        let step = f / df;
        x -= step;
        if step.abs() <= 1e-16 * x.abs().max(1.0) {
            break;
        }
    }
    x
}

fn polish_complex(mut x: C64, a: f64, b: f64, c: f64) -> C64 {
    for _ in 0..6 {
        let f = ((x + a) * x + b) * x + c;
        let df = (3.0 * x + 2.0 * a) * x + b;
        if df.norm() == 0.0 {
            break;
        }
        let step = f / df;
        x -= step;
        if step.norm() <= 1e-16 * x.norm().max(1.0) {
            break;
        }
    }
    x
}
