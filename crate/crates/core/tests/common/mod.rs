//! Test-only reference values, computed without the library's dilogarithm.

#![allow(dead_code)]

use num_complex::Complex64;
use qvol::hypgeom::BoundaryPoint;

/// `Σ zⁿ/n²`, for `|z| ≤ 1/2`.
pub fn li2_series(z: Complex64) -> Complex64 {
    assert!(z.norm() <= 0.5 + 1e-12);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut p = z;
    for n in 1..200 {
        let term = p / (n * n) as f64;
        sum += term;
        if term.norm() < 1e-18 {
            break;
        }
        p *= z;
    }
    sum
}

/// Gauss–Legendre nodes and weights on `[-1, 1]` by Newton iteration.
fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    (1..=n)
        .map(|i| {
            let mut x = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            loop {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    let w = 2.0 / ((1.0 - x * x) * dp * dp);
                    return (x, w);
                }
            }
        })
        .collect()
}

/// `Li₂(z) = −∫₀¹ ln(1 − zt)/t dt`, composite Gauss–Legendre on panels
/// refined geometrically toward `t = 1`.
pub fn li2_quadrature(z: Complex64) -> Complex64 {
    let nodes = gauss_legendre(24);
    let mut breaks = vec![0.0];
    for k in 1..=40 {
        breaks.push(1.0 - 0.5_f64.powi(k));
    }
    breaks.push(1.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for pair in breaks.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let (mid, half) = ((a + b) / 2.0, (b - a) / 2.0);
        for &(x, w) in &nodes {
            let t = mid + half * x;
            let f = if t == 0.0 {
                -z
            } else {
                (Complex64::new(1.0, 0.0) - z * t).ln() / t
            };
            sum -= f * w * half;
        }
    }
    sum
}

fn d_from_li2(z: Complex64, li2: Complex64) -> f64 {
    li2.im + (Complex64::new(1.0, 0.0) - z).arg() * z.norm().ln()
}

/// Reference Bloch–Wigner value: the series when some image of `z` under
/// `1/z`, `1 − z` and their compositions lies in `|w| ≤ 1/2`, quadrature
/// otherwise.
pub fn bloch_wigner_oracle(z: Complex64) -> f64 {
    if z.im == 0.0 {
        return 0.0;
    }
    let one = Complex64::new(1.0, 0.0);
    let orbit = [
        (z, 1.0),
        (one / (one - z), 1.0),
        (one - one / z, 1.0),
        (one / z, -1.0),
        (one - z, -1.0),
        (z / (z - one), -1.0),
    ];
    let (w, s) = orbit
        .into_iter()
        .min_by(|a, b| a.0.norm().total_cmp(&b.0.norm()))
        .unwrap();
    if w.norm() <= 0.5 {
        s * d_from_li2(w, li2_series(w))
    } else {
        s * d_from_li2(w, li2_quadrature(w))
    }
}

pub fn pt(re: f64, im: f64) -> BoundaryPoint {
    BoundaryPoint::finite(re, im)
}

pub const SQRT3: f64 = 1.732_050_807_568_877_2;
