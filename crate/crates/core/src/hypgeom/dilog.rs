//! The Bloch–Wigner dilogarithm
//! `D(z) = Im Li₂(z) + arg(1 − z) · ln|z|`, the signed volume of the ideal
//! tetrahedron with cross-ratio `z`.
//!
//! `D` is real-analytic away from `{0, 1, ∞}` and satisfies
//! `D(z) = D(1 − 1/z) = D(1/(1 − z)) = −D(1/z) = −D(1 − z) = −D(z/(z − 1))`.
//! Every `z` has an image under these six maps in the region
//! `|w| ≤ 1, Re w ≤ 1/2`, where `u = −ln(1 − w)` satisfies `|u| < 1.3`
//! and the Bernoulli series `Li₂(w) = Σ B_n uⁿ⁺¹ / (n + 1)!` converges fast.

use num_complex::Complex64;

use super::BoundaryPoint;

/// Maximum of `D`, attained at `e^{iπ/3}`; the volume of the regular ideal
/// tetrahedron.
pub const BLOCH_WIGNER_MAX: f64 = 1.014_941_606_409_653_5;

/// `B_{2k} / (2k + 1)!` for `k = 1..`.
#[allow(clippy::excessive_precision)]
const BERNOULLI_COEFFS: [f64; 18] = [
    2.777_777_777_777_777_6e-2,
    -2.777_777_777_777_777_8e-4,
    4.724_111_866_969_009_8e-6,
    -9.185_773_074_661_964e-8,
    1.897_886_998_897_100e-9,
    -4.064_761_645_144_225_6e-11,
    8.921_691_020_456_452e-13,
    -1.993_929_586_072_107_4e-14,
    4.518_980_029_619_918e-16,
    -1.035_651_761_218_124_7e-17,
    2.395_218_621_026_187e-19,
    -5.581_785_874_325_009e-21,
    1.309_150_755_418_321_3e-22,
    -3.087_419_802_426_740_3e-24,
    7.315_975_652_702_203e-26,
    -1.740_845_657_234_000_9e-27,
    4.157_635_644_613_900e-29,
    -9.962_148_488_284_622e-31,
];

/// `Li₂(w)` for `|w| ≤ 1, Re w ≤ 1/2`.
fn li2_reduced(w: Complex64) -> Complex64 {
    let u = -(Complex64::new(1.0, 0.0) - w).ln();
    let u2 = u * u;
    let mut sum = u - u2 * 0.25;
    let mut power = u;
    for c in BERNOULLI_COEFFS {
        power *= u2;
        let term = power * c;
        sum += term;
        if term.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    sum
}

fn bloch_wigner_reduced(w: Complex64) -> f64 {
    if w.norm() == 0.0 {
        return 0.0;
    }
    let one_minus = Complex64::new(1.0, 0.0) - w;
    li2_reduced(w).im + one_minus.arg() * w.norm().ln()
}

/// The six images of `z` under the anharmonic group, with the sign `D`
/// picks up along each map.
fn orbit(z: Complex64) -> [(Complex64, f64); 6] {
    let one = Complex64::new(1.0, 0.0);
    [
        (z, 1.0),
        (one / (one - z), 1.0),
        (one - one / z, 1.0),
        (one / z, -1.0),
        (one - z, -1.0),
        (z / (z - one), -1.0),
    ]
}

/// Bloch–Wigner dilogarithm. Exactly 0 on the real axis (including 0 and 1)
/// and for non-finite input.
pub fn bloch_wigner(z: Complex64) -> f64 {
    if !z.re.is_finite() || !z.im.is_finite() || z.im == 0.0 {
        return 0.0;
    }
    let (w, sign) = orbit(z)
        .into_iter()
        .filter(|(w, _)| w.re <= 0.5 && w.norm() <= 1.0 + 1e-12)
        .min_by(|a, b| a.0.norm().total_cmp(&b.0.norm()))
        .unwrap_or((z, 1.0));
    sign * bloch_wigner_reduced(w)
}

/// [`bloch_wigner`] extended to the Riemann sphere; `D(∞) = 0`.
pub fn bloch_wigner_point(p: BoundaryPoint) -> f64 {
    match p {
        BoundaryPoint::Finite(z) => bloch_wigner(z),
        BoundaryPoint::Infinity => 0.0,
    }
}
