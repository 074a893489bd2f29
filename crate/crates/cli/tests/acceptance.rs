//! End-to-end acceptance checks. Prints one `criterion N: PASS|FAIL` line
//! per check and exits non-zero if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::path::PathBuf;
use std::process::{Command, ExitCode};

use common::{bloch_wigner_oracle, pt, SQRT3};
use num_complex::Complex64;
use qvol::fixtures::{
    fig8_diagram, fig8_holonomy, fig8_holonomy_reversed, fig8_r2_diagram, fig8_r2_holonomy,
    FIG8_VOLUME,
};
use qvol::holquandle::{enumerate_conjugates, HolonomyRep};
use qvol::hypgeom::{bloch_wigner, BoundaryPoint, IdealTetrahedron, MoebiusMap};
use qvol::invariant::{
    cocycle_residuals, cocycle_vol, default_base_meridian, reference_volume, survey,
    symmetry_report, KSurvey,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn check(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn qvol(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qvol"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn json(args: &[&str]) -> Result<serde_json::Value, String> {
    let (code, out, err) = qvol(args);
    check(code == 0, format!("qvol {args:?} exited {code}: {err}"))?;
    serde_json::from_str(&out).map_err(|e| e.to_string())
}

fn tet(v: [BoundaryPoint; 4]) -> f64 {
    IdealTetrahedron::new(v[0], v[1], v[2], v[3]).volume()
}

const INF: BoundaryPoint = BoundaryPoint::Infinity;

fn omega() -> BoundaryPoint {
    pt(0.5, SQRT3 / 2.0)
}

fn omega_bar() -> BoundaryPoint {
    pt(0.5, -SQRT3 / 2.0)
}

fn minus_omega_bar() -> BoundaryPoint {
    pt(-0.5, SQRT3 / 2.0)
}

fn random_complex(rng: &mut StdRng, r: f64) -> Complex64 {
    Complex64::new(rng.gen_range(-r..r), rng.gen_range(-r..r))
}

fn criterion_1() -> Outcome {
    let z = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3);
    let (d, oracle) = (bloch_wigner(z), bloch_wigner_oracle(z));
    check(
        (d - 1.014_941_606_409_653_5).abs() < 1e-10,
        format!("D = {d}"),
    )?;
    check((d - oracle).abs() < 1e-10, format!("oracle {oracle}"))?;
    let (code, out, _) = qvol(&["dilog", "0.5", "0.8660254037844386"]);
    check(
        code == 0 && out.trim() == "1.014941606410",
        format!("cli printed {out:?}"),
    )?;
    let mut rng = StdRng::seed_from_u64(1);
    let one = Complex64::new(1.0, 0.0);
    let mut worst = 0.0_f64;
    for _ in 0..1000 {
        let z = random_complex(&mut rng, 4.0);
        let d = bloch_wigner(z);
        for e in [
            bloch_wigner(z.conj()),
            bloch_wigner(one / z),
            bloch_wigner(one - z),
        ] {
            worst = worst.max((e + d).abs());
        }
    }
    check(worst < 1e-12, format!("symmetry residual {worst:e}"))?;
    Ok(format!(
        "D(e^(i pi/3)) = {d:.16}, oracle diff {:.1e}, symmetry residual {worst:.1e}",
        (d - oracle).abs()
    ))
}

fn criterion_2() -> Outcome {
    let v = tet([pt(0.0, 0.0), minus_omega_bar(), INF, omega()])
        - tet([pt(0.0, 0.0), INF, omega(), pt(1.0, 0.0)]);
    let two_d = 2.0 * bloch_wigner(Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3));
    check(
        (v - 2.029_883_212_819_3).abs() < 1e-9,
        format!("chain = {v}"),
    )?;
    check((v - two_d).abs() < 1e-12, format!("2D = {two_d}"))?;
    Ok(format!("chain = {v:.13}"))
}

fn criterion_3() -> Outcome {
    let zero = pt(0.0, 0.0);
    let one = pt(1.0, 0.0);
    let ex2 = tet([zero, pt(-1.0, 0.0), minus_omega_bar(), INF])
        - tet([zero, minus_omega_bar(), INF, omega()]);
    let ex3 = tet([zero, one, omega(), INF]) - tet([zero, omega_bar(), INF, one]);
    let ex4 = tet([zero, omega(), INF, minus_omega_bar()])
        - tet([zero, pt(0.0, SQRT3 / 3.0), minus_omega_bar(), omega()]);
    let v = FIG8_VOLUME;
    for (name, got, want) in [("2", ex2, -v), ("3", ex3, v), ("4", ex4, -v)] {
        check((got - want).abs() < 1e-9, format!("example {name}: {got}"))?;
    }
    // the same sums from the shadow colorings, through the command line
    let d = fixture("fig8_coloring_2.json");
    let k2 = json(&["invariant", "--fixture", "fig8", "--coloring", &d, "--json"])?["k"].clone();
    let d = fixture("fig8_coloring_3.json");
    let k3 = json(&["invariant", "--fixture", "fig8", "--coloring", &d, "--json"])?["k"].clone();
    check(k2 == -1 && k3 == 1, format!("coloring k values {k2}, {k3}"))?;
    Ok(format!("{ex2:.12}, {ex3:.12}, {ex4:.12}"))
}

fn criterion_4() -> Outcome {
    let h = fig8_holonomy();
    let fp = |w: &str| {
        h.element_from_str(w)
            .map(|e| e.fixed_point())
            .map_err(|e| e.to_string())
    };
    let expected = [
        ("w", pt(0.0, 0.0)),
        ("y", INF),
        ("z", omega()),
        ("x", pt(1.0, 0.0)),
        ("z^-1 y z", minus_omega_bar()),
    ];
    for (w, p) in expected {
        let got = fp(w)?;
        check(got.chordal_distance(&p) < 1e-10, format!("{w}: {got:?}"))?;
    }
    Ok("w, y, z, x, y*z fixed points match".into())
}

fn criterion_5() -> Outcome {
    let h = fig8_holonomy();
    let pool = enumerate_conjugates(&h, 2);
    let mut worst = 0.0_f64;
    for (i, w) in pool.elements().iter().take(4).enumerate() {
        let r = cocycle_residuals(w, pool.elements(), 100, i as u64);
        worst = worst.max(r.max());
    }
    let x = &pool.elements()[1];
    check(
        cocycle_vol(&pool.elements()[0], &pool.elements()[2], x, x) == 0.0,
        "degenerate term nonzero",
    )?;
    check(worst < 1e-9, format!("residual {worst:e}"))?;
    Ok(format!(
        "400 samples from a pool of {}, max residual {worst:.1e}",
        pool.len()
    ))
}

fn criterion_6() -> Outcome {
    let v = json(&["volume", "--fixture", "fig8", "--json"])?;
    let phi = v["phi"].as_f64().ok_or("no phi")?;
    check(
        (phi - 2.029_883_212_819).abs() < 1e-6 && v["k"] == 1,
        format!("phi {phi}, k {}", v["k"]),
    )?;
    Ok(format!("phi = {phi:.12}, k = +1"))
}

fn std_survey(d: &qvol::diagram::Diagram, h: &HolonomyRep) -> Result<KSurvey, String> {
    let pool = enumerate_conjugates(h, 2);
    let volume = reference_volume(d, h).map_err(|e| e.to_string())?;
    survey(
        d,
        h.orientation(),
        &pool,
        &default_base_meridian(h),
        volume,
        100_000,
        1e-6,
    )
    .map_err(|e| e.to_string())
}

fn criterion_7() -> Outcome {
    let s = std_survey(&fig8_diagram(), &fig8_holonomy())?;
    check(s.colorings > 0 && !s.truncated, "no colorings or truncated")?;
    check(
        s.max_residual < 1e-6,
        format!("max residual {:e}", s.max_residual),
    )?;
    Ok(format!(
        "{} colorings, counts {:?}, max residual {:.1e}",
        s.colorings, s.counts, s.max_residual
    ))
}

fn criterion_8() -> Outcome {
    let d = fig8_diagram();
    let r = symmetry_report(
        &d,
        &fig8_holonomy(),
        Some(&fig8_holonomy_reversed()),
        2,
        100_000,
        1e-6,
    )
    .map_err(|e| e.to_string())?;
    let flags = [
        Some(&r.negatively_amphicheiral),
        r.invertible.as_ref(),
        r.positively_amphicheiral.as_ref(),
    ];
    check(
        flags.iter().all(|f| f.is_some_and(|f| f.detected())),
        "a flag was not detected",
    )?;
    let v = json(&["symmetry", "--fixture", "fig8", "--json"])?;
    for key in [
        "negatively_amphicheiral",
        "invertible",
        "positively_amphicheiral",
    ] {
        check(
            v[key]["status"] == "detected",
            format!("cli {key}: {}", v[key]["status"]),
        )?;
    }
    Ok("negatively amphicheiral, invertible, positively amphicheiral: detected".into())
}

fn criterion_9() -> Outcome {
    let a = std_survey(&fig8_diagram(), &fig8_holonomy())?;
    let b = std_survey(&fig8_r2_diagram(), &fig8_r2_holonomy())?;
    check(
        a.attained() == b.attained(),
        format!("{:?} vs {:?}", a.attained(), b.attained()),
    )?;
    Ok(format!("attained k = {:?} on both diagrams", a.attained()))
}

fn random_sl2(rng: &mut StdRng) -> MoebiusMap {
    loop {
        let (a, b, c) = (
            random_complex(rng, 3.0),
            random_complex(rng, 3.0),
            random_complex(rng, 3.0),
        );
        if a.norm() > 0.3 {
            return MoebiusMap::new(a, b, c, (Complex64::new(1.0, 0.0) + b * c) / a).unwrap();
        }
    }
}

fn criterion_10() -> Outcome {
    let mut rng = StdRng::seed_from_u64(10);
    let mut invariance = 0.0_f64;
    let mut parity = 0.0_f64;
    let mut cases = 0;
    while cases < 1000 {
        let v: [BoundaryPoint; 4] =
            std::array::from_fn(|_| BoundaryPoint::from_complex(random_complex(&mut rng, 3.0)));
        if (0..4).any(|i| (i + 1..4).any(|j| v[i].chordal_distance(&v[j]) < 1e-2)) {
            continue;
        }
        cases += 1;
        let g = random_sl2(&mut rng);
        let base = tet(v);
        invariance = invariance.max((tet(v.map(|p| g.apply(p))) - base).abs());
        let perms = (0..24).map(|n| {
            let mut rest = vec![0, 1, 2, 3];
            let mut p = [0; 4];
            let mut k = n;
            for (i, slot) in p.iter_mut().enumerate() {
                let f = [6, 2, 1, 1][i];
                *slot = rest.remove(k / f);
                k %= f;
            }
            p
        });
        for p in perms {
            let odd = (0..4)
                .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count()
                % 2;
            let sign = if odd == 1 { -1.0 } else { 1.0 };
            parity = parity.max((tet(p.map(|i| v[i])) - sign * base).abs());
        }
    }
    check(invariance < 1e-8, format!("invariance {invariance:e}"))?;
    check(parity < 1e-9, format!("parity {parity:e}"))?;
    let a = pt(0.2, 0.9);
    check(
        tet([a, a, omega(), INF]) == 0.0 && tet([INF, a, omega(), INF]) == 0.0,
        "degenerate volume nonzero",
    )?;
    let pool = enumerate_conjugates(&fig8_holonomy(), 2);
    let mut equiv = 0.0_f64;
    for a in pool.elements() {
        for b in pool.elements() {
            let moved = b.matrix().inverse().apply(a.fixed_point());
            let fp = a
                .op(b)
                .matrix()
                .parabolic_fixed_point()
                .map_err(|e| e.to_string())?;
            equiv = equiv.max(fp.chordal_distance(&moved));
        }
    }
    check(equiv < 1e-8, format!("equivariance {equiv:e}"))?;
    Ok(format!(
        "invariance {invariance:.1e}, parity {parity:.1e}, equivariance {equiv:.1e}"
    ))
}

fn main() -> ExitCode {
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut failed = 0;
    for (i, run) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL ({why})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
