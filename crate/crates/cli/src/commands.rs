use std::fmt::Write;

use num_complex::Complex64;

use qvol::diagram::Diagram;
use qvol::holquandle::{enumerate_conjugates, HolonomyRep, Orientation, QuandleElement};
use qvol::hypgeom::bloch_wigner;
use qvol::invariant::{
    check_coloring, default_base_meridian, natural_coloring, phi, reference_volume, survey,
    symmetry_report, ColoringDocument,
};
use serde::Serialize;

use crate::report::{self, Format, PhiReport};
use crate::{inputs, Command, Failure, OutputArgs, SearchArgs};

const MAX_PRECISION: usize = 17;
const MAX_DEPTH: usize = 6;
const MAX_CAP: usize = 1_000_000;

fn format(o: &OutputArgs) -> Result<Format, Failure> {
    if o.precision > MAX_PRECISION {
        return Err(Failure::input(format!(
            "InvalidInput: precision {} exceeds {MAX_PRECISION}",
            o.precision
        )));
    }
    Ok(Format {
        json: o.json,
        precision: o.precision,
    })
}

fn check_search(s: &SearchArgs) -> Result<(), Failure> {
    if s.depth > MAX_DEPTH {
        return Err(Failure::input(format!(
            "InvalidInput: depth {} exceeds {MAX_DEPTH}",
            s.depth
        )));
    }
    if s.cap > MAX_CAP {
        return Err(Failure::input(format!(
            "InvalidInput: cap {} exceeds {MAX_CAP}",
            s.cap
        )));
    }
    Ok(())
}

fn check_tol(tol: f64) -> Result<(), Failure> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Failure::input(format!(
            "InvalidInput: tolerance {tol} is not positive"
        )))
    }
}

fn base_meridian(h: &HolonomyRep, word: Option<&str>) -> Result<QuandleElement, Failure> {
    match word {
        Some(w) => Ok(h.element_from_str(w)?),
        None => Ok(default_base_meridian(h)),
    }
}

pub fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Dilog { re, im, output } => {
            let f = format(&output)?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| {
                        Failure::numeric(format!("InvalidInput: `{s}` is not a finite number"))
                    })
            };
            let (re, im) = (parse(&re)?, parse(&im)?);
            let value = bloch_wigner(Complex64::new(re, im));
            #[derive(Serialize)]
            struct Out {
                re: f64,
                im: f64,
                value: f64,
            }
            f.emit(&Out { re, im, value }, || format!("{}\n", f.num(value)))
        }
        Command::Parse { inputs, output } => {
            let f = format(&output)?;
            let d = inputs::diagram(&inputs)?;
            f.emit(&d.export(), || parse_text(&d))
        }
        Command::Volume {
            inputs,
            numeric,
            output,
        } => {
            let f = format(&output)?;
            check_tol(numeric.tol)?;
            let d = inputs::diagram(&inputs)?;
            let h = inputs::holonomy(&inputs, &d)?;
            let w = base_meridian(&h, numeric.base_meridian.as_deref())?;
            let volume = reference_volume(&d, &h)?;
            let s = natural_coloring(&d, &h, 0, &w)?;
            let r = phi(&d, &s, &w, volume, numeric.tol)?;
            let base = w.word().to_string();
            f.emit(
                &PhiReport {
                    base_meridian: base.clone(),
                    result: &r,
                },
                || report::phi_text(&f, &base, &r),
            )
        }
        Command::Invariant {
            inputs,
            coloring,
            tol,
            output,
        } => {
            let f = format(&output)?;
            check_tol(tol)?;
            let doc = ColoringDocument::from_json(&inputs::read(&coloring)?)?;
            let d = inputs::diagram(&inputs)?;
            let (h, volume) = match doc.orientation {
                Orientation::Standard => {
                    let h = inputs::holonomy(&inputs, &d)?;
                    let v = reference_volume(&d, &h)?;
                    (h, v)
                }
                Orientation::Reversed => {
                    let h = inputs::holonomy_reversed(&inputs, &d)?.ok_or_else(|| {
                        Failure::input("InvalidInput: coloring is for the reversed knot; pass --holonomy-reversed")
                    })?;
                    let v = match h.declared_volume() {
                        Some(v) => v,
                        None => reference_volume(&d, &inputs::holonomy(&inputs, &d)?)?,
                    };
                    (h, v)
                }
            };
            let (s, w) = doc.resolve(&d, &h)?;
            check_coloring(&d, &s)?;
            let r = phi(&d, &s, &w, volume, tol)?;
            let base = w.word().to_string();
            f.emit(
                &PhiReport {
                    base_meridian: base.clone(),
                    result: &r,
                },
                || report::phi_text(&f, &base, &r),
            )
        }
        Command::Enumerate {
            inputs,
            numeric,
            search,
            output,
        } => {
            let f = format(&output)?;
            check_tol(numeric.tol)?;
            check_search(&search)?;
            let d = inputs::diagram(&inputs)?;
            let h = inputs::holonomy(&inputs, &d)?;
            let w = base_meridian(&h, numeric.base_meridian.as_deref())?;
            let volume = reference_volume(&d, &h)?;
            let pool = enumerate_conjugates(&h, search.depth);
            let s = survey(
                &d,
                h.orientation(),
                &pool,
                &w,
                volume,
                search.cap,
                numeric.tol,
            )?;
            f.emit(&s, || report::survey_text(&f, &s))
        }
        Command::Symmetry {
            inputs,
            tol,
            search,
            output,
        } => {
            let f = format(&output)?;
            check_tol(tol)?;
            check_search(&search)?;
            let d = inputs::diagram(&inputs)?;
            let h = inputs::holonomy(&inputs, &d)?;
            let h_rev = inputs::holonomy_reversed(&inputs, &d)?;
            let r = symmetry_report(&d, &h, h_rev.as_ref(), search.depth, search.cap, tol)?;
            f.emit(&r, || {
                let mut s = String::new();
                let _ = writeln!(s, "volume: {}", f.num(r.volume));
                let _ = writeln!(s, "depth: {}, cap: {}", r.depth, r.cap);
                let surveys = [
                    ("standard", Some(&r.standard)),
                    ("reversed", r.reversed.as_ref()),
                ];
                for (name, sv) in surveys {
                    if let Some(sv) = sv {
                        let counts: Vec<String> = sv
                            .counts
                            .iter()
                            .map(|(k, n)| format!("{}: {n}", report::signed(*k)))
                            .collect();
                        let _ = writeln!(
                            s,
                            "{name}: {} colorings{} ({})",
                            sv.colorings,
                            if sv.truncated { ", truncated" } else { "" },
                            counts.join(", ")
                        );
                    }
                }
                s.push_str(&report::detection_text(
                    &f,
                    "negatively amphicheiral",
                    Some(&r.negatively_amphicheiral),
                ));
                s.push_str(&report::detection_text(
                    &f,
                    "invertible",
                    r.invertible.as_ref(),
                ));
                s.push_str(&report::detection_text(
                    &f,
                    "positively amphicheiral",
                    r.positively_amphicheiral.as_ref(),
                ));
                s
            })
        }
    }
}

fn parse_text(d: &Diagram) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "pd: {}", d.to_pd_string());
    let _ = writeln!(
        s,
        "crossings: {}, arcs: {}, regions: {}, writhe: {}",
        d.n_crossings(),
        d.n_arcs(),
        d.n_regions(),
        d.writhe()
    );
    for fr in d.crossing_frames() {
        let _ = writeln!(
            s,
            "  crossing {}: sign {}, under {} -> {}, over {}, source region {}",
            fr.crossing,
            report::signed(fr.sign.value()),
            fr.under_in_arc,
            fr.under_out_arc,
            fr.over_arc,
            fr.source_region
        );
    }
    for (i, a) in d.arcs().iter().enumerate() {
        let edges: Vec<String> = a.edges.iter().map(|e| e.to_string()).collect();
        let _ = writeln!(s, "  arc {i}: edges {}", edges.join(" "));
    }
    s
}
