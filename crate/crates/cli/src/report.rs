//! Text and JSON rendering. JSON carries full-precision numbers, so
//! formatting any JSON number at the chosen precision reproduces the text.

use std::collections::BTreeMap;
use std::fmt::Write;

use qvol::invariant::{Detection, KSurvey, PhiResult, Witness};
use serde::Serialize;

use crate::Failure;

pub struct Format {
    pub json: bool,
    pub precision: usize,
}

impl Format {
    pub fn num(&self, x: f64) -> String {
        format!("{x:.*}", self.precision)
    }

    pub fn emit<T: Serialize>(
        &self,
        value: &T,
        text: impl FnOnce() -> String,
    ) -> Result<String, Failure> {
        if self.json {
            let mut s = serde_json::to_string_pretty(value)
                .map_err(|e| Failure::input(format!("Json: {e}")))?;
            s.push('\n');
            Ok(s)
        } else {
            Ok(text())
        }
    }
}

pub fn residual(r: f64) -> String {
    format!("{r:.3e}")
}

pub fn signed(k: i32) -> String {
    if k > 0 {
        format!("+{k}")
    } else {
        k.to_string()
    }
}

#[derive(Serialize)]
pub struct PhiReport<'a> {
    pub base_meridian: String,
    #[serde(flatten)]
    pub result: &'a PhiResult,
}

pub fn phi_text(f: &Format, base: &str, r: &PhiResult) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "base meridian: {base}");
    let _ = writeln!(s, "phi: {}", f.num(r.phi));
    let _ = writeln!(s, "volume: {}", f.num(r.volume));
    let _ = writeln!(s, "k: {}", signed(r.k));
    let _ = writeln!(s, "residual: {}", residual(r.residual));
    for (c, w) in r.weights.iter().enumerate() {
        let _ = writeln!(s, "  crossing {c}: {}", f.num(*w));
    }
    s
}

fn words(m: &BTreeMap<usize, String>) -> String {
    m.iter()
        .map(|(i, w)| format!("{i}:{w}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn witness_text(f: &Format, w: &Witness, indent: &str) -> String {
    let c = &w.coloring;
    format!(
        "{indent}coloring #{} (phi = {}, base {})\n{indent}  arcs: {}\n{indent}  regions: {}\n",
        w.index,
        f.num(w.phi),
        c.base_meridian,
        words(&c.arcs),
        words(&c.regions)
    )
}

pub fn survey_text(f: &Format, s: &KSurvey) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "base meridian: {}", s.base_meridian);
    let _ = writeln!(out, "volume: {}", f.num(s.volume));
    let _ = writeln!(out, "pool size: {}", s.pool_size);
    let _ = writeln!(out, "colorings: {}", s.colorings);
    let _ = writeln!(out, "truncated: {}", s.truncated);
    let _ = writeln!(out, "max residual: {}", residual(s.max_residual));
    for (k, n) in &s.counts {
        let _ = writeln!(out, "  k = {:>2}: {n}", signed(*k));
    }
    out
}

pub fn detection_text(f: &Format, name: &str, d: Option<&Detection>) -> String {
    match d {
        None => format!("{name}: not computed (no reversed representation)\n"),
        Some(d) => {
            let mut s = format!("{name}: {}\n", d.status.label());
            if let Some(w) = &d.witness {
                s.push_str(&witness_text(f, w, "  "));
            }
            s
        }
    }
}
