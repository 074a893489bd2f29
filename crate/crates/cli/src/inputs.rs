//! Loading diagrams, representations and colorings from files or fixtures.

use std::fs;
use std::path::Path;

use qvol::diagram::{parse_pd, Diagram};
use qvol::fixtures;
use qvol::holquandle::{load_holonomy, HolonomyDocument, HolonomyRep};

use crate::{Failure, Fixture, InputArgs};

pub fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("InvalidInput: cannot read {}: {e}", path.display())))
}

fn no_source(what: &str, flag: &str) -> Failure {
    Failure::input(format!("InvalidInput: no {what}; pass {flag} or --fixture"))
}

pub fn diagram(args: &InputArgs) -> Result<Diagram, Failure> {
    let text = match (&args.pd, args.fixture) {
        (Some(path), _) => read(path)?,
        (None, Some(Fixture::Fig8)) => fixtures::FIG8_PD.to_string(),
        (None, Some(Fixture::Fig8R2)) => fixtures::FIG8_R2_PD.to_string(),
        (None, None) => return Err(no_source("PD code", "--pd")),
    };
    Ok(parse_pd(&text)?)
}

fn rep(text: &str, d: &Diagram) -> Result<HolonomyRep, Failure> {
    Ok(load_holonomy(&HolonomyDocument::from_json(text)?, d)?)
}

pub fn holonomy(args: &InputArgs, d: &Diagram) -> Result<HolonomyRep, Failure> {
    let text = match (&args.holonomy, args.fixture) {
        (Some(path), _) => read(path)?,
        (None, Some(Fixture::Fig8)) => fixtures::FIG8_HOLONOMY.to_string(),
        (None, Some(Fixture::Fig8R2)) => fixtures::FIG8_R2_HOLONOMY.to_string(),
        (None, None) => return Err(no_source("holonomy", "--holonomy")),
    };
    rep(&text, d)
}

/// The representation of the reversed knot, if one is available. Only the
/// 4-crossing fixture ships one.
pub fn holonomy_reversed(args: &InputArgs, d: &Diagram) -> Result<Option<HolonomyRep>, Failure> {
    let text = match (&args.holonomy_reversed, args.fixture) {
        (Some(path), _) => read(path)?,
        (None, Some(Fixture::Fig8)) if args.holonomy.is_none() => {
            fixtures::FIG8_HOLONOMY_REVERSED.to_string()
        }
        _ => return Ok(None),
    };
    rep(&text, d).map(Some)
}
