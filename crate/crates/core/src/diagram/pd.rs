use super::{Crossing, Diagram, Sign};
use crate::error::{Error, Result};

/// Parses a PD code such as `X(4,2,5,1) X(8,6,1,5) ...`.
///
/// Terms may be separated by whitespace or commas, and square brackets are
/// accepted in place of parentheses. Empty input is the unknot.
pub fn parse_pd(text: &str) -> Result<Diagram> {
    let quads = tokenize(text)?;
    let n = quads.len();
    if n == 0 {
        return Ok(Diagram::unknot());
    }
    let n_edges = 2 * n;

    let mut counts = vec![0usize; n_edges + 1];
    for q in &quads {
        for &e in q {
            if e == 0 || e > n_edges {
                return Err(Error::EdgeCountMismatch {
                    expected: n_edges,
                    detail: format!("label {e} is out of range"),
                });
            }
            counts[e] += 1;
        }
    }
    if let Some(e) = (1..=n_edges).find(|&e| counts[e] != 2) {
        return Err(Error::EdgeCountMismatch {
            expected: n_edges,
            detail: format!("label {e} appears {} times", counts[e]),
        });
    }

    let next = |e: usize| e % n_edges + 1;
    let crossings = quads
        .into_iter()
        .enumerate()
        .map(|(ci, pd)| {
            let [a, b, c, d] = pd;
            if c != next(a) {
                return Err(Error::InvalidCrossing {
                    crossing: ci,
                    detail: format!("outgoing under-edge {c} does not follow incoming {a}"),
                });
            }
            let sign = match (b == next(d), d == next(b)) {
                (true, false) => Sign::Positive,
                (false, true) => Sign::Negative,
                // Only possible with two edges: the over-strand shares an
                // edge with the under-strand, which fixes its direction.
                (true, true) => {
                    if b == a || d == c {
                        Sign::Positive
                    } else {
                        Sign::Negative
                    }
                }
                (false, false) => {
                    return Err(Error::InvalidCrossing {
                        crossing: ci,
                        detail: format!("over-edges {b} and {d} are not consecutive"),
                    })
                }
            };
            Ok(Crossing { pd, sign })
        })
        .collect::<Result<Vec<_>>>()?;
    Diagram::from_crossings(crossings)
}

fn tokenize(text: &str) -> Result<Vec<[usize; 4]>> {
    let mut quads = Vec::new();
    let mut rest = text.trim();
    // Tolerate a surrounding `PD[...]` / `PD(...)` wrapper.
    for prefix in ["PD[", "PD("] {
        if let Some(inner) = rest.strip_prefix(prefix) {
            rest = inner
                .strip_suffix(if prefix.ends_with('[') { ']' } else { ')' })
                .ok_or_else(|| Error::MalformedTerm(text.trim().to_string()))?;
        }
    }
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            break;
        }
        let close = rest
            .find([')', ']'])
            .ok_or_else(|| Error::MalformedTerm(rest.to_string()))?;
        let term = &rest[..=close];
        rest = &rest[close + 1..];
        quads.push(parse_term(term)?);
    }
    Ok(quads)
}

fn parse_term(term: &str) -> Result<[usize; 4]> {
    let bad = || Error::MalformedTerm(term.to_string());
    let body = term.strip_prefix('X').ok_or_else(bad)?.trim_start();
    let inner = body
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .or_else(|| body.strip_prefix('[').and_then(|s| s.strip_suffix(']')))
        .ok_or_else(bad)?;
    let labels: Vec<usize> = inner
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| bad())?;
    labels.try_into().map_err(|_| bad())
}
