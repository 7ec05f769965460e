//! Text format:
//!
//! ```text
//! # comment
//! n 4
//! 0 1 1
//! 1 2 2
//! 1 3 1
//! order 3 2 1 0
//! ```
//!
//! `n` comes first; edges are `i j w` with 0-based indices and a nonzero
//! integer weight; the optional `order` line lists every vertex once.

use std::collections::BTreeSet;
use std::fmt;

use super::Diagram;
use crate::algebra::Coeff;
use crate::error::{Error, Result};

/// Refuses absurd vertex counts before allocating.
pub const MAX_VERTICES: usize = 4096;

fn perr(line: usize, msg: impl fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

impl Diagram {
    pub fn parse(text: &str) -> Result<Diagram> {
        let mut d: Option<Diagram> = None;
        let mut seen_edges = BTreeSet::new();
        let mut order_seen = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            match (toks[0], d.as_mut()) {
                ("n", None) => {
                    if toks.len() != 2 {
                        return Err(perr(line_no, "expected `n <count>`"));
                    }
                    let n: usize = toks[1]
                        .parse()
                        .map_err(|_| perr(line_no, "bad vertex count"))?;
                    if n > MAX_VERTICES {
                        return Err(perr(line_no, "too many vertices"));
                    }
                    d = Some(Diagram::new(n));
                }
                ("n", Some(_)) => return Err(perr(line_no, "duplicate `n` line")),
                (_, None) => return Err(perr(line_no, "`n <count>` must come first")),
                ("order", Some(dg)) => {
                    if order_seen {
                        return Err(perr(line_no, "duplicate `order` line"));
                    }
                    order_seen = true;
                    let order = toks[1..]
                        .iter()
                        .map(|t| t.parse::<usize>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|_| perr(line_no, "bad vertex in order"))?;
                    let taken = std::mem::replace(dg, Diagram::new(0));
                    *dg = taken
                        .with_order(order)
                        .map_err(|e| perr(line_no, e))?;
                }
                (_, Some(dg)) => {
                    if toks.len() != 3 {
                        return Err(perr(line_no, "expected `i j w`"));
                    }
                    let i: usize = toks[0].parse().map_err(|_| perr(line_no, "bad vertex"))?;
                    let j: usize = toks[1].parse().map_err(|_| perr(line_no, "bad vertex"))?;
                    let w: Coeff = toks[2].parse().map_err(|_| perr(line_no, "bad weight"))?;
                    if w == 0 {
                        return Err(perr(line_no, "zero weight"));
                    }
                    if i >= dg.len() || j >= dg.len() {
                        return Err(perr(line_no, "vertex out of range"));
                    }
                    let k = (i.min(j), i.max(j));
                    if !seen_edges.insert(k) {
                        return Err(perr(line_no, "repeated edge"));
                    }
                    dg.set_edge(i, j, w).map_err(|e| perr(line_no, e))?;
                }
            }
        }
        d.ok_or_else(|| Error::Parse("missing `n <count>` line".into()))
    }

    /// Accepts either a built-in name or diagram file text.
    pub fn from_name_or_text(s: &str) -> Result<Diagram> {
        match Diagram::from_name(s) {
            Ok(d) => Ok(d),
            Err(Error::BadRank { family, rank }) => Err(Error::BadRank { family, rank }),
            Err(_) => Diagram::parse(s),
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.len())?;
        for (i, j, w) in self.edges() {
            writeln!(f, "{i} {j} {w}")?;
        }
        let order: Vec<String> = self.order().iter().map(|v| v.to_string()).collect();
        writeln!(f, "order {}", order.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Family;

    #[test]
    fn round_trip() {
        let d = Diagram::build(Family::AffE, 6)
            .unwrap()
            .with_order(vec![6, 5, 4, 3, 2, 1, 0])
            .unwrap();
        let back = Diagram::parse(&d.to_string()).unwrap();
        assert_eq!(back.edges().collect::<Vec<_>>(), d.edges().collect::<Vec<_>>());
        assert_eq!(back.order(), d.order());
    }

    #[test]
    fn comments_and_blank_lines() {
        let d = Diagram::parse("# star\n\nn 3\n0 1 2 # heavy\n0 2 1\n").unwrap();
        assert_eq!(d.weight(1, 0), 2);
        assert_eq!(d.order(), &[0, 1, 2]);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "",
            "0 1 1",
            "n 2\nn 2",
            "n 2\n0 0 1",
            "n 2\n0 2 1",
            "n 2\n0 1 0",
            "n 2\n0 1 1\n1 0 1",
            "n 2\n0 1",
            "n 2\norder 0",
            "n 2\norder 0 1\norder 1 0",
            "n x",
            "n 99999999",
        ] {
            assert!(Diagram::parse(bad).is_err(), "{bad:?}");
        }
    }
}
