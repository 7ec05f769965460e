use std::fmt;
use std::str::FromStr;

use super::Diagram;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
    AffA,
    AffD,
    AffE,
}

impl Family {
    pub fn is_affine(self) -> bool {
        matches!(self, Family::AffA | Family::AffD | Family::AffE)
    }

    pub fn valid_rank(self, n: usize) -> bool {
        match self {
            Family::A => true,
            Family::D | Family::AffD => n >= 4,
            Family::E | Family::AffE => (6..=8).contains(&n),
            Family::AffA => n >= 1,
        }
    }

    /// Diagram name with rank, e.g. `~E8`.
    pub fn name(self, n: usize) -> String {
        format!("{self}{n}")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
            Family::AffA => "~A",
            Family::AffD => "~D",
            Family::AffE => "~E",
        })
    }
}

/// Parses names like `A5`, `~D6`, `affE7`.
pub fn parse_name(s: &str) -> Result<(Family, usize)> {
    let t = s.trim();
    let (affine, rest) = if let Some(r) = t.strip_prefix('~') {
        (true, r)
    } else if let Some(r) = t.strip_prefix("aff") {
        (true, r)
    } else {
        (false, t)
    };
    let mut chars = rest.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::Parse(format!("empty diagram name {s:?}")))?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad diagram name {s:?}")));
    }
    let n: usize = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
    let family = match (letter.to_ascii_uppercase(), affine) {
        ('A', false) => Family::A,
        ('D', false) => Family::D,
        ('E', false) => Family::E,
        ('A', true) => Family::AffA,
        ('D', true) => Family::AffD,
        ('E', true) => Family::AffE,
        _ => return Err(Error::Parse(format!("unknown family in {s:?}"))),
    };
    Ok((family, n))
}

impl Diagram {
    /// Standard diagram of the family with unit weights (except `~A1`, whose
    /// double edge is a single edge of weight 2). Affine vertex is 0.
    ///
    /// Layouts: `A_n` path `0..n`; `D_n` path `0..n-1` with `n-1` on `n-3`;
    /// `E_n` path `0..n-1` with `n-1` on `2`; `~A_n` cycle `0..=n`;
    /// `~D_n` path `1..=n-3`, with `0` and `n-1` on `1`, `n-2` and `n` on
    /// `n-3`; `~E6` path `0..5` with `5` on `2` and `6` on `5`; `~E7` path
    /// `0..7` with `7` on `3`; `~E8` path `0..8` with `8` on `5`.
    pub fn build(family: Family, n: usize) -> Result<Diagram> {
        if !family.valid_rank(n) || n > 4096 {
            return Err(Error::BadRank {
                family: family.to_string(),
                rank: n,
            });
        }
        let size = if family.is_affine() { n + 1 } else { n };
        let mut d = Diagram::new(size);
        let path = |d: &mut Diagram, lo: usize, hi: usize| {
            for v in lo..hi {
                d.set_edge(v, v + 1, 1).unwrap();
            }
        };
        match family {
            Family::A => path(&mut d, 0, n.saturating_sub(1)),
            Family::D => {
                path(&mut d, 0, n - 2);
                d.set_edge(n - 3, n - 1, 1)?;
            }
            Family::E => {
                path(&mut d, 0, n - 2);
                d.set_edge(2, n - 1, 1)?;
            }
            Family::AffA if n == 1 => d.set_edge(0, 1, 2)?,
            Family::AffA => {
                path(&mut d, 0, n);
                d.set_edge(n, 0, 1)?;
            }
            Family::AffD => {
                path(&mut d, 1, n - 3);
                d.set_edge(0, 1, 1)?;
                d.set_edge(1, n - 1, 1)?;
                d.set_edge(n - 3, n - 2, 1)?;
                d.set_edge(n - 3, n, 1)?;
            }
            Family::AffE => match n {
                6 => {
                    path(&mut d, 0, 4);
                    d.set_edge(2, 5, 1)?;
                    d.set_edge(5, 6, 1)?;
                }
                7 => {
                    path(&mut d, 0, 6);
                    d.set_edge(3, 7, 1)?;
                }
                _ => {
                    path(&mut d, 0, 7);
                    d.set_edge(5, 8, 1)?;
                }
            },
        }
        Ok(d)
    }

    /// Builds from a name such as `E8` or `~A4`.
    pub fn from_name(name: &str) -> Result<Diagram> {
        let (f, n) = parse_name(name)?;
        Diagram::build(f, n)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(Family::A),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "~A" | "affA" => Ok(Family::AffA),
            "~D" | "affD" => Ok(Family::AffD),
            "~E" | "affE" => Ok(Family::AffE),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        assert_eq!(parse_name("A5").unwrap(), (Family::A, 5));
        assert_eq!(parse_name("~E7").unwrap(), (Family::AffE, 7));
        assert_eq!(parse_name("affD6").unwrap(), (Family::AffD, 6));
        for bad in ["", "~", "B3", "A", "A-1", "E 8", "~X3"] {
            assert!(parse_name(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn bad_ranks() {
        assert!(matches!(Diagram::build(Family::E, 9), Err(Error::BadRank { .. })));
        assert!(Diagram::build(Family::D, 3).is_err());
        assert!(Diagram::build(Family::AffA, 0).is_err());
    }

    #[test]
    fn shapes() {
        let a1 = Diagram::build(Family::A, 1).unwrap();
        assert_eq!((a1.len(), a1.edge_count()), (1, 0));
        let tri = Diagram::build(Family::AffA, 2).unwrap();
        assert_eq!((tri.len(), tri.edge_count()), (3, 3));
        for (f, n) in [
            (Family::D, 4),
            (Family::D, 7),
            (Family::E, 6),
            (Family::E, 8),
            (Family::AffD, 4),
            (Family::AffD, 9),
            (Family::AffE, 6),
            (Family::AffE, 7),
            (Family::AffE, 8),
        ] {
            let d = Diagram::build(f, n).unwrap();
            assert!(d.is_tree(), "{f}{n}");
            let max_deg = (0..d.len()).map(|v| d.degree(v)).max().unwrap();
            let want = if f == Family::AffD && n == 4 { 4 } else { 3 };
            assert_eq!(max_deg, want, "{f}{n}");
        }
    }

    #[test]
    fn affine_e_minus_affine_vertex_has_e_shape() {
        for n in 6..=8 {
            let d = Diagram::build(Family::AffE, n).unwrap().delete(&[0]).unwrap();
            let e = Diagram::build(Family::E, n).unwrap();
            let mut a: Vec<usize> = (0..n).map(|v| d.degree(v)).collect();
            let mut b: Vec<usize> = (0..n).map(|v| e.degree(v)).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }
}
