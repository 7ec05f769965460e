//! Parser for the canonical polynomial text form, e.g. `q^-2 - 3*q + 1`.
//!
//! Terms may appear in any order and repeat; like terms are summed.
//! Accepted term shapes: `c`, `c*v`, `c*v^e`, `v`, `v^e`, `cv^e` (the `*` is
//! optional), each with an optional leading sign.

use super::laurent::IntLaurent;
use super::ring::Coeff;
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Largest degree accepted when parsing into dense coefficient storage.
pub const MAX_PARSED_DEGREE: usize = 1 << 16;

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn eat_word(&mut self, w: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(w.as_bytes()) {
            self.pos += w.len();
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }
}

/// Parses a sum of monomials in `var` into `(exponent, coefficient)` terms.
pub fn parse_terms(input: &str, var: &str) -> Result<Vec<(i32, Coeff)>> {
    let mut cur = Cursor {
        s: input.as_bytes(),
        pos: 0,
    };
    let mut out = Vec::new();
    if cur.peek().is_none() {
        return Err(cur.err("empty input"));
    }
    let mut first = true;
    loop {
        let mut negative = false;
        if cur.eat(b'-') {
            negative = true;
        } else if !cur.eat(b'+') && !first {
            return Err(cur.err("expected '+' or '-'"));
        }
        first = false;

        let coeff = match cur.digits() {
            Some(d) => Some(
                d.parse::<Coeff>()
                    .map_err(|_| cur.err("coefficient out of range"))?,
            ),
            None => None,
        };
        let star = coeff.is_some() && cur.eat(b'*');
        let has_var = cur.eat_word(var);
        if star && !has_var {
            return Err(cur.err("expected variable after '*'"));
        }
        if coeff.is_none() && !has_var {
            return Err(cur.err("expected term"));
        }
        let exp = if has_var {
            if cur.eat(b'^') {
                let neg = cur.eat(b'-');
                let d = cur.digits().ok_or_else(|| cur.err("expected exponent"))?;
                let e: i32 = d.parse().map_err(|_| cur.err("exponent out of range"))?;
                if neg {
                    -e
                } else {
                    e
                }
            } else {
                1
            }
        } else {
            0
        };
        let mut c = coeff.unwrap_or(1);
        if negative {
            c = -c;
        }
        out.push((exp, c));
        if cur.peek().is_none() {
            return Ok(out);
        }
    }
}

impl IntLaurent {
    /// Parses text in the variable `var`.
    pub fn parse(input: &str, var: &str) -> Result<Self> {
        let mut sums = std::collections::BTreeMap::<i32, Coeff>::new();
        for (e, c) in parse_terms(input, var)? {
            let slot = sums.entry(e).or_insert(0);
            *slot = slot
                .checked_add(c)
                .ok_or_else(|| Error::Parse("coefficient out of range".into()))?;
        }
        Ok(IntLaurent::from_terms(sums))
    }
}

impl std::str::FromStr for IntLaurent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, "q")
    }
}

impl ZPoly {
    /// Parses text in `var`; negative exponents and degrees above
    /// [`MAX_PARSED_DEGREE`] are rejected.
    pub fn parse(input: &str, var: &str) -> Result<Self> {
        let l = IntLaurent::parse(input, var)?;
        match l.min_exp() {
            Some(v) if v < 0 => Err(Error::Parse("negative exponent in polynomial".into())),
            _ if l.max_exp().is_some_and(|e| e as usize > MAX_PARSED_DEGREE) => {
                Err(Error::Parse(format!("degree above {MAX_PARSED_DEGREE}")))
            }
            _ => {
                let top = l.max_exp().unwrap_or(0).max(0) as usize;
                let mut coeffs = vec![0; top + 1];
                for (e, c) in l.terms() {
                    coeffs[e as usize] = c;
                }
                Ok(ZPoly::from_coeffs(coeffs))
            }
        }
    }
}

impl std::str::FromStr for ZPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, "z")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_of_rendered_forms() {
        for s in ["0", "1", "-q^-1 + 1 - 3*q", "q^-2 + 1 + q^2", "-7*q^12"] {
            let p: IntLaurent = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn loose_forms_are_accepted() {
        let p: IntLaurent = "q + 2q^-1 - q + 3".parse().unwrap();
        assert_eq!(p.to_string(), "2*q^-1 + 3");
        let z: ZPoly = "z^2-1".parse().unwrap();
        assert_eq!(z, ZPoly::from_coeffs(vec![-1, 0, 1]));
    }

    #[test]
    fn oversized_inputs_are_errors() {
        let max = i128::MAX.to_string();
        assert!(format!("{max} + 1").parse::<IntLaurent>().is_err());
        assert!(format!("{max}*q - 1 + {max}*q").parse::<IntLaurent>().is_err());
        assert!(format!("{max} - 1").parse::<IntLaurent>().is_ok());
        assert!("z^2000000000".parse::<ZPoly>().is_err());
        assert!("q^2000000000".parse::<IntLaurent>().is_ok());
    }

    #[test]
    fn malformed_inputs_are_errors() {
        for s in ["", "+", "q^", "2*", "q q", "1 2", "q^-", "x", "99999999999999999999999999999999999999999"] {
            assert!(s.parse::<IntLaurent>().is_err(), "{s:?}");
        }
        assert!("z^-1".parse::<ZPoly>().is_err());
    }

    #[test]
    fn other_variable_names() {
        let p = IntLaurent::parse("t^-1 - t", "t").unwrap();
        assert_eq!(p.render("t"), "t^-1 - t");
    }
}
