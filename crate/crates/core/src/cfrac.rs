//! Branching continued fractions in `z`.
//!
//! A branch node stands for `1 / (z − Σ w_c · value(c))`, a closing node
//! for `1 / r`.

use std::fmt::Write as _;

use crate::algebra::{Coeff, RatFunc, Ring, ZPoly};
use crate::coxeter::cofactors;
use crate::diagram::{Diagram, Family};
use crate::error::{Error, Result};

pub type ZFrac = RatFunc<ZPoly>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CFracNode {
    Branch {
        /// Diagram vertex this node expands, when it has one.
        vertex: Option<usize>,
        /// `(w, child)` pairs; `w` is the squared edge weight.
        children: Vec<(Coeff, CFracNode)>,
    },
    Closing(ZFrac),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Latex,
}

impl CFracNode {
    pub fn leaf(vertex: Option<usize>) -> Self {
        CFracNode::Branch {
            vertex,
            children: Vec::new(),
        }
    }

    /// Number of `z` occurrences, i.e. of branch nodes.
    pub fn z_count(&self) -> usize {
        match self {
            CFracNode::Branch { children, .. } => {
                1 + children.iter().map(|(_, c)| c.z_count()).sum::<usize>()
            }
            CFracNode::Closing(_) => 0,
        }
    }

    /// Closing values in depth-first order.
    pub fn closings(&self) -> Vec<&ZFrac> {
        let mut out = Vec::new();
        self.collect_closings(&mut out);
        out
    }

    fn collect_closings<'a>(&'a self, out: &mut Vec<&'a ZFrac>) {
        match self {
            CFracNode::Branch { children, .. } => {
                for (_, c) in children {
                    c.collect_closings(out);
                }
            }
            CFracNode::Closing(r) => out.push(r),
        }
    }

    pub fn evaluate(&self) -> Result<ZFrac> {
        match self {
            CFracNode::Branch { children, .. } => {
                let mut den = ZFrac::from_poly(ZPoly::x());
                for (w, c) in children {
                    let v = c.evaluate()?;
                    den = &den - &(&ZFrac::from_poly(ZPoly::constant(*w)) * &v);
                }
                den.recip()
            }
            CFracNode::Closing(r) => r.recip(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Latex => self.latex(1),
            Format::Ascii => {
                let mut s = String::new();
                self.ascii(1, 0, &mut s);
                s
            }
        }
    }

    fn latex(&self, w: Coeff) -> String {
        match self {
            CFracNode::Branch { children, .. } => {
                let mut den = String::from("z");
                for (cw, c) in children {
                    den.push_str(" - ");
                    den.push_str(&c.latex(*cw));
                }
                format!("\\cfrac{{{w}}}{{{den}}}")
            }
            CFracNode::Closing(r) => format!("\\cfrac{{{w}}}{{{}}}", latex_frac(r)),
        }
    }

    fn ascii(&self, w: Coeff, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        let lead = if depth == 0 { String::new() } else { format!("{w} * ") };
        match self {
            CFracNode::Branch { children, .. } => {
                if children.is_empty() {
                    let _ = writeln!(out, "{pad}{lead}1/z");
                } else {
                    let _ = writeln!(out, "{pad}{lead}1/(z - ...)");
                    for (cw, c) in children {
                        c.ascii(*cw, depth + 1, out);
                    }
                }
            }
            CFracNode::Closing(r) => {
                let _ = writeln!(out, "{pad}{lead}1/({})", ascii_frac(r));
            }
        }
    }
}

fn latex_frac(r: &ZFrac) -> String {
    if r.den().is_one() {
        r.num().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.num(), r.den())
    }
}

fn ascii_frac(r: &ZFrac) -> String {
    if r.den().is_one() {
        r.num().to_string()
    } else {
        format!("({})/({})", r.num(), r.den())
    }
}

/// Expansion of a tree from `root`: each vertex becomes a branch node whose
/// children are its neighbours away from the root, weighted by `a²`.
pub fn expand_tree(d: &Diagram, root: usize) -> Result<CFracNode> {
    if root >= d.len() {
        return Err(Error::UnknownVertex(root));
    }
    if !d.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(expand_from(d, root, None))
}

fn expand_from(d: &Diagram, v: usize, parent: Option<usize>) -> CFracNode {
    let children = d
        .neighbors(v)
        .into_iter()
        .filter(|&u| Some(u) != parent)
        .map(|u| {
            let w = d.weight(v, u);
            (w * w, expand_from(d, u, Some(v)))
        })
        .collect();
    CFracNode::Branch {
        vertex: Some(v),
        children,
    }
}

/// Expansion of `A_n^# / ~A_n^#` from the affine vertex: two symmetric arms
/// of `min(depth, ⌊n/2⌋)` branch nodes each, closed by the exact remainder
/// of the cycle (`z/2` for odd `n`, `1` for even `n` at full depth).
pub fn expand_cycle(n: usize, depth: usize) -> Result<CFracNode> {
    let d = Diagram::build(Family::AffA, n)?;
    let t = cofactors(&d);
    let steps = depth.min(n / 2);
    // arm value at step k is H_k0 / H_{k-1,0}
    let closing = ZFrac::new(t.h(steps, 0).clone(), t.h(steps + 1, 0).clone())?;
    let mut arm = CFracNode::Closing(closing);
    for k in (1..=steps).rev() {
        arm = CFracNode::Branch {
            vertex: Some(k),
            children: vec![(1, arm)],
        };
    }
    Ok(CFracNode::Branch {
        vertex: Some(0),
        children: vec![(1, arm.clone()), (1, arm)],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::char_poly;

    #[test]
    fn single_vertex() {
        let c = expand_tree(&Diagram::new(1), 0).unwrap();
        assert_eq!(c.render(Format::Latex), "\\cfrac{1}{z}");
        assert_eq!(c.evaluate().unwrap(), ZFrac::new(ZPoly::one(), ZPoly::x()).unwrap());
    }

    #[test]
    fn nested_value() {
        let c = CFracNode::Branch {
            vertex: None,
            children: vec![(1, CFracNode::leaf(None))],
        };
        let want = ZFrac::new(ZPoly::x(), ZPoly::from_coeffs(vec![-1, 0, 1])).unwrap();
        assert_eq!(c.evaluate().unwrap(), want);
    }

    #[test]
    fn affine_d4_has_three_parallel_leaves() {
        let d = Diagram::build(Family::AffD, 4).unwrap();
        let c = expand_tree(&d, 0).unwrap();
        let s = c.render(Format::Latex);
        assert_eq!(
            s,
            "\\cfrac{1}{z - \\cfrac{1}{z - \\cfrac{1}{z} - \\cfrac{1}{z} - \\cfrac{1}{z}}}"
        );
        assert_eq!(c.z_count(), 5);
    }

    #[test]
    fn ascii_of_a2() {
        let c = expand_tree(&Diagram::build(Family::A, 2).unwrap(), 0).unwrap();
        assert_eq!(c.render(Format::Ascii), "1/(z - ...)\n  1 * 1/z\n");
    }

    #[test]
    fn cycle_closings_and_counts() {
        let c2 = expand_cycle(2, 99).unwrap();
        assert_eq!(c2.closings()[0], &ZFrac::from_poly(ZPoly::one()));
        assert_eq!(c2.z_count(), 3);
        let c3 = expand_cycle(3, 99).unwrap();
        let half = ZFrac::new(ZPoly::x(), ZPoly::constant(2)).unwrap();
        assert_eq!(c3.closings()[0], &half);
        assert_eq!(c3.z_count(), 3);
    }

    #[test]
    fn cycle_value() {
        for n in 1..=6 {
            let v = expand_cycle(n, n).unwrap().evaluate().unwrap();
            let a = char_poly(&Diagram::build(Family::A, n).unwrap());
            let aff = char_poly(&Diagram::build(Family::AffA, n).unwrap());
            assert_eq!(v, ZFrac::new(a, aff).unwrap(), "n={n}");
        }
    }

    #[test]
    fn cycles_are_not_trees() {
        let d = Diagram::build(Family::AffA, 3).unwrap();
        assert_eq!(expand_tree(&d, 0), Err(Error::NotATree));
    }
}
