//! Weighted Dynkin diagrams with an explicit vertex order.

pub(crate) mod build;
mod io;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{Coeff, Matrix};
use crate::error::{Error, Result};

pub use build::Family;

/// Finite graph without loops or multiple edges, with symmetric integer
/// weights and a total order on vertices used for matrix construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    labels: Vec<String>,
    // keyed by (i, j) with i < j; zero weights are never stored
    weights: BTreeMap<(usize, usize), Coeff>,
    order: Vec<usize>,
}

/// Result of a two-colouring attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// One colour class, then the other.
    Order(Vec<usize>),
    /// Vertices of an odd cycle, in cyclic order.
    NotBipartite { cycle: Vec<usize> },
}

fn key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

impl Diagram {
    /// `n` isolated vertices labelled `0..n`, in index order.
    pub fn new(n: usize) -> Self {
        Self {
            labels: (0..n).map(|i| i.to_string()).collect(),
            weights: BTreeMap::new(),
            order: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.len());
        self.labels = labels;
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Sets the weight of edge `{i, j}`; weight 0 removes it.
    pub fn set_edge(&mut self, i: usize, j: usize, w: Coeff) -> Result<()> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Err(Error::InvalidEdge(format!("loop at vertex {i}")));
        }
        if w == 0 {
            self.weights.remove(&key(i, j));
        } else {
            self.weights.insert(key(i, j), w);
        }
        Ok(())
    }

    pub fn weight(&self, i: usize, j: usize) -> Coeff {
        self.weights.get(&key(i, j)).copied().unwrap_or(0)
    }

    /// Edges `(i, j, w)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Coeff)> + '_ {
        self.weights.iter().map(|(&(i, j), &w)| (i, j, w))
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.weights
            .keys()
            .filter_map(|&(i, j)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Replaces the vertex order; `order` must be a permutation of the vertices.
    pub fn with_order(mut self, order: Vec<usize>) -> Result<Self> {
        let n = self.len();
        let seen: BTreeSet<usize> = order.iter().copied().collect();
        if order.len() != n || seen.len() != n || order.iter().any(|&v| v >= n) {
            return Err(Error::SizeMismatch(format!(
                "order {order:?} is not a permutation of 0..{n}"
            )));
        }
        self.order = order;
        Ok(self)
    }

    /// Position of each vertex in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }

    /// Symmetric weight matrix in index order.
    pub fn adjacency(&self) -> Matrix<Coeff> {
        Matrix::from_fn(self.len(), self.len(), |i, j| self.weight(i, j))
    }

    /// Unit upper-triangular matrix with `−a_ij` above the diagonal, rows and
    /// columns in diagram order.
    pub fn seifert(&self) -> Matrix<Coeff> {
        let n = self.len();
        Matrix::from_fn(n, n, |p, r| {
            if p == r {
                1
            } else if p < r {
                -self.weight(self.order[p], self.order[r])
            } else {
                0
            }
        })
    }

    /// Induced subdiagram on the remaining vertices, renumbered compactly in
    /// increasing index order; labels and relative order are kept.
    pub fn delete(&self, vs: &[usize]) -> Result<Diagram> {
        Ok(self.delete_with_map(vs)?.0)
    }

    /// As [`Diagram::delete`], also returning old index → new index.
    pub fn delete_with_map(&self, vs: &[usize]) -> Result<(Diagram, Vec<Option<usize>>)> {
        for &v in vs {
            self.check(v)?;
        }
        let gone: BTreeSet<usize> = vs.iter().copied().collect();
        let mut map = vec![None; self.len()];
        let mut labels = Vec::new();
        for (v, slot) in map.iter_mut().enumerate() {
            if !gone.contains(&v) {
                *slot = Some(labels.len());
                labels.push(self.labels[v].clone());
            }
        }
        let weights = self
            .weights
            .iter()
            .filter_map(|(&(i, j), &w)| Some((key(map[i]?, map[j]?), w)))
            .collect();
        let order = self.order.iter().filter_map(|&v| map[v]).collect();
        Ok((
            Diagram {
                labels,
                weights,
                order,
            },
            map,
        ))
    }

    /// Places the parts side by side; vertex indices and order are
    /// concatenated.
    pub fn disjoint_union(parts: &[Diagram]) -> Diagram {
        let mut out = Diagram::new(0);
        for p in parts {
            let off = out.len();
            out.labels.extend(p.labels.iter().cloned());
            for (i, j, w) in p.edges() {
                out.weights.insert((i + off, j + off), w);
            }
            out.order.extend(p.order.iter().map(|&v| v + off));
        }
        out
    }

    /// A new vertex (index 0, first in the order) joined by unit edges to the
    /// marked vertex of every part; the parts follow in sequence.
    pub fn join(parts: &[(Diagram, usize)]) -> Result<Diagram> {
        for (d, v) in parts {
            d.check(*v)?;
        }
        let pieces: Vec<Diagram> = parts.iter().map(|(d, _)| d.clone()).collect();
        let body = Diagram::disjoint_union(&pieces);
        let mut out = Diagram::disjoint_union(&[Diagram::new(1), body]);
        out.labels[0] = "v".into();
        let mut off = 1;
        for (d, v) in parts {
            out.set_edge(0, off + v, 1)?;
            off += d.len();
        }
        Ok(out)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.len()
    }

    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.is_forest() && self.components().len() == 1
    }

    /// Two-block order (one colour class, then the other) or an odd cycle.
    pub fn bipartite_order(&self) -> Bipartition {
        let n = self.len();
        let mut colour: Vec<Option<u8>> = vec![None; n];
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut depth = vec![0usize; n];
        for s in 0..n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    match colour[u] {
                        None => {
                            colour[u] = Some(1 - colour[v].unwrap());
                            parent[u] = Some(v);
                            depth[u] = depth[v] + 1;
                            queue.push_back(u);
                        }
                        Some(c) if c == colour[v].unwrap() => {
                            return Bipartition::NotBipartite {
                                cycle: odd_cycle(&parent, &depth, v, u),
                            };
                        }
                        _ => {}
                    }
                }
            }
        }
        let mut order: Vec<usize> = (0..n).filter(|&v| colour[v] == Some(0)).collect();
        order.extend((0..n).filter(|&v| colour[v] == Some(1)));
        Bipartition::Order(order)
    }

    /// Random tree on `n` vertices: each vertex attaches to a uniformly chosen
    /// earlier one, weights drawn from `weights`, order shuffled.
    pub fn random_tree<R: Rng>(rng: &mut R, n: usize, weights: &[Coeff]) -> Diagram {
        let mut d = Diagram::new(n);
        for v in 1..n {
            let u = rng.gen_range(0..v);
            let w = *weights.choose(rng).expect("nonempty weight list");
            d.set_edge(u, v, w).unwrap();
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        d.order = order;
        d
    }
}

fn odd_cycle(parent: &[Option<usize>], depth: &[usize], a: usize, b: usize) -> Vec<usize> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x].unwrap();
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y].unwrap();
        right.push(y);
    }
    while x != y {
        x = parent[x].unwrap();
        y = parent[y].unwrap();
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
