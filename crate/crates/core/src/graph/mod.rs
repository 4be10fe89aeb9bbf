//! Simple undirected graphs on the vertex set `1..=n`.

mod enumerate;
mod parse;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub use enumerate::{canonical_form, enumerate_connected, is_isomorphic, DEFAULT_EDGE_GUARD};
pub use parse::parse_edge_list;

/// A simple graph: no loops, no multiple edges, vertices `1..=n`.
///
/// Edges are stored as `(i, j)` with `i < j`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut seen = BTreeSet::new();
        for &(a, b) in pairs {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop { vertex: a });
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge { i: e.0, j: e.1 });
            }
        }
        Ok(Graph {
            n,
            edges: seen.into_iter().collect(),
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let e = (i.min(j), i.max(j));
        self.edges.binary_search(&e).is_ok()
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Degrees of vertices `1..=n`, in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a - 1] += 1;
            deg[b - 1] += 1;
        }
        deg
    }

    pub fn vertex_data(&self) -> VertexData {
        let mut neighbors = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            neighbors[a - 1].push(b);
            neighbors[b - 1].push(a);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        VertexData { neighbors }
    }

    /// Connectivity over all of `1..=n`; isolated vertices count.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let data = self.vertex_data();
        let mut seen = vec![false; self.n];
        let mut stack = vec![1usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in data.neighbors(v) {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// `G \ {v}`: drops every edge at `v`. The vertex set is kept so the
    /// variable grid stays the same.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        Graph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(a, b)| a != v && b != v)
                .collect(),
        }
    }

    pub fn remove_edge(&self, i: usize, j: usize) -> Result<Graph> {
        let e = (i.min(j), i.max(j));
        let pos = self
            .edges
            .binary_search(&e)
            .map_err(|_| Error::EdgeNotInGraph { i: e.0, j: e.1 })?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(Graph { n: self.n, edges })
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        edges.sort_unstable();
        Graph {
            n: self.n + other.n,
            edges,
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (k, (a, b)) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        f.write_str("]")
    }
}

/// Neighbour lists indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexData {
    neighbors: Vec<Vec<usize>>,
}

impl VertexData {
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v - 1].len()
    }
}

/// Named graph families.
///
/// `Path(m)` has `m` edges on `m + 1` vertices, `Star(m)` has centre 1 and
/// `m` leaves, `Cycle(m)` is the `m`-cycle and `Complete(k)` is `K_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        let check = |family: &'static str, value: usize, min: usize| {
            if value < min {
                Err(Error::FamilyParameter { family, value, min })
            } else {
                Ok(())
            }
        };
        match self {
            Family::Path(m) => {
                check("path", m, 1)?;
                let edges: Vec<_> = (1..=m).map(|i| (i, i + 1)).collect();
                Graph::from_edges(m + 1, &edges)
            }
            Family::Cycle(m) => {
                check("cycle", m, 3)?;
                let mut edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
                edges.push((1, m));
                Graph::from_edges(m, &edges)
            }
            Family::Star(m) => {
                check("star", m, 1)?;
                let edges: Vec<_> = (2..=m + 1).map(|i| (1, i)).collect();
                Graph::from_edges(m + 1, &edges)
            }
            Family::Complete(k) => {
                check("complete", k, 2)?;
                let edges: Vec<_> = (1..=k)
                    .flat_map(|i| (i + 1..=k).map(move |j| (i, j)))
                    .collect();
                Graph::from_edges(k, &edges)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(m) => write!(f, "path:{m}"),
            Family::Cycle(m) => write!(f, "cycle:{m}"),
            Family::Star(m) => write!(f, "star:{m}"),
            Family::Complete(k) => write!(f, "complete:{k}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let (name, param) = s
            .split_once(':')
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
        let value: usize = param
            .trim()
            .parse()
            .map_err(|_| Error::UnknownFamily(s.to_string()))?;
        match name.trim() {
            "path" => Ok(Family::Path(value)),
            "cycle" => Ok(Family::Cycle(value)),
            "star" => Ok(Family::Star(value)),
            "complete" => Ok(Family::Complete(value)),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// `family(spec)` for spec strings such as `path:4`.
pub fn family(spec: &str) -> Result<Graph> {
    spec.parse::<Family>()?.build()
}
