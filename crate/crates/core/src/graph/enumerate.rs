use std::collections::BTreeSet;

use itertools::Itertools;

use super::Graph;
use crate::error::{Error, Result};
use crate::par;

/// Largest edge count enumerated without an explicit override.
pub const DEFAULT_EDGE_GUARD: usize = 7;

// Bit of pair (u, v), u < v (0-based), in a k-vertex adjacency string whose
// first pair (0,1) is the most significant bit.
fn pair_bit(k: usize, u: usize, v: usize) -> u64 {
    let pairs = k * (k - 1) / 2;
    let idx = u * k - u * (u + 1) / 2 + (v - u - 1);
    1u64 << (pairs - 1 - idx)
}

fn code_under(k: usize, edges: &[(usize, usize)], perm: &[usize]) -> u64 {
    edges
        .iter()
        .map(|&(a, b)| {
            let (u, v) = (perm[a - 1], perm[b - 1]);
            pair_bit(k, u.min(v), u.max(v))
        })
        .fold(0, |acc, bit| acc | bit)
}

/// Canonical labelling by brute force: the lexicographically minimal
/// adjacency bit-string over all vertex permutations. Returns the
/// relabelled graph and its code. Practical for `n <= 8`.
pub fn canonical_form(g: &Graph) -> (Graph, u64) {
    let k = g.n();
    if k < 2 {
        return (g.clone(), 0);
    }
    let code = (0..k)
        .permutations(k)
        .map(|perm| code_under(k, g.edges(), &perm))
        .min()
        .expect("at least one permutation");
    (graph_from_code(k, code), code)
}

fn graph_from_code(k: usize, code: u64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..k)
        .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
        .filter(|&(u, v)| code & pair_bit(k, u, v) != 0)
        .map(|(u, v)| (u + 1, v + 1))
        .collect();
    Graph::from_edges(k, &edges).expect("code describes a simple graph")
}

/// Isomorphism test by trying every vertex bijection.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    (0..a.n()).permutations(a.n()).any(|perm| {
        a.edges()
            .iter()
            .all(|&(x, y)| b.has_edge(perm[x - 1] + 1, perm[y - 1] + 1))
    })
}

/// All connected graphs with exactly `m` edges and at most `max_vertices`
/// vertices, one canonical representative per isomorphism class, sorted by
/// vertex count and then by canonical code.
///
/// Graphs are grown edge by edge: every connected graph with `m >= 2`
/// edges has an edge whose removal (dropping a leaf if needed) leaves a
/// connected graph with `m - 1` edges.
pub fn enumerate_connected(m: usize, max_vertices: usize, force: bool) -> Result<Vec<Graph>> {
    if m == 0 {
        return Err(Error::FamilyParameter {
            family: "edge count",
            value: 0,
            min: 1,
        });
    }
    if m > DEFAULT_EDGE_GUARD && !force {
        return Err(Error::Guard {
            what: "edge count",
            value: m as u64,
            limit: DEFAULT_EDGE_GUARD as u64,
        });
    }
    if max_vertices < 2 {
        return Ok(Vec::new());
    }
    let mut level: BTreeSet<(usize, u64)> = BTreeSet::new();
    level.insert((2, 1));
    for _ in 1..m {
        let candidates: Vec<Graph> = level
            .iter()
            .flat_map(|&(k, code)| extensions(&graph_from_code(k, code), max_vertices))
            .collect();
        let canon = par::map(&candidates, |g| (g.n(), canonical_form(g).1));
        level = canon.into_iter().collect();
    }
    Ok(level
        .into_iter()
        .map(|(k, code)| graph_from_code(k, code))
        .collect())
}

// One-edge extensions: a chord between existing vertices or a pendant edge
// to a new vertex.
fn extensions(g: &Graph, max_vertices: usize) -> Vec<Graph> {
    let k = g.n();
    let mut out = Vec::new();
    for u in 1..=k {
        for v in u + 1..=k {
            if !g.has_edge(u, v) {
                let mut edges = g.edges().to_vec();
                edges.push((u, v));
                out.push(Graph::from_edges(k, &edges).expect("new edge"));
            }
        }
    }
    if k < max_vertices {
        for u in 1..=k {
            let mut edges = g.edges().to_vec();
            edges.push((u, k + 1));
            out.push(Graph::from_edges(k + 1, &edges).expect("new vertex"));
        }
    }
    out
}
