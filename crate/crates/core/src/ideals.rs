//! The ideal of diagonal 2-minors of a graph and the augmented ideals used
//! to describe its minimal primes.

use serde::Serialize;

use crate::algebra::{GeneratorSet, Monomial, MonomialOrder, TwoTermPoly, VariableId};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{MinimalPrimeWitness, VertexSelection};

/// `f_ij = x[i,i]*x[j,j] - x[i,j]*x[j,i]` for an edge `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalMinor {
    pub i: usize,
    pub j: usize,
    pub value: TwoTermPoly,
}

fn grid(g: &Graph) -> u32 {
    g.n() as u32
}

pub(crate) fn variable(n: u32, row: usize, col: usize) -> Monomial {
    Monomial::var(
        VariableId {
            row: row as u32,
            col: col as u32,
        },
        n,
    )
}

pub fn diagonal_minor(n: u32, i: usize, j: usize, order: MonomialOrder) -> TwoTermPoly {
    let diag = variable(n, i, i).mul(&variable(n, j, j));
    let anti = variable(n, i, j).mul(&variable(n, j, i));
    TwoTermPoly::binomial(diag, anti, order)
}

/// One minor per edge, in edge order `(i, j)`.
pub fn diagonal_minors(g: &Graph, order: MonomialOrder) -> Vec<DiagonalMinor> {
    g.edges()
        .iter()
        .map(|&(i, j)| DiagonalMinor {
            i,
            j,
            value: diagonal_minor(grid(g), i, j, order),
        })
        .collect()
}

/// Generators of `P_G` over the `n x n` grid, `n = g.n()`.
pub fn build_pg(g: &Graph, order: MonomialOrder) -> GeneratorSet {
    GeneratorSet::new(
        grid(g),
        order,
        diagonal_minors(g, order).into_iter().map(|d| d.value),
    )
    .expect("minors live on the graph's grid")
}

fn check_edge(g: &Graph, edge: (usize, usize)) -> Result<(usize, usize)> {
    let (i, j) = (edge.0.min(edge.1), edge.0.max(edge.1));
    if !g.has_edge(i, j) {
        return Err(Error::EdgeNotInGraph { i, j });
    }
    Ok((i, j))
}

/// `(P_G, x[j,i]) = (P_G', x[i,i]*x[j,j], x[j,i])` with `G'` = `G` minus the edge.
pub fn augment_with_antidiagonal(
    g: &Graph,
    edge: (usize, usize),
    order: MonomialOrder,
) -> Result<GeneratorSet> {
    let (i, j) = check_edge(g, edge)?;
    let rest = g.remove_edge(i, j)?;
    let n = grid(g);
    let extra = [
        TwoTermPoly::Mono(variable(n, i, i).mul(&variable(n, j, j))),
        TwoTermPoly::Mono(variable(n, j, i)),
    ];
    GeneratorSet::new(
        n,
        order,
        build_pg(&rest, order).into_gens().into_iter().chain(extra),
    )
}

/// `(P_G, x[j,i])` written with the original generators.
pub fn pg_with_antidiagonal(
    g: &Graph,
    edge: (usize, usize),
    order: MonomialOrder,
) -> Result<GeneratorSet> {
    let (i, j) = check_edge(g, edge)?;
    let n = grid(g);
    GeneratorSet::new(
        n,
        order,
        build_pg(g, order)
            .into_gens()
            .into_iter()
            .chain([TwoTermPoly::Mono(variable(n, j, i))]),
    )
}

// P_{G \ {pivot}} plus the pivot's diagonal variable and the listed variables.
fn pivot_ideal(
    g: &Graph,
    pivot: usize,
    vars: impl IntoIterator<Item = VariableId>,
    order: MonomialOrder,
) -> GeneratorSet {
    let n = grid(g);
    let monos = std::iter::once(variable(n, pivot, pivot))
        .chain(vars.into_iter().map(|v| Monomial::var(v, n)))
        .map(TwoTermPoly::Mono);
    GeneratorSet::new(
        n,
        order,
        build_pg(&g.remove_vertex(pivot), order)
            .into_gens()
            .into_iter()
            .chain(monos),
    )
    .expect("same grid")
}

/// Expands a minimal-prime witness to its generators:
/// `P_{G \ {p}}`, `x[p,p]`, `x[j,i]` and the selected variables.
pub fn witness_ideal(
    g: &Graph,
    w: &MinimalPrimeWitness,
    order: MonomialOrder,
) -> Result<GeneratorSet> {
    w.validate(g)?;
    let (i, j) = w.edge;
    let anti = VariableId {
        row: j as u32,
        col: i as u32,
    };
    Ok(pivot_ideal(
        g,
        w.pivot,
        std::iter::once(anti).chain(w.selection.iter().map(|&(_, v)| v)),
        order,
    ))
}

/// Expands a vertex selection: `P_{G \ {i}}`, `x[i,i]` and one variable of
/// `{x[a,i], x[i,a]}` for every neighbour `a`.
pub fn vertex_selection_ideal(
    g: &Graph,
    s: &VertexSelection,
    order: MonomialOrder,
) -> Result<GeneratorSet> {
    s.validate(g)?;
    Ok(pivot_ideal(
        g,
        s.vertex,
        s.selection.iter().map(|&(_, v)| v),
        order,
    ))
}
