use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::algebra::{
    buchberger, initial_ideal, normal_form, radical_height, GeneratorSet, MonomialOrder, VariableId,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ideals::{pg_with_antidiagonal, vertex_selection_ideal, witness_ideal};

/// Which endpoint of the edge `{i, j}` (`i < j`) carries the diagonal variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum WitnessClass {
    /// Contains `x[i,i]`; pivot `i`.
    C1,
    /// Contains `x[j,j]`; pivot `j`.
    C2,
}

/// A minimal prime of `(P_G, x[j,i])`:
/// `P_{G \ {p}} + (x[p,p], x[j,i]) + (one variable of {x[a,p], x[p,a]} per
/// neighbour a of p other than the far endpoint)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MinimalPrimeWitness {
    pub class: WitnessClass,
    pub edge: (usize, usize),
    pub pivot: usize,
    /// `(neighbour, chosen variable)` sorted by neighbour.
    pub selection: Vec<(usize, VariableId)>,
}

impl MinimalPrimeWitness {
    pub fn new(
        class: WitnessClass,
        edge: (usize, usize),
        mut selection: Vec<(usize, VariableId)>,
    ) -> Self {
        let edge = (edge.0.min(edge.1), edge.0.max(edge.1));
        let pivot = match class {
            WitnessClass::C1 => edge.0,
            WitnessClass::C2 => edge.1,
        };
        selection.sort();
        MinimalPrimeWitness {
            class,
            edge,
            pivot,
            selection,
        }
    }

    fn other_endpoint(&self) -> usize {
        match self.class {
            WitnessClass::C1 => self.edge.1,
            WitnessClass::C2 => self.edge.0,
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let (i, j) = self.edge;
        if i >= j {
            return Err(Error::MalformedWitness(format!(
                "edge ({i},{j}) must have i < j"
            )));
        }
        if !g.has_edge(i, j) {
            return Err(Error::EdgeNotInGraph { i, j });
        }
        let expected_pivot = match self.class {
            WitnessClass::C1 => i,
            WitnessClass::C2 => j,
        };
        if self.pivot != expected_pivot {
            return Err(Error::MalformedWitness(format!(
                "pivot {} does not match class {:?} of edge ({i},{j})",
                self.pivot, self.class
            )));
        }
        let other = self.other_endpoint();
        let required: Vec<usize> = g
            .neighbors(self.pivot)
            .into_iter()
            .filter(|&a| a != other)
            .collect();
        check_selection(self.pivot, &required, &self.selection)
    }

    /// Pivot and the sorted variables beyond `x[p,p]`, including `x[j,i]`.
    pub fn prime_key(&self) -> (usize, Vec<VariableId>) {
        let (i, j) = self.edge;
        let mut vars: Vec<VariableId> = self.selection.iter().map(|&(_, v)| v).collect();
        vars.push(VariableId {
            row: j as u32,
            col: i as u32,
        });
        vars.sort();
        (self.pivot, vars)
    }
}

fn check_selection(
    pivot: usize,
    required: &[usize],
    selection: &[(usize, VariableId)],
) -> Result<()> {
    let listed: Vec<usize> = selection.iter().map(|&(a, _)| a).collect();
    if listed != required {
        return Err(Error::MalformedWitness(format!(
            "selection covers neighbours {listed:?}, expected {required:?}"
        )));
    }
    for &(a, v) in selection {
        let (p, a32) = (pivot as u32, a as u32);
        let allowed = [
            VariableId { row: a32, col: p },
            VariableId { row: p, col: a32 },
        ];
        if !allowed.contains(&v) {
            return Err(Error::MalformedWitness(format!(
                "{v} is not in {{x[{a},{pivot}], x[{pivot},{a}]}}"
            )));
        }
    }
    Ok(())
}

impl fmt::Display for MinimalPrimeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}({},{}) pivot {} [",
            self.class, self.edge.0, self.edge.1, self.pivot
        )?;
        for (k, (_, v)) in self.selection.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

#[derive(Serialize)]
struct Choice {
    neighbor: usize,
    variable: [u32; 2],
}

fn choices(selection: &[(usize, VariableId)]) -> Vec<Choice> {
    selection
        .iter()
        .map(|&(a, v)| Choice {
            neighbor: a,
            variable: [v.row, v.col],
        })
        .collect()
}

impl Serialize for MinimalPrimeWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("MinimalPrimeWitness", 4)?;
        s.serialize_field("classTag", &self.class)?;
        s.serialize_field("edge", &[self.edge.0, self.edge.1])?;
        s.serialize_field("pivot", &self.pivot)?;
        s.serialize_field("selection", &choices(&self.selection))?;
        s.end()
    }
}

/// A choice of one variable of `{x[a,i], x[i,a]}` for every neighbour `a`
/// of `i`; it names a minimal prime of `y` containing `x[i,i]` exactly when
/// some chosen `x[c,d]` has `c > d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSelection {
    pub vertex: usize,
    pub selection: Vec<(usize, VariableId)>,
    pub has_lower_choice: bool,
}

impl VertexSelection {
    pub fn new(vertex: usize, mut selection: Vec<(usize, VariableId)>) -> Self {
        selection.sort();
        let has_lower_choice = selection.iter().any(|&(_, v)| v.row > v.col);
        VertexSelection {
            vertex,
            selection,
            has_lower_choice,
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.vertex == 0 || self.vertex > g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: self.vertex,
                n: g.n(),
            });
        }
        check_selection(self.vertex, &g.neighbors(self.vertex), &self.selection)
    }

    pub fn prime_key(&self) -> (usize, Vec<VariableId>) {
        let mut vars: Vec<VariableId> = self.selection.iter().map(|&(_, v)| v).collect();
        vars.sort();
        (self.vertex, vars)
    }
}

impl Serialize for VertexSelection {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("VertexSelection", 3)?;
        s.serialize_field("vertex", &self.vertex)?;
        s.serialize_field("selection", &choices(&self.selection))?;
        s.serialize_field("hasLowerChoice", &self.has_lower_choice)?;
        s.end()
    }
}

// All 2^|neighbours| choices; bit k set picks x[pivot,a_k], clear picks x[a_k,pivot].
fn all_choices(pivot: usize, neighbours: &[usize]) -> Vec<Vec<(usize, VariableId)>> {
    let p = pivot as u32;
    (0u64..1 << neighbours.len())
        .map(|mask| {
            neighbours
                .iter()
                .enumerate()
                .map(|(k, &a)| {
                    let a32 = a as u32;
                    let v = if mask >> k & 1 == 1 {
                        VariableId { row: p, col: a32 }
                    } else {
                        VariableId { row: a32, col: p }
                    };
                    (a, v)
                })
                .collect()
        })
        .collect()
}

/// Every minimal prime of `(P_G, x[j,i])` for the edge `{i, j}`: the
/// `2^(deg i - 1)` class C1 witnesses followed by the `2^(deg j - 1)`
/// class C2 witnesses.
pub fn minimal_primes(g: &Graph, edge: (usize, usize)) -> Result<Vec<MinimalPrimeWitness>> {
    let (i, j) = (edge.0.min(edge.1), edge.0.max(edge.1));
    if !g.has_edge(i, j) {
        return Err(Error::EdgeNotInGraph { i, j });
    }
    let mut out = Vec::new();
    for (class, pivot, other) in [(WitnessClass::C1, i, j), (WitnessClass::C2, j, i)] {
        let rest: Vec<usize> = g
            .neighbors(pivot)
            .into_iter()
            .filter(|&a| a != other)
            .collect();
        for selection in all_choices(pivot, &rest) {
            out.push(MinimalPrimeWitness::new(class, (i, j), selection));
        }
    }
    Ok(out)
}

/// Every vertex selection with a lower choice, grouped by vertex.
pub fn min_y_enumerate(g: &Graph) -> Vec<VertexSelection> {
    (1..=g.n())
        .flat_map(|v| {
            all_choices(v, &g.neighbors(v))
                .into_iter()
                .map(move |sel| VertexSelection::new(v, sel))
                .filter(|s| s.has_lower_choice)
        })
        .collect()
}

/// `sum_i (2^deg(i) - 1)`.
pub fn min_y_count(g: &Graph) -> Result<u64> {
    g.degrees().into_iter().try_fold(0u64, |acc, d| {
        let pow = 1u64
            .checked_shl(d as u32)
            .filter(|_| d < 64)
            .ok_or(Error::Overflow("2^deg"))?;
        acc.checked_add(pow - 1).ok_or(Error::Overflow("|Min(y)|"))
    })
}

/// One witness with its expanded generators and computed height.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessDetail {
    pub witness: MinimalPrimeWitness,
    pub generators: GeneratorSet,
    pub height: usize,
    pub contains_ideal: bool,
}

/// All checks on the minimal primes of one edge.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EdgePrimeReport {
    pub edge: [usize; 2],
    pub expected_count: u64,
    pub target_height: usize,
    pub witnesses: Vec<WitnessDetail>,
    pub count_ok: bool,
    pub heights_ok: bool,
    pub containment_ok: bool,
    pub pairwise_non_containment: bool,
}

impl EdgePrimeReport {
    pub fn passed(&self) -> bool {
        self.count_ok && self.heights_ok && self.containment_ok && self.pairwise_non_containment
    }
}

fn ideal_contains(gb: &GeneratorSet, gens: &GeneratorSet) -> bool {
    gens.iter()
        .all(|p| normal_form(p, gb).expect("same grid").is_zero())
}

/// Enumerates the witnesses of an edge and checks their count, heights,
/// that each contains `(P_G, x[j,i])`, and that no witness contains another.
pub fn check_edge_primes(g: &Graph, edge: (usize, usize)) -> Result<EdgePrimeReport> {
    let order = MonomialOrder::DegRevLex;
    let witnesses = minimal_primes(g, edge)?;
    let (i, j) = witnesses
        .first()
        .map(|w| w.edge)
        .unwrap_or((edge.0.min(edge.1), edge.0.max(edge.1)));
    let ideal = pg_with_antidiagonal(g, (i, j), order)?;
    let target_height = g.edge_count() + 1;
    let expected_count = (1u64 << (g.degree(i) - 1)) + (1u64 << (g.degree(j) - 1));

    let mut details = Vec::with_capacity(witnesses.len());
    let mut bases = Vec::with_capacity(witnesses.len());
    for w in witnesses {
        let generators = witness_ideal(g, &w, order)?;
        let gb = buchberger(&generators);
        let height = radical_height(&initial_ideal(&gb))?;
        let contains_ideal = ideal_contains(&gb, &ideal);
        details.push(WitnessDetail {
            witness: w,
            generators,
            height,
            contains_ideal,
        });
        bases.push(gb);
    }
    let pairwise_non_containment = (0..details.len()).all(|a| {
        (0..details.len()).all(|b| a == b || !ideal_contains(&bases[b], &details[a].generators))
    });
    Ok(EdgePrimeReport {
        edge: [i, j],
        expected_count,
        target_height,
        count_ok: details.len() as u64 == expected_count,
        heights_ok: details.iter().all(|d| d.height == target_height),
        containment_ok: details.iter().all(|d| d.contains_ideal),
        pairwise_non_containment,
        witnesses: details,
    })
}

/// Result of comparing the per-edge witnesses with the vertex selections.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MinYReport {
    pub union_count: usize,
    pub selection_count: usize,
    pub formula_count: u64,
    pub same_content: bool,
}

impl MinYReport {
    pub fn passed(&self) -> bool {
        self.same_content
            && self.union_count == self.selection_count
            && self.union_count as u64 == self.formula_count
    }
}

/// Deduplicated union over all edges of the expanded witness ideals,
/// compared with the expanded vertex selections and with the closed formula.
pub fn check_min_y(g: &Graph) -> Result<MinYReport> {
    let order = MonomialOrder::DegRevLex;
    let mut from_edges: Vec<GeneratorSet> = Vec::new();
    for &e in g.edges() {
        for w in minimal_primes(g, e)? {
            from_edges.push(witness_ideal(g, &w, order)?);
        }
    }
    let key = |s: &GeneratorSet| s.to_string();
    from_edges.sort_by_key(key);
    from_edges.dedup();
    let mut from_vertices: Vec<GeneratorSet> = min_y_enumerate(g)
        .iter()
        .map(|s| vertex_selection_ideal(g, s, order))
        .collect::<Result<_>>()?;
    from_vertices.sort_by_key(key);
    Ok(MinYReport {
        union_count: from_edges.len(),
        selection_count: from_vertices.len(),
        formula_count: min_y_count(g)?,
        same_content: from_edges == from_vertices,
    })
}
