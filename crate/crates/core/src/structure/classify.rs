use std::collections::BTreeMap;

use itertools::Itertools;
use serde::Serialize;

use crate::algebra::{
    buchberger, reduce_basis, GeneratorSet, Monomial, MonomialOrder, TwoTermPoly,
};
use crate::graph::Graph;
use crate::ideals::build_pg;

/// The binomial shapes produced by completing the diagonal minors in lex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Template {
    Generator,
    #[serde(rename = "Deg3-case-i")]
    Deg3CaseI,
    #[serde(rename = "Deg3-case-ii")]
    Deg3CaseII,
    #[serde(rename = "Deg3-case-iii")]
    Deg3CaseIII,
    #[serde(rename = "Deg4-case-1")]
    Deg4Case1,
    #[serde(rename = "Deg4-case-2")]
    Deg4Case2,
    #[serde(rename = "Deg4-case-3")]
    Deg4Case3,
    Unclassified,
}

// Index slots are numbered; each term is a list of (row slot, col slot);
// `less` lists slot pairs (a, b) requiring value[a] < value[b]. All slots
// take distinct values. Each quartic is a path a-b-c-d of G with the outer
// edges in the lead; case 2 only asks b < a < c and so contains cases 1 and
// 3, which are therefore tried first.
struct Shape {
    template: Template,
    slots: usize,
    first: &'static [(usize, usize)],
    second: &'static [(usize, usize)],
    less: &'static [(usize, usize)],
}

const I: usize = 0;
const J: usize = 1;
const L: usize = 2;
const Q: usize = 3;
const K: usize = 2;

const SHAPES: &[Shape] = &[
    // x_ii x_jj - x_ij x_ji, i < j
    Shape {
        template: Template::Generator,
        slots: 2,
        first: &[(I, I), (J, J)],
        second: &[(I, J), (J, I)],
        less: &[(I, J)],
    },
    // S(f_ij, f_jl) = x_ii x_jl x_lj - x_ll x_ij x_ji, i < j < l
    Shape {
        template: Template::Deg3CaseI,
        slots: 3,
        first: &[(I, I), (J, L), (L, J)],
        second: &[(L, L), (I, J), (J, I)],
        less: &[(I, J), (J, L)],
    },
    // S(f_ij, f_il) = x_jj x_il x_li - x_ll x_ij x_ji, i < j < l
    Shape {
        template: Template::Deg3CaseII,
        slots: 3,
        first: &[(J, J), (I, L), (L, I)],
        second: &[(L, L), (I, J), (J, I)],
        less: &[(I, J), (J, L)],
    },
    // S(f_ij, f_kj) = x_ii x_jk x_kj - x_kk x_ji x_ij, i < k < j
    Shape {
        template: Template::Deg3CaseIII,
        slots: 3,
        first: &[(I, I), (J, K), (K, J)],
        second: &[(K, K), (J, I), (I, J)],
        less: &[(I, K), (K, J)],
    },
    // x_jl x_lj x_qi x_iq - x_qq x_ll x_ij x_ji, i < q < j < l
    Shape {
        template: Template::Deg4Case1,
        slots: 4,
        first: &[(J, L), (L, J), (Q, I), (I, Q)],
        second: &[(Q, Q), (L, L), (I, J), (J, I)],
        less: &[(I, Q), (Q, J), (J, L)],
    },
    // x_iq x_qi x_jk x_kj - x_ij x_ji x_kk x_qq, i < k < j, i < q < j
    Shape {
        template: Template::Deg4Case3,
        slots: 4,
        first: &[(I, Q), (Q, I), (J, K), (K, J)],
        second: &[(I, J), (J, I), (K, K), (Q, Q)],
        less: &[(I, K), (K, J), (I, Q), (Q, J)],
    },
    // x_ij x_ji x_lq x_ql - x_qq x_jj x_il x_li, i < j < l
    Shape {
        template: Template::Deg4Case2,
        slots: 4,
        first: &[(I, J), (J, I), (L, Q), (Q, L)],
        second: &[(Q, Q), (J, J), (I, L), (L, I)],
        less: &[(I, J), (J, L)],
    },
];

fn instantiate(n: u32, term: &[(usize, usize)], values: &[usize]) -> Monomial {
    let pairs: Vec<(u32, u32)> = term
        .iter()
        .map(|&(r, c)| (values[r] as u32, values[c] as u32))
        .collect();
    Monomial::from_pairs(n, &pairs)
}

fn matches_shape(shape: &Shape, a: &Monomial, b: &Monomial) -> bool {
    if (a.degree() + b.degree()) as usize != shape.first.len() + shape.second.len() {
        return false;
    }
    let mut indices: Vec<usize> = a
        .support()
        .chain(b.support())
        .flat_map(|v| [v.row as usize, v.col as usize])
        .collect();
    indices.sort_unstable();
    indices.dedup();
    if indices.len() != shape.slots {
        return false;
    }
    let n = a.n();
    indices
        .iter()
        .copied()
        .permutations(shape.slots)
        .any(|values| {
            shape.less.iter().all(|&(x, y)| values[x] < values[y]) && {
                let first = instantiate(n, shape.first, &values);
                let second = instantiate(n, shape.second, &values);
                (&first == a && &second == b) || (&first == b && &second == a)
            }
        })
}

/// The first template matching `p`, or `Unclassified`.
pub fn classify_element(p: &TwoTermPoly) -> Template {
    let TwoTermPoly::Binom { lead, trail } = p else {
        return Template::Unclassified;
    };
    SHAPES
        .iter()
        .find(|s| matches_shape(s, lead, trail))
        .map_or(Template::Unclassified, |s| s.template)
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassifiedElement {
    pub polynomial: TwoTermPoly,
    pub degree: u32,
    pub template: Template,
    pub squarefree_lead: bool,
}

/// The reduced lex Gröbner basis of `P_G`, grouped by degree and matched
/// against the S-polynomial templates.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LexGBClassification {
    pub elements: Vec<ClassifiedElement>,
    pub by_degree: BTreeMap<u32, Vec<TwoTermPoly>>,
    pub template_counts: BTreeMap<Template, usize>,
    pub unclassified: usize,
    pub all_binomial: bool,
    pub all_squarefree_leads: bool,
    pub max_degree: u32,
}

impl LexGBClassification {
    /// Every element is a pure-difference binomial of degree at most 4 with
    /// a squarefree leading monomial.
    pub fn satisfies_degree_bound(&self) -> bool {
        self.all_binomial && self.all_squarefree_leads && self.max_degree <= 4
    }
}

pub fn reduced_lex_basis(g: &Graph) -> GeneratorSet {
    reduce_basis(&buchberger(&build_pg(g, MonomialOrder::Lex)))
}

pub fn lex_gb_classify(g: &Graph) -> LexGBClassification {
    classify_basis(&reduced_lex_basis(g))
}

pub fn classify_basis(gb: &GeneratorSet) -> LexGBClassification {
    let elements: Vec<ClassifiedElement> = gb
        .iter()
        .map(|p| ClassifiedElement {
            polynomial: p.clone(),
            degree: p.degree(),
            template: classify_element(p),
            squarefree_lead: p.lead().is_some_and(Monomial::is_squarefree),
        })
        .collect();
    let mut by_degree: BTreeMap<u32, Vec<TwoTermPoly>> = BTreeMap::new();
    let mut template_counts = BTreeMap::new();
    for e in &elements {
        by_degree
            .entry(e.degree)
            .or_default()
            .push(e.polynomial.clone());
        *template_counts.entry(e.template).or_insert(0) += 1;
    }
    LexGBClassification {
        unclassified: template_counts
            .get(&Template::Unclassified)
            .copied()
            .unwrap_or(0),
        all_binomial: elements.iter().all(|e| e.polynomial.is_binomial()),
        all_squarefree_leads: elements.iter().all(|e| e.squarefree_lead),
        max_degree: elements.iter().map(|e| e.degree).max().unwrap_or(0),
        elements,
        by_degree,
        template_counts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family;
    use MonomialOrder::Lex;

    fn binom(n: u32, a: &[(u32, u32)], b: &[(u32, u32)]) -> TwoTermPoly {
        TwoTermPoly::binomial(Monomial::from_pairs(n, a), Monomial::from_pairs(n, b), Lex)
    }

    #[test]
    fn templates_recognise_their_own_instances() {
        let n = 5;
        assert_eq!(
            classify_element(&binom(n, &[(2, 2), (4, 4)], &[(2, 4), (4, 2)])),
            Template::Generator
        );
        // i=1, j=2, l=3
        assert_eq!(
            classify_element(&binom(
                n,
                &[(1, 1), (2, 3), (3, 2)],
                &[(3, 3), (1, 2), (2, 1)]
            )),
            Template::Deg3CaseI
        );
        assert_eq!(
            classify_element(&binom(
                n,
                &[(2, 2), (1, 3), (3, 1)],
                &[(3, 3), (1, 2), (2, 1)]
            )),
            Template::Deg3CaseII
        );
        // i=1, k=2, j=3
        assert_eq!(
            classify_element(&binom(
                n,
                &[(1, 1), (3, 2), (2, 3)],
                &[(2, 2), (3, 1), (1, 3)]
            )),
            Template::Deg3CaseIII
        );
        // i=1, q=2, j=3, l=4
        assert_eq!(
            classify_element(&binom(
                n,
                &[(3, 4), (4, 3), (2, 1), (1, 2)],
                &[(2, 2), (4, 4), (1, 3), (3, 1)]
            )),
            Template::Deg4Case1
        );
        // i=2, j=3, l=4, q=1
        assert_eq!(
            classify_element(&binom(
                n,
                &[(2, 3), (3, 2), (4, 1), (1, 4)],
                &[(1, 1), (3, 3), (2, 4), (4, 2)]
            )),
            Template::Deg4Case2
        );
        // With q > l the same shape is case 1.
        assert_eq!(
            classify_element(&binom(
                n,
                &[(1, 2), (2, 1), (3, 4), (4, 3)],
                &[(4, 4), (2, 2), (1, 3), (3, 1)]
            )),
            Template::Deg4Case1
        );
        // i=1, q=2, k=3, j=4
        assert_eq!(
            classify_element(&binom(
                n,
                &[(1, 2), (2, 1), (4, 3), (3, 4)],
                &[(1, 4), (4, 1), (3, 3), (2, 2)]
            )),
            Template::Deg4Case3
        );
        assert_eq!(
            classify_element(&binom(n, &[(1, 1)], &[(2, 2)])),
            Template::Unclassified
        );
        assert_eq!(
            classify_element(&TwoTermPoly::Mono(Monomial::from_pairs(n, &[(1, 1)]))),
            Template::Unclassified
        );
    }

    #[test]
    fn path_of_two_edges() {
        let c = lex_gb_classify(&family("path:2").unwrap());
        assert_eq!(c.by_degree[&2].len(), 2);
        assert_eq!(
            c.by_degree[&3],
            vec![binom(
                3,
                &[(1, 1), (2, 3), (3, 2)],
                &[(3, 3), (1, 2), (2, 1)]
            )]
        );
        assert!(!c.by_degree.contains_key(&4));
        assert_eq!(
            c.elements.iter().find(|e| e.degree == 3).unwrap().template,
            Template::Deg3CaseI
        );
        assert!(c.satisfies_degree_bound());
        assert_eq!(c.unclassified, 0);
    }

    #[test]
    fn single_edge() {
        let c = lex_gb_classify(&family("path:1").unwrap());
        assert_eq!(c.by_degree.keys().copied().collect::<Vec<_>>(), vec![2]);
        assert_eq!(c.elements[0].template, Template::Generator);
    }

    #[test]
    fn case_one_quartic() {
        let g = Graph::from_edges(5, &[(1, 5), (2, 3), (2, 4), (3, 4), (4, 5)]).unwrap();
        let c = lex_gb_classify(&g);
        assert!(c.satisfies_degree_bound());
        assert_eq!(c.max_degree, 4);
        let quartic = binom(
            5,
            &[(2, 3), (3, 2), (4, 5), (5, 4)],
            &[(2, 4), (3, 3), (4, 2), (5, 5)],
        );
        let e = c
            .elements
            .iter()
            .find(|e| e.polynomial == quartic)
            .expect("quartic in basis");
        assert_eq!(e.template, Template::Deg4Case1);
        // Lex on the path 1-2-3-4 needs no quartic.
        assert!(!lex_gb_classify(&family("path:3").unwrap())
            .by_degree
            .contains_key(&4));
    }

    #[test]
    fn triangle_has_an_element_outside_the_templates() {
        let c = lex_gb_classify(&family("complete:3").unwrap());
        assert!(c.satisfies_degree_bound());
        let odd = binom(
            3,
            &[(1, 2), (2, 1), (2, 3), (3, 2)],
            &[(1, 3), (2, 2), (2, 2), (3, 1)],
        );
        assert_eq!(
            c.elements
                .iter()
                .filter(|e| e.template == Template::Unclassified)
                .count(),
            1
        );
        assert!(c.elements.iter().any(|e| e.polynomial == odd));
    }
}
