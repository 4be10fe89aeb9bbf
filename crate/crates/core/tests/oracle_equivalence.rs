//! The two-term engine against the rational-coefficient Buchberger oracle on
//! random labelled graphs and on random two-term inputs.

use diagmin::algebra::{
    buchberger, initial_ideal, is_groebner_basis, is_reduced, normal_form, reduce_basis,
    GeneratorSet, Monomial, MonomialOrder, TwoTermPoly,
};
use diagmin::graph::Graph;
use diagmin::ideals::build_pg;
use diagmin::oracles::{generic_buchberger, GenericPoly};
use diagmin::structure::verify_revlex_gb;
use proptest::prelude::*;

const ORDERS: [MonomialOrder; 2] = [MonomialOrder::Lex, MonomialOrder::DegRevLex];

fn graph() -> impl Strategy<Value = Graph> {
    (2usize..=5).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len().min(5))
            .prop_map(move |edges| Graph::from_edges(n, &edges).unwrap())
    })
}

fn oracle(gens: &GeneratorSet) -> Vec<GenericPoly> {
    let input: Vec<_> = gens
        .iter()
        .map(|p| GenericPoly::from_two_term(p, gens.order()))
        .collect();
    generic_buchberger(&input, gens.order())
}

fn convert(gb: &GeneratorSet) -> Vec<GenericPoly> {
    gb.iter()
        .map(|p| GenericPoly::from_two_term(p, gb.order()))
        .collect()
}

// A leading term and, for binomials, a second term.
type TermSpec = (Vec<(u32, u32)>, Option<Vec<(u32, u32)>>);

// Binomials and monomials on a 3x3 grid of low degree.
fn two_term(n: u32) -> impl Strategy<Value = TermSpec> {
    let var = (1..=n, 1..=n);
    (
        proptest::collection::vec(var.clone(), 1..=3),
        proptest::option::of(proptest::collection::vec(var, 0..=3)),
    )
}

fn build(n: u32, spec: &TermSpec, order: MonomialOrder) -> TwoTermPoly {
    let a = Monomial::from_pairs(n, &spec.0);
    match &spec.1 {
        Some(b) => TwoTermPoly::binomial(a, Monomial::from_pairs(n, b), order),
        None => TwoTermPoly::Mono(a),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduced_basis_matches_oracle(g in graph()) {
        for order in ORDERS {
            let gens = build_pg(&g, order);
            let gb = reduce_basis(&buchberger(&gens));
            prop_assert!(is_groebner_basis(&gb));
            prop_assert!(is_reduced(&gb));
            prop_assert_eq!(convert(&gb), oracle(&gens), "{} {}", g, order);
        }
    }

    #[test]
    fn degrevlex_needs_no_additions(g in graph()) {
        let r = verify_revlex_gb(&g);
        prop_assert!(r.passed(g.edge_count()), "{} {:?}", g, r);
        let ini = initial_ideal(&build_pg(&g, MonomialOrder::DegRevLex));
        for m in &ini {
            prop_assert_eq!(m.degree(), 2);
            let v: Vec<_> = m.support().collect();
            prop_assert_eq!((v[0].row, v[0].col), (v[1].col, v[1].row));
        }
    }

    #[test]
    fn arbitrary_two_term_inputs_match_oracle(
        specs in proptest::collection::vec(two_term(3), 1..=4),
        lex in any::<bool>(),
    ) {
        let order = if lex { MonomialOrder::Lex } else { MonomialOrder::DegRevLex };
        let gens = GeneratorSet::new(3, order, specs.iter().map(|s| build(3, s, order))).unwrap();
        prop_assume!(!gens.is_empty());
        let gb = reduce_basis(&buchberger(&gens));
        prop_assert_eq!(convert(&gb), oracle(&gens));
        for p in gens.iter() {
            prop_assert!(normal_form(p, &gb).unwrap().is_zero());
        }
    }
}

#[test]
fn hand_computed_oracle_examples() {
    let g = Graph::from_edges(2, &[(1, 2)]).unwrap();
    let gens = build_pg(&g, MonomialOrder::Lex);
    assert_eq!(oracle(&gens), convert(&gens));

    let path = Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap();
    let gens = build_pg(&path, MonomialOrder::Lex);
    assert_eq!(oracle(&gens).len(), 3);
    assert_eq!(convert(&reduce_basis(&buchberger(&gens))), oracle(&gens));

    // f12 with x11 added: the minor collapses to x12*x21.
    let x11 = TwoTermPoly::Mono(Monomial::from_pairs(2, &[(1, 1)]));
    let gens = GeneratorSet::new(
        2,
        MonomialOrder::Lex,
        build_pg(&g, MonomialOrder::Lex)
            .into_gens()
            .into_iter()
            .chain([x11.clone()]),
    )
    .unwrap();
    let gb = reduce_basis(&buchberger(&gens));
    let expected = GeneratorSet::new(
        2,
        MonomialOrder::Lex,
        [
            x11,
            TwoTermPoly::Mono(Monomial::from_pairs(2, &[(1, 2), (2, 1)])),
        ],
    )
    .unwrap();
    assert_eq!(gb, expected);
    assert_eq!(convert(&gb), oracle(&gens));
}
