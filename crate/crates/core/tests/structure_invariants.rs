use diagmin::algebra::{buchberger, normal_form, MonomialOrder};
use diagmin::graph::{family, Graph};
use diagmin::ideals::{augment_with_antidiagonal, pg_with_antidiagonal};
use diagmin::structure::{
    check_edge_primes, check_min_y, class_group_rank, lex_gb_classify, min_y_count,
    min_y_enumerate, minimal_primes, variety_check, WitnessClass,
};
use proptest::prelude::*;

fn graph(max_n: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len().min(max_edges))
            .prop_map(move |edges| Graph::from_edges(n, &edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_additive(a in graph(4, 5), b in graph(4, 5)) {
        let ra = class_group_rank(&a).unwrap().rank;
        let rb = class_group_rank(&b).unwrap().rank;
        prop_assert_eq!(class_group_rank(&a.disjoint_union(&b)).unwrap().rank, ra + rb);
    }

    #[test]
    fn rank_formula(g in graph(6, 8)) {
        let r = class_group_rank(&g).unwrap();
        let sum: u64 = g.degrees().iter().map(|&d| 1u64 << d).sum();
        prop_assert_eq!(r.rank, sum - g.n() as u64 - g.edge_count() as u64);
        prop_assert_eq!(r.min_y_count, min_y_enumerate(&g).len() as u64);
        if r.is_connected && g.edge_count() > 0 {
            let m = g.edge_count() as u64;
            prop_assert!(2 * m - 1 <= r.rank && r.rank < 1 << m);
        }
    }

    #[test]
    fn edge_primes_on_labelled_graphs(g in graph(5, 5)) {
        for &e in g.edges() {
            let report = check_edge_primes(&g, e).unwrap();
            prop_assert!(report.passed(), "{} {:?}", g, e);
            let c1 = report.witnesses.iter().filter(|w| w.witness.class == WitnessClass::C1).count();
            prop_assert_eq!(c1, 1 << (g.degree(e.0) - 1));
        }
        prop_assert!(check_min_y(&g).unwrap().passed());
    }

    #[test]
    fn lex_bound_on_labelled_graphs(g in graph(5, 5)) {
        prop_assert!(lex_gb_classify(&g).satisfies_degree_bound(), "{}", g);
    }
}

#[test]
fn augmented_ideal_equals_pg_plus_antidiagonal() {
    for spec in ["path:3", "star:3", "cycle:4", "complete:4"] {
        let g = family(spec).unwrap();
        for &e in g.edges() {
            for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
                let a = augment_with_antidiagonal(&g, e, order).unwrap();
                let b = pg_with_antidiagonal(&g, e, order).unwrap();
                let (ga, gb) = (buchberger(&a), buchberger(&b));
                assert!(
                    a.iter().all(|p| normal_form(p, &gb).unwrap().is_zero()),
                    "{spec} {e:?}"
                );
                assert!(
                    b.iter().all(|p| normal_form(p, &ga).unwrap().is_zero()),
                    "{spec} {e:?}"
                );
            }
        }
    }
}

#[test]
fn witness_counts_on_families() {
    let star = family("star:4").unwrap();
    // Centre 1 has degree 4, leaf degree 1: 2^3 + 2^0.
    assert_eq!(minimal_primes(&star, (1, 2)).unwrap().len(), 9);
    assert_eq!(min_y_count(&star).unwrap(), 15 + 4);
    let path = family("path:2").unwrap();
    assert_eq!(minimal_primes(&path, (1, 2)).unwrap().len(), 3);
    assert_eq!(
        minimal_primes(&family("path:1").unwrap(), (1, 2))
            .unwrap()
            .len(),
        2
    );
}

#[test]
fn variety_examples() {
    assert!(
        variety_check(&family("path:1").unwrap(), (1, 2), 2, false)
            .unwrap()
            .equal
    );
    assert!(
        variety_check(&family("path:2").unwrap(), (1, 2), 3, false)
            .unwrap()
            .equal
    );
    assert!(
        variety_check(&family("complete:3").unwrap(), (1, 2), 2, false)
            .unwrap()
            .equal
    );
    let triangle = family("complete:3").unwrap();
    assert!(variety_check(&triangle, (2, 3), 5, false).is_err());
    let r = variety_check(&triangle, (2, 3), 5, true).unwrap();
    assert!(r.equal);
    assert_eq!(r.points_checked, 5u64.pow(9));
}

#[test]
fn variety_is_the_same_in_sequential_and_parallel_runs() {
    let g = family("complete:4").unwrap();
    let parallel = variety_check(&g, (1, 2), 2, false).unwrap();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let single = pool.install(|| variety_check(&g, (1, 2), 2, false).unwrap());
    assert_eq!(parallel, single);
    assert!(parallel.equal);
}
