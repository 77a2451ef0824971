use cancel_spectral::cancellative::is_cancellative;
use cancel_spectral::enumerate::cancellative_classes;
use cancel_spectral::io::{from_hg3, to_hg3};
use cancel_spectral::{
    canonical_key, check_cancellative, links_edge_disjoint, switch, t3, turan3, Exec,
    UniformHypergraph,
};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

fn all_triples(n: usize) -> Vec<[usize; 3]> {
    let mut v = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                v.push([a, b, c]);
            }
        }
    }
    v
}

/// Triple-loop oracle straight from the definition.
fn brute_force_cancellative(g: &UniformHypergraph) -> bool {
    let e = g.edges();
    for a in e {
        for b in e {
            for c in e {
                if a == b || b == c || a == c {
                    continue;
                }
                let sym: Vec<usize> = b
                    .iter()
                    .filter(|x| !c.contains(x))
                    .chain(c.iter().filter(|x| !b.contains(x)))
                    .copied()
                    .collect();
                if sym.iter().all(|x| a.contains(x)) {
                    return false;
                }
            }
        }
    }
    true
}

fn subsets_up_to(n: usize, max_edges: usize, f: &mut impl FnMut(UniformHypergraph)) {
    let triples = all_triples(n);
    fn rec(
        triples: &[[usize; 3]],
        start: usize,
        cur: &mut Vec<[usize; 3]>,
        max: usize,
        n: usize,
        f: &mut impl FnMut(UniformHypergraph),
    ) {
        f(UniformHypergraph::new(n, cur.iter().copied()).unwrap());
        if cur.len() == max {
            return;
        }
        for i in start..triples.len() {
            cur.push(triples[i]);
            rec(triples, i + 1, cur, max, n, f);
            cur.pop();
        }
    }
    rec(&triples, 0, &mut Vec::new(), max_edges, n, f);
}

#[test]
fn cancellativity_matches_brute_force_up_to_eight_edges() {
    let mut checked = 0;
    for n in [5, 6] {
        subsets_up_to(n, 8, &mut |g| {
            let want = brute_force_cancellative(&g);
            let report = check_cancellative(&g);
            assert_eq!(report.cancellative, want, "{g}");
            assert_eq!(is_cancellative(&g), want, "{g}");
            if let Some((a, b, c)) = report.witness {
                assert!(b < c);
                let sym: Vec<usize> = b
                    .iter()
                    .filter(|x| !c.contains(x))
                    .chain(c.iter().filter(|x| !b.contains(x)))
                    .copied()
                    .collect();
                assert!(sym.iter().all(|x| a.contains(x)));
            }
            checked += 1;
        });
    }
    assert!(checked > 250_000);
}

#[test]
fn witness_is_lexicographically_least() {
    // Collect every witness by brute force and compare with the report.
    let g = UniformHypergraph::new(6, [[0, 1, 2], [0, 1, 3], [1, 2, 3], [2, 3, 4], [0, 4, 5]])
        .unwrap();
    let e = g.edges();
    let mut all = Vec::new();
    for a in e {
        for (i, b) in e.iter().enumerate() {
            for c in &e[i + 1..] {
                if a == b || a == c {
                    continue;
                }
                let sym: Vec<usize> = b
                    .iter()
                    .filter(|x| !c.contains(x))
                    .chain(c.iter().filter(|x| !b.contains(x)))
                    .copied()
                    .collect();
                if sym.iter().all(|x| a.contains(x)) {
                    all.push((*a, *b, *c));
                }
            }
        }
    }
    all.sort();
    assert_eq!(check_cancellative(&g).witness, all.first().copied());
}

#[test]
fn turan_edge_counts() {
    for n in 3..=30 {
        assert_eq!(turan3(n).unwrap().edge_count() as u64, t3(n));
    }
}

#[test]
fn links_disjoint_on_adjacent_pairs_of_cancellative_classes() {
    for n in 3..=6 {
        for class in cancellative_classes(n, Exec::Sequential).unwrap() {
            let g = &class.graph;
            for u in 0..n {
                for v in u + 1..n {
                    if g.adjacent(u, v) {
                        assert!(links_edge_disjoint(g, u, v).unwrap(), "{g} {u} {v}");
                    }
                }
            }
        }
    }
}

#[test]
fn turan9_canonical_key_is_permutation_invariant() {
    let t = turan3(9).unwrap();
    let k = canonical_key(&t).unwrap();
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    let perm = Just((0..9).collect::<Vec<usize>>()).prop_shuffle();
    for _ in 0..100 {
        let p = perm.new_tree(&mut runner).unwrap().current();
        assert_eq!(canonical_key(&t.relabel(&p).unwrap()).unwrap(), k);
    }
}

fn arb_hypergraph(max_n: usize) -> impl Strategy<Value = UniformHypergraph> {
    (3..=max_n).prop_flat_map(|n| {
        let triples = all_triples(n);
        let len = triples.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges = triples
                .iter()
                .zip(mask)
                .filter(|(_, keep)| *keep)
                .map(|(e, _)| *e);
            UniformHypergraph::new(n, edges).unwrap()
        })
    })
}

fn arb_cancellative() -> impl Strategy<Value = UniformHypergraph> {
    let pools: Vec<Vec<UniformHypergraph>> = (3..=7)
        .map(|n| {
            cancellative_classes(n, Exec::Sequential)
                .unwrap()
                .into_iter()
                .map(|c| c.graph)
                .collect()
        })
        .collect();
    let all: Vec<UniformHypergraph> = pools.into_iter().flatten().collect();
    proptest::sample::select(all).prop_flat_map(|g| {
        let n = g.n();
        Just((0..n).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(move |p| g.relabel(&p).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_key_ignores_labels(
        g in arb_hypergraph(10),
        seeds in proptest::collection::vec(any::<u64>(), 100),
    ) {
        let k = canonical_key(&g).unwrap();
        for s in seeds {
            let mut p: Vec<usize> = (0..g.n()).collect();
            let mut state = s;
            for i in (1..p.len()).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                p.swap(i, j);
            }
            prop_assert_eq!(&canonical_key(&g.relabel(&p).unwrap()).unwrap(), &k);
        }
    }

    #[test]
    fn switching_keeps_untouched_edges(g in arb_hypergraph(8), u in 0usize..8, v in 0usize..8) {
        prop_assume!(u != v && u < g.n() && v < g.n());
        let h = switch(&g, u, v).unwrap();
        prop_assert_eq!(h.n(), g.n());
        for e in g.edges() {
            if !e.contains(&u) && !e.contains(&v) {
                prop_assert!(h.contains_edge(*e));
            }
        }
        prop_assert!(!h.adjacent(u, v));
    }

    #[test]
    fn switching_preserves_cancellativity(g in arb_cancellative(), u in 0usize..7, v in 0usize..7) {
        prop_assume!(u != v && u < g.n() && v < g.n());
        prop_assert!(check_cancellative(&switch(&g, u, v).unwrap()).cancellative);
    }

    #[test]
    fn deleting_edges_keeps_cancellativity(g in arb_cancellative(), picks in proptest::collection::vec(any::<usize>(), 0..6)) {
        let mut h = g;
        for p in picks {
            if h.is_empty() {
                break;
            }
            h = h.without_edge_at(p % h.edge_count());
            prop_assert!(check_cancellative(&h).cancellative);
        }
    }

    #[test]
    fn hg3_round_trip(g in arb_hypergraph(9)) {
        let text = to_hg3(&g);
        let back = from_hg3(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_hg3(&back), text);
    }
}
