//! Property tests: algebraic laws of degree vectors and integer subgroups,
//! factorization round-trips on randomized 1-graphs, saturation laws, and
//! text-format round-trips.

use proptest::prelude::*;

use kgraphkit::degree::DegreeVector;
use kgraphkit::format::{parse_kgraph, serialize_kgraph};
use kgraphkit::ideals::{classify_subset, hereditary_closure, saturate, VertexSet};
use kgraphkit::periodicity::IntSubgroup;
use kgraphkit::skeleton::{EdgeSpec, KGraph, KGraphSpec};

/// Spec of a 1-graph with `n` vertices and the given (range, source) pairs.
fn graph_spec(n: usize, pairs: &[(usize, usize)]) -> KGraphSpec {
    KGraphSpec {
        rank: 1,
        vertices: (0..n).map(|i| format!("v{i}")).collect(),
        edges: pairs
            .iter()
            .enumerate()
            .map(|(i, &(r, s))| EdgeSpec {
                id: format!("e{i}"),
                color: 0,
                range: format!("v{}", r % n),
                source: format!("v{}", s % n),
            })
            .collect(),
        squares: vec![],
    }
}

fn arb_1graph() -> impl Strategy<Value = KGraph> {
    (1usize..=3, proptest::collection::vec((0usize..3, 0usize..3), 0..6))
        .prop_map(|(n, pairs)| KGraph::build(&graph_spec(n, &pairs)).expect("1-graph builds"))
}

fn arb_degree(rank: usize, max: u32) -> impl Strategy<Value = DegreeVector> {
    proptest::collection::vec(0..=max, rank).prop_map(DegreeVector)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_lattice_laws(a in arb_degree(3, 5), b in arb_degree(3, 5), c in arb_degree(3, 5)) {
        let m = a.meet(&b);
        let j = a.join(&b);
        prop_assert!(m.le(&a) && m.le(&b));
        prop_assert!(a.le(&j) && b.le(&j));
        prop_assert_eq!(a.meet(&b), b.meet(&a));
        prop_assert_eq!(a.join(&b), b.join(&a));
        prop_assert_eq!(a.meet(&b).meet(&c), a.meet(&b.meet(&c)));
        prop_assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));
        prop_assert_eq!(a.meet(&a.join(&b)), a.clone());
        prop_assert_eq!(a.join(&a.meet(&b)), a.clone());
        // addition is monotone and cancels
        let s = a.add(&b);
        prop_assert!(a.le(&s) && b.le(&s));
        prop_assert_eq!(s.checked_sub(&b).unwrap(), a.clone());
        prop_assert_eq!(s.total(), a.total() + b.total());
    }

    #[test]
    fn degree_box_iter_enumerates_the_box(a in arb_degree(2, 3)) {
        let pts = a.box_iter();
        let expect: usize = a.0.iter().map(|&c| c as usize + 1).product();
        prop_assert_eq!(pts.len(), expect);
        for p in &pts {
            prop_assert!(p.le(&a));
        }
        let set: std::collections::BTreeSet<_> = pts.iter().map(|p| p.0.clone()).collect();
        prop_assert_eq!(set.len(), expect);
    }

    #[test]
    fn subgroup_canonical_form_laws(
        gens in proptest::collection::vec(
            proptest::collection::vec(-4i64..=4, 2), 0..4),
        coeffs in proptest::collection::vec(-3i64..=3, 4),
    ) {
        let s = IntSubgroup::from_generators(2, &gens).unwrap();
        // every generator is a member
        for g in &gens {
            prop_assert!(s.contains(g), "generator {:?} not contained", g);
        }
        // integer combinations of generators are members
        let mut combo = vec![0i64; 2];
        for (g, &c) in gens.iter().zip(&coeffs) {
            for i in 0..2 {
                combo[i] += c * g[i];
            }
        }
        prop_assert!(s.contains(&combo), "combination {:?} not contained", combo);
        // the canonical form is a fixed point
        let rows: Vec<Vec<i64>> = s.rows().to_vec();
        let again = IntSubgroup::from_generators(2, &rows).unwrap();
        prop_assert_eq!(again.rows(), s.rows());
        // membership is closed under negation
        if s.contains(&combo) {
            let neg: Vec<i64> = combo.iter().map(|x| -x).collect();
            prop_assert!(s.contains(&neg));
        }
        // triviality matches the generators
        let all_zero = gens.iter().all(|g| g.iter().all(|&x| x == 0));
        prop_assert_eq!(s.is_trivial(), all_zero);
    }

    #[test]
    fn factorize_compose_round_trip(g in arb_1graph(), pick in any::<u64>()) {
        for v in 0..g.vertex_count() {
            let paths = g.le_paths(v, &DegreeVector(vec![3])).unwrap();
            if paths.is_empty() {
                continue;
            }
            let p = &paths[(pick % paths.len() as u64) as usize];
            for m in p.degree.box_iter() {
                let (head, tail) = g.factorize(p, &m).unwrap();
                prop_assert_eq!(head.degree.clone(), m);
                let back = g.compose(&head, &tail).unwrap();
                prop_assert_eq!(&back, p);
            }
        }
    }

    #[test]
    fn paths_of_degree_agree_with_walk_counts(g in arb_1graph()) {
        // In a 1-graph the number of degree-n paths from v is the n-th power
        // of the adjacency matrix applied to the indicator of v.
        let n = g.vertex_count();
        let mut adj = vec![vec![0u64; n]; n];
        for e in 0..g.edge_count() {
            let e = g.edge(e);
            adj[e.range][e.source] += 1;
        }
        for v in 0..n {
            let mut row = vec![0u64; n];
            row[v] = 1;
            for len in 0..=3u32 {
                let paths = g.paths_of_degree(v, &DegreeVector(vec![len])).unwrap();
                prop_assert_eq!(paths.len() as u64, row.iter().sum::<u64>());
                let mut next = vec![0u64; n];
                for a in 0..n {
                    for b in 0..n {
                        next[b] += row[a] * adj[a][b];
                    }
                }
                row = next;
            }
        }
    }

    #[test]
    fn saturation_laws(g in arb_1graph(), mask in any::<u8>()) {
        let seed: VertexSet = (0..g.vertex_count())
            .filter(|v| mask & (1 << v) != 0)
            .collect();
        let h = hereditary_closure(&g, &seed);
        let rep = classify_subset(&g, &h);
        prop_assert!(rep.hereditary);
        let s = saturate(&g, &h);
        let rep = classify_subset(&g, &s);
        prop_assert!(rep.hereditary && rep.saturated);
        prop_assert!(h.is_subset(&s));
        prop_assert_eq!(saturate(&g, &s.clone()), s);
    }

    #[test]
    fn format_round_trip(g in arb_1graph()) {
        let spec = g.spec();
        let text = serialize_kgraph(&spec, &Default::default());
        let (back, budget) = parse_kgraph(&text).unwrap();
        prop_assert_eq!(back, spec);
        prop_assert_eq!(budget, Default::default());
    }
}
