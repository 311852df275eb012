use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use wellhued::chroma::{hue_profile, realize_sequence};
use wellhued::cotree::{build_cotree, cotree_complement, cotree_to_graph, Cotree};
use wellhued::families::{
    first_perfect_matching, greedy_independent_alt_dominating, is_alternating_dominating,
    matching_invariance_check,
};
use wellhued::graph::{
    canonical_form, from_edge_list, from_graph6, to_edge_list, to_graph6, Graph, VertexSet,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Random graph on `2h` vertices containing the perfect matching
/// `{2i, 2i+1}`, with vertices shuffled.
fn random_with_pm(rng: &mut StdRng, h: usize) -> Graph {
    let n = 2 * h;
    let p = rng.gen_range(0.1..0.7);
    let mut g = random_graph(rng, n, p);
    for i in 0..h {
        g.add_edge(2 * i, 2 * i + 1).unwrap();
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    g.permute(&perm)
}

fn cograph(max_leaves: usize) -> impl Strategy<Value = Graph> {
    let leaf = Just(Graph::empty(1).unwrap()).boxed();
    leaf.prop_recursive(5, max_leaves as u32, 3, move |inner| {
        (inner.clone(), inner, any::<bool>()).prop_map(move |(a, b, join)| {
            if a.order() + b.order() > max_leaves {
                return a;
            }
            if join {
                a.join(&b).unwrap()
            } else {
                a.union(&b).unwrap()
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_involution(g in graph(20)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn de_morgan(a in graph(8), b in graph(8)) {
        prop_assert_eq!(
            a.join(&b).unwrap().complement(),
            a.complement().union(&b.complement()).unwrap()
        );
    }

    #[test]
    fn graph6_round_trip(g in graph(64)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(30)) {
        prop_assert_eq!(from_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(8), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        prop_assert_eq!(canonical_form(&g.permute(&perm)), canonical_form(&g));
    }

    #[test]
    fn sequence_shape(g in graph(9)) {
        let p = hue_profile(&g).unwrap();
        if let Some(a) = &p.sequence {
            prop_assert_eq!(a.len(), p.chromatic_number);
            prop_assert_eq!(*a.last().unwrap(), g.order());
            let d: Vec<usize> = std::iter::once(a[0])
                .chain(a.windows(2).map(|w| w[1] - w[0]))
                .collect();
            prop_assert!(d.iter().all(|&x| x >= 1));
            prop_assert!(d.windows(2).all(|w| w[0] >= w[1]));
            prop_assert!(p.meets_proportional_bound());
        }
    }

    #[test]
    fn second_entry_forces_completeness(g in graph(9)) {
        let p = hue_profile(&g).unwrap();
        let isolated = (0..g.order()).any(|v| g.degree(v) == 0);
        if let Some(a) = &p.sequence {
            if a.len() >= 2 && a[1] == a[0] + 1 && !isolated {
                prop_assert!(g.is_clique(g.vertices()));
            }
        }
    }

    #[test]
    fn realizer_round_trip(parts in proptest::collection::vec(1usize..=5, 1..=5)) {
        let mut d = parts;
        while d.iter().sum::<usize>() > 16 {
            d.pop();
        }
        d.sort_unstable_by(|a, b| b.cmp(a));
        let a: Vec<usize> = d.iter().scan(0, |s, &x| { *s += x; Some(*s) }).collect();
        let g = realize_sequence(&a).unwrap();
        prop_assert_eq!(hue_profile(&g).unwrap().sequence, Some(a));
    }

    #[test]
    fn cotree_s_expression_round_trip(g in cograph(12)) {
        let t = build_cotree(&g).unwrap();
        let parsed: Cotree = t.to_string().parse().unwrap();
        prop_assert_eq!(parsed.to_string(), t.to_string());
    }

    #[test]
    fn cotree_reproduces_graph(g in cograph(12)) {
        prop_assert_eq!(cotree_to_graph(&build_cotree(&g).unwrap()), g);
    }

    #[test]
    fn cotree_complement_commutes(g in cograph(12)) {
        let t = build_cotree(&g).unwrap();
        prop_assert_eq!(cotree_to_graph(&cotree_complement(&t)), g.complement());
        prop_assert_eq!(
            cotree_complement(&t).to_string(),
            build_cotree(&g.complement()).unwrap().to_string()
        );
    }
}

#[test]
fn complete_graphs_have_full_sequence() {
    for n in 1..=10 {
        let p = hue_profile(&Graph::complete(n).unwrap()).unwrap();
        assert_eq!(p.sequence, Some((1..=n).collect()));
    }
}

#[test]
fn greedy_alternating_dominating_sets() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..200 {
        let h = rng.gen_range(1..=6);
        let g = random_with_pm(&mut rng, h);
        let m = first_perfect_matching(&g).unwrap();
        let s = greedy_independent_alt_dominating(&g, &m).unwrap();
        assert!(g.is_independent(s), "{}", to_graph6(&g));
        assert!(is_alternating_dominating(&g, &m, s).unwrap(), "{}", to_graph6(&g));
    }
}

#[test]
fn alternating_domination_does_not_depend_on_matching() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..500 {
        let h = rng.gen_range(1..=5);
        let g = random_with_pm(&mut rng, h);
        let bits: u64 = rng.gen_range(0..1u64 << g.order());
        let s = VertexSet::from_bits(bits);
        if !g.is_independent(s) {
            continue;
        }
        assert!(matching_invariance_check(&g, s).unwrap(), "{} {bits:b}", to_graph6(&g));
    }
}
