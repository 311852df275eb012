//! Isomorphism-class generation for small orders by one-vertex extension:
//! every graph on `n` vertices is some graph on `n − 1` vertices plus a new
//! vertex joined to a subset of the old ones.

use std::collections::BTreeSet;

use thiserror::Error;

use super::{canonical_form, from_graph6, Graph};

/// Largest order produced by the built-in generator.
pub const GENERATOR_MAX_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("generator order {0} outside 1..={GENERATOR_MAX_ORDER}")]
pub struct GeneratorOrderError(pub usize);

fn extend_classes(prev: &[Graph]) -> BTreeSet<String> {
    let mut forms = BTreeSet::new();
    for g in prev {
        let n = g.order();
        for subset in 0..1u64 << n {
            let mut rows: Vec<u64> = g.rows().to_vec();
            rows.push(subset);
            let h = Graph::from_rows_symmetrized(n + 1, &rows);
            forms.insert(canonical_form(&h));
        }
    }
    forms
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices (connected or not), sorted by canonical graph6.
pub fn enumerate_all_nonisomorphic(n: usize) -> Result<Vec<Graph>, GeneratorOrderError> {
    if n > GENERATOR_MAX_ORDER {
        return Err(GeneratorOrderError(n));
    }
    let mut level = vec![Graph::empty(0).expect("order 0")];
    for _ in 0..n {
        level = extend_classes(&level)
            .iter()
            .map(|s| from_graph6(s).expect("canonical forms parse"))
            .collect();
    }
    Ok(level)
}

/// One canonical representative per isomorphism class of connected graphs
/// on `n` vertices, in canonical-form order.
pub fn enumerate_connected_nonisomorphic(
    n: usize,
) -> Result<impl Iterator<Item = Graph>, GeneratorOrderError> {
    if n == 0 || n > GENERATOR_MAX_ORDER {
        return Err(GeneratorOrderError(n));
    }
    Ok(enumerate_all_nonisomorphic(n)?
        .into_iter()
        .filter(Graph::is_connected))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_connected_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut forms = BTreeSet::new();
        for code in 0..1u64 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| code >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() {
                forms.insert(canonical_form(&g));
            }
        }
        forms.len()
    }

    #[test]
    fn small_counts_match_labeled_brute_force() {
        for n in 1..=5 {
            let got = enumerate_connected_nonisomorphic(n).unwrap().count();
            assert_eq!(got, brute_force_connected_count(n), "n = {n}");
        }
    }

    #[test]
    fn connected_counts_up_to_seven() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| enumerate_connected_nonisomorphic(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        assert_eq!(counts.iter().sum::<usize>(), 996);
    }

    #[test]
    fn all_graph_counts() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| enumerate_all_nonisomorphic(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn output_is_canonical_and_sorted() {
        let gs: Vec<Graph> = enumerate_connected_nonisomorphic(5).unwrap().collect();
        let forms: Vec<String> = gs.iter().map(canonical_form).collect();
        for (g, f) in gs.iter().zip(&forms) {
            assert_eq!(&super::super::to_graph6(g), f);
        }
        let mut sorted = forms.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(forms, sorted);
    }

    #[test]
    fn order_range() {
        assert!(enumerate_connected_nonisomorphic(0).is_err());
        assert!(enumerate_connected_nonisomorphic(8).is_err());
    }
}
