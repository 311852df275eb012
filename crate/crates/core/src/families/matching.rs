use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("pair ({0}, {1}) is not an edge of the host graph")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is covered twice")]
    SharedEndpoint(usize),
    #[error("source vertex {0} is not matched")]
    UnmatchedSource(usize),
    #[error("matching is not perfect")]
    NotPerfect,
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
}

/// Pairwise disjoint edges of a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn new(g: &Graph, pairs: &[(usize, usize)]) -> Result<Self, MatchingError> {
        let mut mate = vec![None; g.order()];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if !g.has_edge(u, v) {
                return Err(MatchingError::NotAnEdge(u, v));
            }
            for w in [u, v] {
                if mate[w].is_some() {
                    return Err(MatchingError::SharedEndpoint(w));
                }
            }
            mate[u] = Some(v);
            mate[v] = Some(u);
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        Ok(Matching { edges, mate })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate.get(v).copied().flatten()
    }

    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.mate(u) == Some(v)
    }

    pub fn to_json(&self) -> Value {
        json!(self.edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())
    }
}

fn extend_perfect(
    g: &Graph,
    free: u64,
    pairs: &mut Vec<(usize, usize)>,
    visit: &mut dyn FnMut(&[(usize, usize)]) -> bool,
) -> bool {
    if free == 0 {
        return visit(pairs);
    }
    let u = free.trailing_zeros() as usize;
    let options = g.row(u) & free;
    for v in VertexSet::from_bits(options).iter() {
        pairs.push((u, v));
        let stop = extend_perfect(g, free & !(1u64 << u) & !(1u64 << v), pairs, visit);
        pairs.pop();
        if stop {
            return true;
        }
    }
    false
}

/// Every perfect matching, found by always matching the least unmatched
/// vertex first.
pub fn perfect_matchings(g: &Graph) -> Vec<Matching> {
    let mut out = Vec::new();
    extend_perfect(g, g.vertices().bits(), &mut Vec::new(), &mut |pairs| {
        out.push(Matching::new(g, pairs).expect("valid by construction"));
        false
    });
    out
}

/// The first perfect matching in the same search order.
pub fn first_perfect_matching(g: &Graph) -> Option<Matching> {
    let mut found = None;
    extend_perfect(g, g.vertices().bits(), &mut Vec::new(), &mut |pairs| {
        found = Some(Matching::new(g, pairs).expect("valid by construction"));
        true
    });
    found
}

/// Whether `left` can be matched into `right` using edges of `g` (Kuhn's
/// augmenting paths). With `|left| = |right|` this is a perfect matching
/// between the two sides.
pub fn saturates(g: &Graph, left: VertexSet, right: VertexSet) -> bool {
    fn augment(g: &Graph, u: usize, right: u64, seen: &mut u64, owner: &mut [Option<usize>]) -> bool {
        let mut options = g.row(u) & right & !*seen;
        while options != 0 {
            let v = options.trailing_zeros() as usize;
            options &= options - 1;
            *seen |= 1 << v;
            if owner[v].is_none_or(|w| augment(g, w, right, seen, owner)) {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }
    if left.len() > right.len() {
        return false;
    }
    let mut owner = vec![None; g.order()];
    left.iter().all(|u| {
        let mut seen = 0u64;
        augment(g, u, right.bits(), &mut seen, &mut owner)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c6_has_two_perfect_matchings() {
        let c6 = Graph::cycle(6).unwrap();
        let pms = perfect_matchings(&c6);
        assert_eq!(pms.len(), 2);
        assert!(pms.iter().all(Matching::is_perfect));
    }

    #[test]
    fn k4_and_k6_counts() {
        assert_eq!(perfect_matchings(&Graph::complete(4).unwrap()).len(), 3);
        assert_eq!(perfect_matchings(&Graph::complete(6).unwrap()).len(), 15);
        assert!(perfect_matchings(&Graph::path(3).unwrap()).is_empty());
        assert!(first_perfect_matching(&Graph::star(3).unwrap()).is_none());
    }

    #[test]
    fn invalid_matchings() {
        let p4 = Graph::path(4).unwrap();
        assert_eq!(Matching::new(&p4, &[(0, 2)]), Err(MatchingError::NotAnEdge(0, 2)));
        assert_eq!(
            Matching::new(&p4, &[(0, 1), (1, 2)]),
            Err(MatchingError::SharedEndpoint(1))
        );
        let m = Matching::new(&p4, &[(1, 0), (2, 3)]).unwrap();
        assert!(m.is_perfect());
        assert_eq!(m.to_json().to_string(), "[[0,1],[2,3]]");
    }

    #[test]
    fn bipartite_saturation() {
        // 0,1 on the left; 2,3 on the right; 0 sees only 2, 1 sees 2 and 3.
        let g = Graph::from_edges(4, &[(0, 2), (1, 2), (1, 3)]).unwrap();
        let left: VertexSet = [0, 1].into_iter().collect();
        let right: VertexSet = [2, 3].into_iter().collect();
        assert!(saturates(&g, left, right));
        let g = Graph::from_edges(4, &[(0, 2), (1, 2)]).unwrap();
        assert!(!saturates(&g, left, right));
    }
}
