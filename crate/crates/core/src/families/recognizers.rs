//! Recognizers for the structural characterizations of well-hued graphs.
//! Each returns a [`Verdict`] carrying a witness when the structure is found.

use serde_json::{json, Value};
use thiserror::Error;

use super::alternating::is_alternating_dominating;
use super::matching::{first_perfect_matching, saturates, Matching};
use crate::chroma::independence_number;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("parameter k = {k} out of range for order {n} (need k >= 2 and n >= 3k)")]
    ParameterOutOfRange { k: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Order of the complete graph whose corona this is.
    Corona { clique_order: usize },
    /// Partite pairs of the host `K_{2,…,2}` (edges of the complement).
    Pairs(Matching),
    /// Apex vertex, its non-neighbors in `G − c`, and the pairing of `G − c`.
    Apex {
        apex: usize,
        non_neighbors: VertexSet,
        pairs: Matching,
    },
    /// The large clique and the remaining `k` vertices.
    CliqueSplit { clique: VertexSet, rest: VertexSet },
    /// Parts of the host balanced complete multipartite graph.
    Parts(Vec<VertexSet>),
}

impl Witness {
    pub fn to_json(&self) -> Value {
        match self {
            Witness::Corona { clique_order } => json!({ "clique_order": clique_order }),
            Witness::Pairs(m) => json!({ "pairs": m.to_json() }),
            Witness::Apex {
                apex,
                non_neighbors,
                pairs,
            } => json!({
                "c": apex,
                "s": non_neighbors.to_vec(),
                "pairs": pairs.to_json(),
            }),
            Witness::CliqueSplit { clique, rest } => json!({
                "clique": clique.to_vec(),
                "g2": rest.to_vec(),
            }),
            Witness::Parts(parts) => json!({
                "parts": parts.iter().map(|p| p.to_vec()).collect::<Vec<_>>(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub predicate: &'static str,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn new(predicate: &'static str, witness: Option<Witness>) -> Self {
        Verdict { predicate, witness }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_some()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "predicate": self.predicate,
            "holds": self.holds(),
            "witness": self.witness.as_ref().map(Witness::to_json),
        })
    }
}

/// `m` when `g` is the corona of `K_m`: `m` leaves with distinct neighbors,
/// those neighbors pairwise adjacent with degree exactly `m`, and nothing else.
pub fn is_corona_of_complete(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n == 0 || n % 2 == 1 {
        return None;
    }
    let m = n / 2;
    let leaves: VertexSet = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if m == 1 {
        return (g.size() == 1).then_some(1);
    }
    if leaves.len() != m {
        return None;
    }
    let anchors: VertexSet = leaves
        .iter()
        .map(|v| g.neighbors(v).first().expect("leaf has a neighbor"))
        .collect();
    let ok = anchors.len() == m
        && anchors.intersection(leaves).is_empty()
        && g.is_clique(anchors)
        && anchors.iter().all(|v| g.degree(v) == m);
    ok.then_some(m)
}

pub fn corona_verdict(g: &Graph) -> Verdict {
    Verdict::new(
        "corona_of_complete",
        is_corona_of_complete(g).map(|clique_order| Witness::Corona { clique_order }),
    )
}

/// `V − N[u]` induces a clique for every vertex `u`.
pub fn non_neighborhoods_are_cliques(g: &Graph) -> bool {
    (0..g.order()).all(|u| g.is_clique(g.vertices().difference(g.closed_neighbors(u))))
}

/// Spanning subgraph of `K_{2,…,2}` (the complement has a perfect matching)
/// in which every `V − N[u]` induces a clique.
pub fn thm222_predicate(g: &Graph) -> Verdict {
    let n = g.order();
    let witness = if n >= 2 && n % 2 == 0 && non_neighborhoods_are_cliques(g) {
        first_perfect_matching(&g.complement()).map(Witness::Pairs)
    } else {
        None
    };
    Verdict::new("thm222", witness)
}

/// Some vertex `c` leaves `G₁ = G − c` as a spanning subgraph of
/// `K_{2,…,2}` with `α(G₁) = 2`, and `S = V(G₁) − N[c]` is nonempty,
/// independent in the complement of `G₁`, and alternating dominating there
/// for the pairing matching.
pub fn thm_2k1_predicate(g: &Graph) -> Verdict {
    let n = g.order();
    let mut witness = None;
    if n >= 3 && n % 2 == 1 {
        for c in 0..n {
            let rest = g.vertices().without(c);
            let g1 = g.induced(rest);
            let h = g1.complement();
            let Some(m) = first_perfect_matching(&h) else {
                continue;
            };
            if independence_number(&g1) != 2 {
                continue;
            }
            // Relabeled positions of V(G₁) − N[c] inside G₁.
            let s: VertexSet = rest
                .iter()
                .enumerate()
                .filter(|&(_, v)| !g.has_edge(c, v))
                .map(|(i, _)| i)
                .collect();
            if s.is_empty() || !h.is_independent(s) {
                continue;
            }
            if is_alternating_dominating(&h, &m, s).expect("perfect matching covers s") {
                let to_host = |i: usize| rest.iter().nth(i).expect("index in range");
                let pairs: Vec<(usize, usize)> =
                    m.edges().iter().map(|&(a, b)| (to_host(a), to_host(b))).collect();
                witness = Some(Witness::Apex {
                    apex: c,
                    non_neighbors: s.iter().map(to_host).collect(),
                    pairs: Matching::new(&g.complement(), &pairs).expect("pairs are non-edges of g"),
                });
                break;
            }
        }
    }
    Verdict::new("thm_2k1", witness)
}

fn for_each_subset_of_size(set: VertexSet, size: usize, f: &mut dyn FnMut(VertexSet) -> bool) -> bool {
    fn go(rest: &[usize], size: usize, acc: VertexSet, f: &mut dyn FnMut(VertexSet) -> bool) -> bool {
        if size == 0 {
            return f(acc);
        }
        if rest.len() < size {
            return false;
        }
        go(&rest[1..], size - 1, acc.with(rest[0]), f) || go(&rest[1..], size, acc, f)
    }
    go(&set.to_vec(), size, VertexSet::EMPTY, f)
}

/// Some `(n−k)`-set induces a clique `G₁` with remainder `G₂` of order `k`
/// such that every `V − N[u]` is a clique and every `k` vertices of `G₁`
/// can be perfectly matched onto `V(G₂)` through non-edges of `G`.
pub fn thm_3k_predicate(g: &Graph, k: usize) -> Result<Verdict, PredicateError> {
    let n = g.order();
    if k < 2 || n < 3 * k {
        return Err(PredicateError::ParameterOutOfRange { k, n });
    }
    let mut witness = None;
    if non_neighborhoods_are_cliques(g) {
        let comp = g.complement();
        for_each_subset_of_size(g.vertices(), n - k, &mut |clique| {
            if !g.is_clique(clique) {
                return false;
            }
            let rest = g.vertices().difference(clique);
            let mut all = true;
            for_each_subset_of_size(clique, k, &mut |x| {
                if !saturates(&comp, x, rest) {
                    all = false;
                    return true;
                }
                false
            });
            if all {
                witness = Some(Witness::CliqueSplit { clique, rest });
            }
            all
        });
    }
    Ok(Verdict::new("thm_3k", witness))
}

fn balanced_independent_cover(g: &Graph, part: usize) -> Option<Vec<VertexSet>> {
    fn go(g: &Graph, uncovered: VertexSet, part: usize, acc: &mut Vec<VertexSet>) -> bool {
        let Some(v) = uncovered.first() else {
            return true;
        };
        let pool = uncovered.difference(g.closed_neighbors(v));
        let mut found = false;
        for_each_subset_of_size(pool, part - 1, &mut |rest| {
            let p = rest.with(v);
            if g.is_independent(p) {
                acc.push(p);
                if go(g, uncovered.difference(p), part, acc) {
                    found = true;
                    return true;
                }
                acc.pop();
            }
            false
        });
        found
    }
    let mut acc = Vec::new();
    go(g, g.vertices(), part, &mut acc).then_some(acc)
}

/// Exploratory: `G` is a spanning subgraph of the balanced complete
/// multipartite graph with parts of size `α(G)`, and no `V − N[u]` holds
/// `α(G)` pairwise non-adjacent vertices.
pub fn conjecture_alpha_predicate(g: &Graph) -> Verdict {
    let n = g.order();
    let alpha = independence_number(g);
    let mut witness = None;
    if n > 0 && n % alpha == 0 {
        let sparse_enough = (0..n).all(|u| {
            let rest = g.vertices().difference(g.closed_neighbors(u));
            independence_number(&g.induced(rest)) < alpha
        });
        if sparse_enough {
            witness = balanced_independent_cover(g, alpha).map(Witness::Parts);
        }
    }
    Verdict::new("conjecture_alpha", witness)
}
