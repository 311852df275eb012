//! Canonical labeling by minimizing the graph6 string over all relabelings.
//!
//! The graph6 body lists column `j` of the upper triangle (bits `(0,j)` …
//! `(j−1,j)`) before column `j+1`, so the lexicographically least string is
//! found by placing vertices at positions `0, 1, 2, …` in turn and keeping
//! only the candidates whose new column is least. Twin vertices (equal
//! neighborhoods outside each other) are interchangeable, so one
//! representative per twin class is tried at each step.

use thiserror::Error;

use super::{to_graph6, Graph};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("canonical form is limited to {CANON_MAX_ORDER} vertices, got {0}")]
pub struct CanonOrderError(pub usize);

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<Vec<u64>>,
    best_perm: Vec<usize>,
    placed: Vec<usize>,
    columns: Vec<u64>,
}

impl Search<'_> {
    /// Column bits for placing `v` next: bit `i` (MSB first) says whether `v`
    /// is adjacent to the vertex at position `i`.
    fn column(&self, v: usize) -> u64 {
        self.placed
            .iter()
            .fold(0u64, |acc, &u| acc << 1 | self.g.has_edge(u, v) as u64)
    }

    fn run(&mut self, remaining: u64) {
        let depth = self.placed.len();
        if depth == self.n {
            let better = match &self.best {
                None => true,
                Some(b) => self.columns < *b,
            };
            if better {
                self.best = Some(self.columns.clone());
                self.best_perm = self.placed.clone();
            }
            return;
        }
        if let Some(b) = &self.best {
            if self.columns[..] > b[..depth] {
                return;
            }
        }

        let mut candidates = Vec::new();
        let mut min_col = u64::MAX;
        let mut r = remaining;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            let c = self.column(v);
            if c < min_col {
                min_col = c;
                candidates.clear();
            }
            if c == min_col {
                candidates.push(v);
            }
        }

        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            let twin_of_tried = tried.iter().any(|&t| {
                let mask = !(1u64 << v | 1u64 << t);
                self.g.row(v) & mask == self.g.row(t) & mask
            });
            if twin_of_tried {
                continue;
            }
            tried.push(v);
            self.placed.push(v);
            self.columns.push(min_col);
            self.run(remaining & !(1u64 << v));
            self.placed.pop();
            self.columns.pop();
        }
    }
}

/// Returns `(canonical graph6, order)` where `order[k]` is the original
/// vertex placed at canonical position `k`.
pub(crate) fn canonical_labeling(g: &Graph) -> Result<(String, Vec<usize>), CanonOrderError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(CanonOrderError(n));
    }
    let mut s = Search {
        g,
        n,
        best: None,
        best_perm: Vec::new(),
        placed: Vec::with_capacity(n),
        columns: Vec::with_capacity(n),
    };
    s.run(super::low_mask(n));
    let order = s.best_perm;
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((to_graph6(&g.permute(&perm)), order))
}

/// Lexicographically least graph6 string over all vertex relabelings.
pub fn canonical_form(g: &Graph) -> String {
    try_canonical_form(g).expect("graph order within canonical-form limit")
}

pub fn try_canonical_form(g: &Graph) -> Result<String, CanonOrderError> {
    canonical_labeling(g).map(|(s, _)| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::from_graph6;
    use std::collections::BTreeSet;

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_force_min(g: &Graph) -> String {
        all_perms(g.order())
            .iter()
            .map(|p| to_graph6(&g.permute(p)))
            .min()
            .unwrap()
    }

    fn labeled_graph(n: usize, code: u64) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if code >> k & 1 == 1 {
                    g.add_edge(i, j).unwrap();
                }
                k += 1;
            }
        }
        g
    }

    #[test]
    fn matches_brute_force_minimum_on_all_five_vertex_graphs() {
        for code in 0..1u64 << 10 {
            let g = labeled_graph(5, code);
            assert_eq!(canonical_form(&g), brute_force_min(&g), "{g:?}");
        }
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        let forms: BTreeSet<String> = (0..1u64 << 6)
            .map(|c| canonical_form(&labeled_graph(4, c)))
            .collect();
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn isomorphic_relabelings_agree() {
        let p4 = Graph::path(4).unwrap();
        let relabeled = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&p4), canonical_form(&relabeled));
        let c4 = Graph::cycle(4).unwrap();
        let k3_k1 = Graph::complete(3).unwrap().union(&Graph::empty(1).unwrap()).unwrap();
        assert_ne!(canonical_form(&c4), canonical_form(&k3_k1));
    }

    #[test]
    fn labeling_reproduces_form() {
        let g = from_graph6("IheA@GUAo").unwrap(); // Petersen
        let (form, order) = canonical_labeling(&g).unwrap();
        let mut perm = vec![0; 10];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        assert_eq!(to_graph6(&g.permute(&perm)), form);
    }

    #[test]
    fn order_limit() {
        let g = Graph::empty(11).unwrap();
        assert_eq!(try_canonical_form(&g), Err(CanonOrderError(11)));
        assert!(try_canonical_form(&Graph::empty(10).unwrap()).is_ok());
    }
}
