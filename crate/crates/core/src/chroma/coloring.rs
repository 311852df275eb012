//! Exact proper coloring by backtracking.

use crate::graph::{Graph, VertexSet};

/// Greedy clique inside `within`: repeatedly takes the candidate with the
/// most neighbors among the remaining candidates.
pub(crate) fn greedy_clique(g: &Graph, within: VertexSet) -> Vec<usize> {
    let mut clique = Vec::new();
    let mut cand = within.bits();
    while cand != 0 {
        let v = VertexSet::from_bits(cand)
            .iter()
            .max_by_key(|&v| ((g.row(v) & cand).count_ones(), std::cmp::Reverse(v)))
            .expect("nonempty candidate set");
        clique.push(v);
        cand &= g.row(v);
    }
    clique
}

struct Colorer<'a> {
    g: &'a Graph,
    k: usize,
    classes: Vec<u64>,
}

impl Colorer<'_> {
    /// Assigns the uncolored vertices in `rest`, always branching on the
    /// vertex whose neighbors already use the most classes. A fresh class is
    /// only ever opened once per step, so colorings equal up to renaming
    /// classes are explored once.
    fn extend(&mut self, rest: u64) -> bool {
        if rest == 0 {
            return true;
        }
        let mut pick = usize::MAX;
        let mut pick_sat = 0;
        let mut pick_deg = 0;
        for v in VertexSet::from_bits(rest).iter() {
            let sat = self
                .classes
                .iter()
                .filter(|&&c| c & self.g.row(v) != 0)
                .count();
            let deg = (self.g.row(v) & rest).count_ones();
            if pick == usize::MAX || (sat, deg) > (pick_sat, pick_deg) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        let v = pick;
        let row = self.g.row(v);
        let rest = rest & !(1u64 << v);
        for c in 0..self.classes.len() {
            if self.classes[c] & row == 0 {
                self.classes[c] |= 1 << v;
                if self.extend(rest) {
                    return true;
                }
                self.classes[c] &= !(1u64 << v);
            }
        }
        if self.classes.len() < self.k {
            self.classes.push(1 << v);
            if self.extend(rest) {
                return true;
            }
            self.classes.pop();
        }
        false
    }
}

/// Whether the subgraph induced by `within` admits a proper coloring with at
/// most `k` colors.
pub fn is_k_colorable_within(g: &Graph, within: VertexSet, k: usize) -> bool {
    if within.is_empty() {
        return true;
    }
    if k == 0 {
        return false;
    }
    if g.is_independent(within) {
        return true;
    }
    // Seed: a clique must take pairwise distinct colors, fixing their names.
    let clique = greedy_clique(g, within);
    if clique.len() > k {
        return false;
    }
    let mut colorer = Colorer {
        g,
        k,
        classes: clique.iter().map(|&v| 1u64 << v).collect(),
    };
    let seeded: u64 = clique.iter().map(|&v| 1u64 << v).sum();
    colorer.extend(within.bits() & !seeded)
}

/// Whether `g` has a proper coloring with at most `k` colors.
pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    is_k_colorable_within(g, g.vertices(), k)
}

pub(crate) fn chromatic_number_within(g: &Graph, within: VertexSet) -> usize {
    if within.is_empty() {
        return 0;
    }
    let mut k = greedy_clique(g, within).len();
    while !is_k_colorable_within(g, within, k) {
        k += 1;
    }
    k
}

/// Least `k` such that `g` is `k`-colorable.
pub fn chromatic_number(g: &Graph) -> usize {
    chromatic_number_within(g, g.vertices())
}
