//! Enumeration of maximal k-colorable vertex sets.

use crate::graph::{Graph, VertexSet};

/// Chromatic number of every induced subgraph, indexed by vertex mask.
///
/// Built by the recurrence `χ(S) = 1 + min χ(S − I)` over independent sets
/// `I ⊆ S` containing the least vertex of `S`. Memory is `2^n` bytes.
pub struct ChromaticTable {
    order: usize,
    chi: Vec<u8>,
}

impl ChromaticTable {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        assert!(n < 32, "chromatic table needs 2^n entries");
        let size = 1usize << n;
        let mut independent = vec![true; size];
        for mask in 1..size {
            let low = (mask as u64).trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            independent[mask] = independent[rest] && g.row(low) & rest as u64 == 0;
        }
        let mut chi = vec![0u8; size];
        for mask in 1..size {
            let low = (mask as u64).trailing_zeros() as usize;
            // Vertices that may share the least vertex's class.
            let free = mask as u64 & !g.row(low) & !(1u64 << low);
            let mut best = u8::MAX;
            // Walk independent subsets of `free` as extensions of {low}.
            let mut sub = free;
            loop {
                if independent[sub as usize] {
                    let rest = mask & !(sub as usize) & !(1usize << low);
                    best = best.min(chi[rest] + 1);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & free;
            }
            chi[mask] = best;
        }
        ChromaticTable { order: n, chi }
    }

    #[inline]
    pub fn chi(&self, s: VertexSet) -> usize {
        self.chi[s.bits() as usize] as usize
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// For a vertex set `S`, the range of `k` for which `S` is a maximal
    /// k-colorable set is `χ(S) ..= m − 1`, where `m` is the least `χ(S + v)`
    /// over vertices `v ∉ S` (unbounded when `S` is everything).
    pub(crate) fn maximal_range(&self, s: VertexSet) -> (usize, Option<usize>) {
        let c = self.chi(s);
        let outside = VertexSet::full(self.order).difference(s);
        let cap = outside.iter().map(|v| self.chi(s.with(v))).min();
        (c, cap.map(|m| m - 1))
    }
}

fn bron_kerbosch(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
    if p == 0 {
        if x == 0 {
            out.push(VertexSet::from_bits(r));
        }
        return;
    }
    let pivot = VertexSet::from_bits(p | x)
        .iter()
        .max_by_key(|&u| (g.row(u) & p).count_ones())
        .expect("p is nonempty");
    let todo = p & !g.row(pivot);
    for v in VertexSet::from_bits(todo).iter() {
        let nv = g.row(v);
        bron_kerbosch(g, r | 1 << v, p & nv, x & nv, out);
        p &= !(1u64 << v);
        x |= 1 << v;
    }
}

/// All maximal cliques, sorted by mask.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.order() == 0 {
        return vec![VertexSet::EMPTY];
    }
    bron_kerbosch(g, 0, g.vertices().bits(), 0, &mut out);
    out.sort_unstable();
    out
}

/// All maximal independent sets, as maximal cliques of the complement.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    maximal_cliques(&g.complement())
}

/// α(G).
pub fn independence_number(g: &Graph) -> usize {
    maximal_independent_sets(g)
        .iter()
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// ω(G).
pub fn clique_number(g: &Graph) -> usize {
    maximal_cliques(g).iter().map(|s| s.len()).max().unwrap_or(0)
}

/// Every vertex set `S` inducing a k-colorable subgraph such that adding any
/// further vertex breaks k-colorability. Sorted by mask, without duplicates.
pub fn maximal_k_colorable_sets(g: &Graph, k: usize) -> Vec<VertexSet> {
    assert!(k >= 1, "k must be positive");
    if k == 1 {
        return maximal_independent_sets(g);
    }
    let table = ChromaticTable::new(g);
    let full = g.vertices();
    if table.chi(full) <= k {
        return vec![full];
    }
    (0..1u64 << g.order())
        .map(VertexSet::from_bits)
        .filter(|&s| {
            let (c, cap) = table.maximal_range(s);
            c <= k && cap.is_none_or(|m| k <= m)
        })
        .collect()
}
