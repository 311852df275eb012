//! Literal checks of the neighborhood lemmas for well-covered and
//! well-bicovered graphs.
//!
//! For a maximal independent set `I` and `v ∉ I`:
//! `Γ(v, I) = { u ∉ I : N(u) ∩ I ⊆ N(v) ∩ I }`, and `I_v` is the
//! lexicographically least maximum independent set of `G[Γ(v, I)]` that
//! contains `v`.

use std::cmp::Ordering;
use std::fmt;

use serde_json::{json, Value};

use super::maximal::maximal_independent_sets;
use super::profile::{hue_profile, HueProfile, ProfileError};
use crate::graph::{to_graph6, Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lemma {
    /// Well-covered: `|N(v) ∩ I| = |I_v|`.
    NeighborhoodEqualsIv,
    /// Well-covered and well-bicovered: `|N(v) ∩ I| ≤ k`.
    NeighborhoodAtMostK,
    /// `|N(x) ∩ I| + |N(y) ∩ I| > k` forces a common neighbor in `I`.
    CommonNeighborInI,
    /// `|(N(x) ∪ N(y)) ∩ I| > k` forces `xy ∈ E`.
    LargeUnionAdjacent,
    /// Well-hued, `a_2 = a_1 + 1`, no isolated vertices: complete.
    UnitStepComplete,
    /// Well-hued: no vertex has two leaf neighbors.
    NoDoubleLeaf,
}

impl Lemma {
    pub const ALL: [Lemma; 6] = [
        Lemma::NeighborhoodEqualsIv,
        Lemma::NeighborhoodAtMostK,
        Lemma::CommonNeighborInI,
        Lemma::LargeUnionAdjacent,
        Lemma::UnitStepComplete,
        Lemma::NoDoubleLeaf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::NeighborhoodEqualsIv => "neighborhood_equals_iv",
            Lemma::NeighborhoodAtMostK => "neighborhood_at_most_k",
            Lemma::CommonNeighborInI => "common_neighbor_in_i",
            Lemma::LargeUnionAdjacent => "large_union_adjacent",
            Lemma::UnitStepComplete => "unit_step_complete",
            Lemma::NoDoubleLeaf => "no_double_leaf",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub lemma: Lemma,
    /// The maximal independent set in play (empty for global checks).
    pub independent_set: VertexSet,
    pub witnesses: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub lemma: Lemma,
    /// False when the graph does not meet the lemma's hypotheses.
    pub applicable: bool,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaAuditReport {
    pub graph: String,
    /// `a_2 − a_1`, when the graph is well-covered and well-bicovered.
    pub k: Option<usize>,
    pub checks: Vec<LemmaCheck>,
    /// Vertices adjacent to two or more leaves, whatever the hypotheses.
    pub double_leaf_centers: Vec<usize>,
}

impl LemmaAuditReport {
    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.checks.iter().flat_map(|c| c.violations.iter())
    }

    pub fn is_clean(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn check(&self, lemma: Lemma) -> &LemmaCheck {
        self.checks
            .iter()
            .find(|c| c.lemma == lemma)
            .expect("every lemma is audited")
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "lemma": c.lemma.name(),
                    "applicable": c.applicable,
                    "violations": c.violations.iter().map(|v| json!({
                        "independent_set": v.independent_set.to_vec(),
                        "witnesses": v.witnesses,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "graph": self.graph,
            "k": self.k,
            "checks": checks,
            "double_leaf_centers": self.double_leaf_centers,
        })
    }
}

/// Compares vertex sets as increasing vertex lists.
pub(crate) fn lex_cmp(a: VertexSet, b: VertexSet) -> Ordering {
    a.iter().cmp(b.iter())
}

/// `Γ(v, I)`.
pub fn gamma(g: &Graph, v: usize, independent: VertexSet) -> VertexSet {
    let target = g.neighbors(v).intersection(independent);
    g.vertices()
        .difference(independent)
        .iter()
        .filter(|&u| g.neighbors(u).intersection(independent).is_subset(target))
        .collect()
}

/// `I_v`: lexicographically least among the maximum independent sets of
/// `G[Γ(v, I)]` containing `v`.
pub fn i_v(g: &Graph, v: usize, independent: VertexSet) -> VertexSet {
    let gam = gamma(g, v, independent);
    let free = gam.difference(g.closed_neighbors(v)).bits();
    let mut best = VertexSet::singleton(v);
    let mut sub = free;
    loop {
        let s = VertexSet::from_bits(sub).with(v);
        if g.is_independent(s)
            && (s.len() > best.len() || (s.len() == best.len() && lex_cmp(s, best).is_lt()))
        {
            best = s;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
    best
}

fn leaf_neighbors(g: &Graph, w: usize) -> usize {
    g.neighbors(w).iter().filter(|&u| g.degree(u) == 1).count()
}

/// Checks every lemma literally over all maximal independent sets. Lemmas
/// whose hypotheses the graph fails are reported as not applicable.
pub fn audit_tool_lemmas(g: &Graph) -> Result<LemmaAuditReport, ProfileError> {
    let profile = hue_profile(g)?;
    Ok(audit_with_profile(g, &profile))
}

pub fn audit_with_profile(g: &Graph, profile: &HueProfile) -> LemmaAuditReport {
    let covered = profile.well_covered;
    let bicovered = covered && profile.well_bicovered;
    let k = bicovered.then(|| profile.orders_at(2)[0] - profile.orders_at(1)[0]);

    let mut checks: Vec<LemmaCheck> = Lemma::ALL
        .iter()
        .map(|&lemma| LemmaCheck {
            lemma,
            applicable: match lemma {
                Lemma::NeighborhoodEqualsIv => covered,
                Lemma::NeighborhoodAtMostK
                | Lemma::CommonNeighborInI
                | Lemma::LargeUnionAdjacent => bicovered,
                Lemma::UnitStepComplete | Lemma::NoDoubleLeaf => profile.well_hued,
            },
            violations: Vec::new(),
        })
        .collect();
    let mut push = |lemma: Lemma, independent_set: VertexSet, witnesses: Vec<usize>| {
        let c = checks.iter_mut().find(|c| c.lemma == lemma).expect("lemma");
        c.violations.push(Violation {
            lemma,
            independent_set,
            witnesses,
        });
    };

    if covered {
        for i in maximal_independent_sets(g) {
            let outside = g.vertices().difference(i);
            let hits: Vec<(usize, VertexSet)> = outside
                .iter()
                .map(|v| (v, g.neighbors(v).intersection(i)))
                .collect();
            for &(v, nv) in &hits {
                if nv.len() != i_v(g, v, i).len() {
                    push(Lemma::NeighborhoodEqualsIv, i, vec![v]);
                }
                if let Some(k) = k {
                    if nv.len() > k {
                        push(Lemma::NeighborhoodAtMostK, i, vec![v]);
                    }
                }
            }
            if let Some(k) = k {
                for (a, &(x, nx)) in hits.iter().enumerate() {
                    for &(y, ny) in &hits[a + 1..] {
                        if nx.len() + ny.len() > k && nx.intersection(ny).is_empty() {
                            push(Lemma::CommonNeighborInI, i, vec![x, y]);
                        }
                        if nx.union(ny).len() > k && !g.has_edge(x, y) {
                            push(Lemma::LargeUnionAdjacent, i, vec![x, y]);
                        }
                    }
                }
            }
        }
    }

    let double_leaf_centers: Vec<usize> = (0..g.order())
        .filter(|&w| leaf_neighbors(g, w) >= 2)
        .collect();
    if profile.well_hued {
        for &w in &double_leaf_centers {
            push(Lemma::NoDoubleLeaf, VertexSet::EMPTY, vec![w]);
        }
        let unit_step = profile.a(2).zip(profile.a(1)).is_some_and(|(a2, a1)| a2 == a1 + 1);
        let no_isolated = (0..g.order()).all(|v| g.degree(v) > 0);
        if unit_step && no_isolated && !g.is_clique(g.vertices()) {
            let missing: Vec<usize> = g
                .complement()
                .edges()
                .next()
                .map(|(u, v)| vec![u, v])
                .unwrap_or_default();
            push(Lemma::UnitStepComplete, VertexSet::EMPTY, missing);
        }
    }

    LemmaAuditReport {
        graph: to_graph6(g),
        k,
        checks,
        double_leaf_centers,
    }
}
