//! Alternating-path reachability with respect to a matching.
//!
//! A qualifying path starts at a source `u`, takes `u`'s matched edge first
//! and then alternates between non-matching and matching edges. Paths are
//! simple: no vertex repeats.

use std::collections::HashSet;

use super::matching::{Matching, MatchingError};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingReachability {
    pub sources: VertexSet,
    /// Every vertex on some qualifying path from a source.
    pub reached: VertexSet,
}

fn check_sources(m: &Matching, s: VertexSet) -> Result<(), MatchingError> {
    match s.iter().find(|&v| m.mate(v).is_none()) {
        Some(v) => Err(MatchingError::UnmatchedSource(v)),
        None => Ok(()),
    }
}

struct PathSearch<'a> {
    g: &'a Graph,
    m: &'a Matching,
    reached: u64,
    seen: HashSet<(u64, usize)>,
}

impl PathSearch<'_> {
    /// `at` was just entered over its matched edge; leave over a
    /// non-matching edge to an unvisited vertex.
    fn from_matched(&mut self, at: usize, path: u64) {
        if !self.seen.insert((path, at)) {
            return;
        }
        let options = self.g.row(at) & !path;
        for y in VertexSet::from_bits(options).iter() {
            if self.m.contains(at, y) {
                continue;
            }
            self.reached |= 1 << y;
            if let Some(z) = self.m.mate(y) {
                if path >> z & 1 == 0 {
                    self.reached |= 1 << z;
                    self.from_matched(z, path | 1 << y | 1 << z);
                }
            }
        }
    }
}

/// Vertices on simple alternating paths from `s`. Exponential in the worst
/// case; memoized on (path vertex set, endpoint).
pub fn alternating_reachable(
    g: &Graph,
    m: &Matching,
    s: VertexSet,
) -> Result<AlternatingReachability, MatchingError> {
    check_sources(m, s)?;
    let mut search = PathSearch {
        g,
        m,
        reached: s.bits(),
        seen: HashSet::new(),
    };
    for u in s.iter() {
        let w = m.mate(u).expect("checked");
        search.reached |= 1 << w;
        search.from_matched(w, 1 << u | 1 << w);
    }
    Ok(AlternatingReachability {
        sources: s,
        reached: VertexSet::from_bits(search.reached),
    })
}

/// Vertices on alternating walks from `s` (vertices may repeat), by
/// breadth-first search over (vertex, kind of the next edge) states. Always
/// a superset of [`alternating_reachable`].
pub fn alternating_walk_reachable(
    g: &Graph,
    m: &Matching,
    s: VertexSet,
) -> Result<AlternatingReachability, MatchingError> {
    check_sources(m, s)?;
    // Bit v of `next_matched` / `next_free`: state (v, next edge matched / unmatched).
    let mut next_matched = s.bits();
    let mut next_free = 0u64;
    let mut queue: std::collections::VecDeque<(usize, bool)> = s.iter().map(|v| (v, true)).collect();
    while let Some((v, matched_next)) = queue.pop_front() {
        if matched_next {
            if let Some(w) = m.mate(v) {
                if next_free >> w & 1 == 0 {
                    next_free |= 1 << w;
                    queue.push_back((w, false));
                }
            }
        } else {
            for y in g.neighbors(v).iter() {
                if !m.contains(v, y) && next_matched >> y & 1 == 0 {
                    next_matched |= 1 << y;
                    queue.push_back((y, true));
                }
            }
        }
    }
    Ok(AlternatingReachability {
        sources: s,
        reached: VertexSet::from_bits(next_matched | next_free),
    })
}

/// `s` reaches every vertex along alternating paths.
pub fn is_alternating_dominating(g: &Graph, m: &Matching, s: VertexSet) -> Result<bool, MatchingError> {
    Ok(alternating_reachable(g, m, s)?.reached == g.vertices())
}

/// Greedy construction of an independent alternating dominating set: start
/// from the vertex with the largest reach, then repeatedly add the
/// unreached vertex adding the most newly reached vertices. Ties go to the
/// lowest index.
pub fn greedy_independent_alt_dominating(g: &Graph, m: &Matching) -> Result<VertexSet, MatchingError> {
    if !m.is_perfect() {
        return Err(MatchingError::NotPerfect);
    }
    let reach: Vec<VertexSet> = (0..g.order())
        .map(|v| {
            alternating_reachable(g, m, VertexSet::singleton(v))
                .map(|r| r.reached)
        })
        .collect::<Result<_, _>>()?;
    let mut chosen = VertexSet::EMPTY;
    let mut covered = VertexSet::EMPTY;
    while covered != g.vertices() {
        let v = g
            .vertices()
            .difference(covered)
            .iter()
            .max_by_key(|&v| (reach[v].difference(covered).len(), std::cmp::Reverse(v)))
            .expect("some vertex is uncovered");
        chosen.insert(v);
        covered = covered.union(reach[v]);
    }
    Ok(chosen)
}

/// Whether `s` is alternating dominating for all perfect matchings of `g` or
/// for none of them.
pub fn matching_invariance_check(g: &Graph, s: VertexSet) -> Result<bool, MatchingError> {
    let pms = super::matching::perfect_matchings(g);
    if pms.is_empty() {
        return Err(MatchingError::NoPerfectMatching);
    }
    let verdicts = pms
        .iter()
        .map(|m| is_alternating_dominating(g, m, s))
        .collect::<Result<Vec<bool>, _>>()?;
    Ok(verdicts.windows(2).all(|w| w[0] == w[1]))
}
