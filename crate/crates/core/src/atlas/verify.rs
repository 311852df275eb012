//! Exhaustive equivalence checks of the characterization theorems.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use super::run_with_workers;
use crate::chroma::{clique_number, hue_profile, HueProfile};
use crate::cotree::{
    build_cotree, cotree_complement, homogeneous_children, is_cograph, uniform_assignment_property,
};
use crate::families::{is_corona_of_complete, thm222_predicate, thm_2k1_predicate, thm_3k_predicate};
use crate::graph::{
    enumerate_all_nonisomorphic, enumerate_connected_nonisomorphic, to_graph6, Graph,
    GENERATOR_MAX_ORDER,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Thm32,
    Thm222,
    Thm2k1,
    Thm3k,
    CotreeIff,
    ComplementClosure,
    Homogeneous,
    JoinUnion,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::Thm32,
        TheoremId::Thm222,
        TheoremId::Thm2k1,
        TheoremId::Thm3k,
        TheoremId::CotreeIff,
        TheoremId::ComplementClosure,
        TheoremId::Homogeneous,
        TheoremId::JoinUnion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Thm32 => "thm32",
            TheoremId::Thm222 => "thm222",
            TheoremId::Thm2k1 => "thm2k1",
            TheoremId::Thm3k => "thm3k",
            TheoremId::CotreeIff => "cotree_iff",
            TheoremId::ComplementClosure => "complement_closure",
            TheoremId::Homogeneous => "homogeneous",
            TheoremId::JoinUnion => "join_union",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("order bound {0} exceeds the generator limit of {GENERATOR_MAX_ORDER}")]
    ScopeTooLarge(usize),
}

impl FromStr for TheoremId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// graph6 of the instance; for pairs, both graphs separated by a space.
    pub graph: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub scope: String,
    pub instances: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "theorem": self.theorem.name(),
            "scope": self.scope,
            "instances": self.instances,
            "counterexamples": self.counterexamples.iter().map(|c| json!({
                "graph": c.graph,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "verdict": if self.verified() { "verified at scope" } else { "refuted" },
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "theorem: {}\nscope: {}\ninstances: {}\n{} counterexamples\n",
            self.theorem,
            self.scope,
            self.instances,
            self.counterexamples.len()
        );
        for c in &self.counterexamples {
            out.push_str(&format!("{}\t{}\n", c.graph, c.detail));
        }
        out
    }
}

fn profile(g: &Graph) -> HueProfile {
    hue_profile(g).expect("generated graphs are within the profile limit")
}

fn has_sequence(p: &HueProfile, seq: &[usize]) -> bool {
    p.well_hued && p.sequence.as_deref() == Some(seq)
}

fn connected_upto(lo: usize, hi: usize) -> Vec<Graph> {
    (lo.max(1)..=hi)
        .flat_map(|n| enumerate_connected_nonisomorphic(n).expect("order within generator limit"))
        .collect()
}

fn cographs_upto(hi: usize) -> Vec<Graph> {
    (1..=hi)
        .flat_map(|n| enumerate_all_nonisomorphic(n).expect("order within generator limit"))
        .filter(is_cograph)
        .collect()
}

/// Every labeled spanning subgraph of `K_{2,…,2}` with `parts` parts,
/// pairs `{2i, 2i+1}` as the parts.
fn spanning_subgraphs_of_pairs(parts: usize) -> Vec<Graph> {
    let n = 2 * parts;
    let host = Graph::complete_multipartite(&vec![2; parts]).expect("small");
    let edges: Vec<(usize, usize)> = host.edges().collect();
    (0..1u64 << edges.len())
        .map(|code| {
            let chosen: Vec<_> = edges
                .iter()
                .enumerate()
                .filter(|&(i, _)| code >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &chosen).expect("host edges are valid")
        })
        .collect()
}

type Check = fn(&Graph) -> Option<String>;

fn check_all(graphs: &[Graph], check: Check) -> Vec<Counterexample> {
    graphs
        .par_iter()
        .filter_map(|g| {
            check(g).map(|detail| Counterexample {
                graph: to_graph6(g),
                detail,
            })
        })
        .collect()
}

fn thm32(g: &Graph) -> Option<String> {
    let p = profile(g);
    let lhs = p.well_hued && p.a(1).is_some_and(|a1| a1 >= 3 && p.a(2) == Some(a1 + 2));
    let rhs = is_corona_of_complete(g).is_some_and(|m| m >= 3);
    (lhs != rhs).then(|| format!("sequence {:?}, corona {:?}", p.sequence, is_corona_of_complete(g)))
}

fn thm222(g: &Graph) -> Option<String> {
    let n = g.order();
    let p = profile(g);
    let target: Vec<usize> = (1..=n / 2).map(|i| 2 * i).collect();
    let lhs = n % 2 == 0 && has_sequence(&p, &target);
    let rhs = thm222_predicate(g).holds();
    (lhs != rhs).then(|| format!("sequence {:?}, predicate {rhs}", p.sequence))
}

fn thm2k1(g: &Graph) -> Option<String> {
    let n = g.order();
    let p = profile(g);
    let target: Vec<usize> = (1..n / 2 + 1).map(|i| 2 * i).chain([n]).collect();
    let lhs = has_sequence(&p, &target);
    let rhs = thm_2k1_predicate(g).holds();
    (lhs != rhs).then(|| format!("sequence {:?}, predicate {rhs}", p.sequence))
}

fn thm3k_all(g: &Graph) -> Option<String> {
    let n = g.order();
    let p = profile(g);
    for k in 2..=n / 3 {
        let target: Vec<usize> = (1..=k).map(|i| 2 * i).chain(2 * k + 1..=n).collect();
        let lhs = has_sequence(&p, &target);
        let rhs = thm_3k_predicate(g, k).expect("k in range").holds();
        if lhs != rhs {
            return Some(format!("k = {k}, sequence {:?}, predicate {rhs}", p.sequence));
        }
    }
    None
}

fn cotree_iff(g: &Graph) -> Option<String> {
    let t = build_cotree(g).expect("cograph");
    let lhs = profile(g).well_equi_hued;
    let rhs = uniform_assignment_property(&t);
    (lhs != rhs).then(|| format!("cotree {t}, equi-hued {lhs}, uniform {rhs}"))
}

fn complement_closure(g: &Graph) -> Option<String> {
    let t = build_cotree(g).expect("cograph");
    let here = profile(g).well_equi_hued;
    let there = profile(&g.complement()).well_equi_hued;
    let uap = uniform_assignment_property(&t);
    let uap_c = uniform_assignment_property(&cotree_complement(&t));
    (here != there || uap != uap_c)
        .then(|| format!("equi-hued {here}/{there}, uniform {uap}/{uap_c}"))
}

fn homogeneous(g: &Graph) -> Option<String> {
    if g.order() < 2 || !profile(g).well_equi_hued {
        return None;
    }
    let t = build_cotree(g).expect("cograph");
    (!homogeneous_children(&t)).then(|| format!("cotree {t} mixes leaf and internal children"))
}

fn join_union(g1: &Graph, g2: &Graph) -> Option<String> {
    let (p1, p2) = (profile(g1), profile(g2));
    let both_equi = p1.well_equi_hued && p2.well_equi_hued;

    let join = g1.join(g2).expect("small");
    let pj = profile(&join);
    let join_condition = both_equi && p1.a(1) == p2.a(1);
    if pj.well_hued != join_condition {
        return Some(format!("join well-hued {}, condition {join_condition}", pj.well_hued));
    }
    if pj.well_hued {
        let chi = p1.chromatic_number + p2.chromatic_number;
        let n = join.order();
        let ratios = pj.chromatic_number == chi
            && pj
                .sequence
                .as_ref()
                .expect("well-hued")
                .iter()
                .enumerate()
                .all(|(i, &a)| (i + 1) * n == a * chi);
        if !pj.well_equi_hued || !ratios {
            return Some(format!("join sequence {:?} breaks the ratio identity", pj.sequence));
        }
    }

    let union = g1.union(g2).expect("small");
    let pu = profile(&union);
    let union_condition = both_equi && clique_number(g1) == clique_number(g2);
    (pu.well_equi_hued != union_condition)
        .then(|| format!("union equi-hued {}, condition {union_condition}", pu.well_equi_hued))
}

/// Runs one equivalence check over every instance up to `max_order`
/// vertices.
pub fn verify_theorem(
    id: TheoremId,
    max_order: usize,
    workers: Option<usize>,
) -> Result<VerificationReport, VerifyError> {
    if max_order > GENERATOR_MAX_ORDER {
        return Err(VerifyError::ScopeTooLarge(max_order));
    }
    let (scope, instances, counterexamples) = run_with_workers(workers, || match id {
        TheoremId::Thm32 => {
            let gs = connected_upto(1, max_order);
            (format!("connected graphs, n <= {max_order}"), gs.len(), check_all(&gs, thm32))
        }
        TheoremId::Thm222 => {
            let mut gs: Vec<Graph> = (2..=max_order.min(6) / 2)
                .flat_map(spanning_subgraphs_of_pairs)
                .filter(Graph::is_connected)
                .collect();
            let labeled = gs.len();
            gs.extend(connected_upto(2, max_order).into_iter().filter(|g| g.order() % 2 == 0));
            (
                format!(
                    "{labeled} connected labeled spanning subgraphs of K_(2,2) and K_(2,2,2) within the bound, \
                     and all connected graphs of even order n <= {max_order}"
                ),
                gs.len(),
                check_all(&gs, thm222),
            )
        }
        TheoremId::Thm2k1 => {
            let gs: Vec<Graph> = connected_upto(5, max_order)
                .into_iter()
                .filter(|g| g.order() % 2 == 1)
                .collect();
            (
                format!("connected graphs of odd order 5 <= n <= {max_order}"),
                gs.len(),
                check_all(&gs, thm2k1),
            )
        }
        TheoremId::Thm3k => {
            let gs = connected_upto(6, max_order);
            (
                format!("connected graphs, 6 <= n <= {max_order}, every k >= 2 with n >= 3k"),
                gs.len(),
                check_all(&gs, thm3k_all),
            )
        }
        TheoremId::CotreeIff | TheoremId::ComplementClosure | TheoremId::Homogeneous => {
            let gs = cographs_upto(max_order);
            let check: Check = match id {
                TheoremId::CotreeIff => cotree_iff,
                TheoremId::ComplementClosure => complement_closure,
                _ => homogeneous,
            };
            (format!("cographs, n <= {max_order}"), gs.len(), check_all(&gs, check))
        }
        TheoremId::JoinUnion => {
            let gs = cographs_upto(max_order.saturating_sub(1));
            let pairs: Vec<(usize, usize)> = (0..gs.len())
                .flat_map(|i| (i..gs.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| gs[i].order() + gs[j].order() <= max_order)
                .collect();
            let found = pairs
                .par_iter()
                .filter_map(|&(i, j)| {
                    join_union(&gs[i], &gs[j]).map(|detail| Counterexample {
                        graph: format!("{} {}", to_graph6(&gs[i]), to_graph6(&gs[j])),
                        detail,
                    })
                })
                .collect();
            (
                format!("unordered cograph pairs, combined n <= {max_order}"),
                pairs.len(),
                found,
            )
        }
    });
    Ok(VerificationReport {
        theorem: id,
        scope,
        instances,
        counterexamples,
    })
}
