use std::collections::BTreeSet;

use serde_json::{json, Map, Value};
use thiserror::Error;

use super::maximal::ChromaticTable;
use crate::graph::{Graph, VertexSet};

/// Default cap on the order accepted by [`hue_profile`]; the profile walks
/// all `2^n` vertex subsets.
pub const PROFILE_MAX_ORDER: usize = 16;

/// Hard cap even with the limit lifted.
pub const PROFILE_HARD_MAX_ORDER: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("hue profile needs at least one vertex")]
    EmptyGraph,
    #[error("order {order} exceeds the profile limit of {limit}")]
    TooLarge { order: usize, limit: usize },
}

/// Orders of all maximal k-colorable subgraphs for every `k ≤ χ`, the hue
/// sequence when it exists, and the derived classification flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HueProfile {
    pub order: usize,
    pub chromatic_number: usize,
    /// `maximal_orders[k − 1]`: sorted distinct orders of maximal k-colorable
    /// subgraphs.
    pub maximal_orders: Vec<Vec<usize>>,
    /// `a_1, …, a_χ` when every entry of `maximal_orders` is a singleton.
    pub sequence: Option<Vec<usize>>,
    pub well_covered: bool,
    pub well_bicovered: bool,
    pub well_hued: bool,
    pub well_equi_hued: bool,
}

impl HueProfile {
    /// Distinct maximal orders at any `k ≥ 1`; beyond χ this is `{n}`.
    pub fn orders_at(&self, k: usize) -> Vec<usize> {
        assert!(k >= 1);
        self.maximal_orders
            .get(k - 1)
            .cloned()
            .unwrap_or_else(|| vec![self.order])
    }

    /// `a_k` for any `k ≥ 1`, when the graph is well-hued.
    pub fn a(&self, k: usize) -> Option<usize> {
        let seq = self.sequence.as_ref()?;
        Some(*seq.get(k - 1).unwrap_or(&self.order))
    }

    /// First `k` at which maximal k-colorable orders disagree.
    pub fn first_unhued_k(&self) -> Option<usize> {
        self.maximal_orders
            .iter()
            .position(|o| o.len() != 1)
            .map(|i| i + 1)
    }

    /// `a_k · χ ≥ k · n` for every `k ≤ χ`; vacuous when not well-hued.
    pub fn meets_proportional_bound(&self) -> bool {
        let chi = self.chromatic_number;
        self.sequence.as_ref().is_none_or(|seq| {
            seq.iter()
                .enumerate()
                .all(|(i, &a)| a * chi >= (i + 1) * self.order)
        })
    }

    pub fn to_json(&self) -> Value {
        let mut orders = Map::new();
        for (i, o) in self.maximal_orders.iter().enumerate() {
            orders.insert((i + 1).to_string(), json!(o));
        }
        json!({
            "n": self.order,
            "chi": self.chromatic_number,
            "sequence": self.sequence,
            "maximal_orders": orders,
            "well_covered": self.well_covered,
            "well_bicovered": self.well_bicovered,
            "well_hued": self.well_hued,
            "well_equi_hued": self.well_equi_hued,
        })
    }
}

/// Exact hue profile, refusing graphs above [`PROFILE_MAX_ORDER`].
pub fn hue_profile(g: &Graph) -> Result<HueProfile, ProfileError> {
    hue_profile_with_limit(g, PROFILE_MAX_ORDER)
}

/// As [`hue_profile`] with a caller-chosen order limit (capped at
/// [`PROFILE_HARD_MAX_ORDER`]).
pub fn hue_profile_with_limit(g: &Graph, limit: usize) -> Result<HueProfile, ProfileError> {
    let n = g.order();
    let limit = limit.min(PROFILE_HARD_MAX_ORDER);
    if n == 0 {
        return Err(ProfileError::EmptyGraph);
    }
    if n > limit {
        return Err(ProfileError::TooLarge { order: n, limit });
    }
    let table = ChromaticTable::new(g);
    let chi = table.chi(g.vertices());

    let mut orders: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); chi];
    for bits in 0..1u64 << n {
        let s = VertexSet::from_bits(bits);
        let (lo, hi) = table.maximal_range(s);
        let hi = hi.unwrap_or(chi).min(chi);
        for k in lo.max(1)..=hi {
            orders[k - 1].insert(s.len());
        }
    }
    let maximal_orders: Vec<Vec<usize>> = orders.into_iter().map(|o| o.into_iter().collect()).collect();

    let singleton_at = |k: usize| maximal_orders.get(k - 1).is_none_or(|o| o.len() == 1);
    let well_covered = singleton_at(1);
    let well_bicovered = singleton_at(2);
    let well_hued = maximal_orders.iter().all(|o| o.len() == 1);
    let sequence = well_hued.then(|| maximal_orders.iter().map(|o| o[0]).collect::<Vec<_>>());
    let well_equi_hued = sequence
        .as_ref()
        .is_some_and(|seq| seq.iter().enumerate().all(|(i, &a)| a * chi == (i + 1) * n));

    Ok(HueProfile {
        order: n,
        chromatic_number: chi,
        maximal_orders,
        sequence,
        well_covered,
        well_bicovered,
        well_hued,
        well_equi_hued,
    })
}

/// Well-hued with `a_i · χ = i · n` for every `i ≤ χ`.
pub fn is_well_equi_hued(g: &Graph) -> Result<bool, ProfileError> {
    Ok(hue_profile(g)?.well_equi_hued)
}
