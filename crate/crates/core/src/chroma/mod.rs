//! Colorability, maximal k-colorable subgraphs and hue profiles.

mod coloring;
mod lemmas;
mod maximal;
mod profile;
mod sequence;

pub use coloring::{chromatic_number, is_k_colorable, is_k_colorable_within};
pub use lemmas::{
    audit_tool_lemmas, audit_with_profile, gamma, i_v, Lemma, LemmaAuditReport, LemmaCheck,
    Violation,
};
pub use maximal::{
    clique_number, independence_number, maximal_cliques, maximal_independent_sets,
    maximal_k_colorable_sets, ChromaticTable,
};
pub use profile::{
    hue_profile, hue_profile_with_limit, is_well_equi_hued, HueProfile, ProfileError,
    PROFILE_HARD_MAX_ORDER, PROFILE_MAX_ORDER,
};
pub use sequence::{
    differences, is_realizable_sequence, realize_sequence, realizing_clique_sizes, trim_stable,
    SequenceError,
};
