//! Matchings, alternating reachability and recognizers for the structural
//! families of well-hued graphs.

mod alternating;
mod matching;
mod recognizers;

pub use alternating::{
    alternating_reachable, alternating_walk_reachable, greedy_independent_alt_dominating,
    is_alternating_dominating, matching_invariance_check, AlternatingReachability,
};
pub use matching::{first_perfect_matching, perfect_matchings, saturates, Matching, MatchingError};
pub use recognizers::{
    conjecture_alpha_predicate, corona_verdict, is_corona_of_complete, non_neighborhoods_are_cliques,
    thm222_predicate, thm_2k1_predicate, thm_3k_predicate, PredicateError, Verdict, Witness,
};
