//! Which sequences arise as hue sequences, and a graph realizing each one.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("sequence is not realizable: differences must be non-negative and non-increasing")]
    Unrealizable,
    #[error("realizing graph would need {0} vertices")]
    TooLarge(usize),
}

/// `d_1 = a_1`, `d_k = a_k − a_{k−1}`; `None` if some term decreases.
pub fn differences(a: &[usize]) -> Option<Vec<usize>> {
    let mut prev = 0;
    a.iter()
        .map(|&x| {
            let d = x.checked_sub(prev)?;
            prev = x;
            Some(d)
        })
        .collect()
}

/// True iff `a` is non-empty with positive `a_1` and its difference sequence
/// is non-negative and non-increasing. Terms past the end are taken as
/// constant, so the differences are eventually zero.
pub fn is_realizable_sequence(a: &[usize]) -> bool {
    match differences(a) {
        Some(d) => !d.is_empty() && d[0] > 0 && d.windows(2).all(|w| w[1] <= w[0]),
        None => false,
    }
}

/// Drops trailing repeats: `(3, 5, 6, 6, 6)` becomes `(3, 5, 6)`.
pub fn trim_stable(a: &[usize]) -> &[usize] {
    let mut end = a.len();
    while end >= 2 && a[end - 1] == a[end - 2] {
        end -= 1;
    }
    &a[..end]
}

/// Clique sizes of the realizing graph: the conjugate partition of the
/// difference sequence, so that `a_k = Σ_i min(k, c_i)`.
pub fn realizing_clique_sizes(a: &[usize]) -> Result<Vec<usize>, SequenceError> {
    if !is_realizable_sequence(a) {
        return Err(SequenceError::Unrealizable);
    }
    let d = differences(a).expect("checked above");
    Ok((1..=d[0]).map(|i| d.iter().filter(|&&dk| dk >= i).count()).collect())
}

/// Disjoint union of cliques whose hue sequence is `a`.
pub fn realize_sequence(a: &[usize]) -> Result<Graph, SequenceError> {
    let sizes = realizing_clique_sizes(a)?;
    let n: usize = sizes.iter().sum();
    if n > MAX_ORDER {
        return Err(SequenceError::TooLarge(n));
    }
    sizes
        .iter()
        .try_fold(Graph::empty(0).expect("order 0"), |acc, &c| {
            acc.union(&Graph::complete(c)?)
        })
        .map_err(|e: GraphError| match e {
            GraphError::OrderOverflow(n) => SequenceError::TooLarge(n),
            _ => unreachable!("cliques are well formed"),
        })
}
