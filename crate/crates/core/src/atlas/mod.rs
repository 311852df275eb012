//! Exhaustive searches over small graphs and the theorem verification
//! harness.

mod partition;
mod search;
mod verify;

pub use partition::clique_partition_min2;
pub use search::{
    search, FamilyTags, Filter, Flag, InputError, Row, SearchReport, Universe, UnknownFilter, TSV_COLUMNS,
};
pub use verify::{verify_theorem, Counterexample, TheoremId, VerificationReport, VerifyError};

/// Runs `f` on a pool of `workers` threads, or on the global pool.
fn run_with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match workers {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}
