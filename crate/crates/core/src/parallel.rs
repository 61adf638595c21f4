//! Range-partitioned parallel folds.
//!
//! Work is cut into fixed-size chunks that do not depend on the number of
//! threads, and chunk results are merged in chunk order. Results are
//! therefore identical for any thread count.

use rayon::prelude::*;

use crate::seqcore::{enumerate, BinarySequence, EnumerationRange};
use crate::Result;

/// Indices per chunk for parallel enumeration.
pub const CHUNK: u64 = 1 << 12;

/// Environment variable holding the default worker-thread count.
pub const THREADS_ENV: &str = "LITTLEWOOD_THREADS";

/// Default thread count: `LITTLEWOOD_THREADS` if set, else the available
/// parallelism.
pub fn default_threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

/// Runs `f` inside a dedicated rayon pool with `threads` workers.
pub fn with_threads<T, F>(threads: usize, f: F) -> Result<T>
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| crate::Error::Inconsistent(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Folds every sequence of `ranges` into an accumulator. Each range is cut
/// into [`CHUNK`]-sized pieces; pieces run in parallel and are merged left
/// to right in index order.
pub fn fold_ranges<T, I, F, M>(ranges: &[EnumerationRange], init: I, fold: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &BinarySequence) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let chunks: Vec<EnumerationRange> = ranges.iter().flat_map(|r| r.chunks(CHUNK)).collect();
    let partials: Vec<T> = chunks
        .par_iter()
        .map(|chunk| {
            let mut acc = init();
            enumerate(chunk, |seq| fold(&mut acc, seq));
            acc
        })
        .collect();
    partials.into_iter().fold(init(), &merge)
}

/// Maps `f` over `0..count` in parallel, returning results in index order.
pub fn map_indices<T, F>(count: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    (0..count).into_par_iter().map(f).collect()
}
