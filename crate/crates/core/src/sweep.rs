//! Deterministic sharding of sweeps over `0..len`.
//!
//! Work is cut into contiguous shards, run on scoped threads, and the partial
//! results are returned in shard order, so merged results never depend on the
//! thread count.

use std::ops::Range;

/// Environment variable consulted for the default worker count.
pub const THREADS_ENV: &str = "LRCFORGE_THREADS";

/// Worker count from `LRCFORGE_THREADS`, else the available parallelism.
pub fn default_threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

/// Splits `0..len` into at most `threads` contiguous ranges.
pub fn shards(len: u32, threads: usize) -> Vec<Range<u32>> {
    let threads = threads.clamp(1, len.max(1) as usize) as u32;
    let base = len / threads;
    let extra = len % threads;
    let mut out = Vec::with_capacity(threads as usize);
    let mut start = 0;
    for i in 0..threads {
        let size = base + u32::from(i < extra);
        out.push(start..start + size);
        start += size;
    }
    out
}

/// Runs `work` on each shard and returns the results in shard order.
pub fn map_shards<T, F>(len: u32, threads: usize, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u32>) -> T + Sync,
{
    let ranges = shards(len, threads);
    if ranges.len() == 1 {
        return vec![work(ranges[0].clone())];
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = ranges.into_iter().map(|r| s.spawn(|| work(r))).collect();
        handles.into_iter().map(|h| h.join().expect("sweep worker panicked")).collect()
    })
}
