//! Worker-count control for the image drivers.

use crate::error::{Error, Result};

/// Runs `f` on a dedicated rayon pool with `threads` workers.
///
/// `threads == 0` runs `f` on the ambient (global) pool. Every image driver
/// in this crate produces identical output regardless of the pool size.
pub fn with_threads<R, F>(threads: usize, f: F) -> Result<R>
where
    F: FnOnce() -> R + Send,
    R: Send,
{
    if threads == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::ThreadPool(e.to_string()))?;
    Ok(pool.install(f))
}
