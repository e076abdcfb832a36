//! Map-reduce over independent work items, on a rayon pool when the
//! `parallel` feature is on and sequentially otherwise. Work is split
//! independently of the worker count, and reductions are commutative, so
//! results do not depend on scheduling.

#[cfg(feature = "parallel")]
pub fn map_reduce<T, R, M, F, I>(items: Vec<T>, workers: usize, map: M, reduce: F, identity: I) -> R
where
    T: Send,
    R: Send,
    M: Fn(T) -> R + Sync + Send,
    F: Fn(R, R) -> R + Sync + Send,
    I: Fn() -> R + Sync + Send,
{
    use rayon::prelude::*;
    if workers <= 1 {
        return items.into_iter().map(map).fold(identity(), reduce);
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("thread pool");
    pool.install(|| items.into_par_iter().map(&map).reduce(&identity, &reduce))
}

#[cfg(not(feature = "parallel"))]
pub fn map_reduce<T, R, M, F, I>(items: Vec<T>, _workers: usize, map: M, reduce: F, identity: I) -> R
where
    M: Fn(T) -> R,
    F: Fn(R, R) -> R,
    I: Fn() -> R,
{
    items.into_iter().map(map).fold(identity(), reduce)
}

/// Default worker count: `DUADIC_WORKERS` if set, else the core count.
pub fn default_workers() -> usize {
    std::env::var("DUADIC_WORKERS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}
