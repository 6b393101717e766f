//! Data-parallel helpers.
//!
//! With the `parallel` feature these dispatch to rayon; without it they run
//! the same closures sequentially. Results are always merged in input order,
//! so output never depends on scheduling.

/// How a batch computation should be scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    /// Uses rayon when compiled with `parallel`, otherwise falls back to
    /// sequential execution. `threads` caps the pool size.
    #[default]
    Parallel,
    ParallelCapped(usize),
}

impl Strategy {
    /// Parallel strategy honoring `HOMOCYL_THREADS` when set.
    pub fn from_env() -> Self {
        match std::env::var("HOMOCYL_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            Some(0) | None => Strategy::Parallel,
            Some(1) => Strategy::Sequential,
            Some(n) => Strategy::ParallelCapped(n),
        }
    }
}

/// Maps `f` over `items` and concatenates the per-item outputs in order.
pub fn flat_map_ordered<I, O, F>(items: Vec<I>, strategy: Strategy, f: F) -> Vec<O>
where
    I: Send,
    O: Send,
    F: Fn(I) -> Vec<O> + Sync + Send,
{
    match strategy {
        Strategy::Sequential => items.into_iter().flat_map(f).collect(),
        #[cfg(feature = "parallel")]
        Strategy::Parallel => {
            use rayon::prelude::*;
            let parts: Vec<Vec<O>> = items.into_par_iter().map(f).collect();
            parts.into_iter().flatten().collect()
        }
        #[cfg(feature = "parallel")]
        Strategy::ParallelCapped(n) => {
            use rayon::prelude::*;
            match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(|| {
                    let parts: Vec<Vec<O>> = items.into_par_iter().map(&f).collect();
                    parts.into_iter().flatten().collect()
                }),
                Err(_) => items.into_iter().flat_map(f).collect(),
            }
        }
        #[cfg(not(feature = "parallel"))]
        _ => items.into_iter().flat_map(f).collect(),
    }
}

/// Maps `f` over `items` preserving order.
pub fn map_ordered<I, O, F>(items: Vec<I>, strategy: Strategy, f: F) -> Vec<O>
where
    I: Send,
    O: Send,
    F: Fn(I) -> O + Sync + Send,
{
    flat_map_ordered(items, strategy, |x| vec![f(x)])
}

// Elimination steps only pay for thread dispatch on larger matrices.
#[cfg(feature = "parallel")]
const ROW_PARALLEL_MIN_ROWS: usize = 6;

/// Applies `f` to each `width`-sized chunk of `data`.
pub(crate) fn for_each_chunk_mut<T, F>(data: &mut [T], width: usize, f: F)
where
    T: Send,
    F: Fn(&mut [T]) + Sync + Send,
{
    if width == 0 {
        return;
    }
    #[cfg(feature = "parallel")]
    if data.len() / width >= ROW_PARALLEL_MIN_ROWS {
        use rayon::prelude::*;
        data.par_chunks_mut(width).for_each(f);
        return;
    }
    data.chunks_mut(width).for_each(f);
}

/// Like [`for_each_chunk_mut`] but also passes the chunk index.
pub(crate) fn for_each_chunk_mut_indexed<T, F>(data: &mut [T], width: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync + Send,
{
    if width == 0 {
        return;
    }
    #[cfg(feature = "parallel")]
    if data.len() / width >= ROW_PARALLEL_MIN_ROWS {
        use rayon::prelude::*;
        data.par_chunks_mut(width).enumerate().for_each(|(i, c)| f(i, c));
        return;
    }
    data.chunks_mut(width).enumerate().for_each(|(i, c)| f(i, c));
}
