//! Data-parallel helpers.
//!
//! With the `parallel` feature enabled, work is spread over the current rayon
//! pool. When the pool has a single thread, or the crate is built without the
//! feature, every helper runs the plain sequential loop. Results are always
//! collected in input order, so output never depends on the thread count.

/// Number of worker threads available to the helpers.
pub fn current_jobs() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

/// Runs `f` with a pool of `jobs` threads (or the default pool for `None`).
pub fn with_jobs<R, F>(jobs: Option<usize>, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    {
        match jobs {
            Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            },
            None => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        f()
    }
}

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if items.len() > 1 && current_jobs() > 1 {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    items.iter().map(f).collect()
}

pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if n > 1 && current_jobs() > 1 {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    (0..n).map(f).collect()
}

/// Applies `f` to every element. `work_hint` is a rough per-call cost used to
/// skip thread dispatch on tiny inputs.
pub fn for_each_mut<T, F>(items: &mut [T], work_hint: usize, f: F)
where
    T: Send,
    F: Fn(&mut T) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if items.len() > 1 && items.len() * work_hint >= PAR_THRESHOLD && current_jobs() > 1 {
            use rayon::prelude::*;
            items.par_iter_mut().for_each(f);
            return;
        }
    }
    let _ = work_hint;
    items.iter_mut().for_each(f);
}

#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 2048;
