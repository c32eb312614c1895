use distset_core::atlas::Executor;
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuildError, ThreadPoolBuilder};

/// Runs the per-class work of one level on a dedicated rayon pool.
pub struct Rayon {
    pool: ThreadPool,
}

impl Rayon {
    pub fn new(jobs: usize) -> Result<Self, ThreadPoolBuildError> {
        Ok(Rayon { pool: ThreadPoolBuilder::new().num_threads(jobs).build()? })
    }
}

impl Executor for Rayon {
    fn map<T: Sync, R: Send>(&self, items: &[T], f: &(dyn Fn(&T) -> R + Sync)) -> Vec<R> {
        self.pool.install(|| items.par_iter().map(f).collect())
    }
}
