//! Order-preserving map over independent work items, on a rayon pool when
//! the `parallel` feature is enabled and sequentially otherwise.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Serial,
    /// `jobs = 0` lets rayon pick the width.
    Parallel { jobs: usize },
}

impl Exec {
    /// `Serial` for one job, otherwise `Parallel` with that width.
    pub fn with_jobs(jobs: usize) -> Self {
        if jobs == 1 {
            Exec::Serial
        } else {
            Exec::Parallel { jobs }
        }
    }

    /// Whether work will actually be spread over threads in this build.
    pub fn is_parallel(&self) -> bool {
        cfg!(feature = "parallel") && matches!(self, Exec::Parallel { .. })
    }

    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Exec::Serial => items.iter().map(f).collect(),
            Exec::Parallel { jobs } => parallel_map(items, *jobs, f),
        }
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        // collect on an indexed parallel iterator keeps input order
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.iter().map(f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(items: &[T], _jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..200).collect();
        let serial = Exec::Serial.map(&items, |x| x * x);
        assert_eq!(Exec::Parallel { jobs: 4 }.map(&items, |x| x * x), serial);
        assert_eq!(Exec::with_jobs(1), Exec::Serial);
    }
}
