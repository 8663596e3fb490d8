//! Grid search evaluated on a worker pool.

use milnor_core::deform::FamilyOptions;
use milnor_core::search::{base_mu, evaluate, summarize, SearchGrid, SearchSummary};
use milnor_core::{Poly, Result};
use rayon::prelude::*;

/// Same result as the sequential search for any worker count: records are
/// collected in enumeration order before summarizing.
pub fn parallel_search(
    f0: &Poly,
    grid: &SearchGrid,
    budget: u64,
    opts: &FamilyOptions,
    workers: Option<usize>,
) -> Result<SearchSummary> {
    let mu0 = base_mu(f0, opts)?;
    grid.validate(f0, budget)?;
    let assignments = grid.assignments();
    let run = || {
        assignments
            .par_iter()
            .map(|a| evaluate(f0, mu0, a, opts))
            .collect::<Vec<_>>()
    };
    let records = match workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    Ok(summarize(mu0, records))
}
