//! Recursion counters, pruning and deadlines.
//!
//!     cargo run --release --example instrumentation

use std::time::{Duration, Instant};

use l21span::bench::depth_limit;
use l21span::generate::{complete, gnp, petersen};
use l21span::solver::{solve, SolveError, AUX_WORDS_PER_LEVEL_FACTOR};
use l21span::{Graph, Instance, SolverOptions};

fn report(name: &str, g: &Graph, opts: SolverOptions) {
    let started = Instant::now();
    let r = solve(&Instance::whole(g), &opts.with_full_stats()).unwrap();
    let s = r.stats;
    let n = g.n();
    println!(
        "{name:<18} span {:>2}  nodes {:>8}  partitions {:>8}  base cases {:>8}  depth {}/{}  aux {:>5} words (cap {})  {:.1?}",
        r.value as i64 - 1,
        s.nodes,
        s.partitions,
        s.base_case_labelings,
        s.max_depth,
        depth_limit(n),
        s.peak_aux,
        AUX_WORDS_PER_LEVEL_FACTOR * n * n * s.max_depth as usize,
        started.elapsed()
    );
}

fn main() {
    let g = petersen();
    report("Petersen", &g, SolverOptions::default());
    report("Petersen, pruned", &g, SolverOptions::pruned());

    let g = gnp(10, 0.3, 7).unwrap();
    report("G(10,0.3)", &g, SolverOptions::default());
    report("G(10,0.3), pruned", &g, SolverOptions::pruned());

    let g = complete(16).unwrap();
    let opts = SolverOptions {
        deadline: Some(Instant::now() + Duration::from_millis(200)),
        ..SolverOptions::default()
    };
    match solve(&Instance::whole(&g), &opts) {
        Ok(r) => println!("K16 finished: span {}", r.value - 1),
        Err(SolveError::Timeout { stats }) => {
            println!("K16 stopped at the deadline after {} nodes", stats.nodes)
        }
    }
}
