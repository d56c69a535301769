//! Random graphs solved three ways: divide and conquer, backtracking, and
//! plain enumeration of every labeling.
//!
//!     cargo run --release --example oracle_crosscheck -- 200

use l21span::generate::gnp;
use l21span::oracle::{exhaustive_lambda, oracle_lambda, OracleBudget};
use l21span::{find_lambda, Instance, SolverOptions, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let trials: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut disagreements = 0;
    for t in 0..trials {
        let n = rng.gen_range(1..=6);
        let g = gnp(n, rng.gen_range(0.1..0.9), rng.gen()).unwrap();
        let pick = |rng: &mut ChaCha8Rng| -> VertexSet { (0..n).filter(|_| rng.gen_bool(0.5)).collect() };
        let (y, z, m) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let inst = Instance::new(&g, y, z, m).unwrap();

        let solver = find_lambda(&inst, &SolverOptions::default()).0;
        let backtrack = oracle_lambda(&inst, OracleBudget::unlimited()).unwrap();
        let brute = exhaustive_lambda(&inst);
        if solver != backtrack || backtrack != brute {
            disagreements += 1;
            println!("trial {t}: {g:?} Y={y} Z={z} M={m}: {solver} / {backtrack} / {brute}");
        }
    }
    println!("{trials} trials, {disagreements} disagreements");

    // a tiny budget gives an "unknown", never a wrong answer
    let g = gnp(9, 0.5, 1).unwrap();
    let budget = OracleBudget {
        node_limit: Some(10),
        ..OracleBudget::unlimited()
    };
    match oracle_lambda(&Instance::whole(&g), budget) {
        Ok(k) => println!("budgeted oracle: {k}"),
        Err(e) => println!("budgeted oracle: unknown ({e})"),
    }
}
