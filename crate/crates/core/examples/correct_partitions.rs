//! Lists the (A, X, B) splits the solver branches over: X a nonempty
//! 2-packing, A and B each at most half of Y.
//!
//!     cargo run --example correct_partitions

use l21span::generate::cycle;
use l21span::solver::enumerate_correct_partitions;
use l21span::Instance;

fn main() {
    let g = cycle(5).unwrap();
    let inst = Instance::whole(&g);
    let mut count = 0;
    for p in enumerate_correct_partitions(&inst) {
        count += 1;
        if count <= 12 {
            println!("A={:<10} X={:<6} B={}", p.a.to_string(), p.x.to_string(), p.b);
        }
    }
    println!("... {count} partitions of C5");

    // in C5 every two vertices are within distance 2, so X is a single vertex
    assert!(enumerate_correct_partitions(&inst).all(|p| p.x.len() == 1));
}
