//! Computes an optimal labeling and checks it independently.
//!
//!     cargo run --release --example certificate -- 6

use l21span::generate::cycle;
use l21span::io::write_labeling;
use l21span::{check_labeling, find_labeling, Instance};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let g = cycle(n).expect("a cycle needs at least 3 vertices");
    let inst = Instance::whole(&g);

    let (k, labeling) = find_labeling(&inst);
    println!("C{n}: {k} labels, span {}", k - 1);
    print!("{}", write_labeling(&labeling));

    match check_labeling(&inst, &labeling, k) {
        Ok(()) => println!("labeling checks out"),
        Err(v) => println!("broken certificate: {v}"),
    }

    // a labeling one label short cannot exist, so squeezing this one must fail
    let squeezed: l21span::PartialLabeling = labeling
        .iter()
        .map(|(v, l)| (v, l.min(k.saturating_sub(2))))
        .collect();
    if let Err(v) = check_labeling(&inst, &squeezed, k - 1) {
        println!("with {} labels: {v}", k - 1);
    }
}
