//! Spans of the small named graph families, next to their closed forms.
//!
//!     cargo run --release --example classic_spans

use l21span::generate::{complete, cycle, path, petersen, star};
use l21span::{lambda_span, Graph, SolverOptions};

fn closed_form_path(n: usize) -> i64 {
    match n {
        1 => 0,
        2 => 2,
        3 | 4 => 3,
        _ => 4,
    }
}

fn main() {
    let opts = SolverOptions::pruned();
    let mut rows: Vec<(String, Graph, i64)> = Vec::new();
    for n in 1..=8 {
        rows.push((format!("P{n}"), path(n).unwrap(), closed_form_path(n)));
    }
    for n in 3..=8 {
        rows.push((format!("C{n}"), cycle(n).unwrap(), 4));
    }
    for k in 1..=6 {
        rows.push((format!("K1,{k}"), star(k + 1).unwrap(), k as i64 + 1));
    }
    for n in 1..=7 {
        rows.push((format!("K{n}"), complete(n).unwrap(), 2 * n as i64 - 2));
    }
    rows.push(("Petersen".into(), petersen(), 9));

    println!("{:<10} {:>3} {:>3} {:>6} {:>8}", "graph", "n", "m", "span", "expected");
    for (name, g, expected) in rows {
        let (span, _) = lambda_span(&g, &opts);
        let mark = if span == expected { "" } else { "  <-- differs" };
        println!(
            "{:<10} {:>3} {:>3} {:>6} {:>8}{mark}",
            name,
            g.n(),
            g.edge_count(),
            span,
            expected
        );
    }
}
