//! The generalized span on a vertex subset Y, where vertices of Z may not
//! take label 0 and vertices of M may not take the top label.

use l21span::generate::path;
use l21span::{find_labeling, find_lambda, Instance, SolverOptions, VertexSet};

fn show(name: &str, inst: &Instance) {
    let (k, c) = find_labeling(inst);
    let labels: Vec<String> = c.iter().map(|(v, l)| format!("{v}:{l}")).collect();
    println!(
        "{name:<28} Y={} Z={} M={}  -> {k} labels  [{}]",
        inst.y,
        inst.z,
        inst.m,
        labels.join(" ")
    );
}

fn main() {
    let g = path(5).unwrap();
    let all = VertexSet::full(5);
    let none = VertexSet::empty();
    let ends: VertexSet = [0, 4].into_iter().collect();

    show("whole path", &Instance::new(&g, all, none, none).unwrap());
    show("no 0 at the ends", &Instance::new(&g, all, ends, none).unwrap());
    show("no top at the ends", &Instance::new(&g, all, none, ends).unwrap());
    show("both", &Instance::new(&g, all, ends, ends).unwrap());
    show("no 0 anywhere", &Instance::new(&g, all, all, none).unwrap());

    // distances are always taken in the whole graph, so 0 and 2 clash
    // even when the middle vertex is not being labeled
    let outer: VertexSet = [0, 2, 4].into_iter().collect();
    show("Y = {0, 2, 4}", &Instance::new(&g, outer, none, none).unwrap());

    // swapping Z and M reverses every labeling, so the value is the same
    let inst = Instance::new(&g, all, ends, VertexSet::singleton(2)).unwrap();
    let opts = SolverOptions::default();
    let (a, _) = find_lambda(&inst, &opts);
    let (b, _) = find_lambda(&inst.swapped(), &opts);
    println!("Z/M swap: {a} == {b}");
}
