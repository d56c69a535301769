//! Reading and writing graphs as edge lists and DIMACS, and labelings as
//! "vertex label" lines.

use l21span::io::{parse_graph, parse_labeling, write_graph};
use l21span::{check_labeling, GraphFormat, Instance};

const EDGE_LIST: &str = "\
# a triangle with a pendant vertex
4 4
0 1
1 2
2 0
2 3
";

fn main() {
    let g = parse_graph(EDGE_LIST, GraphFormat::EdgeList).unwrap();
    let dimacs = write_graph(&g, GraphFormat::Dimacs);
    print!("{dimacs}");
    let back = parse_graph(&dimacs, GraphFormat::Dimacs).unwrap();
    assert_eq!(g, back);

    let c = parse_labeling("0 0\n1 2\n2 4\n3 1\n").unwrap();
    let inst = Instance::whole(&g);
    match check_labeling(&inst, &c, c.span().unwrap() + 1) {
        Ok(()) => println!("labeling valid, span {}", c.span().unwrap()),
        Err(v) => println!("invalid: {v}"),
    }

    for bad in ["3 1\n0 3\n", "3 2\n0 1\n", "2 1\n1 1\n"] {
        let err = parse_graph(bad, GraphFormat::EdgeList).unwrap_err();
        println!("{:?} -> {err}", bad);
    }
}
