use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn l21span(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_l21span"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn l21span");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn span_of_small_graphs() {
    let out = l21span(&["span"], "3 2\n0 1\n1 2\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "lambda = 3\n");

    let out = l21span(&["span", "--input", "-"], "2 1\n0 1\n");
    assert_eq!(stdout(&out), "lambda = 2\n");

    let out = l21span(&["span", "--format", "dimacs"], "p edge 3 2\ne 1 2\ne 2 3\n");
    assert_eq!(stdout(&out), "lambda = 3\n");
}

#[test]
fn petersen_via_gen() {
    let graph = stdout(&l21span(&["gen", "--family", "petersen"], ""));
    let out = l21span(&["span", "--prune"], &graph);
    assert_eq!(stdout(&out), "lambda = 9\n");
    let out = l21span(&["oracle"], &graph);
    assert_eq!(stdout(&out), "lambda = 9\n");
}

#[test]
fn parse_errors_exit_2() {
    let out = l21span(&["span"], "2 1\n0 0\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = l21span(&["span", "--input", "/nonexistent/graph.txt"], "");
    assert_eq!(out.status.code(), Some(2));

    let out = l21span(&["gen", "--family", "cycle", "--n", "2"], "");
    assert_eq!(out.status.code(), Some(2));
    let out = l21span(&["gen", "--family", "path"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_matches_text() {
    let graph = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    let text = stdout(&l21span(&["span"], graph));
    let json = stdout(&l21span(&["span", "--json", "--certificate"], graph));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(text, format!("lambda = {}\n", v["lambda"]));
    assert_eq!(v["n"], 5);
    assert_eq!(v["m"], 5);
    assert!(v["stats"]["nodes"].as_u64().unwrap() > 0);
    assert!(v["stats"]["max_depth"].as_u64().unwrap() >= 1);
    assert!(v["stats"]["partitions"].is_u64());
    assert_eq!(v["certificate"].as_array().unwrap().len(), 5);

    let plain = stdout(&l21span(&["span", "--json"], graph));
    let v: serde_json::Value = serde_json::from_str(&plain).unwrap();
    assert!(v.get("certificate").is_none());
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let k2 = write(dir.path(), "k2.txt", "2 1\n0 1\n");
    let p3 = write(dir.path(), "p3.txt", "3 2\n0 1\n1 2\n");
    let good = write(dir.path(), "good.lab", "0 0\n1 2\n");
    let bad = write(dir.path(), "bad.lab", "0 0\n1 1\n");
    let clash = write(dir.path(), "clash.lab", "0 0\n1 2\n2 0\n");
    let broken = write(dir.path(), "broken.lab", "0 zero\n");

    let out = l21span(&["verify", "--input", &k2, "--labeling", &good], "");
    assert_eq!(out.status.code(), Some(0));

    let out = l21span(&["verify", "--input", &k2, "--labeling", &bad], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("adjacent vertices 0 and 1"));

    let out = l21span(&["verify", "--input", &p3, "--labeling", &clash], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("vertices 0 and 2 at distance 2"));

    let out = l21span(&["verify", "--input", &k2, "--labeling", &broken], "");
    assert_eq!(out.status.code(), Some(2));

    // labeling from stdin
    let out = l21span(&["verify", "--input", &k2, "--labeling", "-"], "0 2\n1 0\n");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gen_span_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let families: &[(&str, &[usize])] = &[
        ("path", &[1, 2, 5, 8]),
        ("cycle", &[3, 4, 7]),
        ("complete", &[1, 3, 6]),
        ("star", &[2, 5]),
        ("petersen", &[10]),
        ("gnp", &[4, 7, 9]),
    ];
    for (family, sizes) in families {
        for n in *sizes {
            for format in ["edgelist", "dimacs"] {
                let n_arg = n.to_string();
                let graph = stdout(&l21span(
                    &["gen", "--family", family, "--n", &n_arg, "--p", "0.4", "--seed", "7", "--format", format],
                    "",
                ));
                let gpath = write(dir.path(), "g.txt", &graph);
                let out = l21span(&["span", "--prune", "--certificate", "--format", format, "--input", &gpath], "");
                assert_eq!(out.status.code(), Some(0), "{family} {n}");
                let text = stdout(&out);
                let (head, labels) = text.split_once('\n').unwrap();
                assert!(head.starts_with("lambda = "));
                let lpath = write(dir.path(), "g.lab", labels);
                let out = l21span(&["verify", "--format", format, "--input", &gpath, "--labeling", &lpath], "");
                assert_eq!(out.status.code(), Some(0), "{family} {n}: {}", stdout(&out));
                let span: i64 = head["lambda = ".len()..].parse().unwrap();
                assert!(stdout(&out).ends_with(&format!("span {span}\n")));
            }
        }
    }
}

#[test]
fn timeout_exits_3() {
    let graph = stdout(&l21span(&["gen", "--family", "complete", "--n", "14"], ""));
    let out = l21span(&["span", "--timeout", "0"], &graph);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).starts_with("timeout: nodes = "));
    let out = l21span(&["span", "--timeout", "0", "--json"], &graph);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["timeout"], true);
}

#[test]
fn bench_csv() {
    let out = l21span(&["bench", "--n", "6", "--seed", "3"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(l21span::bench::CSV_HEADER));
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 12, "{line}");
        assert_eq!(fields[4], fields[5], "{line}");
        assert_eq!(fields[11], "ok");
        if fields[0] == "complete" {
            let n: i64 = fields[2].parse().unwrap();
            assert_eq!(fields[4], (2 * n - 2).to_string());
        }
    }
}
