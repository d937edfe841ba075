use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbowlab"))
        .args(args)
        .env_remove("RAINBOWLAB_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn g2_has_no_globally_rainbow_packing() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    let o = run(&["construct", "--family", "g2", "--n", "9", "--k", "3", "--out", path(&g)]);
    assert!(o.status.success());

    let o = run(&["search", "packing", "--in", path(&g), "--k", "3", "--mode", "global"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("NONE"));

    let w = dir.path().join("w.json");
    let o = run(&["search", "packing", "--in", path(&g), "--k", "3", "--mode", "each", "--witness-out", path(&w)]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&w).unwrap();
    let graph = rainbowlab::io::parse_graph(&std::fs::read_to_string(&g).unwrap()).unwrap();
    assert_eq!(rainbowlab::io::parse_witness(&graph, &text).unwrap().triples.len(), 3);
}

#[test]
fn budget_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    assert!(run(&["construct", "--family", "g2", "--n", "9", "--k", "3", "--out", path(&g)]).status.success());
    let o = run(&["search", "packing", "--in", path(&g), "--k", "3", "--mode", "global", "--budget", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn construct_to_stdout_round_trips() {
    let o = run(&["construct", "--family", "g4", "--n", "10", "--k", "3"]);
    assert!(o.status.success());
    let g = rainbowlab::io::parse_graph(&stdout(&o)).unwrap();
    assert_eq!(g.n(), 10);
    assert_eq!(g.color_number() as i64, rainbowlab::constructions::color_count_formula(rainbowlab::constructions::Family::G4, 10, 3).unwrap());
}

#[test]
fn transitions_for_k10() {
    let o = run(&["report", "transitions", "--k", "10"]);
    assert!(o.status.success());
    let s = stdout(&o);
    for needle in ["33.0625", "34", "52.5"] {
        assert!(s.contains(needle), "{needle} missing from\n{s}");
    }
    let o = run(&["report", "transitions", "--k", "10", "--observed", "60"]);
    assert!(stdout(&o).contains("G3,34,35"));
}

#[test]
fn disprove_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("d.csv");
    let o = run(&["report", "disprove", "--k", "10", "--n-min", "30", "--n-max", "45", "--csv", path(&csv)]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let (n_col, v_col) = (col("n"), col("violated"));
    let violated: Vec<usize> = lines
        .map(|l| l.split(',').collect::<Vec<_>>())
        .filter(|f| f[v_col] == "true")
        .map(|f| f[n_col].parse().unwrap())
        .collect();
    assert_eq!(violated, (34..=38).collect::<Vec<_>>());
}

#[test]
fn curves_csv_written() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("c.csv");
    let o = run(&["report", "curves", "--k", "5", "--n-max", "40", "--csv", path(&csv)]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text.lines().count(), 1 + (40 - 15 + 1));
}

#[test]
fn oracle_small() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    let o = run(&["oracle", "ar", "--n", "5", "--k", "1", "--witness-out", path(&w)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("= 4 complete"));
    let g = rainbowlab::io::parse_graph(&std::fs::read_to_string(&w).unwrap()).unwrap();
    assert_eq!(g.color_number(), 4);
    assert!(rainbowlab::analysis::enumerate_rainbow_triangles(&g).is_empty());

    let o = run(&["--workers", "2", "oracle", "ar", "--n", "6", "--k", "2", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_commands() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    std::fs::write(&g, "{\"n\":4,\"edges\":[[0,1,1],[0,2,2],[1,2,3],[2,3,1]]}").unwrap();
    let o = run(&["analyze", "rt", "--in", path(&g), "--per-vertex", "--per-edge"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("rt 1\n"));
    assert!(s.contains("vertex 3 0"));
    assert!(s.contains("edge 0 1 1"));

    let o = run(&["analyze", "lemmas", "--in", path(&g), "--k", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("density-bound"));

    let g4 = dir.path().join("g4.json");
    assert!(run(&["construct", "--family", "g4", "--n", "12", "--k", "3", "--out", path(&g4)]).status.success());
    let p = dir.path().join("p.json");
    std::fs::write(&p, "{\"triples\":[[0,1,2],[3,4,5]]}").unwrap();
    let o = run(&["analyze", "claims", "--in", path(&g4), "--packing", path(&p)]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains(", 0 failed"), "{s}");
}

#[test]
fn dirac_report() {
    let o = run(&["construct", "--family", "g1", "--n", "9", "--k", "3"]);
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    std::fs::write(&g, stdout(&o)).unwrap();
    let o = run(&["report", "dirac", "--in", path(&g), "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("search "));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["nonsense"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["construct", "--family", "g9", "--n", "9", "--k", "3"]).status.code(), Some(64));
    assert_eq!(run(&["construct", "--family", "g1", "--n", "5", "--k", "3"]).status.code(), Some(64));
    assert_eq!(run(&["analyze", "rt", "--in", "/nonexistent/g.json"]).status.code(), Some(66));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"n\":2,\"edges\":[[0,0,1]]}").unwrap();
    assert_eq!(run(&["analyze", "rt", "--in", path(&bad)]).status.code(), Some(65));
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(run(&["analyze", "rt", "--in", path(&bad)]).status.code(), Some(65));

    let out = dir.path().join("missing-dir").join("g.json");
    let o = run(&["construct", "--family", "g1", "--n", "9", "--k", "3", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(73));
}
