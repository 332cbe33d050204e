mod common;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use leaper_cycles::cli::CycleDocument;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_leaper-cycles"));
    c.env_remove("LEAPER_CYCLES_MAX_K");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    fs::read_to_string(p).unwrap()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

#[test]
fn construct_worked_example_matches_golden_and_listing() {
    let o = run(&["construct", "--k", "5", "--h", "3", "--format", "tuples"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text, golden("construct_k5_h3.txt"));
    let doc = CycleDocument::parse(&text).unwrap();
    let listing = &common::worked_example()["step3_dim5"];
    assert_eq!(doc.cycle, listing.words());
}

#[test]
fn structured_outputs_are_stable() {
    let o = run(&["construct", "--k", "4", "--h", "3", "--format", "ints"]);
    assert_eq!(stdout(&o), golden("construct_k4_h3_ints.txt"));
    let o = run(&["construct", "--k", "4", "--h", "3", "--format", "json"]);
    assert_eq!(stdout(&o), golden("construct_k4_h3.json"));
    let o = run(&["leaper"]);
    assert_eq!(stdout(&o), golden("leaper_catalog.txt"));
    let o = run(&["oracle", "--k", "4", "--h", "3", "--witness"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("oracle_k4_h3_witness.txt"));
}

#[test]
fn construct_by_leaper_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("knight.txt");
    let o = run(&[
        "construct",
        "--leaper",
        "knight",
        "--k",
        "6",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
    let doc = CycleDocument::parse(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((doc.k, doc.h, doc.cycle.len()), (6, 5, 64));
    let v = run(&["verify", "--h", "5", out.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
}

#[test]
fn infeasible_construct_exits_two() {
    let o = run(&["construct", "--k", "4", "--h", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("infeasible (parity)"));
    let o = run(&["construct", "--k", "3", "--h", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("infeasible (range)"));
    let o = run(&["construct", "--leaper", "alfil", "--k", "12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("parity"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["construct", "--k", "4"],
        vec!["construct", "--k", "4", "--h", "3", "--leaper", "knight"],
        vec!["construct", "--k", "0", "--h", "1"],
        vec!["construct", "--k", "4", "--h", "3", "--format", "xml"],
        vec!["oracle", "--k", "4", "--h", "3", "--count", "--witness"],
        vec!["leaper", "--name", "nightrider"],
        vec!["bogus"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
    let o = run(&["construct", "--k", "4", "--h", "3", "--format", "xml"]);
    assert!(stderr(&o).contains("--format"));
    let o = run(&["leaper", "--name", "nightrider"]);
    assert!(stderr(&o).contains("threeleaper"));
}

#[test]
fn capacity_limit_from_flag_and_environment() {
    let o = run(&["construct", "--k", "29", "--h", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("capacity limit 28"));

    let o = bin()
        .args(["construct", "--k", "4", "--h", "1"])
        .env("LEAPER_CYCLES_MAX_K", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("capacity limit 3"));

    let o = bin()
        .args(["--max-k", "4", "construct", "--k", "4", "--h", "1"])
        .env("LEAPER_CYCLES_MAX_K", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["--max-k", "64", "leaper"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_reports_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let good = golden("construct_k5_h3.txt");
    let p = write_temp(&dir, "good.txt", &good);
    let o = run(&["verify", "--h", "3", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid"));

    // swap two body lines (vertices 4 and 9)
    let mut lines: Vec<&str> = good.lines().collect();
    lines.swap(5, 10);
    let p = write_temp(&dir, "swapped.txt", &(lines.join("\n") + "\n"));
    let o = run(&["verify", "--h", "3", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("WrongStep at 3->4"), "{text}");
    assert!(text.contains("WrongStep at 9->10"), "{text}");
    assert!(!text.contains("DuplicateVertex"));

    let p = write_temp(&dir, "empty.txt", "");
    let o = run(&["verify", "--h", "3", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    let p = write_temp(
        &dir,
        "bad.txt",
        "# k=3 h=1 encoding=tuples closed=true\n0 0 0\n0 1\n",
    );
    let o = run(&["verify", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let p = write_temp(
        &dir,
        "overflow.txt",
        "# k=2 h=1 encoding=ints closed=true\n0\n1\n7\n2\n",
    );
    let o = run(&["verify", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("DimensionOverflow at index 2"));
}

#[test]
fn verify_uses_header_step_by_default() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_temp(&dir, "c.json", &golden("construct_k4_h3.json"));
    assert_eq!(run(&["verify", p.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(
        run(&["verify", "--h", "1", p.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn oracle_commands() {
    let o = run(&["oracle", "--k", "5", "--h", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("exists: false"));

    let o = run(&["oracle", "--k", "3", "--h", "1", "--count"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("count: 6"));

    let o = run(&["oracle", "--k", "13", "--h", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("limit 12"));

    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    let o = run(&[
        "oracle",
        "--k",
        "6",
        "--h",
        "5",
        "--witness",
        "--threads",
        "4",
        "--output",
        w.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let single = run(&["oracle", "--k", "6", "--h", "5"]);
    let nodes = |s: &str| {
        s.lines()
            .find(|l| l.starts_with("nodes_explored"))
            .unwrap()
            .to_string()
    };
    assert_eq!(nodes(&stdout(&o)), nodes(&stdout(&single)));
    assert_eq!(run(&["verify", w.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn leaper_commands() {
    let o = run(&["leaper", "--name", "threeleaper"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "leaper: threeleaper (0,3)\nh: 9\nmin_k: 10\n");

    let o = run(&["leaper", "--leaper", "Alfil"]);
    assert!(stdout(&o).contains("min_k: never"));

    let o = run(&["leaper", "--a", "1", "--b", "2", "--k", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("infeasible (range)"));
    assert!(stdout(&o).contains("k must exceed a^2+b^2=5"));

    let o = run(&["leaper", "--a", "2", "--b", "1", "--k", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("leaper: knight (1,2)"));
}

#[test]
fn every_constructed_document_verifies() {
    let dir = tempfile::tempdir().unwrap();
    for k in 2..=12u32 {
        for h in (1..k).step_by(2) {
            for format in ["tuples", "ints", "json"] {
                let out = dir.path().join(format!("c_{k}_{h}.{format}"));
                let ks = k.to_string();
                let hs = h.to_string();
                let o = run(&[
                    "construct",
                    "--k",
                    &ks,
                    "--h",
                    &hs,
                    "--format",
                    format,
                    "--output",
                    out.to_str().unwrap(),
                ]);
                assert_eq!(o.status.code(), Some(0));
                let v = run(&["verify", "--h", &hs, out.to_str().unwrap()]);
                assert_eq!(
                    v.status.code(),
                    Some(0),
                    "k={k} h={h} {format}: {}",
                    stdout(&v)
                );
            }
        }
    }
}
