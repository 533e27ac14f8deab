use std::path::Path;
use std::process::{Command, Output};

fn nbk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nbk"))
        .args(args)
        .output()
        .expect("spawn nbk")
}

fn run_to(out: &Path, extra: &[&str]) -> Output {
    let mut args = vec!["run", "--out", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    nbk(&args)
}

#[test]
fn help_prints_defaults() {
    let out = nbk(&["run", "--help"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for needle in [
        "[default: 10]",
        "[default: 10000]",
        "[default: stdn]",
        "--full-scale",
        "--no-timing",
    ] {
        assert!(text.contains(needle), "missing {needle}");
    }
}

#[test]
fn run_is_reproducible_without_timing() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let common = [
        "--family",
        "simplex-linear",
        "--rows",
        "20",
        "--cols",
        "8",
        "--repeats",
        "3",
        "--max-iters",
        "300",
        "--seed",
        "7",
        "--no-timing",
    ];
    assert!(run_to(&a, &common).status.success());
    let mut seq = common.to_vec();
    seq.push("--sequential");
    assert!(run_to(&b, &seq).status.success());
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("experiment,method,repeat,iter,elapsed_s,residual,dist_to_sol,bregman_dist")
    );
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&first[..5], &["simplex-linear-20x8", "nbk", "0", "0", ""]);
}

#[test]
fn timing_column_is_filled_by_default() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.csv");
    let status = run_to(&out, &["--family", "lsd", "--repeats", "1", "--max-iters", "50"]).status;
    assert!(status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let row: Vec<&str> = text.lines().nth(2).unwrap().split(',').collect();
    assert!(row[4].parse::<f64>().unwrap() >= 0.0);
}

#[test]
fn preset_with_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.csv");
    let summary = dir.path().join("s.csv");
    let o = run_to(
        &out,
        &[
            "--preset",
            "fig6",
            "--repeats",
            "2",
            "--max-iters",
            "40",
            "--no-timing",
            "--summary",
            summary.to_str().unwrap(),
        ],
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    let repeats: std::collections::BTreeSet<&str> =
        text.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(repeats.into_iter().collect::<Vec<_>>(), ["0", "1"]);
    assert!(text.lines().skip(1).all(|l| l.starts_with("fig6,")));
    let s = std::fs::read_to_string(&summary).unwrap();
    assert!(s.starts_with("experiment,method,at,min,q25,median,q75,max\n"));
}

#[test]
fn configuration_errors_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    for args in [
        vec!["--family", "nope"],
        vec!["--family", "lsd", "--methods", "pocs"],
        vec!["--family", "lsd", "--repeats", "0"],
        vec!["--family", "sparse-quadratic", "--cols", "3", "--nnz", "4"],
        vec!["--family", "simplex-linear", "--dist", "cauchy"],
        vec!["--family", "lsd", "--preset", "fig6"],
        vec![],
    ] {
        let o = run_to(&out, &args);
        assert_eq!(o.status.code(), Some(2), "args {args:?}");
    }
    assert!(!out.exists());
}

#[test]
fn presets_are_listed() {
    let o = nbk(&["presets"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    for k in 1..=8 {
        assert!(text.contains(&format!("fig{k} ")));
    }
}
