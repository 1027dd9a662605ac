//! End-to-end checks of the command-line interface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fillsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fillsys"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("fillsys-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn orbits_counts_match() {
    let out = fillsys(&["orbits", "--genus", "2", "--k", "0"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("4 orbit(s)"), "{text}");
    assert_eq!(text.lines().count(), 5);

    let out = fillsys(&["orbits", "--genus", "2", "--k", "1", "--connected"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("18 orbit(s)"), "{text}");
}

#[test]
fn orbits_json_round_trips() {
    let path = std::env::temp_dir().join(format!("fillsys-cli-{}-orbits.json", std::process::id()));
    let out = fillsys(&[
        "orbits",
        "--genus",
        "1",
        "--k",
        "1",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["format"], 1);
    assert_eq!(doc["representatives"].as_array().unwrap().len(), 1);
    std::fs::remove_file(&path).ok();
}

#[test]
fn canon_rejects_adjacent_pairings_with_diagnostic() {
    let bad = write_temp("bad.txt", "n=2;chords=(0,1)(2,3)");
    let out = fillsys(&["canon", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("adjacent pairing at point 0"), "{err}");
    std::fs::remove_file(&bad).ok();
}

#[test]
fn canon_prints_invariants() {
    let rho = write_temp("rho.txt", "n=3;chords=(0,3)(1,4)(2,5)");
    let out = fillsys(&["canon", "--input", rho.to_str().unwrap(), "--dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cycles=2"), "{text}");
    assert!(text.contains("genus=1"), "{text}");
    assert!(text.contains("parallel=false"), "{text}");
    assert!(text.contains("graph crossings"), "{text}");
    std::fs::remove_file(&rho).ok();
}

#[test]
fn boundary_of_the_torus_triangulation() {
    let rho = write_temp(
        "rho-labelled.txt",
        "n=3;chords=(0,3)(1,4)(2,5)\nlabel 0: x\nlabel 1: y\nlabel 2: x^-1 y\n",
    );
    let out = fillsys(&[
        "boundary",
        "--genus",
        "1",
        "--k",
        "1",
        "--input",
        rho.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("3 surviving face(s)"), "{text}");
    assert!(text.contains("mark=0;sign=+1"), "{text}");
    std::fs::remove_file(&rho).ok();
}

#[test]
fn reduce_reports_the_oracle() {
    let phi = write_temp(
        "phi-labelled.txt",
        "n=2;chords=(0,2)(1,3)\nlabel 0: x y\nlabel 1: y\n",
    );
    let out = fillsys(&["reduce", "--genus", "1", "--input", phi.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("slope oracle: agreed"), "{text}");
    assert!(text.contains("h1 [[1, 0], [1, 1]]"), "{text}");
    std::fs::remove_file(&phi).ok();
}

#[test]
fn verify_exits_zero_on_success() {
    for genus in ["1", "2"] {
        let out = fillsys(&["verify", "--genus", genus]);
        assert!(
            out.status.success(),
            "genus {genus}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
    let out = fillsys(&["verify", "--genus", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn theta_reports_sphere() {
    let out = fillsys(&["theta", "--genus", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("homology of a 2-sphere"), "{text}");
    assert!(text.contains("9 diagonals"), "{text}");
}

#[test]
fn theta_reads_facet_files() {
    // boundary of the 3-simplex
    let facets = write_temp("facets.txt", "0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
    let out = fillsys(&["theta", "--complex", facets.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("reduced H_2: rank 1"), "{text}");
    std::fs::remove_file(&facets).ok();
}

#[test]
fn selftest_json_is_machine_readable() {
    let out = fillsys(&["selftest", "--json", "--seed", "12345"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["format"], 1);
    assert_eq!(doc["criteria"].as_array().unwrap().len(), 10);
    assert!(doc["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn output_diagrams_reparse() {
    let out = fillsys(&["orbits", "--genus", "2", "--k", "0"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines().skip(1) {
        fillsys::format::parse_diagram(line).unwrap();
    }
}
