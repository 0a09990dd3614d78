use std::path::Path;
use std::process::{Command, Output};

use ncomp::io::{frame_from_json, frame_to_json, matrix_to_json};
use ncomp::numkit::random_normal_with_spectrum;
use ncomp::rng::seeded;
use ncomp::{Spectrum, C64};

const SQUARE: &str = "1,0;0,1;-1,0;0,-1";

fn ncomp(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncomp"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .unwrap()
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn csv_header_records_the_run() {
    let tmp = tempfile::tempdir().unwrap();
    let out = ncomp(&["bset", "--spectrum", SQUARE, "--a", "0.25,0.25", "--samples", "50", "--seed", "9"], tmp.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = read(&tmp.path().join("bset_exact.csv"));
    assert!(text.starts_with("# schema_version: 1\n# command: bset\n"));
    assert!(text.contains("# seed: 9\n"));
    assert!(text.contains("# description: curve\n"));
    assert!(text.lines().any(|l| l == "kind,x,y,r"));
    assert!(read(&tmp.path().join("bset.svg")).contains("<svg"));
}

#[test]
fn emit_selects_formats() {
    let tmp = tempfile::tempdir().unwrap();
    let out = ncomp(&["lambda", "--spectrum", SQUARE, "--k", "2", "--emit", "csv"], tmp.path());
    assert!(out.status.success());
    assert!(tmp.path().join("lambda.csv").exists());
    assert!(!tmp.path().join("lambda.svg").exists());
}

#[test]
fn usage_errors_exit_with_two() {
    let tmp = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 4] = [
        &["continuity", "--spectrum", SQUARE, "--a", "1,0", "--path", "geom:1,0"],
        &["continuity", "--spectrum", SQUARE, "--a", "1,0", "--path", "spiral:1"],
        &["lambda", "--k", "2"],
        &["bset", "--spectrum", SQUARE, "--a", "3,0"],
    ];
    for args in cases {
        let out = ncomp(args, tmp.path());
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn matrix_input_is_diagonalised() {
    let tmp = tempfile::tempdir().unwrap();
    let z = Spectrum::roots_of_unity(4).unwrap();
    let m = random_normal_with_spectrum(z.values(), &mut seeded(3));
    let input = tmp.path().join("m.json");
    std::fs::write(&input, matrix_to_json(&m)).unwrap();
    let out = ncomp(
        &["bset", "--input", input.to_str().unwrap(), "--a", "0.25,0.25", "--samples", "100"],
        tmp.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("curve"));
}

#[test]
fn witness_frame_replays_and_rejects_tampering() {
    let tmp = tempfile::tempdir().unwrap();
    let pentagon = "1,0;0.309016994374947,0.951056516295154;-0.809016994374947,0.587785252292473;\
                    -0.809016994374947,-0.587785252292473;0.309016994374947,-0.951056516295154";
    let args = ["witness", "--spectrum", pentagon, "--a", "0.1,0", "--b", "0,0.15"];
    assert!(ncomp(&args, tmp.path()).status.success());
    let frame = tmp.path().join("witness_frame.json");
    let mut replay = args.to_vec();
    replay.extend(["--frame", frame.to_str().unwrap()]);
    assert!(ncomp(&replay, tmp.path()).status.success());

    let mut cols = frame_from_json(&read(&frame)).unwrap().into_columns();
    cols.swap(0, 1);
    let swapped = ncomp::numkit::Frame::new(5, cols).unwrap();
    std::fs::write(&frame, frame_to_json(&swapped)).unwrap();
    let out = ncomp(&replay, tmp.path());
    assert_eq!(out.status.code(), Some(3));

    let (a, b) = (C64::new(0.0, 0.15), C64::new(0.1, 0.0));
    let mut back = args.to_vec();
    let (sa, sb) = (format!("{},{}", a.re, a.im), format!("{},{}", b.re, b.im));
    back[4] = &sa;
    back[6] = &sb;
    back.extend(["--frame", frame.to_str().unwrap()]);
    assert!(ncomp(&back, tmp.path()).status.success());
}

#[test]
fn continuity_reports_the_jump_at_a_vertex() {
    let tmp = tempfile::tempdir().unwrap();
    let out = ncomp(
        &["continuity", "--spectrum", SQUARE, "--a", "1,0", "--path", "geom:-0.5,0.5:4", "--samples", "500"],
        tmp.path(),
    );
    assert!(out.status.success());
    let text = read(&tmp.path().join("continuity.csv"));
    assert!(text.contains("# on_grid: true"));
    let rows: Vec<Vec<f64>> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("index"))
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 4);
    for r in rows {
        assert!(r[5] < 1e-12 && r[7] > 1.2);
    }
}
