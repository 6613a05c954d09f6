use std::process::{Command, Output};

use superdim::reduction::{AlgorithmIv, ReductionTrace, TraceStep};
use superdim::verify::SuiteReport;
use superdim::weight::ExtProfile;
use superdim::{CupDiagram, MoveExpansion, SdimResult};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superdim"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn info_examples() {
    let s = stdout(&["info", "2|2: 0,0;0,0"]);
    assert!(s.contains("atypicality: 2"));
    assert!(s.contains("block: trivial"));

    let s = stdout(&["info", "2|1: 1,1;-1"]);
    assert!(s.contains("crosses: [1]"));
    assert!(s.contains("vees: [0]"));

    let s = stdout(&["info", "1|1: 1;0"]);
    assert!(s.contains("atypicality: 0"));
}

#[test]
fn sdim_and_mult() {
    let s = stdout(&["sdim", "3|1: 1,0,0;0"]);
    assert!(s.starts_with("sdim: 2\n"));
    let json = stdout(&["sdim", "3|1: 1,0,0;0", "--format", "json"]);
    let r: SdimResult = serde_json::from_str(&json).unwrap();
    assert_eq!(r.sdim, 2.into());

    assert_eq!(stdout(&["mult", "--vees", "{0,2,4}"]), "6\n");
    let w = "3|3: 4,2,0;0,-2,-4";
    assert_eq!(stdout(&["mult", w]), "6\n");
}

#[test]
fn covariant_example() {
    let s = stdout(&["covariant", "(2)", "2", "1"]);
    assert!(s.contains("sdim: 1"));
    assert!(s.contains("maximal atypical: true"));
}

#[test]
fn json_round_trips() {
    let moves = stdout(&["moves", "--vees", "{0,2}", "--format", "json"]);
    let e: Vec<MoveExpansion> = serde_json::from_str(&moves).unwrap();
    assert_eq!(e.len(), 2);

    let at = stdout(&["moves", "--vees", "{0,2}", "--at", "2", "--format", "json"]);
    let e: Vec<MoveExpansion> = serde_json::from_str(&at).unwrap();
    assert_eq!(e[0].middle.len(), 3);

    let t: ReductionTrace =
        serde_json::from_str(&stdout(&["reduce", "--vees", "{0,2,4}", "--format", "json"])).unwrap();
    assert_eq!(t.multiplicity, 6u32.into());

    let k: AlgorithmIv =
        serde_json::from_str(&stdout(&["kostant", "--vees", "{0,1,2}", "--format", "json"])).unwrap();
    assert!(k.all_match());

    let x: Vec<ExtProfile> = serde_json::from_str(&stdout(&[
        "extdim", "--block", "2|2: 0,0;0,0", "--jmax", "8", "--format", "json",
    ]))
    .unwrap();
    let dims: Vec<u64> = x.iter().map(|e| e.dimension).collect();
    assert_eq!(dims, vec![1, 0, 1, 0, 2, 0, 2, 0, 3]);

    let c: CupDiagram =
        serde_json::from_str(&stdout(&["render", "--vees", "{0,2}", "--format", "json"])).unwrap();
    assert_eq!(c.sectors, vec![(0, 1), (2, 3)]);
}

#[test]
fn trace_streams_json_lines() {
    let s = stdout(&["reduce", "--vees", "{0,2,4}", "--trace"]);
    let lines: Vec<&str> = s.lines().collect();
    assert!(lines.len() >= 2);
    for line in &lines[..lines.len() - 1] {
        let _: TraceStep = serde_json::from_str(line).unwrap();
    }
    let last: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(last["m"], "6");
}

#[test]
fn verify_suites() {
    for (suite, bound) in [("relations", "3"), ("identities", "20"), ("hilbert", "3")] {
        let s = stdout(&["verify", suite, "--bound", bound]);
        assert!(s.starts_with("PASS"), "{s}");
    }
    let json = stdout(&["verify", "oracle-vs-closed", "--format", "json"]);
    let r: SuiteReport = serde_json::from_str(&json).unwrap();
    assert!(r.passed());
}

#[test]
fn render_shapes() {
    let nested = stdout(&["render", "--vees", "{0,1}"]);
    assert!(nested.contains("\\__/"));
    assert!(nested.contains("sectors: [0,3]"));

    let side = stdout(&["render", "--vees", "{0,2}"]);
    assert_eq!(side.matches("\\__/").count(), 2);
    assert!(side.contains("segments: [0,3]"));

    let standard = stdout(&["render", "3|1: 1,0,0;0"]);
    assert_eq!(standard.matches('x').count(), 2);
    assert_eq!(standard.matches('\\').count(), 1);

    let svg = stdout(&["render", "3|1: 1,0,0;0", "--format", "svg"]);
    assert!(svg.starts_with("<svg ") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<svg").count(), 1);
    assert_eq!(svg.matches("<path").count(), 1);
}

#[test]
fn deterministic_output() {
    for args in [
        &["reduce", "--vees", "{0,3,5,9}", "--format", "json"][..],
        &["verify", "covariant", "--bound", "5", "--format", "json"][..],
        &["render", "--vees", "{0,1,4}", "--format", "svg"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn exit_codes() {
    let parse = run(&["info", "2|2: 0,x;0,0"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("byte 7"));

    let domain = run(&["mult", "1|1: 1;0"]);
    assert_eq!(domain.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&domain.stderr).contains("maximal atypical"));

    assert_eq!(run(&["kostant", "--vees", "{0,2}"]).status.code(), Some(1));
    assert_eq!(run(&["moves", "--vees", "{0,1}", "--at", "0"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "relations", "--bound", "99"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}
