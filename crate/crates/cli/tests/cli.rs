//! End-to-end tests of the `plandist` binary: documented examples, the
//! family → params round trip, format plumbing, exit codes, determinism,
//! and checkpointed sweeps.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn plandist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plandist"))
        .args(args)
        .output()
        .expect("binary launches")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process exits normally")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(&stdout_of(out)).expect("stdout is JSON")
}

#[test]
fn params_on_t11_reports_the_closed_forms() {
    let out = plandist(&["params", "--family", "T", "--n", "11", "--format", "json"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let json = json_of(&out);
    assert_eq!(json["radius"], 2);
    assert_eq!(json["diameter"], 4);
    assert_eq!((json["proximity"]["num"].as_i64(), json["proximity"]["den"].as_i64()), (Some(6), Some(5)));
    assert_eq!((json["remoteness"]["num"].as_i64(), json["remoteness"]["den"].as_i64()), (Some(11), Some(5)));
    assert_eq!(json["n"], 11);
    assert_eq!(json["m"], 27);
    // Connectivity is part of every parameter report.
    assert_eq!(json["kappa"], 3);
}

#[test]
fn check_on_k4_is_clean_and_exits_zero() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("k4.g6");
    std::fs::write(&path, "C~\n").expect("write k4");
    let out = plandist(&["check", "--in", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let json = json_of(&out);
    assert_eq!(json["graph6"], "C~");
    let bounds = json["bounds"].as_array().expect("bounds array");
    assert!(!bounds.is_empty());
    assert!(bounds.iter().all(|b| b["verdict"] != "VIOLATION"));
}

#[test]
fn sweep_emits_csv_and_exits_zero() {
    let out = plandist(&[
        "sweep",
        "--class",
        "maximal_outerplanar",
        "--n-max",
        "8",
        "--format",
        "csv",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    let header = lines.next().expect("header row");
    assert!(header.starts_with("class,n,members,id,quantity,quarantined"));
    assert!(text.contains("maximal_outerplanar,8,"));
    // The n = 8 extremal member certifies THM5.1 with equality.
    let thm51 = lines
        .clone()
        .find(|l| l.starts_with("maximal_outerplanar,8,") && l.contains(",THM5.1,"))
        .expect("THM5.1 row at n = 8");
    assert!(thm51.contains(",1,1,"), "max computed should be 1/1: {thm51}");
}

/// The round-trip invariant: `family --format g6` fed back into `params`
/// reproduces every recorded closed form (or, for known-discrepancy fields,
/// the directly computed value stored next to the recorded one).
#[test]
fn family_g6_round_trips_through_params() {
    let specs: &[&[&str]] = &[
        &["--family", "T", "--n", "11"],
        &["--family", "T", "--n", "17"],
        &["--family", "Q", "--n", "8"],
        &["--family", "Q", "--n", "12"],
        &["--family", "MOP", "--n", "8"],
        &["--family", "MOP", "--n", "12"],
        &["--family", "Gnk", "--n", "12", "--kappa", "2"],
        &["--family", "Gnk", "--n", "9", "--kappa", "1"],
        &["--family", "GnkBar", "--n", "12", "--kappa", "2"],
        &["--family", "DiamExtremal", "--n", "14", "--kappa", "2", "--d", "4"],
        &["--family", "DiamExtremal", "--n", "11", "--kappa", "3", "--d", "3"],
    ];
    for spec in specs {
        let mut family_args = vec!["family"];
        family_args.extend_from_slice(spec);
        family_args.extend_from_slice(&["--format", "json"]);
        let fam = plandist(&family_args);
        assert_eq!(exit_code(&fam), 0, "family {spec:?}: {}", stderr_of(&fam));
        let fam_json = json_of(&fam);
        let g6 = fam_json["graph6"].as_str().expect("graph6 field");

        let par = plandist(&["params", "--g6", g6, "--format", "json"]);
        assert_eq!(exit_code(&par), 0, "params {spec:?}: {}", stderr_of(&par));
        let par_json = json_of(&par);

        let forms = fam_json["closed_forms"].as_object().expect("closed_forms");
        for (key, form) in forms {
            // Known-discrepancy forms carry the trustworthy value separately.
            let expected = if form["provenance"] == "asserted" {
                &form["value"]
            } else {
                assert!(form["computed"].is_object(), "{spec:?}/{key} lacks computed");
                &form["computed"]
            };
            let (num, den) = (
                expected["num"].as_i64().expect("num"),
                expected["den"].as_i64().expect("den"),
            );
            match key.as_str() {
                "rad" => assert_eq!((par_json["radius"].as_i64().unwrap(), 1), (num, den), "{spec:?} rad"),
                "diam" => assert_eq!((par_json["diameter"].as_i64().unwrap(), 1), (num, den), "{spec:?} diam"),
                "pi" => assert_eq!(
                    (par_json["proximity"]["num"].as_i64().unwrap(), par_json["proximity"]["den"].as_i64().unwrap()),
                    (num, den),
                    "{spec:?} pi"
                ),
                "rho" => assert_eq!(
                    (par_json["remoteness"]["num"].as_i64().unwrap(), par_json["remoteness"]["den"].as_i64().unwrap()),
                    (num, den),
                    "{spec:?} rho"
                ),
                other => panic!("unexpected closed-form key {other}"),
            }
        }
    }
}

#[test]
fn params_reads_a_graph_from_stdin() {
    let fam = plandist(&["family", "--family", "MOP", "--n", "8"]);
    assert_eq!(exit_code(&fam), 0);
    let g6_line = stdout_of(&fam);

    let mut child = Command::new(env!("CARGO_BIN_EXE_plandist"))
        .args(["params", "--in", "-", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary launches");
    child
        .stdin
        .as_mut()
        .expect("stdin handle")
        .write_all(g6_line.as_bytes())
        .expect("write stdin");
    let out = child.wait_with_output().expect("process finishes");
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let json = json_of(&out);
    assert_eq!(json["radius"], 2);
    assert_eq!(json["diameter"], 4);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "sweep",
        "--class",
        "quadrangulation",
        "--n-max",
        "7",
        "--format",
        "json",
    ];
    let first = plandist(&args);
    let second = plandist(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let args = ["params", "--family", "T", "--n", "11", "--format", "json"];
    let first = plandist(&args);
    let second = plandist(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn seeded_random_sweeps_are_reproducible() {
    let args = [
        "sweep",
        "--class",
        "random_connected",
        "--n-max",
        "8",
        "--seed",
        "11",
        "--samples",
        "70",
        "--format",
        "json",
    ];
    let first = plandist(&args);
    assert_eq!(exit_code(&first), 0, "stderr: {}", stderr_of(&first));
    let second = plandist(&args);
    assert_eq!(first.stdout, second.stdout);
    let json = json_of(&first);
    assert_eq!(json["seed"], 11);
    assert_eq!(json["total_count"], 70);
}

#[test]
fn usage_errors_exit_one_and_name_the_field() {
    // No input source at all.
    let out = plandist(&["params"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("--in, --g6, --family"));

    // Malformed graph6.
    let out = plandist(&["params", "--g6", "C!"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("--g6"), "stderr: {}", stderr_of(&out));

    // Inadmissible family order.
    let out = plandist(&["family", "--family", "T", "--n", "12"]);
    assert_eq!(exit_code(&out), 1);
    let msg = stderr_of(&out);
    assert!(msg.contains("--family") && msg.contains("n ≡ 5 (mod 6)"), "stderr: {msg}");

    // A parameter the family does not take.
    let out = plandist(&["family", "--family", "MOP", "--n", "8", "--d", "3"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("does not take parameter d"));

    // Family parameters without --family.
    let out = plandist(&["params", "--g6", "C~", "--n", "4"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("--n is only valid together with --family"));

    // Unreadable input path.
    let out = plandist(&["params", "--in", "/nonexistent/x.g6"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("--in /nonexistent/x.g6"));

    // Random graphs are not a finite catalog.
    let out = plandist(&["enumerate", "--class", "random_connected", "--n", "5"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("--class"));

    // Out-of-range sweep order.
    let out = plandist(&["sweep", "--class", "maximal_planar", "--n-max", "99"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("out of range"));

    // A format the command cannot emit.
    let out = plandist(&["check", "--g6", "C~", "--format", "g6"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("--format g6 is not valid for check"));

    // Disconnected input.
    let out = plandist(&["params", "--g6", "A?"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr_of(&out).contains("disconnected"));
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("report.json");
    let to_stdout = plandist(&["check", "--g6", "C~", "--format", "json"]);
    let to_file = plandist(&[
        "check",
        "--g6",
        "C~",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&to_file), 0);
    assert!(stdout_of(&to_file).is_empty());
    let written = std::fs::read(&path).expect("artifact written");
    assert_eq!(written, to_stdout.stdout);
}

#[test]
fn enumerate_streams_canonically_sorted_graph6() {
    let out = plandist(&["enumerate", "--class", "maximal_planar", "--n", "6"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let codes: Vec<&str> = text.lines().collect();
    assert_eq!(codes.len(), 2, "two triangulations of order 6");
    let mut sorted = codes.clone();
    sorted.sort_unstable();
    assert_eq!(codes, sorted, "stream is in canonical-code order");
    for code in codes {
        let g = plandist_core_decode(code);
        assert_eq!(plandist::canon::canonical_code(&g).0, code, "stream is self-canonical");
    }

    let out = plandist(&["enumerate", "--class", "quadrangulation", "--n", "8", "--format", "json"]);
    let json = json_of(&out);
    assert_eq!(json["count"], 9);
    assert_eq!(json["graphs"].as_array().unwrap().len(), 9);
}

fn plandist_core_decode(code: &str) -> plandist::Graph {
    plandist::graph6::decode(code).expect("stream lines are valid graph6")
}

#[test]
fn lemmas_reports_checked_and_skipped_statements() {
    let out = plandist(&["lemmas", "--family", "MOP", "--n", "8", "--format", "json"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_of(&out));
    let json = json_of(&out);
    let rows = json["lemmas"].as_array().expect("lemmas array");
    assert_eq!(rows.len(), 5);
    let by_name = |name: &str| {
        rows.iter()
            .find(|r| r["lemma"] == name)
            .unwrap_or_else(|| panic!("row for {name}"))
    };
    let l33 = by_name("L3.3");
    assert_eq!(l33["outcome"], "checked");
    assert!(l33["pairs"].as_u64().expect("pairs") > 0);
    assert_eq!(l33["failures"].as_array().expect("failures").len(), 0);
    let l31a = by_name("L3.1a");
    assert_eq!(l31a["outcome"], "skipped");
    assert!(l31a["reason"].as_str().expect("reason").contains("3-connected"));

    // An icosahedron-order triangulation checks L3.1a outright.
    let out = plandist(&["lemmas", "--family", "T", "--n", "11", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let json = json_of(&out);
    let l31a = json["lemmas"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["lemma"] == "L3.1a")
        .expect("L3.1a row")
        .clone();
    assert_eq!(l31a["outcome"], "checked");
    assert_eq!(l31a["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn checkpointed_sweeps_resume_to_identical_reports() {
    let dir = tempfile::tempdir().expect("tempdir");
    let ckpt = dir.path().join("sweep.ckpt.json");
    let args = |resume: &str| {
        vec![
            "sweep".to_string(),
            "--class".into(),
            "maximal_outerplanar".into(),
            "--n-max".into(),
            "9".into(),
            "--format".into(),
            "json".into(),
            "--resume".into(),
            resume.to_string(),
        ]
    };
    let first_args: Vec<String> = args(ckpt.to_str().unwrap());
    let first = Command::new(env!("CARGO_BIN_EXE_plandist"))
        .args(&first_args)
        .output()
        .expect("binary launches");
    assert_eq!(exit_code(&first), 0, "stderr: {}", stderr_of(&first));
    assert!(ckpt.exists(), "checkpoint file is written");

    // Re-running against the finished checkpoint recomputes nothing and
    // reproduces the report byte for byte.
    let second = Command::new(env!("CARGO_BIN_EXE_plandist"))
        .args(&first_args)
        .output()
        .expect("binary launches");
    assert_eq!(exit_code(&second), 0);
    assert_eq!(first.stdout, second.stdout);

    // A conflicting resume target is a usage error, not silent reuse.
    let mismatch = plandist(&[
        "sweep",
        "--class",
        "maximal_outerplanar",
        "--n-max",
        "8",
        "--resume",
        ckpt.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&mismatch), 1);
    assert!(stderr_of(&mismatch).contains("checkpoint"));
}

#[test]
fn classify_surfaces_flags_and_connectivity() {
    let out = plandist(&["classify", "--family", "Q", "--n", "8", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let json = json_of(&out);
    assert_eq!(json["flags"]["quadrangulation"], true);
    assert_eq!(json["flags"]["bipartite"], true);
    assert_eq!(json["flags"]["maximal_planar"], false);
    assert_eq!(json["kappa"], 2);

    let out = plandist(&["classify", "--g6", "C~", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("graph6,n,m,kappa,planar,outerplanar,bipartite,maximal_planar,quadrangulation,maximal_outerplanar")
    );
    assert_eq!(lines.next(), Some("C~,4,6,3,true,false,false,true,false,false"));
}
