//! End-to-end tests of the dft-verify binary: exit codes, record
//! schemas, ordering, determinism and the documented flag surface.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dft-verify"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("bad JSON line '{l}': {e}")))
        .collect()
}

#[test]
fn rejects_degenerate_dimension_with_exit_2() {
    let out = run(&["verify", "--n", "2", "--relations", "all"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("N must be >= 3"));
}

#[test]
fn rejects_unknown_relation_with_exit_2() {
    let out = run(&["verify", "--n", "5", "--relations", "frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown relation id"));
}

#[test]
fn aw3_both_backends_passes_with_six_records() {
    let out = run(&[
        "verify",
        "--n",
        "5",
        "--relations",
        "aw3",
        "--backend",
        "both",
        "--no-timestamps",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 6);
    for rec in &lines {
        assert_eq!(rec["n"], 5);
        let kind = rec["verdict"]["kind"].as_str().unwrap();
        assert!(kind == "exact_zero" || kind == "residual_norm", "{rec}");
        assert!(rec["relation_id"].as_str().unwrap().starts_with("aw3_"));
        assert!(
            rec.get("elapsed_ms").is_none(),
            "timestamps were not suppressed"
        );
    }
    // exact records precede float ones for the same (n, relation)
    assert_eq!(lines[0]["backend"], "exact");
    assert_eq!(lines[1]["backend"], "float");
}

#[test]
fn full_exact_sweep_3_to_9_reports_n4_degeneracies() {
    let out = run(&[
        "verify",
        "--n",
        "3..9",
        "--relations",
        "all",
        "--backend",
        "exact",
        "--no-timestamps",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let lines = stdout_lines(&out);
    assert!(lines.iter().all(|r| r["backend"] == "exact"));

    let degenerate_at_4: Vec<&str> = lines
        .iter()
        .filter(|r| r["n"] == 4 && r["verdict"]["kind"] == "degenerate")
        .map(|r| r["relation_id"].as_str().unwrap())
        .collect();
    for id in [
        "cubic_comm_a",
        "cubic_comm_at",
        "jacobi_left",
        "jacobi_right",
        "jacobi_sum",
        "q1_comm_a",
        "q1_comm_at",
        "q_heun_comm_x",
        "q_heun_comm_w",
        "q_heun_scalar",
    ] {
        assert!(
            degenerate_at_4.contains(&id),
            "{id} should be degenerate at N = 4"
        );
    }
    // nothing else is degenerate, and nothing fails
    for rec in &lines {
        let kind = rec["verdict"]["kind"].as_str().unwrap();
        assert_ne!(kind, "failed", "{rec}");
        if kind == "degenerate" {
            assert_eq!(rec["n"], 4, "{rec}");
        }
    }
    // kernel dimension records are exact zeros at every N
    let kernel: Vec<_> = lines
        .iter()
        .filter(|r| r["relation_id"] == "kernel_dim")
        .collect();
    assert_eq!(kernel.len(), 7);
    assert!(kernel.iter().all(|r| r["verdict"]["kind"] == "exact_zero"));

    // records are sorted by (n, relation_id)
    let keys: Vec<(u64, String)> = lines
        .iter()
        .map(|r| {
            (
                r["n"].as_u64().unwrap(),
                r["relation_id"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted, "records not ordered by (n, relation_id)");
}

#[test]
fn identical_config_and_seed_give_byte_identical_output() {
    let args = [
        "verify",
        "--n",
        "3..6",
        "--relations",
        "inter,heun",
        "--backend",
        "both",
        "--seed",
        "42",
        "--no-timestamps",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    // a different seed changes the random intertwiner draw but not verdicts
    let third = run(&[
        "verify",
        "--n",
        "3..6",
        "--relations",
        "inter,heun",
        "--backend",
        "both",
        "--seed",
        "43",
        "--no-timestamps",
    ]);
    assert_eq!(third.status.code(), Some(0));
}

#[test]
fn verify_writes_to_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reports.jsonl");
    let out = run(&[
        "verify",
        "--n",
        "5",
        "--relations",
        "qaw3",
        "--backend",
        "exact",
        "--no-timestamps",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let content = std::fs::read_to_string(&path).unwrap();
    assert_eq!(content.lines().count(), 5); // three commutators, hermiticity, scalar form
    for line in content.lines() {
        let rec: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(rec["verdict"]["kind"], "exact_zero");
    }
}

#[test]
fn verify_unwritable_output_exits_3() {
    let out = run(&[
        "verify",
        "--n",
        "5",
        "--relations",
        "aw3",
        "--backend",
        "exact",
        "--out",
        "/nonexistent-dir/reports.jsonl",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn thread_cap_env_is_honored_and_validated() {
    let out = bin()
        .args([
            "verify",
            "--n",
            "3..6",
            "--relations",
            "aw",
            "--backend",
            "both",
            "--no-timestamps",
        ])
        .env("VERIFIER_MAX_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let bad = bin()
        .args(["verify", "--n", "5", "--relations", "aw"])
        .env("VERIFIER_MAX_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn dump_exact_x_matches_diagonal_structure() {
    let out = run(&["dump", "--n", "3", "--ops", "X", "--backend", "exact"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 1);
    let rec = &lines[0];
    assert_eq!(rec["n"], 3);
    assert_eq!(rec["backend"], "exact");
    assert_eq!(rec["operator_id"], "X");
    let entries = rec["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    // off-diagonal entries are zero polynomials; each entry carries the order
    let e01 = &entries[0][1];
    assert_eq!(e01["order"], 12);
    assert!(e01["coeffs"].as_array().unwrap().iter().all(|c| c == "0"));
    // X_00 = 0, X_11 = 2 s_1 nonzero
    assert!(entries[0][0]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c == "0"));
    assert!(entries[1][1]["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c != "0"));
}

#[test]
#[allow(clippy::needless_range_loop)]
fn dump_float_ztilde_is_the_0_1_circulant() {
    let out = run(&["dump", "--n", "4", "--ops", "Ztilde", "--backend", "float"]);
    assert_eq!(out.status.code(), Some(0));
    let rec = &stdout_lines(&out)[0];
    let entries = rec["entries"].as_array().unwrap();
    for r in 0..4usize {
        for c in 0..4usize {
            let expected = if (r + 1) % 4 == c || (c + 1) % 4 == r {
                1.0
            } else {
                0.0
            };
            assert_eq!(entries[r][c]["re"].as_f64().unwrap(), expected, "({r},{c})");
            assert_eq!(entries[r][c]["im"].as_f64().unwrap(), 0.0);
        }
    }
}

#[test]
fn dump_reflection_maps_e2_to_e3_at_n5() {
    let out = run(&["dump", "--n", "5", "--ops", "Pd", "--backend", "float"]);
    let rec = &stdout_lines(&out)[0];
    let entries = rec["entries"].as_array().unwrap();
    assert_eq!(entries[3][2]["re"].as_f64().unwrap(), 1.0);
    assert_eq!(entries[2][3]["re"].as_f64().unwrap(), 1.0);
    assert_eq!(entries[0][0]["re"].as_f64().unwrap(), 1.0);
    assert_eq!(entries[1][2]["re"].as_f64().unwrap(), 0.0);
}

#[test]
fn dump_unknown_operator_exits_2() {
    let out = run(&["dump", "--n", "5", "--ops", "Hamiltonian"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown operator id"));
}

#[test]
fn spectra_reports_rank_of_a_and_isospectral_x_y() {
    let out = run(&["spectra", "--n", "5", "--ops", "A"]);
    assert_eq!(out.status.code(), Some(0));
    let rec = &stdout_lines(&out)[0];
    assert_eq!(rec["rank"], 4);
    assert_eq!(rec["nullity"], 1);
    assert_eq!(rec["backend"], "exact");

    let out = run(&["spectra", "--n", "6", "--ops", "X,Y"]);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 2);
    let flat = |rec: &serde_json::Value| -> Vec<f64> {
        rec["eigenvalues"]
            .as_array()
            .unwrap()
            .iter()
            .flat_map(|c| {
                let v = c["value"].as_f64().unwrap();
                let m = c["multiplicity"].as_u64().unwrap() as usize;
                std::iter::repeat_n(v, m)
            })
            .collect()
    };
    let (xs, ys) = (flat(&lines[0]), flat(&lines[1]));
    assert_eq!(xs.len(), 6);
    for (a, b) in xs.iter().zip(&ys) {
        assert!((a - b).abs() < 1e-10, "X and Y spectra differ");
    }
}

#[test]
fn spectra_z_multiplicity_pattern_at_n8() {
    let out = run(&["spectra", "--n", "8", "--ops", "Z"]);
    let rec = &stdout_lines(&out)[0];
    let mut mults: Vec<u64> = rec["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["multiplicity"].as_u64().unwrap())
        .collect();
    mults.sort_unstable();
    assert_eq!(mults, vec![1, 1, 2, 2, 2]);
}

#[test]
fn spectra_ladder_record_for_n5() {
    let out = run(&["spectra", "--n", "5", "--ops", "ladder"]);
    assert_eq!(out.status.code(), Some(0));
    let rec = &stdout_lines(&out)[0];
    assert_eq!(rec["operator_id"], "ladder");
    assert_eq!(rec["null_dimension"], 1);
    assert_eq!(rec["span_dimension"], 5);
    assert_eq!(rec["all_pd_symmetric"], true);
    assert_eq!(rec["vectors"].as_array().unwrap().len(), 5);
}

#[test]
fn spectra_rejects_non_hermitian_operator() {
    let out = run(&["spectra", "--n", "5", "--ops", "phi"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not Hermitian"));
}
