//! End-to-end checks of the command surface: output shapes, exit
//! codes (0 success, 1 usage, 2 data), and file side effects.

mod support;

use support::*;

fn write_fixture(dir: &std::path::Path, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn solve_reports_matching_and_reward() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "square.uhg", RISKY_SQUARE_FILE);
    let out = run_bin_ok(&[
        "solve",
        "--input",
        path_str(&input),
        "--risk-bound",
        "100",
        "--matcher",
        "exact",
    ]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("matching: 0 1"), "stdout:\n{stdout}");
    assert!(stdout.contains("reward: 100"));
    assert!(stdout.contains("risk: 100"));
    assert!(stdout.contains("ell_star: 4"));
}

#[test]
fn solve_writes_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "square.uhg", RISKY_SQUARE_FILE);
    let report = dir.path().join("out.json");
    run_bin_ok(&[
        "solve",
        "--input",
        path_str(&input),
        "--risk-bound",
        "50",
        "--matcher",
        "exact",
        "--output",
        path_str(&report),
    ]);
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(value["reward"], 80.0);
    assert_eq!(value["risk"], 0.0);
    assert_eq!(value["edge_ids"], serde_json::json!([2, 3]));
    assert_eq!(value["fallback_used"], false);
}

#[test]
fn solve_normalized_budget_matches_absolute() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "square.uhg", RISKY_SQUARE_FILE);
    // B_max = 100, so a normalized budget of 0.5 equals B = 50.
    let out = run_bin_ok(&[
        "solve",
        "--input",
        path_str(&input),
        "--normalized-risk",
        "0.5",
        "--matcher",
        "exact",
    ]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("reward: 80"), "stdout:\n{stdout}");
}

#[test]
fn usage_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "square.uhg", RISKY_SQUARE_FILE);
    let both = run_bin(&[
        "solve",
        "--input",
        path_str(&input),
        "--risk-bound",
        "1",
        "--normalized-risk",
        "0.5",
    ]);
    assert_eq!(both.status.code(), Some(1));
    let neither = run_bin(&["solve", "--input", path_str(&input)]);
    assert_eq!(neither.status.code(), Some(1));
    let bad_measure = run_bin(&[
        "solve",
        "--input",
        path_str(&input),
        "--risk-bound",
        "1",
        "--measure",
        "stdev",
    ]);
    assert_eq!(bad_measure.status.code(), Some(1));
    let unknown_flag = run_bin(&["solve", "--frobnicate"]);
    assert_eq!(unknown_flag.status.code(), Some(1));
    let bad_sampler = run_bin(&[
        "gen",
        "--model",
        "gnp",
        "--n",
        "5",
        "--p",
        "0.5",
        "--probs",
        "uniform:0:2",
        "--seed",
        "1",
        "--output",
        path_str(&dir.path().join("x.uhg")),
    ]);
    assert_eq!(bad_sampler.status.code(), Some(1));
    let missing_p = run_bin(&[
        "gen",
        "--model",
        "gnp",
        "--n",
        "5",
        "--output",
        path_str(&dir.path().join("x.uhg")),
    ]);
    assert_eq!(missing_p.status.code(), Some(1));
}

#[test]
fn data_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = run_bin(&["solve", "--input", "/nonexistent/g.uhg", "--risk-bound", "1"]);
    assert_eq!(missing.status.code(), Some(2));
    let stderr = String::from_utf8(missing.stderr).unwrap();
    assert!(stderr.contains("/nonexistent/g.uhg"), "stderr:\n{stderr}");

    let malformed = write_fixture(dir.path(), "bad.uhg", "uhg 1 2 1\nbern 1.5 40 0 0\n");
    let parse = run_bin(&["solve", "--input", path_str(&malformed), "--risk-bound", "1"]);
    assert_eq!(parse.status.code(), Some(2));
    let stderr = String::from_utf8(parse.stderr).unwrap();
    assert!(stderr.contains("line 2"), "stderr:\n{stderr}");

    // Exact engine on a rank-3 hyperedge is a data mismatch.
    let hyper = write_fixture(dir.path(), "hyper.uhg", "uhg 1 3 1\nmom 5 1 0 1 2\n");
    let exact = run_bin(&[
        "solve",
        "--input",
        path_str(&hyper),
        "--risk-bound",
        "10",
        "--matcher",
        "exact",
    ]);
    assert_eq!(exact.status.code(), Some(2));
}

#[test]
fn oracle_matches_fixture_and_refuses_big_instances() {
    let dir = tempfile::tempdir().unwrap();
    let annotated = write_fixture(dir.path(), "annotated.uhg", ANNOTATED_SQUARE_FILE);
    let out = run_bin_ok(&["oracle", "--input", path_str(&annotated), "--risk-bound", "0.45"]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("opt_reward: 2"), "stdout:\n{stdout}");

    // Without a budget the square's risky pair wins outright.
    let square = write_fixture(dir.path(), "square.uhg", RISKY_SQUARE_FILE);
    let unbounded = run_bin_ok(&["oracle", "--input", path_str(&square)]);
    let stdout = String::from_utf8(unbounded.stdout).unwrap();
    assert!(stdout.contains("opt_reward: 100"), "stdout:\n{stdout}");
    let bounded = run_bin_ok(&["oracle", "--input", path_str(&square), "--risk-bound", "99"]);
    let stdout = String::from_utf8(bounded.stdout).unwrap();
    assert!(stdout.contains("opt_reward: 80"), "stdout:\n{stdout}");

    let graph = dir.path().join("big.uhg");
    run_bin_ok(&[
        "gen", "--model", "gnp", "--n", "40", "--p", "0.2", "--seed", "3", "--output",
        path_str(&graph),
    ]);
    let refused = run_bin(&["oracle", "--input", path_str(&graph)]);
    assert_eq!(refused.status.code(), Some(2));
    let stderr = String::from_utf8(refused.stderr).unwrap();
    assert!(stderr.contains("enumeration cap"), "stderr:\n{stderr}");
}

#[test]
fn gen_is_deterministic_per_seed_and_model() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.uhg");
    let b = dir.path().join("b.uhg");
    let c = dir.path().join("c.uhg");
    for (path, seed) in [(&a, "7"), (&b, "7"), (&c, "8")] {
        run_bin_ok(&[
            "gen",
            "--model",
            "gnp",
            "--n",
            "100",
            "--p",
            "0.1",
            "--weights",
            "uniform:0:1000",
            "--probs",
            "uniform:0:1",
            "--seed",
            seed,
            "--output",
            path_str(path),
        ]);
    }
    let bytes_a = std::fs::read(&a).unwrap();
    assert_eq!(bytes_a, std::fs::read(&b).unwrap());
    assert_ne!(bytes_a, std::fs::read(&c).unwrap());
}

#[test]
fn gen_gaussian_graph_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.uhg");
    run_bin_ok(&[
        "gen",
        "--model",
        "ba",
        "--n",
        "50",
        "--m-attach",
        "3",
        "--dist",
        "gaussian",
        "--means",
        "gauss:100:16.7",
        "--vars",
        "uniform:0:100",
        "--seed",
        "12",
        "--output",
        path_str(&path),
    ]);
    let text = std::fs::read_to_string(&path).unwrap();
    let h = riskmatch::ingest::parse_hypergraph_str(&text).unwrap();
    assert_eq!(h.node_count(), 50);
    assert!(h.validate().is_empty());
    assert!(text.lines().skip(1).all(|l| l.starts_with("gauss ")));
}

#[test]
fn sweep_rejects_zero_steps_and_respects_grid_size() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(dir.path(), "square.uhg", RISKY_SQUARE_FILE);
    let csv = dir.path().join("out.csv");
    let bad = run_bin(&[
        "sweep",
        "--input",
        path_str(&input),
        "--output",
        path_str(&csv),
        "--grid-steps",
        "0",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    run_bin_ok(&[
        "sweep",
        "--input",
        path_str(&input),
        "--output",
        path_str(&csv),
        "--grid-steps",
        "4",
        "--matcher",
        "exact",
        "--omit-timing",
    ]);
    let table = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(
        lines[0],
        "b_n,b,expected_reward,risk,avg_probability,num_edges,ell_star,fallback_used,runtime_ms"
    );
    // Square fixture: rewards 80 at B_n = 0 up to 100 at B_n = 1.
    assert!(lines[1].starts_with("0,0,80,0,1,2,2,false,"));
    assert!(lines[5].starts_with("1,100,100,100,0.5,2,4,false,"));
}

#[test]
fn sweep_on_deterministic_graph_is_flat() {
    // Every matching has zero risk, so the budget never binds.
    let dir = tempfile::tempdir().unwrap();
    let input = write_fixture(
        dir.path(),
        "sure.uhg",
        "uhg 1 6 3\nbern 1 10 0 1\nbern 1 7 2 3\nbern 1 4 4 5\n",
    );
    let csv = dir.path().join("out.csv");
    run_bin_ok(&[
        "sweep",
        "--input",
        path_str(&input),
        "--output",
        path_str(&csv),
        "--omit-timing",
    ]);
    let table = std::fs::read_to_string(&csv).unwrap();
    let rewards: Vec<&str> = table
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(rewards.len(), 21);
    assert!(rewards.iter().all(|&r| r == "21"), "rewards varied: {rewards:?}");
}

#[test]
fn sweep_prefers_certain_edges_at_tight_budgets() {
    // On a Bernoulli graph the low-budget end of the sweep picks
    // high-probability edges; the average probability of the chosen
    // edges falls as the budget grows.
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("bern.uhg");
    run_bin_ok(&[
        "gen", "--model", "gnp", "--n", "300", "--p", "0.1", "--seed", "17", "--output",
        path_str(&graph),
    ]);
    let csv = dir.path().join("out.csv");
    run_bin_ok(&[
        "sweep",
        "--input",
        path_str(&graph),
        "--output",
        path_str(&csv),
        "--omit-timing",
    ]);
    let table = std::fs::read_to_string(&csv).unwrap();
    let probs: Vec<f64> = table
        .lines()
        .skip(1)
        .filter_map(|l| l.split(',').nth(4).unwrap().parse().ok())
        .collect();
    assert!(probs.len() >= 10, "expected populated probability rows");
    let first = probs.first().unwrap();
    let last = probs.last().unwrap();
    assert!(
        first > last,
        "average probability should fall as the budget grows: {first} vs {last}"
    );
}

#[test]
fn sweep_leaves_probability_column_empty_for_gaussian_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("gauss.uhg");
    run_bin_ok(&[
        "gen",
        "--model",
        "gnp",
        "--n",
        "40",
        "--p",
        "0.2",
        "--dist",
        "gaussian",
        "--seed",
        "4",
        "--output",
        path_str(&graph),
    ]);
    let csv = dir.path().join("out.csv");
    run_bin_ok(&[
        "sweep",
        "--input",
        path_str(&graph),
        "--output",
        path_str(&csv),
        "--omit-timing",
    ]);
    for line in std::fs::read_to_string(&csv).unwrap().lines().skip(1) {
        let avg_probability = line.split(',').nth(4).unwrap();
        assert_eq!(avg_probability, "", "expected blank column in {line}");
    }
}

#[test]
fn help_exits_zero() {
    let help = run_bin(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    let sub = run_bin(&["sweep", "--help"]);
    assert_eq!(sub.status.code(), Some(0));
}
