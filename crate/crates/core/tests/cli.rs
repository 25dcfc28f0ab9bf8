use std::path::PathBuf;

use order_chain::cli::{execute, format_poset_file, Outcome};
use order_chain::fixtures::{
    bowtie_tower_partition, diamond_half_integral, diamond_integral, forked_chain, forked_chain_large, x_poset,
};
use order_chain::geometry::{format_rational, parse_rational};
use order_chain::partition::EdgePartition;
use order_chain::Poset;

fn scratch(name: &str, contents: &str) -> String {
    let dir: PathBuf = std::env::temp_dir().join(format!("order-chain-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

fn file_for(name: &str, l: &EdgePartition) -> String {
    scratch(name, &format_poset_file(l))
}

fn run(args: &[&str]) -> Outcome {
    let mut argv = vec!["ocpoly"];
    argv.extend_from_slice(args);
    execute(argv)
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn volume_of_forked_chain() {
    let f = file_for("fork.poset", &forked_chain_large());
    let out = run(&["volume", "--input", &f]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.lines().next().unwrap().ends_with("5/24"), "{}", out.stdout);
    assert_eq!(json(&["volume", "--input", &f])["volume"], "5/24");
    assert_eq!(json(&["volume", "--input", &f])["normalized_volume"], "5/1");
}

#[test]
fn integrality_with_witness() {
    let half = file_for("diamond_half.poset", &diamond_half_integral());
    let v = json(&["integral", "--input", &half]);
    assert_eq!(v["integral"], false);
    assert_eq!(v["witness"], serde_json::json!(["1/2", "1/2", "1/2", "1/2"]));
    assert!(run(&["integral", "--input", &half]).stdout.contains("(1/2, 1/2, 1/2, 1/2)"));
    let whole = file_for("diamond_whole.poset", &diamond_integral());
    assert_eq!(json(&["integral", "--input", &whole])["integral"], true);
}

#[test]
fn invariants_of_bowtie() {
    let f = file_for("bowtie.poset", &bowtie_tower_partition(6).unwrap());
    let v = json(&["invariants", "--input", &f]);
    assert_eq!(v["vertex_count"], 10);
    assert_eq!(v["facet_count"], 13);
    assert_eq!(v["facets"], 13);
    assert_eq!(v["d"], 6);
    assert_eq!(v["integral"], true);
    let keys: Vec<&String> = v["lattice_counts"].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["1", "2", "3"]);
    assert_eq!(v["lattice_counts"]["1"], 10);
    let five = json(&["invariants", "--input", &f, "--dilations", "5"]);
    assert_eq!(five["lattice_counts"].as_object().unwrap().len(), 5);
}

#[test]
fn json_rationals_round_trip() {
    let f = file_for("diamond_half2.poset", &diamond_half_integral());
    let v = json(&["vertices", "--input", &f]);
    let rows: Vec<Vec<String>> = serde_json::from_value(v["vertices"].clone()).unwrap();
    let parsed: Vec<Vec<_>> = rows.iter().map(|r| r.iter().map(|s| parse_rational(s).unwrap()).collect()).collect();
    for (row, values) in rows.iter().zip(&parsed) {
        for (s, r) in row.iter().zip(values) {
            assert!(s.contains('/'));
            assert_eq!(&format_rational(r), s);
        }
    }
    let mut sorted = parsed.clone();
    sorted.sort();
    assert_eq!(sorted, parsed);
    assert_eq!(v["vertex_count"], rows.len());
}

#[test]
fn hrep_and_facets() {
    let f = file_for("fork2.poset", &forked_chain_large());
    let out = run(&["hrep", "--input", &f]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("-x1 + x2 <= 0"));
    assert!(out.stdout.contains("x3 + x4 <= 1"));
    let v = json(&["facets", "--input", &f]);
    assert_eq!(v["facet_count"], v["facets"].as_array().unwrap().len());
}

#[test]
fn equivalence_verdicts() {
    let order = file_for("fork_o.poset", &EdgePartition::all_order(&forked_chain()));
    let chain = file_for("fork_c.poset", &EdgePartition::all_chain(&forked_chain()));
    let v = json(&["equiv", &order, &chain]);
    assert_eq!(v["verdict"], "equivalent");
    assert!(v["map"]["description"].as_str().unwrap().starts_with("x'1 ="));
    let xo = file_for("x_o.poset", &EdgePartition::all_order(&x_poset()));
    let xc = file_for("x_c.poset", &EdgePartition::all_chain(&x_poset()));
    assert_eq!(json(&["equiv", &xo, &xc])["verdict"], "distinct");
}

#[test]
fn partition_search_and_descent_max() {
    let chain = file_for("chain6.poset", &EdgePartition::all_order(&Poset::chain(6).unwrap()));
    let v = json(&["search-partitions", "--input", &chain]);
    assert_eq!(v["partitions_checked"], 32);
    let alternating = serde_json::json!([[1, 2], [3, 4], [5, 6]]);
    assert!(v["argmax"].as_array().unwrap().contains(&alternating), "{v}");
    assert_eq!(json(&["descent-max", "4"])["max_beta"], 3);
    assert_eq!(json(&["descent-max", "5"])["max_beta"], 11);
}

#[test]
fn verify_suites_report_per_assertion() {
    let out = run(&["verify", "fibonacci-family"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.lines().all(|l| l.starts_with("PASS")));
    let v = json(&["verify", "descent-max"]);
    assert_eq!(v["passed"], true);
    assert!(v["assertions"].as_array().unwrap().iter().all(|a| a["passed"] == true));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["volume"]).code, 2);
    assert_eq!(run(&["verify", "no-such-suite"]).code, 2);
    assert_eq!(run(&["volume", "--input", "/nonexistent/file.poset"]).code, 2);
    assert_eq!(run(&["volume", "--format", "xml", "--input", "x"]).code, 2);

    let conflict = scratch("conflict.poset", "poset 3\ncover 1 2\ncover 2 3\npartition o 2 3\npartition c 2 3\n");
    let out = run(&["volume", "--input", &conflict]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("assigned more than once"));
    let bad = scratch("bad.poset", "poset 2\ncover 1 two\n");
    let out = run(&["hrep", "--input", &bad]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 2"));
    let cyclic = scratch("cyclic.poset", "poset 2\ncover 1 2\ncover 2 1\n");
    assert_eq!(run(&["hrep", "--input", &cyclic]).code, 1);
    assert_eq!(run(&["descent-max", "40"]).code, 1);
}

#[test]
fn cap_bounds_lattice_work() {
    let f = file_for("fork3.poset", &forked_chain_large());
    let out = run(&["invariants", "--input", &f, "--cap", "10"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("cap"));
    assert_eq!(run(&["invariants", "--input", &f, "--cap", "1000"]).code, 0);
}
