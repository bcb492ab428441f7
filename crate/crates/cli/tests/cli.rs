use std::path::Path;
use std::process::Command;

use branchdual::gen::deck;
use branchdual::io;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_branchdual"))
}

fn write_deck(dir: &Path) {
    std::fs::write(dir.join("c3.emb"), io::emit_emb(&deck::cycle(3))).unwrap();
    std::fs::write(dir.join("k4.emb"), io::emit_emb(&deck::complete4())).unwrap();
    std::fs::write(dir.join("k5.emb"), io::emit_emb(&deck::k5_projective())).unwrap();
    let h = branchdual::hypergraph::EmbeddedHypergraph::from_graph(&deck::cycle(4)).unwrap();
    std::fs::write(dir.join("c4.hemb"), io::emit_hemb(&h)).unwrap();
}

#[test]
fn genus_and_bw_queries() {
    let dir = tempfile::tempdir().unwrap();
    write_deck(dir.path());

    let out = bin().arg("genus").arg(dir.path().join("k5.emb")).output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["euler_genus"], 1);
    assert_eq!(v["faces"], 6);

    let out = bin()
        .args(["bw", "--measure", "delta"])
        .arg(dir.path().join("k4.emb"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], 3);

    let out = bin()
        .args(["bw", "--measure", "mu", "--heuristic"])
        .arg(dir.path().join("k4.emb"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["value"].as_u64().unwrap() >= 3);

    let out = bin()
        .args(["bw", "--connected"])
        .arg(dir.path().join("k4.emb"))
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], 3);

    // Hypergraph branchwidth over the hyperedge ground set.
    let out = bin().arg("bw").arg(dir.path().join("c4.hemb")).output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["ground_size"], 4);
}

#[test]
fn dual_of_triangle_is_a_dipole() {
    let dir = tempfile::tempdir().unwrap();
    write_deck(dir.path());
    let out = bin().arg("dual").arg(dir.path().join("c3.emb")).output().unwrap();
    assert!(out.status.success());
    let g = io::parse_emb(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(g.num_vertices(), 2);
    assert_eq!(g.num_edges(), 3);
    assert_eq!(g.euler_genus(), 0);
}

#[test]
fn exact_cap_override_is_respected() {
    let dir = tempfile::tempdir().unwrap();
    write_deck(dir.path());
    let out = bin()
        .arg("bw")
        .arg(dir.path().join("k5.emb"))
        .env("BRANCHDUAL_EXACT_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn verify_campaign_is_deterministic_and_schema_valid() {
    let dir = tempfile::tempdir().unwrap();
    let run = |out: &Path| {
        let status = bin()
            .args([
                "verify",
                "--theorem",
                "1",
                "--seed",
                "7",
                "--count",
                "30",
                "--max-edges",
                "9",
                "--max-genus",
                "1",
                "--jobs",
                "2",
                "--out",
            ])
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success(), "theorem-1 campaign must pass");
    };
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    run(&a);
    run(&b);
    let ra = std::fs::read(a.join("report.json")).unwrap();
    let rb = std::fs::read(b.join("report.json")).unwrap();
    assert_eq!(ra, rb, "identical campaigns must produce identical reports");
    assert!(a.join("instances").read_dir().unwrap().count() >= 30);

    let schema: Value = serde_json::from_str(
        &std::fs::read_to_string(
            Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schema/verification-report.schema.json"),
        )
        .unwrap(),
    )
    .unwrap();
    let reports: Value = serde_json::from_slice(&ra).unwrap();
    for report in reports.as_array().unwrap() {
        validate_against_schema(report, &schema);
    }
}

#[test]
fn lemma_campaign_via_cli() {
    let dir = tempfile::tempdir().unwrap();
    let status = bin()
        .args([
            "verify",
            "--lemma",
            "contract",
            "--lemma",
            "no-bridge-dual",
            "--seed",
            "3",
            "--count",
            "40",
            "--max-edges",
            "8",
            "--max-genus",
            "2",
            "--format",
            "csv",
            "--out",
        ])
        .arg(dir.path().join("camp"))
        .status()
        .unwrap();
    assert!(status.success());
    let csv = std::fs::read_to_string(dir.path().join("camp/report.csv")).unwrap();
    assert!(csv.lines().count() >= 81); // header + 2 * 40 checks
    assert!(csv.starts_with("check,seed,instance,pass"));
}

#[test]
fn bad_arguments_exit_with_two() {
    let out = bin().args(["verify", "--lemma", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["bw", "/definitely/missing.emb"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

/// Minimal draft-07 subset validator: required fields, per-property types,
/// and the additionalProperties: false contract.
fn validate_against_schema(value: &Value, schema: &Value) {
    let obj = value.as_object().expect("report must be an object");
    for req in schema["required"].as_array().unwrap() {
        assert!(
            obj.contains_key(req.as_str().unwrap()),
            "missing required field {req}"
        );
    }
    let props = schema["properties"].as_object().unwrap();
    for (key, val) in obj {
        let prop = props.get(key).unwrap_or_else(|| {
            panic!("unexpected field {key} (additionalProperties is false)")
        });
        let ty = prop["type"].as_str().unwrap();
        let ok = match ty {
            "string" => val.is_string(),
            "integer" => val.is_u64() || val.is_i64(),
            "boolean" => val.is_boolean(),
            "object" => val.is_object(),
            other => panic!("unhandled schema type {other}"),
        };
        assert!(ok, "field {key} has wrong type: expected {ty}, got {val}");
    }
}
