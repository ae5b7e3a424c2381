use std::process::Command;

use clifftwist::render::ClidataJson;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_clifftwist"))
        .args(args)
        .env("CLIFFTWIST_JOBS", "2")
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn clidata_text() {
    let (out, _, code) = run(&["clidata", "3", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out, "[complex, 2, simple, 1/2 + 1/2*e1, [1, e2, e3, e23], [1, e23], [1, e2]]\n");
    let (out, _, _) = run(&["clidata", "0", "0"]);
    assert_eq!(out, "[real, 1, simple, 1, [1], [1], [1]]\n");
}

#[test]
fn clidata_json_round_trips() {
    for (p, q) in [("1", "2"), ("3", "0"), ("2", "1"), ("1", "4"), ("0", "0"), ("4", "5")] {
        let (out, _, code) = run(&["clidata", p, q, "--format", "json"]);
        assert_eq!(code, 0);
        let parsed: ClidataJson = serde_json::from_str(&out).unwrap();
        assert_eq!(parsed.to_json(), out, "Cl({p},{q})");
        let keys: Vec<String> = serde_json::from_str::<serde_json::Value>(&out)
            .unwrap()
            .as_object()
            .unwrap()
            .keys()
            .cloned()
            .collect();
        let mut expected = vec!["field", "dim", "type", "idempotent", "spinor_basis_R", "k_basis", "spinor_basis_K"];
        expected.sort();
        assert_eq!(keys, expected);
        assert!(out.find("\"field\"").unwrap() < out.find("\"dim\"").unwrap());
        assert!(out.find("\"k_basis\"").unwrap() < out.find("\"spinor_basis_K\"").unwrap());
    }
    let (out, _, _) = run(&["clidata", "1", "2", "--format", "json"]);
    let parsed: ClidataJson = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed.spinor_basis_k, ["1", "e1"]);
}

#[test]
fn groups_listing() {
    let (out, _, code) = run(&["groups", "1", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("G(f)  order 4     {±1, ±e12}"), "{out}");
    let (out, _, _) = run(&["groups", "1", "2"]);
    assert!(out.contains("K(f)  order 4     {±1, ±e2}"), "{out}");
    let (out, _, _) = run(&["groups", "0", "0"]);
    for name in ["G ", "G(f)", "T(f)", "K(f)"] {
        let line = out.lines().find(|l| l.starts_with(name)).unwrap();
        assert!(line.ends_with("{±1}"), "{line}");
    }
}

#[test]
fn verify_exit_codes() {
    let (out, _, code) = run(&["verify", "1", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("Cl(1,2): PASS, 10/10 clauses"), "{out}");
    let (_, err, code) = run(&["verify", "40", "0"]);
    assert_eq!(code, 2);
    assert!(err.contains("exceeds the engine limit"), "{err}");
    let (_, _, code) = run(&["verify", "1"]);
    assert_eq!(code, 2);
    let (out, _, code) = run(&["verify", "--all", "4"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("15/15 signatures passed\n"), "{out}");
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["nonsense"]).2, 2);
    assert_eq!(run(&["clidata", "2", "2", "--signs", "+"]).2, 2);
    assert_eq!(run(&["clidata", "2", "2", "--signs", "+x"]).2, 2);
    assert_eq!(run(&["tables", "3", "--signs", "+"]).2, 2);
    assert_eq!(run(&["tables", "3", "gamma"]).2, 2);
    assert_eq!(run(&["clidata", "1", "2", "--format", "yaml"]).2, 2);
}

#[test]
fn sign_override() {
    let (out, _, code) = run(&["clidata", "2", "2", "--signs", "+-"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("[real, 4, simple, 1/4 + 1/4*e13 - 1/4*e24 "), "{out}");
    let (default, _, _) = run(&["clidata", "2", "2"]);
    assert!(default.starts_with("[real, 4, simple, 1/4 + 1/4*e13 + 1/4*e24 "), "{default}");
}

#[test]
fn large_signature_warns() {
    let (_, err, code) = run(&["clidata", "10", "0"]);
    assert_eq!(code, 0);
    assert!(err.contains("warning"), "{err}");
}

#[test]
fn tables_csv_and_markdown() {
    let (out, _, code) = run(&["tables", "2", "tp", "--format", "csv"]);
    assert_eq!(code, 0);
    let expected = "\
p,q,k,N,KClass,group,coincides_with
0,0,0,1,R,O(1),beta+;beta-
0,1,0,1,C,U(1),beta-
1,0,1,1,2R,²O(1),beta+
0,2,0,1,H,Sp(1),beta-
1,1,1,2,R,O(2),
2,0,1,2,R,O(2),beta+
";
    assert_eq!(out, expected);

    let (out, _, _) = run(&["tables", "2", "--format", "markdown"]);
    let real = out.split("## ").find(|s| s.starts_with("Simple, K = ℝ")).unwrap();
    let rows: Vec<&str> = real.lines().filter(|l| l.starts_with("| (") && !l.starts_with("| (p")).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("| (0,0) |") && rows[1].starts_with("| (1,1) |") && rows[2].starts_with("| (2,0) |"));
    assert_eq!(out.matches("## ").count(), 4);

    let (out, _, _) = run(&["tables", "3", "--product", "beta+", "--format", "csv"]);
    assert!(out.contains("\n1,2,1,2,C,\"U(1,1)\",\n"), "{out}");
}

#[test]
fn tables_json_flags_nonstandard_forms() {
    let (out, _, code) = run(&["tables", "4", "beta-", "--format", "json"]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    let row = rows
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["p"] == 1 && r["q"] == 3)
        .unwrap();
    assert_eq!(row["group"], "U_{1,1}ℍ");
    assert_eq!(row["nonstandard"], true);
    assert_eq!(row["alias"], "Sp(2,2)");
}
