use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn arcflip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcflip")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = arcflip(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    (out.status.code().unwrap(), v)
}

#[test]
fn classify_punctured_digon() {
    let (code, v) = json(&["classify", "0,1,1;2"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "arcflip/1");
    assert_eq!(v["result"]["tag"], "PuncturedDigon");
    assert_eq!(v["result"]["dim"], 1);
    assert_eq!(v["result"]["arcCount"], 2);
}

#[test]
fn hexagon_complex_stats() {
    let (code, v) = json(&["stats", "--complex", "0,1,0;6"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!((&r["vertices"], &r["facets"], &r["chi"], &r["dim"]), (&9.into(), &14.into(), &2.into(), &2.into()));
    assert_eq!(r["fVector"], serde_json::json!([9, 21, 14]));
}

#[test]
fn flip_graph_stats() {
    let (_, v) = json(&["stats", "--flipgraph", "0,1,0;6"]);
    assert_eq!(v["result"]["vertices"], 14);
    assert_eq!(v["result"]["edges"], 21);
    assert_eq!(v["result"]["degreeSequence"], serde_json::json!(vec![3; 14]));
}

#[test]
fn rigidity_of_hexagon() {
    let (code, v) = json(&["rigidity", "0,1,0;6", "--flipgraph"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["autA"], 12);
    assert_eq!(r["modImage"], 12);
    assert_eq!(r["equal"], true);
    assert_eq!(r["flipgraph"]["autF"], 12);
}

#[test]
fn hexagon_and_punctured_triangle_differ() {
    let (code, v) = json(&["distinguish", "0,1,0;6", "0,1,1;3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["isomorphic"], false);
    assert_eq!(v["result"]["invariantsA"]["vertices"], 9);
    assert_eq!(v["result"]["invariantsB"]["vertices"], 9);
}

#[test]
fn domain_errors_are_structured() {
    for (args, kind) in [
        (vec!["complex", "0,1,0;3"], "EmptyComplex"),
        (vec!["complex", "1,1,0;1"], "InfiniteType"),
        (vec!["bmatrix", "0,1,1;3"], "Punctured"),
        (vec!["mcg-free-typo-not-a-domain-error"], ""),
        (vec!["aut", "0,1,0;8", "--max-vertices", "10"], "TooLarge"),
        (vec!["mutate", "0,1,0;6", "-k", "3"], "IndexOutOfRange"),
    ] {
        let out = arcflip(&args);
        if kind.is_empty() {
            assert_eq!(out.status.code(), Some(2));
            assert!(out.stdout.is_empty());
            continue;
        }
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["error"]["kind"], kind, "{args:?}");
        assert!(out.stderr.is_empty());
    }
}

#[test]
fn validate_fixtures() {
    for name in ["torus.tri", "annulus21.tri", "hexagon.tri"] {
        let (code, v) = json(&["validate", "--file", &fixture(name)]);
        assert_eq!(code, 0, "{name}: {v}");
        assert_eq!(v["result"]["ok"], true);
    }
    let (code, v) = json(&["validate", "--file", &fixture("broken.tri")]);
    assert_eq!(code, 1);
    let kinds: Vec<&str> =
        v["error"]["report"]["violations"].as_array().unwrap().iter().map(|x| x["kind"].as_str().unwrap()).collect();
    assert!(kinds.contains(&"SelfGlued") && kinds.contains(&"NonTriangularFace"), "{kinds:?}");
}

#[test]
fn annulus_ball_and_exchange() {
    let (code, v) = json(&["ball", "--file", &fixture("annulus21.tri"), "--radius", "2"]);
    assert_eq!(code, 0);
    assert!(v["result"]["vertices"].as_array().unwrap().len() > 1);
    let (code, v) = json(&["exchange-check", "--file", &fixture("annulus21.tri"), "--radius", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["allVerified"], true);
    let (_, v) = json(&["exchange-check", "0,1,0;6"]);
    assert_eq!((&v["result"]["edges"], &v["result"]["verified"]), (&21.into(), &21.into()));
}

#[test]
fn bmatrix_golden() {
    let (_, v) = json(&["bmatrix", "0,1,0;5"]);
    assert_eq!(v["result"]["text"], "labels C(0,2) C(0,3)\n0 1\n-1 0\n");
    let (_, v) = json(&["bmatrix", "0,1,0;6", "--arcs", "C(0,2) C(2,4) C(0,4)"]);
    assert_eq!(v["result"]["labels"], serde_json::json!(["C(0,2)", "C(0,4)", "C(2,4)"]));
    // central triangle 0,2,4 gives the oriented 3-cycle
    assert_eq!(v["result"]["matrix"], serde_json::json!([[0, 1, -1], [-1, 0, 1], [1, -1, 0]]));
}

#[test]
fn pentagon_flip_graph_dot() {
    let out = arcflip(&["flipgraph", "0,1,0;5", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let expected = "graph \"flip_graph 0,1,0;5\" {\n  \"C(0,2) C(0,3)\";\n  \"C(0,2) C(2,4)\";\n  \"C(0,3) C(1,3)\";\n  \"C(1,3) C(1,4)\";\n  \"C(1,4) C(2,4)\";\n  \"C(0,2) C(0,3)\" -- \"C(0,2) C(2,4)\";\n  \"C(0,2) C(0,3)\" -- \"C(0,3) C(1,3)\";\n  \"C(0,2) C(2,4)\" -- \"C(1,4) C(2,4)\";\n  \"C(0,3) C(1,3)\" -- \"C(1,3) C(1,4)\";\n  \"C(1,3) C(1,4)\" -- \"C(1,4) C(2,4)\";\n}\n";
    assert_eq!(text, expected);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["complex", "0,1,1;3"],
        vec!["flipgraph", "0,2,0;1,1", "--winding-bound", "3", "--dot"],
        vec!["ball", "--file", &fixture("torus.tri"), "--radius", "2"],
        vec!["aut", "0,1,0;7"],
    ] {
        let a = arcflip(&args);
        let b = arcflip(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
