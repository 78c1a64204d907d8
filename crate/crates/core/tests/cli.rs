use std::path::PathBuf;
use std::process::Command;

use algext::formats::{catalog_dir, lie_file_from_algebra, LieFile, Loader};
use serde_json::Value;

fn algext(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_algext")).args(args).current_dir(std::env::temp_dir()).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn result(args: &[&str]) -> (i32, Value) {
    let (code, text) = algext(args);
    let v: Value = serde_json::from_str(&text).unwrap_or(Value::Null);
    (code, v)
}

#[test]
fn relative_symplectic_class() {
    let (code, v) = result(&["relative", "--lie", "sl2semi.lie", "--red-from-file", "--module", "triv.mod", "--p", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["degrees"][0]["dim"], 1);
    assert_eq!(v["result"]["degrees"][0]["representatives"][0]["terms"][0]["args"], serde_json::json!(["v1", "v2"]));
    let (_, w) = result(&["relative", "--lie", "sl2semi.lie", "--red", "0,1,2", "--module", "triv.mod", "--p", "2"]);
    assert_eq!(w["result"], v["result"]);
}

#[test]
fn ext_pgl2_torus() {
    let (code, v) = result(&["ext", "--group", "pgl2.grp", "--coeff", "torus1.grp"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["finite_part"], serde_json::json!([2]));
    assert_eq!(v["result"]["vector_part_dim"], 0);
    let (_, v) = result(&["ext", "--group", "vsl2.grp", "--coeff", "ga_trivial.grp"]);
    assert_eq!(v["result"]["finite_part"], serde_json::json!([]));
    assert_eq!(v["result"]["vector_part_dim"], 1);
}

#[test]
fn vanest_heisenberg() {
    let (code, v) =
        result(&["vanest", "--group", "heisenberg.grp", "--module", "triv.mod", "--p", "1", "--max-degree", "4"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!((r["h_of_d"].clone(), r["stabilized"].clone(), r["lie_dim"].clone()), (2.into(), true.into(), 2.into()));
    assert_eq!(r["matches"], true);
}

#[test]
fn vanest_inconclusive_is_not_an_error() {
    let (code, v) = result(&["vanest", "--group", "ga.grp", "--module", "ga_jordan.mod", "--p", "1", "--max-degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["conclusive"], false);
}

#[test]
fn exit_codes() {
    let (code, v) = result(&["ext", "--group", "missing.grp", "--coeff", "torus1.grp"]);
    assert_eq!(code, 3);
    assert_eq!(v["status"], "io_error");

    let dir = tempdir("exit_codes");
    let bad = dir.join("bad.lie");
    std::fs::write(&bad, r#"{"name":"bad","dim":2,"basis":["a","b"],"brackets":[{"i":0,"j":1,"coeffs":{"0":"1"}},{"i":1,"j":0,"coeffs":{"0":"1"}}]}"#).unwrap();
    let (code, v) = result(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "validation_error");
    assert!(v["result"]["detail"]["files"][0]["error"].as_str().unwrap().contains("antisymmetric"));

    let (code, _) = algext(&["relative", "--lie", "sl2.lie", "--module", "triv.mod"]);
    assert_eq!(code, 1);
    let (code, _) = algext(&["--help"]);
    assert_eq!(code, 0);
    let (code, _) = algext(&["ext", "--group", "heisenberg.grp", "--coeff", "torus1.grp"]);
    assert_eq!(code, 1);
}

#[test]
fn bad_inverse_is_reported() {
    let dir = tempdir("bad_inverse");
    let g = dir.join("b.grp");
    std::fs::write(&g, r#"{"name":"b","dim":1,"law":["x1 + y1 + x1*y1"]}"#).unwrap();
    let (code, v) = result(&["validate", g.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(v["result"]["detail"]["files"][0]["error"].as_str().unwrap().contains("inverse"));
}

#[test]
fn catalog_check_passes() {
    let (code, v) = result(&["catalog", "check"]);
    assert_eq!(code, 0, "{v}");
    let files = v["result"]["files"].as_array().unwrap();
    assert!(files.len() >= 20);
    assert!(files.iter().all(|f| f["valid"] == true));
    let (code, v) = result(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["files"].as_array().unwrap().len(), files.len());
}

#[test]
fn out_flag_and_timing() {
    let dir = tempdir("out_flag");
    let out = dir.join("r.json");
    let args = ["cohomology", "--lie", "h3.lie", "--module", "triv.mod"];
    let (_, stdout) = algext(&args);
    let mut with_out = vec!["--out", out.to_str().unwrap(), "--jobs", "2"];
    with_out.extend(args);
    let (code, text) = algext(&with_out);
    assert_eq!((code, text.as_str()), (0, ""));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), stdout);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["result"]["betti"], serde_json::json!([1, 2, 2, 1]));
    assert!(v.get("elapsed_ms").is_none());
    let mut timed = vec!["--timing"];
    timed.extend(args);
    let (_, v) = result(&timed);
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn catalog_env_override() {
    let dir = tempdir("env_override");
    let out = Command::new(env!("CARGO_BIN_EXE_algext"))
        .args(["ext", "--group", "pgl2.grp", "--coeff", "torus1.grp"])
        .env("ALGEXT_CATALOG", &dir)
        .current_dir(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn catalog_lie_files_round_trip() {
    let mut loader = Loader::new();
    for entry in std::fs::read_dir(catalog_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("lie") {
            continue;
        }
        let (g, levi) = loader.load_lie(path.to_str().unwrap()).unwrap();
        let file = lie_file_from_algebra(&g, levi.as_ref());
        let back: LieFile = serde_json::from_str(&serde_json::to_string(&file).unwrap()).unwrap();
        assert_eq!(back.to_algebra("x").unwrap(), *g);
        let original: LieFile = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(back.levi, original.levi);
    }
}

fn tempdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("algext-test-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
