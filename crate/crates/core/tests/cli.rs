use std::process::Command;

fn spq(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_spq")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn hmap_first_example() {
    let (code, out, _) = spq(&["hmap", "--sigma", "(1,2)+"]);
    assert_eq!(code, 0);
    let expected = "\
sigma: (1,2)+
T1:
+---+---+
| 1     |
+---+---+
| 2     |
+---+---+
T1 json: {\"dominoes\":[{\"label\":1,\"cells\":[[1,1],[1,2]]},{\"label\":2,\"cells\":[[2,1],[2,2]]}]}
class (2 members):
  [+-]
  [-+]
orbit: 2+2+
";
    assert_eq!(out, expected);
}

#[test]
fn enumerate_streams_and_counts() {
    assert_eq!(spq(&["enumerate", "--n", "2", "--p", "1", "--count-only"]).1, "4\n");
    let (code, out, _) = spq(&["enumerate", "--n", "2", "--p", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().any(|l| l == "(1,2)-"));
}

#[test]
fn verify_bijection_table() {
    let (code, out, _) = spq(&["verify", "bijection", "--n-max", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 14);
    assert!(out.contains("n=4 p=2 checked=42 failures=0 ok parameters=42 pairs=42 image=42"));
    let (code, out, _) = spq(&["verify", "all", "--n-max", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 3 * 9);
    assert!(arr.iter().all(|r| r["failures"].as_array().unwrap().is_empty()));
    assert_eq!(arr[0]["suite"], "tau");
}

#[test]
fn invalid_input_exits_two() {
    let (code, out, err) = spq(&["hmap", "--sigma", "1+ 1-"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error:"));
    let (code, _, err) = spq(&["orbit", "--sigma", "(1,x)+"]);
    assert_eq!(code, 2);
    assert!(err.contains("byte 3"), "{err}");
    assert_eq!(spq(&["verify", "nonsense", "--n-max", "2"]).0, 2);
}

#[test]
fn output_is_deterministic() {
    let a = spq(&["cells", "--n", "4", "--p", "2"]);
    let b = spq(&["cells", "--n", "4", "--p", "2"]);
    assert_eq!(a, b);
    assert!(a.1.ends_with("6 cells, 6 orbits\n"));
}
