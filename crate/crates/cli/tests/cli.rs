use std::process::{Command, Output};

fn galh1(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_galh1"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn h1_named_groups() {
    let o = galh1(&["h1", "--group", "su(2,1)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("|H1| = 2"));
    let o = galh1(&["h1", "--group", "sp(4,R)"]);
    assert_eq!(stdout(&o).lines().next(), Some("|H1| = 1"));
    let o = galh1(&["h1", "--group", "e7.quaternionic", "--gens", "w0"]);
    assert_eq!(stdout(&o).lines().next(), Some("|H1| = 4"));
}

#[test]
fn json_is_stable_and_sorted() {
    let a = galh1(&["h1", "--group", "spin(5,3)", "--json"]);
    let b = galh1(&["h1", "--group", "spin(5,3)", "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["h1"], 2);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let text = stdout(&a);
    let first_key = text.lines().nth(1).unwrap().trim();
    assert!(first_key.starts_with("\"expected_h1\""), "{first_key}");
    for r in v["zeta"].as_array().unwrap() {
        assert!(r.as_str().unwrap().contains('/'));
    }
}

#[test]
fn tables_match() {
    let o = galh1(&["tables", "--max-rank", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all tables match"));
    let o = galh1(&["tables", "--max-rank", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["all_match"], true);
    assert_eq!(v["tables"]["exceptional"].as_array().unwrap().len(), 2);
}

#[test]
fn fibers_and_profile() {
    let o = galh1(&["fibers", "--group", "ad.e7.split", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mass_formula"]["holds"], true);
    let t = v["selected_target"].as_u64().unwrap() as usize;
    assert_eq!(v["targets"][t]["pi0"], "2");
    let o = galh1(&["profile", "--group", "spin(4,4)"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with("class"))
            .count(),
        4
    );
    let o = galh1(&["describe", "--group", "psu(2,2)"]);
    assert!(stdout(&o).contains("type: A3"));
}

#[test]
fn custom_file() {
    let dir = std::env::temp_dir().join(format!("galh1-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sl2.txt");
    std::fs::write(
        &path,
        "name = SL(2,R)\nrank = 1\nsimple_roots = 2\nsimple_coroots = 1\nzeta = 1/2\n",
    )
    .unwrap();
    let o = galh1(&["h1", "--file", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("|H1| = 1"));
    std::fs::write(&path, "rank = 1\nsimple_roots = 2\nsimple_coroots = z\n").unwrap();
    let o = galh1(&["h1", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Parse"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let o = galh1(&["h1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    let o = galh1(&["h1", "--group", "su(2,1)", "--file", "x"]);
    assert_eq!(o.status.code(), Some(2));
    let o = galh1(&["h1", "--group", "xx(3)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("UnknownName"));
    let o = galh1(&["h1", "--group", "pso(1,1)"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("InvalidSignature"));
}
