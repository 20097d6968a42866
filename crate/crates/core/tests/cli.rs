use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const PARAMS: &str = r#"{"backend":{"kind":"rational","q":16},"m":4,"N":3,"l":2}"#;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_foldecode"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("foldecode-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn encode_corrupt_decode_round_trip() {
    let dir = scratch("roundtrip");
    let params = dir.join("params.json");
    fs::write(&params, PARAMS).unwrap();
    let msg = dir.join("msg.hex");
    fs::write(&msg, "0x3 0x9 0xf\n").unwrap();
    let cw = dir.join("cw.json");
    let rw = dir.join("rw.json");
    let list = dir.join("list.json");

    let o = run(&[
        "encode",
        "--params",
        s(&params),
        "--message",
        s(&msg),
        "--out",
        s(&cw),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rows: Vec<Vec<String>> = serde_json::from_str(&fs::read_to_string(&cw).unwrap()).unwrap();
    assert_eq!((rows.len(), rows[0].len()), (3, 4));

    let o = run(&[
        "corrupt",
        "--params",
        s(&params),
        "--in",
        s(&cw),
        "--errors",
        "1",
        "--seed",
        "7",
        "--out",
        s(&rw),
    ]);
    assert!(o.status.success());
    let bad: Vec<Vec<String>> = serde_json::from_str(&fs::read_to_string(&rw).unwrap()).unwrap();
    assert_eq!(rows.iter().zip(&bad).filter(|(a, b)| a != b).count(), 1);

    let o = run(&[
        "decode",
        "--params",
        s(&params),
        "--dparams",
        r#"{"s":2}"#,
        "--in",
        s(&rw),
        "--out",
        s(&list),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&list).unwrap()).unwrap();
    assert_eq!(v["kappa"], 2);
    assert_eq!(v["kappa_formula"], 1);
    assert_eq!(v["threshold_t"], 2);
    let cands: Vec<Vec<String>> = serde_json::from_value(v["candidates"].clone()).unwrap();
    assert!(cands.contains(&vec!["0x3".to_string(), "0x9".into(), "0xf".into()]));
}

#[test]
fn corrupt_is_reproducible() {
    let dir = scratch("repro");
    let params = dir.join("params.json");
    fs::write(&params, PARAMS).unwrap();
    let cw = dir.join("cw.json");
    assert!(run(&[
        "encode",
        "--params",
        s(&params),
        "--seed",
        "5",
        "--out",
        s(&cw)
    ])
    .status
    .success());
    let a = run(&[
        "corrupt",
        "--params",
        s(&params),
        "--in",
        s(&cw),
        "--errors",
        "2",
        "--seed",
        "7",
    ]);
    let b = run(&[
        "corrupt",
        "--params",
        s(&params),
        "--in",
        s(&cw),
        "--errors",
        "2",
        "--seed",
        "7",
    ]);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn bench_output_is_byte_identical() {
    let dir = scratch("bench");
    let params = dir.join("params.json");
    fs::write(&params, PARAMS).unwrap();
    let (a, b) = (dir.join("a.csv"), dir.join("b.csv"));
    for out in [&a, &b] {
        let o = run(&[
            "bench",
            "--params",
            s(&params),
            "--grid",
            "4:2,4:1",
            "--trials",
            "20",
            "--seed",
            "1",
            "--no-timing",
            "--out",
            s(out),
        ]);
        assert!(o.status.success());
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert!(text.starts_with("m,s,R_exact,radius_exact,radius_asymptotic,success_rate,"));
    assert!(text.lines().nth(1).unwrap().contains(",1.0000,"));

    let o = bin()
        .env("FOLDECODE_THREADS", "1")
        .args([
            "bench",
            "--params",
            s(&params),
            "--grid",
            "4:2,4:1",
            "--trials",
            "20",
            "--seed",
            "1",
            "--no-timing",
        ])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(o.stdout).unwrap(), text);

    let o = run(&["bench", "--params", s(&params), "--trials", "0"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 1);
}

#[test]
fn precondition_errors_exit_with_2() {
    let dir = scratch("errors");
    let params = dir.join("params.json");
    fs::write(
        &params,
        r#"{"backend":{"kind":"rational","q":16},"m":4,"N":3,"l":2,"extra":1}"#,
    )
    .unwrap();
    assert_eq!(
        run(&["encode", "--params", s(&params)]).status.code(),
        Some(2)
    );
    fs::write(&params, PARAMS).unwrap();
    let cw = dir.join("cw.json");
    assert!(run(&["encode", "--params", s(&params), "--out", s(&cw)])
        .status
        .success());
    let o = run(&[
        "decode",
        "--params",
        s(&params),
        "--dparams",
        r#"{"s":9}"#,
        "--in",
        s(&cw),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(
        run(&["classfield", "torsion", "--q", "2", "--Q", "T^5+T^2+1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["classfield", "genus", "--q", "2", "--d", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn classfield_commands() {
    let o = run(&["classfield", "torsion", "--q", "2", "--Q", "T^2+T+1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["root_count"], 4);
    assert_eq!(v["generator_count"], 3);

    let o = run(&[
        "classfield",
        "params",
        "--ell",
        "4",
        "--n",
        "16",
        "--gE",
        "7",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["r"], 33);

    let o = run(&["classfield", "genus", "--q", "4", "--d", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["genus"], 5);
}

#[test]
fn chebotarev_csv() {
    let o = run(&["chebotarev", "--q", "2", "--Q", "T^2+T+1", "--h", "4..5"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "h,class_repr,count,expected,bound,margin");
    assert_eq!(lines.len(), 1 + 2 * 3);
    let total4: u64 = lines[1..4]
        .iter()
        .map(|l| l.split(',').nth(2).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total4, 3);
    let o = run(&[
        "chebotarev",
        "--q",
        "2",
        "--Q",
        "T^2+T+1",
        "--h",
        "4",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["all_within_bound"], true);
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 7);
    assert!(!text.contains("FAIL"));
}
