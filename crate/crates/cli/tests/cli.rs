use std::fs;
use std::process::{Command, Output};

fn descartes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descartes"))
        .args(args)
        .env_remove("DESCARTES_DB")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn last_line(o: &Output) -> String {
    stdout(o).lines().last().unwrap_or_default().to_string()
}

#[test]
fn enumerate_totals() {
    for (d, total) in [(1, 4), (2, 12), (7, 1472), (8, 3648)] {
        let o = descartes(&["enumerate", "--degree", &d.to_string()]);
        assert!(o.status.success());
        assert!(
            stdout(&o).contains(&format!("total: {}\n", total)),
            "degree {}",
            d
        );
    }
    let o = descartes(&["enumerate", "--degree", "3"]);
    let text = stdout(&o);
    assert!(text.contains("orbits: 6\nmonic: 16\n"));
    assert_eq!(text.lines().count(), 6 + 3);
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(
        descartes(&["enumerate", "--degree", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        descartes(&["classify", "--degree", "13"]).status.code(),
        Some(2)
    );
    let o = descartes(&["realize", "--pattern", "+-+", "--pos", "1", "--neg", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("inadmissible"));
    assert_eq!(
        descartes(&["certify-series", "--degree", "6", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
    let o = descartes(&["discriminant", "cubic", "--a-min", "1", "--a-max", "-1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = descartes(&["discriminant", "cubic", "--a-min", "x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_small_degrees() {
    for (d, summary) in [
        (2, "realized: 3, nonrealizable: 0, unknown: 0"),
        (4, "realized: 16, nonrealizable: 1, unknown: 0"),
        (6, "realized: 87, nonrealizable: 4, unknown: 0"),
    ] {
        let o = descartes(&["classify", "--degree", &d.to_string()]);
        assert!(o.status.success(), "degree {}", d);
        assert_eq!(last_line(&o), summary);
        assert!(String::from_utf8_lossy(&o.stderr).contains("seed: 0"));
    }
}

#[test]
fn classify_is_deterministic() {
    let a = descartes(&["classify", "--degree", "5", "--seed", "7"]);
    let b = descartes(&["classify", "--degree", "5", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn realize_outputs() {
    let o = descartes(&["realize", "--pattern", "++-", "--pos", "1", "--neg", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "realized");
    assert_eq!(v["pattern"], "++-");
    assert!(v["witness"].as_array().unwrap().len() == 3);

    let o = descartes(&["realize", "--pattern", "+---+", "--pos", "0", "--neg", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "nonrealizable");
    assert!(v["witness"].is_null());
}

#[test]
fn cache_round_trip_and_reverification() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let cache_s = cache.to_str().unwrap();
    let first = descartes(&["classify", "--degree", "4", "--cache", cache_s]);
    assert!(first.status.success());
    let saved = fs::read_to_string(&cache).unwrap();
    assert!(saved.lines().count() >= 11);

    let second = descartes(&["classify", "--degree", "4", "--cache", cache_s]);
    assert_eq!(last_line(&second), last_line(&first));
    assert!(stdout(&second).contains("\"source\":\"cache\""));

    // a tampered witness is dropped and recomputed
    let tampered: Vec<String> = saved
        .lines()
        .map(|l| {
            let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
            if let Some(w) = v["witness"].as_array_mut() {
                for c in w.iter_mut().skip(1) {
                    *c = serde_json::Value::String("1".into());
                }
            }
            v.to_string()
        })
        .collect();
    fs::write(&cache, tampered.join("\n") + "\n").unwrap();
    let third = descartes(&["classify", "--degree", "4", "--cache", cache_s]);
    assert!(third.status.success());
    assert_eq!(last_line(&third), last_line(&first));
    assert!(String::from_utf8_lossy(&third.stderr).contains("failed re-verification"));

    fs::write(&cache, "{ not json\n").unwrap();
    let o = descartes(&["classify", "--degree", "3", "--cache", cache_s]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cache.jsonl:1:"));
}

#[test]
fn corrupt_database_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let db = dir.path().join("db.txt");
    fs::write(&db, "# header\n4 +---+ 0 2 known\n4 +---+\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_descartes"))
        .args(["classify", "--degree", "4"])
        .env("DESCARTES_DB", &db)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("db.txt:3:"));
}

#[test]
fn custom_database_is_used() {
    let dir = tempfile::tempdir().unwrap();
    let db = dir.path().join("db.txt");
    fs::write(&db, "# nothing listed\n").unwrap();
    let o = descartes(&[
        "--db",
        db.to_str().unwrap(),
        "realize",
        "--pattern",
        "+---+",
        "--pos",
        "0",
        "--neg",
        "2",
        "--budget",
        "200",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "unknown");
    assert_eq!(v["source"], "random-search:budget=200");
}

#[test]
fn discriminant_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("cubic.csv");
    let o = descartes(&[
        "discriminant",
        "cubic",
        "--steps",
        "11",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a,b,pos,neg,on_locus"));
    assert_eq!(lines.count(), 121);
    assert!(stdout(&o).contains("samples: 121"));

    let o = descartes(&[
        "discriminant",
        "quartic-slice",
        "--a",
        "-1/10",
        "--steps",
        "5",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("a,b,c,pos,neg,on_locus\n"));
    assert_eq!(text.lines().count(), 26);
    assert!(String::from_utf8_lossy(&o.stderr).contains("samples: 25"));
}

#[test]
fn certify_series_passes() {
    let o = descartes(&[
        "certify-series",
        "--degree",
        "7",
        "--k",
        "1",
        "--budget",
        "2000",
        "--samples",
        "5",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(last_line(&o).ends_with("failed: 0"));
    assert!(stdout(&o).contains("statistical evidence"));
}
