use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tourney(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tourney"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let o = tourney(&full, "");
    assert!(o.status.success(), "{o:?}");
    stdout(&o)
}

#[test]
fn gen_formats() {
    assert_eq!(gen(&["--kind", "transitive", "--n", "3"]), "3:111\n");
    assert_eq!(
        gen(&["--kind", "circulant", "--n", "3", "--offsets", "1"]),
        "3:101\n"
    );
    assert_eq!(
        gen(&["--kind", "random", "--n", "5", "--p", "1", "--seed", "9"]),
        "5:1111111111\n"
    );
    let a = gen(&["--kind", "random", "--n", "10", "--seed", "42"]);
    assert_eq!(a, gen(&["--kind", "random", "--n", "10", "--seed", "42"]));
    assert_eq!(a.trim().len(), "10:".len() + 45);
}

#[test]
fn gen_rejects_bad_parameters() {
    for args in [
        &["gen", "--kind", "qr", "--n", "5"][..],
        &["gen", "--kind", "circulant", "--n", "5", "--offsets", "1,4"],
        &["gen", "--kind", "random", "--n", "5", "--p", "2"],
        &["gen", "--kind", "nope", "--n", "5"],
    ] {
        let o = tourney(args, "");
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn count_pipeline() {
    let regular = gen(&["--kind", "circulant", "--n", "5", "--offsets", "1,2"]);
    assert_eq!(
        stdout(&tourney(
            &["count", "--k", "5", "--method", "formula"],
            &regular
        )),
        "2\n"
    );
    assert_eq!(
        stdout(&tourney(
            &["count", "--k", "4", "--method", "brute"],
            &regular
        )),
        "5\n"
    );
    assert_eq!(stdout(&tourney(&["count", "--k", "3"], &regular)), "5\n");
    let t8 = gen(&["--kind", "transitive", "--n", "8"]);
    assert_eq!(
        stdout(&tourney(&["count", "--k", "5", "--method", "brute"], &t8)),
        "0\n"
    );
}

#[test]
fn count_methods_agree() {
    for seed in 0..20 {
        let t = gen(&["--kind", "random", "--n", "11", "--seed", &seed.to_string()]);
        for k in ["3", "5"] {
            let f = tourney(&["count", "--k", k, "--method", "formula"], &t);
            let b = tourney(&["count", "--k", k, "--method", "brute"], &t);
            assert_eq!(stdout(&f), stdout(&b));
        }
    }
}

#[test]
fn count_rejects_unsupported_requests() {
    let t = "3:101\n";
    assert_eq!(
        tourney(&["count", "--k", "4", "--method", "formula"], t)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        tourney(&["count", "--k", "6", "--method", "brute"], t)
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        tourney(&["count", "--k", "3"], "4:101").status.code(),
        Some(2)
    );
    assert_eq!(
        tourney(&["count", "--k", "3"], "3:1a1").status.code(),
        Some(2)
    );
}

#[test]
fn input_from_file_with_comments() {
    let dir = std::env::temp_dir().join(format!("tourney-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("qr7.txt");
    std::fs::write(
        &path,
        "# Paley tournament on 7 vertices\n7:110100110101101110111\n",
    )
    .unwrap();
    let o = tourney(&["count", "--k", "5", "--in", path.to_str().unwrap()], "");
    assert!(o.status.success(), "{o:?}");
    assert_eq!(stdout(&o), "42\n");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn bounds_output() {
    let qr7 = gen(&["--kind", "qr", "--n", "7"]);
    let out = stdout(&tourney(&["bounds"], &qr7));
    assert_eq!(
        out,
        "n: 7\nc5: 42\ns1: 42\ns2: 126\nexpected: 63/4\nlower_bound: 21/8\nupper_bound: 777/16\nscore_variance: 0\n"
    );
}

#[test]
fn census_and_acyclic_output() {
    let regular = gen(&["--kind", "circulant", "--n", "5", "--offsets", "1,2"]);
    let out = stdout(&tourney(&["census"], &regular));
    assert!(out.ends_with("total: 1\nfive_cycles: 2\n"), "{out}");
    let hit: Vec<&str> = out.lines().filter(|l| l.ends_with("\t1")).collect();
    assert_eq!(hit.len(), 1);
    assert_eq!(hit[0].split('\t').nth(1), Some("2"));

    let out = stdout(&tourney(&["acyclic", "--k", "3"], &regular));
    assert_eq!(out, "count: 5\nf_lower: 5\ng_expected: 15/2\n");
}

#[test]
fn scan_csv_shape() {
    let o = tourney(&["scan", "--n", "8", "--samples", "25", "--seed", "3"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("seed,n,c3,c4,c5,s1,s2,lower_bound,upper_bound,score_variance")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 25);
    for row in &rows {
        assert_eq!(row.len(), 10);
        assert_eq!(row[1], "8");
        let c5: f64 = row[4].parse().unwrap();
        let lo: f64 = row[7].parse().unwrap();
        let hi: f64 = row[8].parse().unwrap();
        assert!(lo <= c5 && c5 <= hi);
    }
    let again = tourney(&["scan", "--n", "8", "--samples", "25", "--seed", "3"], "");
    assert_eq!(again.stdout, o.stdout);
}

#[test]
fn scan_writes_file() {
    let dir = std::env::temp_dir().join(format!("tourney-scan-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scan.csv");
    let o = tourney(
        &[
            "scan",
            "--n",
            "14",
            "--samples",
            "4",
            "--seed",
            "1",
            "--out",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 5);
    // c4 is left empty above the brute-force cap
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(3) == Some("")));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_suites_exit_zero() {
    for suite in ["identities", "matrix", "acyclic"] {
        let o = tourney(
            &["verify", "--suite", suite, "--cases", "30", "--seed", "5"],
            "",
        );
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    let o = tourney(&["verify", "--suite", "matrix", "--cases", "10"], "");
    assert!(stdout(&o).contains("ok    row_relation_identity"));
}

#[test]
fn thread_override_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_tourney"))
            .args(["scan", "--n", "9", "--samples", "40", "--seed", "11"])
            .env("TOURNEY_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    assert!(one.status.success());
    assert_eq!(one.stdout, run("4").stdout);
    assert_eq!(run("zero").status.code(), Some(2));
}
