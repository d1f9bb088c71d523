use std::process::{Command, Output};

use qbranch_core::ring::parse_ratfunc;

fn qbranch(args: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    Command::new(env!("CARGO_BIN_EXE_qbranch"))
        .args(args)
        .env("QBRANCH_CACHE_DIR", dir.path())
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_r_json() {
    let o = qbranch(&["expand", "--family", "R", "--lambda", "1", "--n", "2", "--param", "b=b", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["family"], "R");
    assert_eq!(v["n"], 2);
    let num = parse_ratfunc(v["numerator"].as_str().unwrap()).unwrap();
    let den = parse_ratfunc(v["denominator"].as_str().unwrap()).unwrap();
    let want = parse_ratfunc("(x1+x2-b*(1+1/t)*x1*x2)/((1-b*x1)*(1-b*x2))").unwrap();
    assert_eq!(num.div(&den).unwrap(), want);
}

#[test]
fn expand_json_round_trips() {
    for fam in ["P", "schur", "M", "O", "Rab", "R"] {
        let o = qbranch(&["expand", "--family", fam, "--lambda", "2,1", "--n", "2", "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{fam}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        for key in ["numerator", "denominator"] {
            let s = v[key].as_str().unwrap();
            let p = parse_ratfunc(s).unwrap();
            assert_eq!(p.to_canonical(), s, "{fam} {key}");
        }
        let text = qbranch(&["expand", "--family", fam, "--lambda", "2,1", "--n", "2"]);
        let t = parse_ratfunc(stdout(&text).trim()).unwrap();
        let n = parse_ratfunc(v["numerator"].as_str().unwrap()).unwrap();
        let d = parse_ratfunc(v["denominator"].as_str().unwrap()).unwrap();
        assert_eq!(t, n.div(&d).unwrap(), "{fam}");
    }
}

#[test]
fn specialised_parameter() {
    let o = qbranch(&["expand", "--family", "R", "--lambda", "1", "--n", "1", "--param", "b=q^(1-2)"]);
    let v = parse_ratfunc(stdout(&o).trim()).unwrap();
    assert_eq!(v, parse_ratfunc("x1/(1-x1/q)").unwrap());
}

#[test]
fn qbinom_classical() {
    let o = qbranch(&["qbinom", "--lambda", "2", "--mu", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(parse_ratfunc(stdout(&o).trim()).unwrap(), parse_ratfunc("1+q").unwrap());
    let skew = qbranch(&["qbinom", "--lambda", "2,1", "--mu", "1"]);
    let rec = qbranch(&["qbinom", "--lambda", "2,1", "--mu", "1", "--method", "recursion"]);
    assert_eq!(stdout(&skew), stdout(&rec));
    let m = qbranch(&["qbinom", "--lambda", "1,1", "--mu", "1", "--method", "closed-t=q"]);
    assert_eq!(parse_ratfunc(stdout(&m).trim()).unwrap(), parse_ratfunc("(1+q)/q").unwrap());
}

#[test]
fn principal_and_psi() {
    let o = qbranch(&["principal", "--lambda", "1", "--n", "2"]);
    assert_eq!(parse_ratfunc(stdout(&o).trim()).unwrap(), parse_ratfunc("(1+t)/(1-b*t)").unwrap());
    let o = qbranch(&["psi", "--lambda", "1", "--mu", "0"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn verify_exit_codes() {
    let ok = qbranch(&["verify", "--identity", "q-gauss", "--n", "2", "--degree", "3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("q-gauss") && stdout(&ok).contains("pass"));
    let bad = qbranch(&["verify", "--identity", "q-gauss", "--mutate", "--format", "json"]);
    assert_eq!(bad.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&bad)).unwrap();
    assert_eq!(v[0]["pass"], false);
    assert!(v[0]["witness"]["monomial"].is_string());
}

#[test]
fn verify_all_is_deterministic() {
    let a = qbranch(&["verify", "--all"]);
    let b = qbranch(&["verify", "--all"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let n = qbranch_core::identities::catalog().len();
    assert!(text.ends_with(&format!("{n}/{n} passed\n")));
    let ids: Vec<&str> = text.lines().filter(|l| !l.starts_with(' ')).filter_map(|l| l.split_whitespace().next()).collect();
    let want: Vec<&str> = qbranch_core::identities::catalog().iter().map(|e| e.id).collect();
    assert_eq!(&ids[..n], &want[..]);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["expand", "--family", "R", "--lambda", "1", "--n", "5"],
        &["expand", "--family", "R", "--lambda", "5,4", "--n", "2"],
        &["expand", "--family", "R", "--lambda", "1", "--n", "2", "--param", "a=1"],
        &["expand", "--family", "R", "--lambda", "1", "--n", "2", "--param", "b=(q"],
        &["expand", "--family", "Q", "--lambda", "1", "--n", "2"],
        &["expand", "--family", "R", "--lambda", "1,2", "--n", "2"],
        &["verify", "--identity", "nope"],
        &["verify", "--identity", "q-gauss", "--degree", "7"],
        &["verify", "--identity", "pieri-R", "--param", "d=a"],
        &["qbinom", "--lambda", "2", "--mu", "1", "--method", "magic"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = qbranch(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn cache_commands() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_qbranch"))
            .args(["--cache-dir", path])
            .args(args)
            .env_remove("QBRANCH_CACHE_DIR")
            .output()
            .unwrap()
    };
    assert_eq!(run(&["verify", "--identity", "skew-cauchy-macdonald"]).status.code(), Some(0));
    let stats = stdout(&run(&["cache", "stats"]));
    assert!(stats.contains(path), "{stats}");
    let records: usize = stats
        .lines()
        .find_map(|l| l.strip_prefix("records: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(records > 0);
    assert_eq!(run(&["cache", "clear"]).status.code(), Some(0));
    let stats = stdout(&run(&["cache", "stats"]));
    assert!(stats.contains("records: 0"), "{stats}");
}
