use std::process::{Command, Output};

use parabolic_cli::{from_json, run_grading, run_h2, run_twistor, to_json, CliError, JobSpec};

fn bin(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_parabolic"));
    cmd.args(args);
    match threads {
        Some(t) => cmd.env("PARABOLIC_THREADS", t),
        None => cmd.env_remove("PARABOLIC_THREADS"),
    };
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn grading_dims() {
    let r = run_grading(&JobSpec::new('A', 4, &[1, 4])).unwrap();
    assert_eq!(r.grading.depth, 2);
    let dims: Vec<usize> = r.grading.dims.iter().map(|p| p.dim).collect();
    assert_eq!(dims, vec![1, 6, 10, 6, 1]);
    let degrees: Vec<i64> = r.grading.dims.iter().map(|p| p.degree).collect();
    assert_eq!(degrees, vec![-2, -1, 0, 1, 2]);

    let r = run_grading(&JobSpec::new('A', 2, &[1])).unwrap();
    assert_eq!(r.grading.depth, 1);
    let dims: Vec<usize> = r.grading.dims.iter().map(|p| p.dim).collect();
    assert_eq!(dims, vec![2, 4, 2]);
}

#[test]
fn usage_errors() {
    assert!(matches!(
        run_grading(&JobSpec::new('A', 4, &[])),
        Err(CliError::Usage(_))
    ));
    assert!(matches!(
        run_grading(&JobSpec::new('A', 4, &[5])),
        Err(CliError::Usage(_))
    ));
    assert!(matches!(
        run_grading(&JobSpec::new('Q', 4, &[1])),
        Err(CliError::Usage(_))
    ));
    let mut job = JobSpec::new('A', 4, &[1, 4]);
    job.crossed_p = Some(vec![2]);
    assert!(matches!(run_twistor(&job), Err(CliError::Usage(_))));
    job.crossed_p = Some(vec![1, 4]);
    assert!(matches!(run_twistor(&job), Err(CliError::Usage(_))));
    let mut job = JobSpec::new('A', 2, &[1]);
    job.degree = 3;
    assert!(matches!(run_h2(&job), Err(CliError::Usage(_))));

    for args in [
        &["grading", "--type", "A", "--rank", "4", "--crossed", ""][..],
        &["grading", "--type", "A", "--rank", "4", "--crossed", "7"],
        &[
            "twistor",
            "--type",
            "A",
            "--rank",
            "4",
            "--crossed-q",
            "1,4",
            "--crossed-p",
            "2",
        ],
        &["h2", "--type", "A", "--rank", "4"],
        &["frobnicate"],
    ] {
        assert_eq!(bin(args, None).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(
        bin(
            &["grading", "--type", "A", "--rank", "4", "--crossed", "1"],
            Some("zero")
        )
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn exit_codes() {
    assert_eq!(CliError::Usage(String::new()).exit_code(), 1);
    assert_eq!(CliError::Internal(String::new()).exit_code(), 2);
    let m = CliError::OracleMismatch {
        harmonic: vec![],
        predicted: vec![],
    };
    assert_eq!(m.exit_code(), 3);
    let e: CliError = parabolic::Error::Consistency("∂*² ≠ 0".into()).into();
    assert_eq!(e.exit_code(), 2);
}

#[test]
fn h2_component_counts() {
    for (n, nodes, count) in [(2, vec![1], 1), (4, vec![1, 4], 3), (4, vec![1, 2], 3)] {
        let r = run_h2(&JobSpec::new('A', n, &nodes)).unwrap();
        assert_eq!(r.components.len(), count, "A{n} {nodes:?}");
        assert!(r.oracle.unwrap().agree);
    }
}

#[test]
fn names_attached() {
    let r = run_h2(&JobSpec::new('A', 4, &[1, 4])).unwrap();
    let mut names: Vec<String> = r.components.iter().filter_map(|c| c.name.clone()).collect();
    names.sort();
    assert_eq!(names, vec!["T^L", "T^R", "ρ"]);
    let r = run_h2(&JobSpec::new('A', 5, &[1, 2])).unwrap();
    let mut names: Vec<String> = r.components.iter().filter_map(|c| c.name.clone()).collect();
    names.sort();
    assert_eq!(names, vec!["T", "ρ", "τ"]);
    let r = run_h2(&JobSpec::new('A', 3, &[2])).unwrap();
    assert!(r.components.iter().all(|c| c.name.is_none()));
}

#[test]
fn twistor_verdicts() {
    let mut job = JobSpec::new('A', 4, &[1, 4]);
    job.crossed_p = Some(vec![1]);
    let t = run_twistor(&job).unwrap().twistor.unwrap();
    assert!(t.checks_hold());
    for v in &t.verdicts {
        let flags = (v.obstructs_integrability, v.obstructs_descent);
        match v.name.as_deref() {
            Some("T^R") => assert_eq!(flags, (true, true)),
            Some("ρ") => assert_eq!(flags, (false, true)),
            Some("T^L") => assert_eq!(flags, (false, false)),
            other => panic!("unexpected component {other:?}"),
        }
    }
}

#[test]
fn json_round_trip() {
    let mut job = JobSpec::new('A', 4, &[1, 2]);
    job.crossed_p = Some(vec![1]);
    for report in [
        run_grading(&JobSpec::new('A', 3, &[1, 3])).unwrap(),
        run_h2(&JobSpec::new('A', 3, &[1, 3])).unwrap(),
        run_twistor(&job).unwrap(),
    ] {
        let s = to_json(&report).unwrap();
        let back = from_json(&s).unwrap();
        assert_eq!(back, report);
        assert_eq!(to_json(&back).unwrap(), s);
        let value: serde_json::Value = serde_json::from_str(&s).unwrap();
        let mut again = serde_json::to_string_pretty(&value).unwrap();
        again.push('\n');
        assert_eq!(again, s);
        assert!(!s.contains('\r'));
    }
}

#[test]
fn json_keys_and_rationals() {
    let s = to_json(&run_h2(&JobSpec::new('A', 3, &[1])).unwrap()).unwrap();
    let value: serde_json::Value = serde_json::from_str(&s).unwrap();
    let top: Vec<&String> = value.as_object().unwrap().keys().collect();
    assert_eq!(
        top,
        vec!["components", "grading", "homology", "meta", "oracle", "twistor"]
    );
    assert_eq!(value["homology"]["adjointness_constant"], "-1/1");
    assert!(value["twistor"].is_null());
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("parabolic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = bin(
        &[
            "grading",
            "--type",
            "A",
            "--rank",
            "2",
            "--crossed",
            "1",
            "--format",
            "json",
            "--out",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let report = from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.grading.depth, 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn deterministic_across_thread_counts() {
    let jobs: [&[&str]; 3] = [
        &[
            "h2",
            "--type",
            "A",
            "--rank",
            "4",
            "--crossed",
            "1,4",
            "--format",
            "json",
        ],
        &[
            "h2",
            "--type",
            "A",
            "--rank",
            "3",
            "--crossed",
            "1,2,3",
            "--degree",
            "3",
        ],
        &[
            "twistor",
            "--type",
            "A",
            "--rank",
            "4",
            "--crossed-q",
            "1,2",
            "--crossed-p",
            "2",
            "--format",
            "json",
        ],
    ];
    for args in jobs {
        let outs: Vec<String> = ["1", "8", "1", "8"]
            .iter()
            .map(|t| {
                let o = bin(args, Some(t));
                assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
                stdout(&o)
            })
            .collect();
        assert!(outs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}
