use std::fs;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn coaleq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coaleq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout_json(out: &Output) -> Value {
    assert_eq!(
        code(out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn fd_analysis() {
    let out = coaleq(&[
        "analyze",
        "--builtin",
        "fd",
        "--players",
        "3",
        "--param",
        "g=2",
        "--param",
        "c=1",
        "--profile",
        "Forward,Drop,Drop",
        "--check",
        "all",
    ]);
    let doc = stdout_json(&out);
    assert_eq!(
        doc["results"],
        json!({
            "resiliency": 1, "repellence": 3, "immunity": 0, "stability": 0,
            "nash": true, "robustness": [], "resistance": []
        })
    );
    assert_eq!(doc["profile"], json!(["Forward", "Drop", "Drop"]));
    assert_eq!(doc["players"].as_array().unwrap().len(), 3);
    assert!(doc["game"].as_str().unwrap().starts_with("FD"));
    let counts = doc["evaluation_counts"].as_object().unwrap();
    assert_eq!(counts.len(), 7);
}

#[test]
fn ioc_robustness() {
    let out = coaleq(&[
        "analyze",
        "--builtin",
        "ioc",
        "--players",
        "3",
        "--param",
        "q=0.5",
        "--param",
        "r=20",
        "--param",
        "b=20",
        "--param",
        "f=2.5",
        "--param",
        "cost_diligent=10",
        "--param",
        "cost_lazy=5",
        "--profile",
        "Diligent,Diligent,Diligent",
        "--check",
        "robustness",
    ]);
    let doc = stdout_json(&out);
    assert_eq!(doc["results"], json!({"robustness": [[1, 2]]}));
    assert_eq!(doc["evaluation_counts"].as_object().unwrap().len(), 1);
}

#[test]
fn constant_nfg_by_index() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("game.nfg");
    fs::write(
        &path,
        "NFG 1 R \"constant\" { \"A\" \"B\" } { 2 2 }\n\n3 3 3 3 3 3 3 3\n",
    )
    .unwrap();
    let out = coaleq(&[
        "analyze",
        "--nfg",
        path.to_str().unwrap(),
        "--profile",
        "0,0",
        "--check",
        "nash",
    ]);
    let doc = stdout_json(&out);
    assert_eq!(doc["results"], json!({"nash": true}));
    assert_eq!(doc["game"], "constant");
}

#[test]
fn text_format_and_verification() {
    let out = coaleq(&[
        "analyze",
        "--builtin",
        "ioc",
        "--players",
        "3",
        "--profile",
        "0,0,0",
        "--format",
        "text",
        "--verify",
        "oracle",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("resistance"), "{text}");
    assert!(text.contains("(1,2) (2,1)"), "{text}");
}

#[test]
fn builtin_and_generated_files_agree() {
    let dir = TempDir::new().unwrap();
    for family in ["ioc", "fd"] {
        for n in 2..=4 {
            let players = n.to_string();
            let path = dir.path().join(format!("{family}{n}.nfg"));
            let path = path.to_str().unwrap();
            let gen = coaleq(&[
                "generate",
                "--builtin",
                family,
                "--players",
                &players,
                "--out",
                path,
            ]);
            assert_eq!(code(&gen), 0);

            let profile = match family {
                "ioc" => vec!["0"; n].join(","),
                _ => std::iter::once("0")
                    .chain(std::iter::repeat_n("1", n - 1))
                    .collect::<Vec<_>>()
                    .join(","),
            };
            let direct = stdout_json(&coaleq(&[
                "analyze",
                "--builtin",
                family,
                "--players",
                &players,
                "--profile",
                &profile,
            ]));
            let via_file = stdout_json(&coaleq(&["analyze", "--nfg", path, "--profile", &profile]));
            assert_eq!(
                direct["results"].to_string(),
                via_file["results"].to_string(),
                "{family} n={n}"
            );
            assert_eq!(direct["evaluation_counts"], via_file["evaluation_counts"]);
        }
    }
}

#[test]
fn generated_ioc_file_has_all_payoffs() {
    let out = coaleq(&["generate", "--builtin", "ioc", "--players", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let body = text.split("\n\n").nth(1).expect("payload after the header");
    assert_eq!(body.split_whitespace().count(), 24);
}

#[test]
fn generate_size_guard() {
    let out = coaleq(&["generate", "--builtin", "ioc", "--players", "21"]);
    assert_eq!(code(&out), 1);
    assert!(out.stdout.is_empty());
}

#[test]
fn bench_rows() {
    let out = coaleq(&[
        "bench",
        "--builtin",
        "fd",
        "--check",
        "resiliency",
        "--min-players",
        "3",
        "--max-players",
        "5",
        "--runs",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,mean,evals");
    assert_eq!(lines.len(), 4);
}

#[test]
fn bench_ioc_repellence_grows() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("bench.csv");
    let out = coaleq(&[
        "bench",
        "--builtin",
        "ioc",
        "--check",
        "repellence",
        "--min-players",
        "3",
        "--max-players",
        "5",
        "--runs",
        "100",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(csv).unwrap();
    let evals: Vec<u64> = text
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(evals.len(), 3);
    assert!(evals.windows(2).all(|w| w[0] < w[1]), "{evals:?}");
}

#[test]
fn bench_on_nfg_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("fd3.nfg");
    let path = path.to_str().unwrap();
    assert_eq!(
        code(&coaleq(&[
            "generate",
            "--builtin",
            "fd",
            "--players",
            "3",
            "--out",
            path
        ])),
        0
    );
    let out = coaleq(&[
        "bench",
        "--nfg",
        path,
        "--check",
        "nash",
        "--runs",
        "1",
        "--profile",
        "0,1,1",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 2);
    let out = coaleq(&[
        "bench",
        "--nfg",
        path,
        "--check",
        "nash",
        "--max-players",
        "4",
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn bad_input_exits_one() {
    let cases: &[&[&str]] = &[
        &["bench", "--check", "unknown"],
        &["bench", "--builtin", "fd", "--check", "all"],
        &[
            "bench",
            "--builtin",
            "fd",
            "--check",
            "nash",
            "--min-players",
            "5",
            "--max-players",
            "3",
        ],
        &[
            "analyze",
            "--builtin",
            "fd",
            "--players",
            "3",
            "--profile",
            "Forward,Drop",
        ],
        &[
            "analyze",
            "--builtin",
            "fd",
            "--players",
            "3",
            "--profile",
            "Forward,Drop,Sleep",
        ],
        &[
            "analyze",
            "--builtin",
            "fd",
            "--players",
            "3",
            "--profile",
            "0,1,1",
            "--param",
            "c=3",
        ],
        &[
            "analyze",
            "--builtin",
            "fd",
            "--players",
            "3",
            "--profile",
            "0,1,1",
            "--param",
            "z=3",
        ],
        &[
            "analyze",
            "--builtin",
            "fd",
            "--players",
            "3",
            "--profile",
            "0,1,1",
            "--check",
            "bogus",
        ],
        &["analyze", "--builtin", "fd", "--profile", "0,1,1"],
        &["analyze", "--profile", "0,1,1"],
        &[
            "analyze",
            "--nfg",
            "/definitely/not/here.nfg",
            "--profile",
            "0",
        ],
        &[
            "analyze",
            "--builtin",
            "chess",
            "--players",
            "2",
            "--profile",
            "0,0",
        ],
        &["frobnicate"],
    ];
    for args in cases {
        let out = coaleq(args);
        assert_eq!(
            code(&out),
            1,
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn malformed_nfg_reports_position() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("bad.nfg");
    fs::write(&path, "NFG 1 R \"x\" { \"A\" } { 2 }\n\n1 oops\n").unwrap();
    let out = coaleq(&["analyze", "--nfg", path.to_str().unwrap(), "--profile", "0"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("3:"));
}

#[test]
fn help_exits_zero() {
    assert_eq!(code(&coaleq(&["--help"])), 0);
    assert_eq!(code(&coaleq(&["analyze", "--help"])), 0);
}
