//! Acceptance gate: twelve criteria, one `criterion N PASS|FAIL` line each.
//! Every comparison is exact.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::{Duration, Instant};

use g2kit::casimir::{c2, dim};
use g2kit::cli;
use g2kit::model::Model;
use g2kit::rational::Rational;
use g2kit::verify::{run_suite, Status, Suite, VerificationReport};

/// What a case must show: passing, and optionally a detail substring and a
/// witness (for existence checks).
struct Expect {
    id: &'static str,
    detail: Option<String>,
    witness: bool,
}

fn id(id: &'static str) -> Expect {
    Expect {
        id,
        detail: None,
        witness: false,
    }
}

fn with(id: &'static str, detail: impl Into<String>) -> Expect {
    Expect {
        id,
        detail: Some(detail.into()),
        witness: false,
    }
}

fn witnessed(id: &'static str) -> Expect {
    Expect {
        id,
        detail: None,
        witness: true,
    }
}

fn constants(ids: &[&'static str], values: &[&'static str]) -> Vec<Expect> {
    assert_eq!(ids.len(), values.len());
    ids.iter()
        .zip(values)
        .map(|(i, v)| with(i, format!("constant={v}")))
        .collect()
}

struct Criterion {
    n: usize,
    title: &'static str,
    suites: Vec<Suite>,
    expect: Vec<Expect>,
    bound: Duration,
}

struct Runs {
    reports: HashMap<Suite, VerificationReport>,
    elapsed: HashMap<Suite, Duration>,
}

impl Runs {
    fn find(&self, suites: &[Suite], id: &str) -> Option<&g2kit::verify::CaseOutcome> {
        suites.iter().find_map(|s| self.reports[s].case(id))
    }
}

/// Problems with one criterion; empty means pass.
fn judge(c: &Criterion, runs: &Runs) -> Vec<String> {
    let mut problems = Vec::new();
    for s in &c.suites {
        let rep = &runs.reports[s];
        for case in rep.cases.iter().filter(|x| !x.status.is_pass()) {
            problems.push(format!("suite {s}: {}", case.render()));
        }
    }
    for e in &c.expect {
        let Some(case) = runs.find(&c.suites, e.id) else {
            problems.push(format!("case {} missing", e.id));
            continue;
        };
        if let Some(d) = &e.detail {
            let got = case.detail.as_deref().unwrap_or("");
            if !got.split(' ').any(|part| part == d) {
                problems.push(format!("case {} detail {got:?}, want {d:?}", e.id));
            }
        }
        if e.witness && !matches!(case.status, Status::Pass(Some(_))) {
            problems.push(format!("case {} has no violating tuple", e.id));
        }
    }
    let elapsed: Duration = c.suites.iter().map(|s| runs.elapsed[s]).sum();
    if elapsed > c.bound {
        problems.push(format!(
            "took {:.1}s, bound {}s",
            elapsed.as_secs_f64(),
            c.bound.as_secs()
        ));
    }
    problems
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            n: 1,
            title: "basis integrity and x-span closure",
            suites: vec![Suite::Basis, Suite::ProductLaw],
            expect: ["1.2", "4.5", "5.1", "5.2", "10.1", "13.1", "13.2", "13.3", "10.8"]
                .map(id)
                .into(),
            bound: secs(10),
        },
        Criterion {
            n: 2,
            title: "octonion identities and Jacobi violation",
            suites: vec![Suite::Octonion],
            expect: {
                let mut v: Vec<Expect> = ["A1.2", "A1.3", "A1.5", "A1.6", "A1.7"].map(id).into();
                v.push(with("A1.1", "constant=6"));
                v.push(with("A1.4", "constant=3"));
                v.push(witnessed("3.1"));
                v
            },
            bound: secs(10),
        },
        Criterion {
            n: 3,
            title: "product laws and c_abc = ψ_abc/√3",
            suites: vec![Suite::ProductLaw],
            expect: ["10.2", "10.3", "10.4", "10.5", "10.6", "10.7", "10.10"].map(id).into(),
            bound: secs(30),
        },
        Criterion {
            n: 4,
            title: "bilinear constants",
            suites: vec![Suite::Bilinear],
            expect: constants(
                &[
                    "20.1", "20.2", "20.3", "20.4", "20.5", "20.6", "20.7", "20.8", "20.9", "20.10", "20.11", "20.12",
                ],
                &[
                    "8", "2", "4", "32/9", "48/7", "2", "2/9", "6/7", "18", "28/3", "110/7", "28/9",
                ],
            ),
            bound: secs(60),
        },
        Criterion {
            n: 5,
            title: "sandwich lemmas",
            suites: vec![Suite::Lemmas],
            expect: constants(
                &["21.1", "21.2", "21.3", "21.4", "21.5", "21.6", "21.7", "21.8", "21.9"],
                &["0", "2", "-2/3", "1", "-1", "-1/3", "5/7", "-9/7", "-9/7"],
            ),
            bound: secs(30),
        },
        Criterion {
            n: 6,
            title: "completeness, projectors and pair traces",
            suites: vec![Suite::Completeness],
            expect: {
                let mut v: Vec<Expect> = ["13.4", "13.5", "13.6", "26.8", "26.9", "26.10", "26.11"]
                    .map(id)
                    .into();
                v.push(with("26.7", "pair_traces=1,27,7,14"));
                v.push(with("26.13", "pair_traces=1,27,77,14,77"));
                v
            },
            bound: secs(60),
        },
        Criterion {
            n: 7,
            title: "second-class identities and Λ eigenvalues",
            suites: vec![Suite::SecondClass],
            expect: vec![
                id("27.12"),
                with("27.13", "constant=6/7"),
                with("27.14", "constant=10/3"),
                id("27.20"),
                with("27.21", "constant=10"),
                with("28.1", "constant=1"),
                with("27.6:1", "eigenvalue=-8"),
                with("27.6:27", "eigenvalue=-10/3"),
                with("27.6:77", "eigenvalue=2"),
                with("27.6:14", "eigenvalue=-4"),
                with("27.6:77'", "eigenvalue=0"),
                id("27.18"),
            ],
            bound: secs(300),
        },
        Criterion {
            n: 8,
            title: "trilinear constants and non-proportionality",
            suites: vec![Suite::Trilinear],
            expect: {
                let mut v = constants(
                    &["35.4", "35.5", "35.6", "35.7", "35.8", "35.9"],
                    &["-4", "20/7", "10/3", "22/21", "-58/63", "53/7"],
                );
                v.push(id("35.12"));
                v.push(witnessed("35.14"));
                v
            },
            bound: secs(120),
        },
        Criterion {
            n: 9,
            title: "dimension and Casimir arithmetic, matrix Casimir sums",
            suites: vec![Suite::Casimir],
            expect: {
                let mut v: Vec<Expect> = ["25.1", "25.3"].map(id).into();
                v.extend(constants(
                    &["20.30", "20.31", "20.32", "20.33", "20.34"],
                    &["8", "4", "2", "28/3", "54/7"],
                ));
                v
            },
            bound: secs(5),
        },
        Criterion {
            n: 10,
            title: "quartic Casimir is c2² + 28/3·c2",
            suites: vec![Suite::Casimir],
            expect: vec![
                with("29.4:7", "value=160/3"),
                with("29.4:14", "value=416/3"),
                with("29.4:27", "value=1568/9"),
            ],
            bound: secs(120),
        },
        Criterion {
            n: 11,
            title: "adjoint-vector invariants on the slice and at random vectors",
            suites: vec![Suite::Invariants],
            expect: {
                let mut v: Vec<Expect> = [
                    "40.10", "41.2", "41.4", "41.6", "47.2", "47.3A", "47.3B", "47.12", "47.13",
                ]
                .map(id)
                .into();
                v.extend(
                    [
                        "40.1", "40.8", "41.7", "41.9", "47.1", "47.8", "47.9", "47.10", "47.11", "47.14",
                    ]
                    .map(|i| with(i, "samples=20")),
                );
                v.push(id("40.11"));
                v.push(with("slice(1,0)", "trA6,C6,trB2,trB6=11/18,284/441,8,127/9"));
                v
            },
            bound: secs(180),
        },
    ]
}

fn casimir_table() -> Vec<String> {
    let mut problems = Vec::new();
    for (l, m, d, c) in [
        (0, 1, 7u32, Some((4, 1))),
        (1, 0, 14, Some((8, 1))),
        (0, 2, 27, Some((28, 3))),
        (2, 0, 77, None),
        (0, 3, 77, None),
    ] {
        if dim(l, m) != d.into() {
            problems.push(format!("dim({l},{m}) = {}", dim(l, m)));
        }
        if let Some((a, b)) = c {
            if c2(l, m) != Rational::new(a, b).unwrap() {
                problems.push(format!("c2({l},{m}) = {}", c2(l, m)));
            }
        }
    }
    problems
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("g2kit").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn dir_contents(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    files.sort();
    files
}

/// Two `build` + `verify --suite all` rounds in fresh directories.
fn determinism() -> Vec<String> {
    let mut problems = Vec::new();
    let mut rounds = Vec::new();
    for _ in 0..2 {
        let tmp = tempfile::tempdir().unwrap();
        let build = tmp.path().join("build");
        let report = tmp.path().join("report.txt");
        let (code, _) = run_cli(&["build", "--out", build.to_str().unwrap()]);
        if code != cli::EXIT_OK {
            problems.push(format!("build exit {code}"));
        }
        let (code, stdout) = run_cli(&[
            "verify",
            "--suite",
            "all",
            "--tensors",
            build.to_str().unwrap(),
            "--report",
            report.to_str().unwrap(),
        ]);
        if code != cli::EXIT_OK {
            problems.push(format!("verify exit {code}"));
        }
        let written = fs::read(&report).unwrap_or_default();
        if written != stdout.as_bytes() {
            problems.push("report file differs from printed report".into());
        }
        rounds.push((dir_contents(&build), written));
    }
    if rounds[0].0 != rounds[1].0 {
        problems.push("build outputs differ between runs".into());
    }
    if rounds[0].1 != rounds[1].1 || rounds[0].1.is_empty() {
        problems.push("reports differ between runs".into());
    }
    problems
}

fn print_line(n: usize, title: &str, elapsed: Duration, problems: &[String]) -> bool {
    // Written past the test harness capture so the lines always show.
    let mut out = std::io::stdout().lock();
    let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "criterion {n} {verdict} {title} ({:.2}s)", elapsed.as_secs_f64());
    for p in problems {
        let _ = writeln!(out, "    {p}");
    }
    problems.is_empty()
}

#[test]
fn acceptance() {
    let model = Model::build().expect("model builds");
    let mut runs = Runs {
        reports: HashMap::new(),
        elapsed: HashMap::new(),
    };
    for s in Suite::EACH {
        let start = Instant::now();
        let rep = run_suite(s, &model, 1).expect("suite runs");
        runs.elapsed.insert(s, start.elapsed());
        runs.reports.insert(s, rep);
    }

    let mut all = true;
    for c in criteria() {
        let mut problems = judge(&c, &runs);
        if c.n == 9 {
            problems.extend(casimir_table());
        }
        let elapsed = c.suites.iter().map(|s| runs.elapsed[s]).sum();
        all &= print_line(c.n, c.title, elapsed, &problems);
    }

    let start = Instant::now();
    let problems = determinism();
    all &= print_line(
        12,
        "two build + verify rounds are byte-identical",
        start.elapsed(),
        &problems,
    );

    assert!(all, "acceptance criteria failed");
}
