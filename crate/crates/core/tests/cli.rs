use std::fs;

use g2kit::cli::{self, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use g2kit::model::Model;
use g2kit::rep::BasisCatalog;
use g2kit::verify::{run_suite, Suite};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("g2kit").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn casimir_prints_dim_and_c2() {
    let (code, out, _) = run(&["casimir", "--lambda", "0", "--mu", "1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "dim=7 c2=4\n");
    let (_, out, _) = run(&["casimir", "--lambda", "0", "--mu", "2"]);
    assert_eq!(out, "dim=27 c2=28/3\n");
}

#[test]
fn slice_values() {
    let (code, out, _) = run(&["slice", "--a", "1", "--b", "0", "--quantity", "C6"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "284/441");
    let (_, out, _) = run(&["slice", "--a", "1", "--b", "0", "--quantity", "trA6"]);
    assert_eq!(out.trim(), "11/18");
    let (_, out, _) = run(&["slice", "--a", "-1", "--b", "0", "--quantity", "C2"]);
    assert_eq!(out.trim(), "1");
}

#[test]
fn charpoly_lines() {
    let (code, out, _) = run(&["charpoly", "--a", "1", "--b", "0"]);
    assert_eq!(code, EXIT_OK);
    let want = "t^7 1\nt^6 0\nt^5 -1\nt^4 0\nt^3 1/4\nt^2 0\nt^1 -1/54\nt^0 0\n";
    assert_eq!(out, want);
    let (code, out, _) = run(&["charpoly", "--adjoint", "--a", "1", "--b", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 15);
    assert!(out.ends_with("t^0 0\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["casimir", "--lambda", "0", "--bogus", "1"]).0, EXIT_USAGE);
    assert_eq!(run(&["verify", "--suite", "nonexistent"]).0, EXIT_USAGE);
    assert_eq!(
        run(&["slice", "--a", "1/0", "--b", "0", "--quantity", "C2"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        run(&["slice", "--a", "1", "--b", "0", "--quantity", "nope"]).0,
        EXIT_USAGE
    );
    assert_eq!(run(&[]).0, EXIT_USAGE);
}

#[test]
fn help_exits_0() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    for sub in ["build", "export", "verify", "casimir", "slice", "charpoly"] {
        assert!(out.contains(sub), "{sub} missing from help");
    }
}

#[test]
fn verify_passing_suite_exits_0() {
    let (code, out, err) = run(&["verify", "--suite", "octonion", "--parallel", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("SUITE octonion\n"));
    assert!(out.contains("CASE A1.1 PASS constant=6\n"));
    assert!(out.ends_with("TOTAL cases=8 passed=8 failed=0\n"));
    assert!(err.contains("wall time"));
}

#[test]
fn report_is_independent_of_worker_count() {
    let (_, one, _) = run(&["verify", "--suite", "bilinear", "--parallel", "1"]);
    let (_, four, _) = run(&["verify", "--suite", "bilinear", "--parallel", "4"]);
    assert_eq!(one, four);
}

/// Negating every permutation of ψ₃₆₇ keeps ψ antisymmetric but breaks the
/// ε-duality, so A1.2 must fail with a witness.
#[test]
fn perturbed_psi_fails_in_memory() {
    let mut store = Model::build().unwrap().store;
    let psi = store.get_mut("psi_abc").unwrap();
    for idx in [[2, 5, 6], [2, 6, 5], [5, 2, 6], [5, 6, 2], [6, 2, 5], [6, 5, 2]] {
        let v = psi.get(&idx).clone();
        assert!(!v.is_zero());
        psi.set(&idx, -&v);
    }
    let model = Model::with_store(BasisCatalog::build().unwrap(), store).unwrap();
    let rep = run_suite(Suite::Octonion, &model, 1).unwrap();
    let case = rep.case("A1.2").unwrap();
    assert!(!case.status.is_pass(), "{}", case.render());
    assert!(case.render().contains("tuple=("));
    assert!(!rep.all_passed());
}

#[test]
fn perturbed_tensor_file_exits_1() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("build");
    let dir_s = dir.to_str().unwrap();
    assert_eq!(run(&["build", "--out", dir_s]).0, EXIT_OK);

    let (code, clean, _) = run(&["verify", "--suite", "octonion", "--tensors", dir_s]);
    assert_eq!(code, EXIT_OK, "{clean}");

    let path = dir.join("psi_abc.txt");
    let text = fs::read_to_string(&path).unwrap();
    let one = "(1,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)";
    let minus = "(-1,0,0,0,0,0,0,0|0,0,0,0,0,0,0,0)";
    let flipped: String = text
        .lines()
        .map(|l| {
            let mut idx: Vec<&str> = l.split(' ').take(3).collect();
            idx.sort();
            if idx == ["3", "6", "7"] {
                if l.ends_with(minus) {
                    l.replace(minus, one)
                } else {
                    l.replace(one, minus)
                }
            } else {
                l.to_string()
            }
        })
        .map(|l| l + "\n")
        .collect();
    assert_ne!(flipped, text);
    fs::write(&path, flipped).unwrap();

    let (code, out, _) = run(&["verify", "--suite", "octonion", "--tensors", dir_s]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("CASE A1.2 FAIL"), "{out}");
}

#[test]
fn malformed_tensor_file_exits_2() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path().join("build");
    let dir_s = dir.to_str().unwrap();
    assert_eq!(run(&["build", "--out", dir_s]).0, EXIT_OK);
    fs::write(dir.join("c_abc.txt"), "not a tensor\n").unwrap();
    let (code, _, err) = run(&["verify", "--suite", "basis", "--tensors", dir_s]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("error:"));

    let missing = tmp.path().join("absent");
    assert_eq!(
        run(&["verify", "--suite", "basis", "--tensors", missing.to_str().unwrap()]).0,
        EXIT_USAGE
    );
}

#[test]
fn build_round_trips_through_export() {
    let tmp = tempfile::tempdir().unwrap();
    let build = tmp.path().join("build");
    let direct = tmp.path().join("direct");
    let loaded = tmp.path().join("loaded");
    assert_eq!(run(&["build", "--out", build.to_str().unwrap()]).0, EXIT_OK);
    assert_eq!(run(&["export", "--out", direct.to_str().unwrap()]).0, EXIT_OK);
    assert_eq!(
        run(&[
            "export",
            "--out",
            loaded.to_str().unwrap(),
            "--tensors",
            build.to_str().unwrap()
        ])
        .0,
        EXIT_OK
    );
    for name in ["H.txt", "C.txt", "Y.txt", "ad.txt", "Phi.txt"] {
        let a = fs::read(direct.join(name)).unwrap();
        assert!(!a.is_empty());
        assert_eq!(a, fs::read(loaded.join(name)).unwrap(), "{name}");
    }
    let manifest = fs::read_to_string(build.join("manifest.txt")).unwrap();
    assert!(manifest.contains("h_sign=-1"));
    assert!(manifest.contains("tensor psi_abc dims=7,7,7 nnz=42"));
}
