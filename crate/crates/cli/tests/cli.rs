use std::path::Path;
use std::process::Command;

use clifford_cli::{orientation_line, run, sweep, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};
use clifford_core::representation::all_builtins;
use clifford_core::{
    builtin, classify, permutation_orientation, product_table, AnyMultivector, Convention, Multivector, Signature,
    DEFAULT_TABLE_CAP,
};

/// Runs the installed binary.
fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_clifford")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

/// Runs the library entry point in-process.
fn lib(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("clifford").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_doc(dir: &Path, name: &str, mv: impl Into<AnyMultivector>) -> String {
    let path = dir.join(name);
    std::fs::write(&path, mv.into().to_json()).unwrap();
    path.to_str().unwrap().to_owned()
}

fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).unwrap()
}

#[test]
fn binary_and_library_agree() {
    for args in [
        &["table", "--p", "2", "--q", "1"][..],
        &["classify", "--sweep", "4"],
        &["verify", "--all"],
        &["orientation", "--max-n", "6"],
        &["table", "--p", "0", "--q", "0"],
    ] {
        assert_eq!(bin(args), lib(args), "{args:?}");
    }
}

#[test]
fn table_is_the_serialized_library_table() {
    for (p, q) in [(1, 0), (1, 3), (2, 2), (0, 3)] {
        for (order, conv) in [("grade-lex", Convention::GradeLex), ("binary", Convention::Binary)] {
            let table = product_table(sig(p, q), conv, DEFAULT_TABLE_CAP).unwrap();
            let (code, csv, _) = lib(&["table", "--p", &p.to_string(), "--q", &q.to_string(), "--order", order]);
            assert_eq!((code, csv), (EXIT_OK, table.to_csv()));
            let (code, json, _) =
                lib(&["table", "--p", &p.to_string(), "--q", &q.to_string(), "--order", order, "--format", "json"]);
            assert_eq!((code, json), (EXIT_OK, serde_json::to_string(&table).unwrap() + "\n"));
        }
    }
    assert_eq!(lib(&["table", "--p", "1", "--q", "0"]).1, "+0,+1\n+1,+0\n");
}

#[test]
fn table_rejects_empty_and_oversized_signatures() {
    assert_eq!(lib(&["table", "--p", "0", "--q", "0"]).0, EXIT_USAGE);
    assert_eq!(lib(&["table", "--p", "5", "--q", "4"]).0, EXIT_USAGE);
    assert_eq!(lib(&["table", "--p", "4", "--q", "4"]).0, EXIT_OK);
    assert_eq!(lib(&["table", "--p", "1", "--q", "1", "--order", "random"]).0, EXIT_USAGE);
}

#[test]
fn mul_of_vectors() {
    let dir = tempfile::tempdir().unwrap();
    let s = sig(1, 3);
    let x = Multivector::embed_vector(&[1.0, 2.0, 0.0, 0.0], s, Convention::GradeLex).unwrap();
    let y = Multivector::embed_vector(&[3.0, 0.0, 1.0, 0.0], s, Convention::GradeLex).unwrap();
    let lhs = write_doc(dir.path(), "x.json", x.clone());
    let rhs = write_doc(dir.path(), "y.json", y.clone());
    let (code, stdout, _) = lib(&["mul", "--lhs", &lhs, "--rhs", &rhs]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(stdout, AnyMultivector::from(x.geometric_product(&y).unwrap()).to_json() + "\n");
    let AnyMultivector::Real(z) = AnyMultivector::from_json(&stdout).unwrap() else { panic!("real") };
    let nonzero: Vec<(usize, f64)> = z.coeffs().iter().copied().enumerate().filter(|&(_, c)| c != 0.0).collect();
    assert_eq!(nonzero, vec![(0, 3.0), (5, -6.0), (6, 1.0), (8, 2.0)]);
    assert_eq!(lib(&["mul", "--p", "1", "--q", "3", "--lhs", &lhs, "--rhs", &rhs]).0, EXIT_OK);
    assert_eq!(lib(&["mul", "--p", "3", "--q", "1", "--lhs", &lhs, "--rhs", &rhs]).0, EXIT_USAGE);
}

#[test]
fn mul_of_unit_scalars_and_complex_documents() {
    let dir = tempfile::tempdir().unwrap();
    let one = Multivector::scalar(sig(2, 0), Convention::GradeLex, 1.0);
    let path = write_doc(dir.path(), "one.json", one.clone());
    let (code, stdout, _) = lib(&["mul", "--lhs", &path, "--rhs", &path]);
    assert_eq!((code, stdout), (EXIT_OK, AnyMultivector::from(one).to_json() + "\n"));

    let doc = r#"{"p":0,"q":1,"field":"complex","coeffs":[[0,1],[1,0]]}"#;
    let path = dir.path().join("z.json");
    std::fs::write(&path, doc).unwrap();
    let path = path.to_str().unwrap();
    let (code, stdout, _) = lib(&["mul", "--lhs", path, "--rhs", path]);
    assert_eq!(code, EXIT_OK);
    // (i + e)(i + e) = -1 + 2ie - 1 with e^2 = -1
    assert_eq!(
        stdout,
        r#"{"p":0,"q":1,"field":"complex","convention":"grade-lex","coeffs":[[-2.0,0.0],[0.0,2.0]]}"#.to_owned() + "\n"
    );
}

#[test]
fn mul_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_doc(dir.path(), "a.json", Multivector::scalar(sig(1, 0), Convention::GradeLex, 1.0));
    let b = write_doc(dir.path(), "b.json", Multivector::scalar(sig(0, 1), Convention::GradeLex, 1.0));
    let (code, _, stderr) = lib(&["mul", "--lhs", &a, "--rhs", &b]);
    assert_eq!(code, EXIT_USAGE);
    assert!(stderr.starts_with("error:"));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"p":1,"q":0,"field":"real","coeffs":[1,2,3]}"#).unwrap();
    assert_eq!(lib(&["mul", "--lhs", bad.to_str().unwrap(), "--rhs", &a]).0, EXIT_USAGE);
    let missing = dir.path().join("missing.json");
    assert_eq!(lib(&["mul", "--lhs", missing.to_str().unwrap(), "--rhs", &a]).0, EXIT_USAGE);
    let c = write_doc(
        dir.path(),
        "c.json",
        Multivector::scalar(sig(1, 0), Convention::GradeLex, num_complex::Complex64::new(1.0, 0.0)),
    );
    assert_eq!(lib(&["mul", "--lhs", &a, "--rhs", &c]).0, EXIT_USAGE);
}

#[test]
fn classify_outputs() {
    let (code, stdout, _) = lib(&["classify", "--p", "1", "--q", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(stdout, "{\"base\":\"H\",\"size\":2,\"doubled\":false,\"real_dim\":16}\n");
    assert_eq!(stdout, serde_json::to_string(&classify(1, 3).unwrap()).unwrap() + "\n");
    let (_, stdout, _) = lib(&["classify", "--p", "1", "--q", "0"]);
    assert_eq!(stdout, "{\"base\":\"R\",\"size\":1,\"doubled\":true,\"real_dim\":2}\n");

    let (code, stdout, _) = lib(&["classify", "--sweep", "3"]);
    assert_eq!(code, EXIT_OK);
    let entries = sweep(3).unwrap();
    assert_eq!(entries.len(), 9);
    let expected: String = entries.iter().map(|e| serde_json::to_string(e).unwrap() + "\n").collect();
    assert_eq!(stdout, expected);
    for e in &entries {
        assert_eq!(e.descriptor.real_dimension(), 1 << (e.p + e.q));
    }
    assert!(stdout.starts_with("{\"p\":0,\"q\":1,\"base\":\"C\",\"size\":1,\"doubled\":false,\"real_dim\":2}\n"));

    assert_eq!(lib(&["classify", "--p", "0", "--q", "0"]).0, EXIT_USAGE);
    assert_eq!(lib(&["classify"]).0, EXIT_USAGE);
    assert_eq!(lib(&["classify", "--p", "1"]).0, EXIT_USAGE);
    assert_eq!(lib(&["classify", "--p", "1", "--q", "1", "--sweep", "2"]).0, EXIT_USAGE);
}

#[test]
fn verify_outputs() {
    let (code, stdout, _) = lib(&["verify", "--rep", "majorana"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(stdout, builtin("majorana").unwrap().verify().to_json() + "\n");
    assert!(stdout.contains("\"verdict\":\"isomorphism\""));
    let (_, stdout, _) = lib(&["verify", "--rep", "psi41"]);
    assert!(stdout.contains("\"blade_image_rank\":32") && stdout.contains("\"verdict\":\"isomorphism\""));

    let (code, stdout, _) = lib(&["verify", "--all"]);
    assert_eq!(code, EXIT_OK);
    let expected: String = all_builtins().iter().map(|r| r.verify().to_json() + "\n").collect();
    assert_eq!(stdout, expected);

    assert_eq!(lib(&["verify", "--rep", "nonesuch"]).0, EXIT_USAGE);
    assert_eq!(lib(&["verify"]).0, EXIT_USAGE);
    assert_eq!(lib(&["verify", "--rep", "pauli", "--all"]).0, EXIT_USAGE);
    assert_ne!(EXIT_VERIFY_FAILED, EXIT_USAGE);
}

#[test]
fn orientation_outputs() {
    let (code, stdout, _) = lib(&["orientation", "--max-n", "2"]);
    assert_eq!((code, stdout.as_str()), (EXIT_OK, "1 +1\n2 +1\n"));
    let (_, stdout, _) = lib(&["orientation", "--max-n", "12"]);
    let expected: String = (1..=12).map(|n| orientation_line(n, permutation_orientation(n).unwrap()) + "\n").collect();
    assert_eq!(stdout, expected);
    let (_, stdout, _) = lib(&["orientation", "--max-n", "5", "--order", "grade-lex"]);
    assert_eq!(stdout, "1 +1\n2 +1\n3 -1\n4 +1\n5 -1\n");
    assert_eq!(lib(&["orientation", "--max-n", "25"]).0, EXIT_USAGE);
    assert_eq!(lib(&["orientation", "--max-n", "0"]), (EXIT_OK, String::new(), String::new()));
}

#[test]
fn help_and_usage() {
    let (code, stdout, _) = lib(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(stdout.contains("orientation"));
    let (code, _, stderr) = lib(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!stderr.is_empty());
    assert_eq!(lib(&[]).0, EXIT_USAGE);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "--p", "3", "--q", "1", "--format", "json"][..],
        &["verify", "--all"],
        &["classify", "--sweep", "6"],
    ] {
        assert_eq!(lib(args), lib(args));
    }
}
