use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/fixtures").join(name);
    fs::read_to_string(path).unwrap()
}

fn ihopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ihopf")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn status(o: &Output) -> i32 {
    o.status.code().unwrap()
}

struct Scratch(tempfile::TempDir);

impl Scratch {
    fn new() -> Self {
        Scratch(tempfile::tempdir().unwrap())
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    fn arg(&self, name: &str) -> String {
        self.path(name).to_str().unwrap().to_string()
    }

    fn write(&self, name: &str, text: &str) -> String {
        fs::write(self.path(name), text).unwrap();
        self.arg(name)
    }

    fn read(&self, name: &str) -> String {
        fs::read_to_string(self.path(name)).unwrap()
    }
}

#[test]
fn catalog_lists_and_emits_taft() {
    let out = ihopf(&["catalog", "list"]);
    assert_eq!(status(&out), 0);
    for family in ["group", "taft", "tensor-dual"] {
        assert!(stdout(&out).contains(family));
    }
    let out = ihopf(&["catalog", "taft", "2"]);
    assert_eq!(status(&out), 0);
    assert_eq!(stdout(&out), fixture("taft2.hopf"));
    let dir = Scratch::new();
    let out = ihopf(&["catalog", "taft", "2", "-o", &dir.arg("h.hopf")]);
    assert_eq!(status(&out), 0);
    assert_eq!(dir.read("h.hopf"), fixture("taft2.hopf"));
}

#[test]
fn catalog_rejects_bad_requests() {
    assert_eq!(status(&ihopf(&["catalog", "quaternion"])), 2);
    assert_eq!(status(&ihopf(&["catalog", "taft", "3"])), 2);
    assert_eq!(status(&ihopf(&["catalog", "taft", "2", "2"])), 2);
    assert_eq!(status(&ihopf(&["catalog", "group", "3", "--field", "prime 3"])), 2);
    assert_eq!(status(&ihopf(&["catalog", "group", "3", "--field", "prime 7"])), 0);
    assert_eq!(status(&ihopf(&["catalog", "group", "2", "--field", "real"])), 2);
}

#[test]
fn check_passes_every_catalog_family() {
    let dir = Scratch::new();
    let cases: [&[&str]; 5] = [
        &["taft", "2"],
        &["taft", "3", "--field", "cyclotomic 3"],
        &["group", "2", "3"],
        &["group", "4", "--field", "prime 5"],
        &["tensor-dual", "taft", "2"],
    ];
    for (i, params) in cases.iter().enumerate() {
        let path = dir.arg(&format!("{i}.hopf"));
        let mut args = vec!["catalog"];
        args.extend_from_slice(params);
        args.extend_from_slice(&["-o", &path]);
        assert_eq!(status(&ihopf(&args)), 0, "{params:?}");
        let out = ihopf(&["check", &path]);
        assert_eq!(status(&out), 0, "{params:?}: {}", stdout(&out));
        let text = stdout(&out);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 8);
        assert!(lines.iter().all(|l| l.starts_with("PASS ")));
    }
}

#[test]
fn check_reports_failures_with_exit_one() {
    let dir = Scratch::new();
    let broken = fixture("taft2.hopf").replacen("4 2 3 -1\n", "4 2 3 1\n", 1);
    let path = dir.write("broken.hopf", &broken);
    let out = ihopf(&["check", &path]);
    assert_eq!(status(&out), 1);
    assert!(stdout(&out).lines().any(|l| l.starts_with("FAIL associativity at (")));
}

#[test]
fn malformed_and_missing_files_exit_two() {
    let dir = Scratch::new();
    let path = dir.write("bad.hopf", &fixture("taft2.hopf").replacen("2 4 3 1\n", "2 4 3 1/0\n", 1));
    let out = ihopf(&["check", &path]);
    assert_eq!(status(&out), 2);
    assert!(stderr(&out).contains("line 16"));
    assert_eq!(status(&ihopf(&["check", &dir.arg("absent.hopf")])), 2);
    assert_eq!(status(&ihopf(&["check"])), 2);
    assert_eq!(status(&ihopf(&["frobnicate"])), 2);
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let dir = Scratch::new();
    let path = dir.write("broken.hopf", &fixture("taft2.hopf").replacen("3 2 3 1\n", "3 2 3 2\n", 1));
    let baseline = ihopf(&["check", &path]);
    assert_eq!(status(&baseline), 1);
    for jobs in ["1", "2", "4"] {
        let out = ihopf(&["--jobs", jobs, "check", &path]);
        assert_eq!(out.stdout, baseline.stdout);
    }
}

#[test]
fn tables_reproduce_the_taft_fixtures() {
    let dir = Scratch::new();
    let h = dir.write("h.hopf", &fixture("taft2.hopf"));
    let out = ihopf(&["table", &h]);
    assert_eq!(status(&out), 0);
    assert_eq!(stdout(&out), fixture("taft2_table.txt"));
    let out = ihopf(&["dual", &h, "-o", &dir.arg("dual.hopf")]);
    assert_eq!(status(&out), 0);
    assert_eq!(stdout(&ihopf(&["table", &dir.arg("dual.hopf")])), fixture("taft2_dual_table.txt"));
    assert_eq!(status(&ihopf(&["check", &dir.arg("dual.hopf")])), 0);
    let relabeled = stdout(&ihopf(&["table", &h, "--labels", "a,b,c,d"]));
    assert!(relabeled.starts_with("   a  b"));
    assert_eq!(status(&ihopf(&["table", &h, "--labels", "a,b"])), 2);
}

#[test]
fn dual_twice_is_the_identity() {
    let dir = Scratch::new();
    let h = dir.write("h.hopf", &fixture("taft2.hopf"));
    ihopf(&["dual", &h, "-o", &dir.arg("d.hopf")]);
    ihopf(&["dual", &dir.arg("d.hopf"), "-o", &dir.arg("dd.hopf")]);
    let original = stdout(&ihopf(&["table", &h]));
    assert_eq!(stdout(&ihopf(&["table", &dir.arg("dd.hopf")])), original);
}

#[test]
fn ihopf_reproduces_the_itaft_table() {
    let dir = Scratch::new();
    let h = dir.write("h.hopf", &fixture("taft2.hopf"));
    let out = ihopf(&["ihopf", &h, "--witness", "phi", "--labels", "d1,d2,d3,d4", "-o", &dir.arg("i.hopf")]);
    assert_eq!(status(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out), fixture("itaft_table.txt"));
    let saved = dir.read("i.hopf");
    assert!(saved.starts_with("hopf-presentation 1\n"));
    assert!(!saved.contains("\ncomult\n"));
    let out = ihopf(&["table", &dir.arg("i.hopf"), "--labels", "d1,d2,d3,d4"]);
    assert_eq!(stdout(&out), fixture("itaft_table.txt"));
}

#[test]
fn ihopf_enforces_construction_hypotheses() {
    let dir = Scratch::new();
    let h = dir.write("h.hopf", &fixture("taft2.hopf"));
    assert_eq!(status(&ihopf(&["ihopf", &h, "--simple"])), 2);
    assert_eq!(status(&ihopf(&["ihopf", &h, "--scaled", "1,1,1,1"])), 2);
    assert_eq!(status(&ihopf(&["ihopf", &h, "--witness", "psi"])), 2);
    assert_eq!(status(&ihopf(&["ihopf", &h])), 2);
    assert_eq!(status(&ihopf(&["ihopf", &h, "--simple", "--witness", "phi"])), 2);
    let trivial = dir.arg("trivial.hopf");
    ihopf(&["catalog", "group", "1", "-o", &trivial]);
    assert_eq!(stdout(&ihopf(&["ihopf", &trivial, "--simple"])), "   1\n1  1\n");
    assert_eq!(stdout(&ihopf(&["ihopf", &trivial, "--scaled", "1"])), "   1\n1  1\n");
}

#[test]
fn witness_iso_certifies_cyclic_order_four() {
    let dir = Scratch::new();
    let h = dir.arg("h8.hopf");
    assert_eq!(status(&ihopf(&["catalog", "taft", "2", "--field", "cyclotomic 8", "-o", &h])), 0);
    let i = dir.arg("i8.hopf");
    assert_eq!(status(&ihopf(&["ihopf", &h, "--witness", "phi", "-o", &i])), 0);
    let x = "0; 0; [0, 1, 0, 0] @ zeta(8); 0";
    let out = ihopf(&["witness-iso", &i, "--element", x, "--order", "4"]);
    assert_eq!(status(&out), 0, "{}{}", stdout(&out), stderr(&out));
    assert_eq!(stdout(&out), "PASS commutative\nPASS cyclic_witness\n");
    let out = ihopf(&["witness-iso", &i, "--element", "0,0,1,0", "--order", "4"]);
    assert_eq!(status(&out), 1);
    assert!(stdout(&out).contains("x^m = 1"));
    assert_eq!(status(&ihopf(&["witness-iso", &i, "--element", "0,1", "--order", "4"])), 2);
}

#[test]
fn selfdual_reports_both_directions_and_symmetry() {
    let dir = Scratch::new();
    let h = dir.write("h.hopf", &fixture("taft2.hopf"));
    let out = ihopf(&["selfdual", &h, "--witness", "phi"]);
    assert_eq!(status(&out), 0);
    let text = stdout(&out);
    for name in ["selfdual_algebra", "selfdual_coalgebra", "antipode_intertwining", "symmetric"] {
        assert!(text.contains(&format!("PASS {name}")), "{text}");
    }
    let skewed = fixture("taft2.hopf").replace("witness phi\n1; 1;", "witness phi\n1; 2;");
    let out = ihopf(&["selfdual", &dir.write("skew.hopf", &skewed), "--witness", "phi"]);
    assert_eq!(status(&out), 1);
    assert!(stdout(&out).contains("FAIL symmetric at (1,2)"));
}

#[test]
fn basechange_transports_structure_and_witnesses() {
    let dir = Scratch::new();
    let h = dir.write("h.hopf", &fixture("taft2.hopf"));
    let t = dir.write(
        "t.matrix",
        "hopf-matrix 1\nfield rational\ndim 4\nmatrix\n1; 1; 0; 0\n0; 2; 0; 1\n0; 0; 1; 0\n1; 0; 0; 3\nend\n",
    );
    let moved = dir.arg("moved.hopf");
    let out = ihopf(&["basechange", &h, "--matrix", &t, "-o", &moved]);
    assert_eq!(status(&out), 0, "{}", stderr(&out));
    assert_eq!(status(&ihopf(&["check", &moved])), 0);
    assert_eq!(status(&ihopf(&["selfdual", &moved, "--witness", "phi"])), 0);
    let singular = dir.write("s.matrix", "hopf-matrix 1\nfield rational\ndim 4\nmatrix\n1; 1; 0; 0\n1; 1; 0; 0\n0; 0; 1; 0\n0; 0; 0; 1\nend\n");
    assert_eq!(status(&ihopf(&["basechange", &h, "--matrix", &singular, "-o", &dir.arg("x.hopf")])), 2);
}
