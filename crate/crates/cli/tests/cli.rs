use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chenforms"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn check_lines(text: &str) -> Vec<Vec<&str>> {
    text.lines()
        .map(|l| l.split('\t').collect::<Vec<_>>())
        .filter(|f| f.len() == 4 && (f[3] == "PASS" || f[3] == "FAIL"))
        .collect()
}

#[test]
fn coeffs_tables() {
    let o = run(&["coeffs", "cusp11", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0\t0\n1\t1\n2\t-2\n3\t-1\n4\t2\n5\t1\n");
    assert_eq!(stdout(&run(&["coeffs", "eis11", "0"])), "0\t-10\n");
    assert_eq!(stdout(&run(&["coeffs", "cusp11", "0"])), "0\t0\n");
    assert_eq!(run(&["coeffs", "nope", "3"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["--level", "13", "period-matrix"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["order-cert", "cusp11:hol,cusp11:antihol"]).status.code(), Some(2));
    assert_eq!(run(&["itint", "dz:hol", "0,2;1,-1"]).status.code(), Some(2));
    assert_eq!(run(&["--config", "/nonexistent/file", "coeffs", "cusp11"]).status.code(), Some(2));
}

#[test]
fn itint_simplex() {
    let o = run(&["itint", "poly(1):hol,poly(1):hol", "0,2;1,3"]);
    let out = stdout(&o);
    let value = out.split('\t').next().unwrap();
    let (re, im) = value.split_once(',').unwrap();
    assert!(re.parse::<f64>().unwrap().abs() < 1e-12);
    assert!((im.parse::<f64>().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn period_of_eisenstein_along_translation() {
    let out = stdout(&run(&["period", "eis11:hol", "1,1,0,1"]));
    let (re, _) = out.split('\t').next().unwrap().split_once(',').unwrap();
    assert!((re.parse::<f64>().unwrap() + 10.0).abs() < 1e-8);
}

#[test]
fn period_matrix_table() {
    let o = run(&["period-matrix"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<Vec<&str>> = out.lines().map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows[0][0], "letter");
    assert_eq!(rows[0].len(), 4);
    let cell = |r: usize, c: usize| -> (f64, f64) {
        let (a, b) = rows[r][c].split_once(',').unwrap();
        (a.parse().unwrap(), b.parse().unwrap())
    };
    assert_eq!(rows[3][0], "eis11:hol");
    let (re, im) = cell(3, 1);
    assert!((re + 10.0).abs() < 1e-8 && im.abs() < 1e-8);
    let (re, im) = cell(1, 1);
    assert!(re.abs() < 1e-8 && im.abs() < 1e-8);
    let det: f64 = out.lines().last().unwrap().strip_prefix("det_abs=").unwrap().parse().unwrap();
    assert!(det > 1e-6);
}

#[test]
fn singular_period_matrix_exits_one() {
    let mut f = tempfile();
    writeln!(f.1, "1,1,0,1\n4,1,11,3\n12,1,11,1").unwrap();
    let o = run(&["--elements", &f.0, "period-matrix"]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_file(&f.0).ok();
}

#[test]
fn element_outside_gamma0_is_rejected() {
    let mut f = tempfile();
    writeln!(f.1, "1,1,0,1\n1,0,1,1\n3,1,11,4").unwrap();
    assert_eq!(run(&["--elements", &f.0, "period-matrix"]).status.code(), Some(2));
    std::fs::remove_file(&f.0).ok();
}

fn tempfile() -> (String, std::fs::File) {
    use std::sync::atomic::{AtomicUsize, Ordering};
    static N: AtomicUsize = AtomicUsize::new(0);
    let path = std::env::temp_dir().join(format!(
        "chenforms-cli-{}-{}",
        std::process::id(),
        N.fetch_add(1, Ordering::SeqCst)
    ));
    let file = std::fs::File::create(&path).unwrap();
    (path.to_string_lossy().into_owned(), file)
}

#[test]
fn config_file_and_flag_precedence() {
    let mut f = tempfile();
    writeln!(f.1, "# loose quadrature\ntol = 1e-3\nlevel=13").unwrap();
    assert_eq!(run(&["--config", &f.0, "coeffs", "cusp11", "2"]).status.code(), Some(2));
    let o = run(&["--config", &f.0, "--level", "11", "verify", "shuffle"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(check_lines(&out).iter().all(|l| l[2] == "0.001"));
    let o = run(&["--config", &f.0, "--level", "11", "--tol", "1e-9", "verify", "shuffle"]);
    assert!(check_lines(&stdout(&o)).iter().all(|l| l[2] == "1e-09"));
    std::fs::remove_file(&f.0).ok();
}

#[test]
fn composition_suite_passes() {
    let o = run(&["verify", "lemma34"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines = check_lines(&out);
    assert!(lines.len() >= 6);
    assert!(lines.iter().all(|l| l[3] == "PASS"));
}

#[test]
fn verify_hodge_census() {
    let o = run(&["verify", "hodge"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "3\t2\t20\t27"));
    assert!(out.contains("hodge/exclusivity\t0\t0\tPASS"));
    assert!(out.contains("hodge/reconstruction\t0\t0\tPASS"));
}

#[test]
fn verify_mainlem_with_z_samples() {
    let o = run(&["verify", "mainlem", "--z-samples", "0,2;0.5,2;0,3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let spreads: Vec<f64> = check_lines(&out)
        .iter()
        .filter(|l| l[0].starts_with("mainlem/constancy"))
        .map(|l| l[1].parse().unwrap())
        .collect();
    assert!(!spreads.is_empty());
    assert!(spreads.iter().all(|&s| s <= 1e-6));
}

#[test]
fn remaining_checks_pass() {
    for check in ["lemma33", "shuffle", "invariance", "dualbasis", "ordercert"] {
        let o = run(&["verify", check]);
        assert_eq!(o.status.code(), Some(0), "{check}: {}", stdout(&o));
    }
}

#[test]
fn order_cert_command() {
    let o = run(&["order-cert", "eis11:hol,cusp11:hol"]);
    assert!(o.status.success());
    assert!(check_lines(&stdout(&o)).len() >= 5);
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "dualbasis"]);
    let b = run(&["verify", "dualbasis"]);
    assert_eq!(a.stdout, b.stdout);
}
