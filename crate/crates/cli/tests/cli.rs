use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use commlab::linalg::NormOptions;
use commlab::models::Family;
use commlab_cli::norms::{cmd_norms, norms_csv, run_sweep, NORMS_HEADER};
use commlab_cli::regress::{cmd_regress, RegressFilter, RegressOutcome};
use commlab_cli::spec::SweepSpec;
use commlab_cli::validate::{run_validation, suite_names, ValidateOptions};
use commlab_cli::vectors::{extremal_pair, vectors_csv, vectors_svg};

fn bin(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_commlab"))
        .args(args)
        .current_dir(dir)
        .env_remove("LAB_SEED")
        .output()
        .expect("spawn commlab")
}

fn sweep(family: Family, range: (usize, usize, usize), a: Vec<f64>, jobs: usize) -> SweepSpec {
    SweepSpec { family, n_range: range, a, b: vec![], big_n: None, output: None, jobs }.validated().unwrap()
}

#[test]
fn norms_header_and_half_ladder() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(&["norms", "--family", "su2", "--n-stop", "12", "--out", "s.csv"], dir.path());
    assert!(out.status.success());
    let text = fs::read_to_string(dir.path().join("s.csv")).unwrap();
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), NORMS_HEADER.join(","));
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let (n, norm): (usize, f64) = (f[1].parse().unwrap(), f[4].parse().unwrap());
        assert_eq!(f[5], (n % 4).to_string());
        if n % 4 == 2 {
            assert!((norm - 0.5).abs() < 1e-10);
        }
        // 17 significant digits
        assert_eq!(f[4].split('e').next().unwrap().replace(['.', '-'], "").len(), 17);
    }
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("s.csv.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["points"], 11);
}

#[test]
fn heisenberg_ladder_in_sweep() {
    let rows = run_sweep(&sweep(Family::Heisenberg, (2, 12, 1), vec![], 2), &NormOptions::default()).unwrap();
    for r in rows.iter().filter(|r| r.n % 4 == 2) {
        assert!((r.norm - 0.5).abs() < 1e-10, "n={}", r.n);
    }
}

#[test]
fn parallel_matches_serial() {
    let opts = NormOptions::default();
    let serial = run_sweep(&sweep(Family::Su2Caps, (2, 40, 3), vec![0.6, 0.1, 0.3], 1), &opts).unwrap();
    let parallel = run_sweep(&sweep(Family::Su2Caps, (2, 40, 3), vec![0.6, 0.1, 0.3], 4), &opts).unwrap();
    assert_eq!(norms_csv(&serial, false), norms_csv(&parallel, false));
    assert!(serial.windows(2).all(|w| (w[0].n, w[0].a.unwrap()) < (w[1].n, w[1].a.unwrap())));
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["norms", "--family", "heisenberg", "--n-stop", "30", "--jobs", "3", "--out"];
    bin(&[&args[..], &["a.csv"]].concat(), dir.path());
    bin(&[&args[..], &["b.csv"]].concat(), dir.path());
    assert_eq!(fs::read(dir.path().join("a.csv")).unwrap(), fs::read(dir.path().join("b.csv")).unwrap());
}

#[test]
fn caps_transition() {
    let opts = NormOptions::default();
    let rows = run_sweep(&sweep(Family::Su2Caps, (301, 301, 1), vec![0.25, 0.75], 2), &opts).unwrap();
    assert!(rows[0].norm > rows[1].norm + 0.1);
}

#[test]
fn regress_over_residues() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec = sweep(Family::Su2, (2, 400, 2), vec![], 4);
    spec.output = Some(dir.path().join("su2.csv"));
    cmd_norms(&spec, &NormOptions::default(), false).unwrap();
    let path = dir.path().join("su2.csv");
    let two = cmd_regress(&path, &RegressFilter { residue: Some(2), ..Default::default() }).unwrap();
    assert!(matches!(two, RegressOutcome::Degenerate { .. }));
    let zero = cmd_regress(&path, &RegressFilter { residue: Some(0), ..Default::default() }).unwrap();
    let RegressOutcome::Fit(fit) = zero else { panic!("{zero:?}") };
    assert!(fit.slope < 0.0 && fit.r2 > 0.9 && fit.points_used == 100, "{fit:?}");

    let out = bin(&["regress", "su2.csv", "--residue", "2"], dir.path());
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("exact half"));
}

#[test]
fn hankel_command() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(&["hankel", "--N", "1,2,3,8,16"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("N,a,truncated_norm,nehari_upper,power_lower"));
    let rows: Vec<Vec<f64>> =
        lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert!((rows[0][2] - std::f64::consts::FRAC_1_PI).abs() < 1e-15);
    assert!(rows.windows(2).all(|w| w[1][2] >= w[0][2]));
    assert!(rows.iter().all(|r| r[3] == 0.5 && r[4] == 0.5 && r[2] <= 0.5));
}

#[test]
fn vectors_concentrate_inside() {
    let report = commlab::models::su2_commutator::<f64>(101, 0.0, 1.0).unwrap();
    let pair = extremal_pair(report).unwrap();
    let moduli: Vec<f64> = pair.max.coefficients.iter().map(|z| z.norm()).collect();
    let argmax = (0..moduli.len()).max_by(|&i, &k| moduli[i].total_cmp(&moduli[k])).unwrap();
    assert!(argmax > 5 && argmax < 95, "argmax {argmax}");
    assert!((moduli.iter().map(|m| m * m).sum::<f64>() - 1.0).abs() < 1e-12);
    let csv = vectors_csv(&pair);
    assert_eq!(csv, vectors_csv(&pair));
    assert!(String::from_utf8(csv).unwrap().starts_with("m,max_re,max_im,max_modulus,min_re,min_im,min_modulus\n50,"));
    let svg = vectors_svg(&pair);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));

    let dir = tempfile::tempdir().unwrap();
    let a = bin(&["vectors", "--n", "21", "--out", "v.csv", "--svg", "v.svg"], dir.path());
    assert!(a.status.success());
    let first = fs::read(dir.path().join("v.csv")).unwrap();
    bin(&["vectors", "--n", "21", "--out", "v.csv"], dir.path());
    assert_eq!(first, fs::read(dir.path().join("v.csv")).unwrap());
    assert!(dir.path().join("v.svg").exists());
}

#[test]
fn validate_passes_and_detects_sign_flip() {
    let report = run_validation(&ValidateOptions::default());
    assert!(report.passed, "{report:?}");
    assert_eq!(report.suites.len(), suite_names().len());

    let flipped = run_validation(&ValidateOptions { inject_sign_flip: Some(2), ..Default::default() });
    let failed: Vec<&str> = flipped.suites.iter().filter(|s| !s.passed()).map(|s| s.name.as_str()).collect();
    assert_eq!(failed, ["wigner_cross_path"]);

    let dir = tempfile::tempdir().unwrap();
    let ok = bin(&["validate", "--out", "v.json"], dir.path());
    assert_eq!(ok.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&fs::read(dir.path().join("v.json")).unwrap()).unwrap();
    assert_eq!(json["passed"], true);
    let bad = bin(&["validate", "--inject-sign-flip", "0"], dir.path());
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn exit_codes_and_config() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(bin(&["norms", "--family", "nope"], dir.path()).status.code(), Some(1));
    assert_eq!(bin(&["norms", "--n-stop", "5000"], dir.path()).status.code(), Some(1));
    assert_eq!(bin(&["norms", "--n-stop", "4", "--out", "missing/x.csv"], dir.path()).status.code(), Some(2));
    assert_eq!(bin(&["regress", "absent.csv"], dir.path()).status.code(), Some(2));
    let seeded = Command::new(env!("CARGO_BIN_EXE_commlab"))
        .args(["norms", "--n-stop", "4"])
        .env("LAB_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(seeded.status.code(), Some(1));

    fs::write(
        dir.path().join("c.json"),
        r#"{"schema": 1, "family": "su2_caps", "n_start": 10, "n_stop": 14, "a": [0.2], "out": "cfg.csv"}"#,
    )
    .unwrap();
    let out = bin(&["norms", "--config", "c.json", "--n-stop", "12"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(dir.path().join("cfg.csv")).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().nth(1).unwrap().starts_with("su2_caps,10,2.0000000000000001e-1,,"));
}
