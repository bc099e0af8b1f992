use std::process::{Command, Output};

use vhp::benchmarks::parse_report_csv;

fn vhp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vhp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn energy_examples() {
    let out = vhp(&[
        "energy", "--a", "0", "--b", "0", "--c", "2", "--d", "-1", "--alpha", "0.001", "--mu",
        "0.5", "--hbar", "1", "--n", "0", "--l", "0", "--method", "ansatz",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ansatz: -2.249001"));

    let out = vhp(&[
        "energy", "--c", "1", "--mu", "1", "--n", "0", "--l", "0", "--method", "oracle",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "oracle: -0.500000\n");

    let out = vhp(&["energy", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn scientific_notation_and_both_methods() {
    let out = vhp(&["energy", "--c", "2e0", "--d", "-1.0E0", "--alpha", "1e-3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("ansatz: -2.249001"));
    assert!(text.contains("oracle: -2.24900"));
    assert!(text.contains("ansatz residual: "));
}

#[test]
fn expanded_form_is_selectable() {
    let full = vhp(&[
        "energy", "--c", "2", "--d", "-1", "--alpha", "0.2", "--method", "oracle",
    ]);
    let expanded = vhp(&[
        "energy", "--c", "2", "--d", "-1", "--alpha", "0.2", "--method", "oracle", "--form",
        "expanded",
    ]);
    assert_eq!(full.status.code(), Some(0));
    assert_eq!(expanded.status.code(), Some(0));
    assert_ne!(full.stdout, expanded.stdout);
    assert_eq!(
        vhp(&["energy", "--c", "1", "--form", "cubic"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn solver_failure_is_exit_3() {
    let out = vhp(&["energy", "--c", "-1", "--method", "oracle"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn table_outputs() {
    let out = vhp(&["table", "--id", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed = parse_report_csv(&stdout(&out)).unwrap();
    assert_eq!(parsed.rows.len(), 18);
    assert_eq!(&parsed.headers[..3], ["state", "alpha", "e_paper"]);

    assert_eq!(vhp(&["table", "--id", "5"]).status.code(), Some(2));

    let out = vhp(&["table", "--id", "1", "--format", "md"]);
    assert_eq!(out.status.code(), Some(0));
    let md = stdout(&out);
    let data_rows: Vec<&str> = md
        .lines()
        .filter(|l| l.starts_with("| ") && l.contains("suspect"))
        .collect();
    assert_eq!(data_rows.len(), 18);
    assert!(md.contains("Result: PASS"));
}

#[test]
fn table_to_file_and_write_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t4.csv");
    let out = vhp(&["table", "--id", "4", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("state,g,e_paper,ref23,ref22,"));
    assert_eq!(text.lines().count(), 21);

    let bad = dir.path().join("missing").join("t4.csv");
    assert_eq!(
        vhp(&["table", "--id", "4", "--out", bad.to_str().unwrap()])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn figure_row_counts() {
    for (id, rows) in [("1", 1500), ("2", 150), ("3", 150)] {
        let out = vhp(&["figure", "--id", id]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("series_label,x,y"));
        assert_eq!(lines.count(), rows, "figure {id}");
    }
    assert_eq!(vhp(&["figure", "--id", "9"]).status.code(), Some(2));
}

fn wavefunction_columns(text: &str) -> Vec<(f64, f64, f64)> {
    text.lines()
        .skip_while(|l| l.starts_with('#'))
        .skip(1)
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|c| c.parse().unwrap()).collect();
            (v[0], v[1], v[2])
        })
        .collect()
}

#[test]
fn coulomb_wavefunctions_agree() {
    let out = vhp(&["wavefunction", "--c", "1", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("r,u_ansatz,u_oracle\n"));
    let cols = wavefunction_columns(&text);
    assert!(cols.len() >= 1000);
    let worst = cols
        .iter()
        .map(|(_, a, o)| (a - o).abs())
        .fold(0.0, f64::max);
    assert!(worst < 1e-4, "max pointwise gap {worst:e}");
}

#[test]
fn wavefunction_grid_flags() {
    let out = vhp(&[
        "wavefunction",
        "--c",
        "1",
        "--mu",
        "1",
        "--l",
        "1",
        "--r-min",
        "1e-5",
        "--r-max",
        "60",
        "--points",
        "4001",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let cols = wavefunction_columns(&stdout(&out));
    assert_eq!(cols.len(), 4001);
    assert_eq!(cols[0].0, 1e-5);
    assert_eq!(cols[4000].0, 60.0);
}

#[test]
fn hellmann_wavefunction_warns() {
    let out = vhp(&["wavefunction", "--c", "2", "--d", "-1", "--alpha", "0.005"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("# warning: ansatz wavefunction is not normalizable"));
    assert_eq!(
        vhp(&["wavefunction", "--c", "1", "--l", "-1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(vhp(&["wavefunction", "--c", "-1"]).status.code(), Some(3));
}

#[test]
fn config_file_with_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hellmann.conf");
    std::fs::write(
        &path,
        "# Hellmann set\nc = 2\nd = -1\nalpha = 0.001\nmethod = ansatz\n",
    )
    .unwrap();
    let cfg = path.to_str().unwrap();

    let out = vhp(&["energy", "--config", cfg]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ansatz: -2.249001"));

    let out = vhp(&[
        "energy", "--config", cfg, "--c", "1", "--d", "0", "--mu", "1",
    ]);
    assert!(stdout(&out).contains("ansatz: -0.500000"));

    let missing = dir.path().join("none.conf");
    assert_eq!(
        vhp(&["energy", "--config", missing.to_str().unwrap()])
            .status
            .code(),
        Some(4)
    );

    std::fs::write(&path, "colour = blue\n").unwrap();
    assert_eq!(
        vhp(&["energy", "--config", cfg, "--c", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn help_shows_defaults() {
    let out = vhp(&["energy", "--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("Reduced mass [default: 0.5]"));
    assert!(text.contains("Reduced Planck constant [default: 1]"));
}
