//! Fixture table shared by the CLI and acceptance tests.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    /// Subcommand arguments; the last one is a fixture file name.
    pub args: &'static [&'static str],
    pub golden: &'static str,
    pub exit: i32,
}

macro_rules! case {
    ([$($a:expr),*], $g:expr, $e:expr) => {
        Case { args: &[$($a),*], golden: $g, exit: $e }
    };
}

pub const CASES: &[Case] = &[
    case!(["run", "charpoly_four_primes.json"], "charpoly_four_primes.json", 0),
    case!(["run", "minpoly_mixed.json"], "minpoly_mixed.json", 0),
    case!(["run", "canon_all_mixed.json"], "canon_all_mixed.json", 0),
    case!(["run", "canon_primary.json"], "canon_primary.json", 0),
    case!(["run", "canon_dn.json"], "canon_dn.json", 0),
    case!(["run", "jordan_split_failure.json"], "jordan_split_failure.json", 0),
    case!(["run", "diagonalize.json"], "diagonalize.json", 0),
    case!(["run", "eigen.json"], "eigen.json", 0),
    case!(["run", "similar.json"], "similar.json", 0),
    case!(["run", "annihilator.json"], "annihilator.json", 0),
    case!(["run", "conductor.json"], "conductor.json", 0),
    case!(["run", "gram_schmidt.json"], "gram_schmidt.json", 0),
    case!(["run", "project.json"], "project.json", 0),
    case!(["run", "adjoint.json"], "adjoint.json", 0),
    case!(["run", "spectral.json"], "spectral.json", 0),
    case!(["run", "spectral_not_self_adjoint.json"], "spectral_not_self_adjoint.json", 1),
    case!(["run", "bilinear_diag.json"], "bilinear_diag.json", 0),
    case!(["run", "interpolate.json"], "interpolate.json", 0),
    case!(["run", "factor.json"], "factor.json", 0),
    case!(["run", "factor_incomplete.json"], "factor_incomplete.json", 0),
    case!(["run", "roots.json"], "roots.json", 0),
    case!(["run", "gcd.json"], "gcd.json", 0),
    case!(["run", "taylor.json"], "taylor.json", 0),
    case!(["run", "classify_finite.json"], "classify_finite.json", 0),
    case!(["run", "classify_mixed.json"], "classify_mixed.json", 0),
    case!(["run", "classify_prime.json"], "classify_prime.json", 0),
    case!(["run", "classify_semiprime.json"], "classify_semiprime.json", 0),
    case!(["run", "classify_rejected.json"], "classify_rejected.json", 0),
    case!(["run", "simultaneous.json"], "simultaneous.json", 0),
    case!(["run", "simultaneous_not_commuting.json"], "simultaneous_not_commuting.json", 1),
    case!(["run", "det_oracle.json"], "det_oracle.json", 0),
    case!(["run", "containment_violation.json"], "containment_violation.json", 1),
    case!(["run", "malformed.json"], "malformed.json", 2),
    case!(["run", "undefined_name.json"], "undefined_name.json", 2),
    case!(["run", "unknown_field.json"], "unknown_field.json", 2),
    case!(["run", "bad_literal.json"], "bad_literal.json", 2),
    case!(["run", "--pretty", "charpoly_four_primes.json"], "charpoly_four_primes.pretty.json", 0),
    case!(["validate", "canon_all_mixed.json"], "canon_all_mixed.validate.json", 0),
    case!(["validate", "malformed.json"], "malformed.validate.json", 2),
    case!(["oracle", "det", "det_oracle.json"], "det_oracle.oracle-det.json", 0),
    case!(["oracle", "det", "charpoly_four_primes.json"], "charpoly_four_primes.oracle-det.json", 0),
    case!(["oracle", "minpoly", "charpoly_four_primes.json"], "charpoly_four_primes.oracle-minpoly.json", 0),
    case!(["oracle", "minpoly", "minpoly_mixed.json"], "minpoly_mixed.oracle-minpoly.json", 0),
    case!(["oracle", "factor", "factor.json"], "factor.oracle-factor.json", 0),
    case!(["oracle", "factor", "roots.json"], "roots.oracle-factor.json", 0),
    case!(["oracle", "roots", "roots.json"], "roots.oracle-roots.json", 0),
    case!(["oracle", "factor", "factor_incomplete.json"], "factor_incomplete.oracle-factor.json", 0),
];

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn golden_path(case: &Case) -> PathBuf {
    fixture_dir().join("golden").join(case.golden)
}

pub fn nlalg() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nlalg"));
    cmd.env_remove("NLALG_MAX_FIELD_SIZE");
    cmd
}

/// Runs a case and returns stdout and the exit code.
pub fn run_case(case: &Case) -> (Vec<u8>, i32) {
    let (file, rest) = case.args.split_last().expect("case has arguments");
    let out = nlalg()
        .args(rest)
        .arg(fixture_dir().join(file))
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code().expect("exited normally"))
}

/// Golden bytes, rewritten first when NLALG_UPDATE_GOLDENS is set.
pub fn golden(case: &Case, fresh: &[u8]) -> Vec<u8> {
    let path = golden_path(case);
    if std::env::var_os("NLALG_UPDATE_GOLDENS").is_some() {
        std::fs::write(&path, fresh).expect("golden directory is writable");
    }
    std::fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}
