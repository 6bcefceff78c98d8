//! Command-line front end.
//!
//! ```text
//! esd-lab evolve   <state.json> --model global --gamma 1 --t 0.35
//! esd-lab curve    <state.json> --model local --gamma-a 1 --gamma-b 0 --t-max 2 --steps 201
//! esd-lab esd      <state.json> --model global --gamma 1
//! esd-lab validate [state.json] --model global --gamma 1 --t 0.35 --trajectories 200000 --seed 7
//! esd-lab fig1     [--out-dir DIR]
//! ```
//!
//! Exit codes: 0 success (validate: PASS), 1 validate FAIL, 2 bad input
//! data, 3 bad flags, 4 unsupported state/model combination.

mod commands;
pub mod statefile;

use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_BAD_FLAGS: i32 = 3;
pub const EXIT_UNSUPPORTED: i32 = 4;

/// Command failure, mapped onto the exit-code contract.
#[derive(Debug)]
pub(crate) enum CmdError {
    /// Unreadable or invalid state data (exit 2).
    BadInput(String),
    /// Missing, unknown, malformed, or conflicting flags (exit 3).
    BadFlags(String),
    /// A state/model combination the analysis does not define (exit 4).
    Unsupported(String),
}

impl CmdError {
    fn exit_code(&self) -> i32 {
        match self {
            Self::BadInput(_) => EXIT_BAD_INPUT,
            Self::BadFlags(_) => EXIT_BAD_FLAGS,
            Self::Unsupported(_) => EXIT_UNSUPPORTED,
        }
    }

    fn message(&self) -> &str {
        match self {
            Self::BadInput(m) | Self::BadFlags(m) | Self::Unsupported(m) => m,
        }
    }
}

const USAGE: &str = "\
esd-lab: two-qubit dephasing, entanglement decay, and sudden-death analysis

usage: esd-lab <command> [args]

commands:
  evolve   <state.json> --model M <rates> --t T [--units U] [--out FILE]
           apply the dephasing channel and print the evolved matrix as JSON
  curve    <state.json> --model M <rates> --t-max T [--steps N] [--units U] [--out FILE]
           CSV of t, concurrence, negativity, re(rho14), re(rho23)
  esd      <state.json> --model M <rates> [--units U]
           classify the entanglement decay and report the death time
           (analytic plus an independent bisection cross-check)
  validate [state.json] --model M <rates> --t T [--trajectories N] [--seed S] [--units U]
           Monte Carlo trajectory ensemble vs the Kraus channel; PASS/FAIL
           (default state: the canonical sudden-death mixture)
  fig1     [--out-dir DIR]
           write the two reference concurrence curves (sudden death vs
           asymptotic decay) over gamma*t in [0, 2] as CSV
  help     print this text

model and rates:
  --model global --gamma G          one collective field, rate G
  --model local --gamma-a A --gamma-b B
                                    independent fields per qubit

units:
  --units gammat   times are dimensionless gamma*t (default; uses the
                   collective rate, or max(gamma-a, gamma-b) for local)
  --units seconds  times in seconds, rates in Hz

exit codes:
  0 success / validation PASS    1 validation FAIL    2 bad input data
  3 bad flags                    4 unsupported state/model combination
";

/// Dispatches a full argument vector (without the program name) and returns
/// the process exit code. Output streams are injected so tests can capture
/// bytes exactly.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match args.first().map(String::as_str) {
        None => Err(CmdError::BadFlags(
            "no command given; run 'esd-lab help'".into(),
        )),
        Some("help") | Some("--help") | Some("-h") => {
            let _ = out.write_all(USAGE.as_bytes());
            Ok(EXIT_OK)
        }
        Some("evolve") => commands::cmd_evolve(&args[1..], out),
        Some("curve") => commands::cmd_curve(&args[1..], out),
        Some("esd") => commands::cmd_esd(&args[1..], out),
        Some("validate") => commands::cmd_validate(&args[1..], out, err),
        Some("fig1") => commands::cmd_fig1(&args[1..], out),
        Some(other) => Err(CmdError::BadFlags(format!(
            "unknown command '{other}'; run 'esd-lab help'"
        ))),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

/// [`run`] against the process environment.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = run(&args, &mut out, &mut err);
    let _ = out.flush();
    let _ = err.flush();
    code
}
