//! Implementations of the five subcommands.

use std::collections::BTreeMap;
use std::io::Write;

use serde_json::json;

use crate::channels::{
    apply_channel, evolve_global_closed_form, evolve_local_x_state, global_kraus, local_kraus,
    DephasingRates, KrausSet,
};
use crate::cli::statefile::{density_to_spec, parse_state, to_pretty_json, ParsedState};
use crate::cli::{CmdError, EXIT_OK, EXIT_VALIDATION_FAILED};
use crate::entanglement::{
    concurrence_general, concurrence_x_state, esd_time_global, esd_time_local, esd_time_numeric,
    negativity, Branch, Classification, ConcurrenceResult, EsdReport,
};
use crate::qmat::{asymptotic_decay_demo, sudden_death_demo, DensityMatrix, XState};
use crate::stochastic::{compare_to_channel, ensemble_evolve, StochasticConfig};

type CmdResult<T> = Result<T, CmdError>;

/// 17 significant digits: enough for a bit-exact f64 round trip, so CSV
/// contents are stable across runs.
fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn io_err(e: std::io::Error) -> CmdError {
    CmdError::BadInput(format!("i/o error: {e}"))
}

// ---------------------------------------------------------------------------
// flag parsing

struct Flags {
    values: BTreeMap<String, String>,
    positionals: Vec<String>,
}

fn parse_flags(args: &[String], allowed: &[&str]) -> CmdResult<Flags> {
    let mut values = BTreeMap::new();
    let mut positionals = Vec::new();
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        if let Some(body) = arg.strip_prefix("--") {
            let (name, inline) = match body.split_once('=') {
                Some((n, v)) => (n.to_string(), Some(v.to_string())),
                None => (body.to_string(), None),
            };
            if !allowed.contains(&name.as_str()) {
                return Err(CmdError::BadFlags(format!(
                    "unknown flag --{name} for this command"
                )));
            }
            let value = match inline {
                Some(v) => v,
                None => {
                    i += 1;
                    args.get(i)
                        .cloned()
                        .ok_or_else(|| CmdError::BadFlags(format!("--{name} needs a value")))?
                }
            };
            if values.insert(name.clone(), value).is_some() {
                return Err(CmdError::BadFlags(format!("--{name} given twice")));
            }
        } else {
            positionals.push(arg.clone());
        }
        i += 1;
    }
    Ok(Flags {
        values,
        positionals,
    })
}

impl Flags {
    fn get(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(String::as_str)
    }

    fn require(&self, name: &str) -> CmdResult<&str> {
        self.get(name)
            .ok_or_else(|| CmdError::BadFlags(format!("--{name} is required")))
    }

    fn f64_value(&self, name: &str) -> CmdResult<Option<f64>> {
        match self.get(name) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<f64>()
                .map_err(|_| CmdError::BadFlags(format!("--{name} must be a number, got '{raw}'")))
                .and_then(|v| {
                    if v.is_finite() {
                        Ok(Some(v))
                    } else {
                        Err(CmdError::BadFlags(format!("--{name} must be finite")))
                    }
                }),
        }
    }

    fn require_f64(&self, name: &str) -> CmdResult<f64> {
        self.require(name)?;
        Ok(self.f64_value(name)?.expect("required flag present"))
    }

    fn single_positional(&self, what: &str) -> CmdResult<&str> {
        match self.positionals.as_slice() {
            [one] => Ok(one),
            [] => Err(CmdError::BadFlags(format!("missing {what}"))),
            more => Err(CmdError::BadFlags(format!(
                "expected one {what}, got {}",
                more.len()
            ))),
        }
    }
}

// ---------------------------------------------------------------------------
// shared model / units plumbing

const RATE_FLAGS: [&str; 3] = ["gamma", "gamma-a", "gamma-b"];

fn resolve_model(flags: &Flags) -> CmdResult<DephasingRates> {
    let model = flags.require("model")?;
    let rate = |name: &str| -> CmdResult<f64> {
        let v = flags
            .f64_value(name)?
            .ok_or_else(|| CmdError::BadFlags(format!("--{name} is required for this model")))?;
        if v < 0.0 {
            return Err(CmdError::BadFlags(format!("--{name} must be nonnegative")));
        }
        Ok(v)
    };
    let forbid = |name: &str, model: &str| -> CmdResult<()> {
        if flags.get(name).is_some() {
            return Err(CmdError::BadFlags(format!(
                "--{name} conflicts with --model {model}"
            )));
        }
        Ok(())
    };
    match model {
        "global" => {
            forbid("gamma-a", "global")?;
            forbid("gamma-b", "global")?;
            Ok(DephasingRates::Global {
                gamma: rate("gamma")?,
            })
        }
        "local" => {
            forbid("gamma", "local")?;
            Ok(DephasingRates::Local {
                gamma_a: rate("gamma-a")?,
                gamma_b: rate("gamma-b")?,
            })
        }
        other => Err(CmdError::BadFlags(format!(
            "--model must be 'global' or 'local', got '{other}'"
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Units {
    GammaT,
    Seconds,
}

fn resolve_units(flags: &Flags) -> CmdResult<Units> {
    match flags.get("units").unwrap_or("gammat") {
        "gammat" => Ok(Units::GammaT),
        "seconds" => Ok(Units::Seconds),
        other => Err(CmdError::BadFlags(format!(
            "--units must be 'gammat' or 'seconds', got '{other}'"
        ))),
    }
}

/// Rate that scales dimensionless Γ·t values: the collective rate, or the
/// larger of the two local rates.
fn reference_rate(rates: &DephasingRates) -> f64 {
    match *rates {
        DephasingRates::Global { gamma } => gamma,
        DephasingRates::Local { gamma_a, gamma_b } => gamma_a.max(gamma_b),
    }
}

fn to_raw_time(t_display: f64, units: Units, rates: &DephasingRates) -> CmdResult<f64> {
    match units {
        Units::Seconds => Ok(t_display),
        Units::GammaT => {
            let gref = reference_rate(rates);
            if gref > 0.0 {
                Ok(t_display / gref)
            } else {
                Err(CmdError::BadFlags(
                    "gammat units need a positive dephasing rate; use --units seconds".into(),
                ))
            }
        }
    }
}

fn kraus_at(rates: &DephasingRates, t: f64) -> CmdResult<KrausSet> {
    let set = match *rates {
        DephasingRates::Global { gamma } => global_kraus(t, gamma),
        DephasingRates::Local { gamma_a, gamma_b } => local_kraus(t, gamma_a, gamma_b),
    };
    set.map_err(|e| CmdError::BadInput(e.to_string()))
}

fn load_state(path: &str) -> CmdResult<ParsedState> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::BadInput(format!("cannot read '{path}': {e}")))?;
    parse_state(&text).map_err(CmdError::BadInput)
}

fn nonneg_time(flags: &Flags, name: &str) -> CmdResult<f64> {
    let t = flags.require_f64(name)?;
    if t < 0.0 {
        return Err(CmdError::BadFlags(format!("--{name} must be nonnegative")));
    }
    Ok(t)
}

fn write_text_output(flags: &Flags, out: &mut dyn Write, text: &str) -> CmdResult<()> {
    match flags.get("out") {
        Some(path) => std::fs::write(path, text).map_err(io_err),
        None => out.write_all(text.as_bytes()).map_err(io_err),
    }
}

// ---------------------------------------------------------------------------
// evolve

pub(crate) fn cmd_evolve(args: &[String], out: &mut dyn Write) -> CmdResult<i32> {
    let mut allowed = vec!["model", "t", "units", "out"];
    allowed.extend(RATE_FLAGS);
    let flags = parse_flags(args, &allowed)?;
    let rates = resolve_model(&flags)?;
    let units = resolve_units(&flags)?;
    let t_raw = to_raw_time(nonneg_time(&flags, "t")?, units, &rates)?;
    let state = load_state(flags.single_positional("state file")?)?;

    let evolved = apply_channel(&kraus_at(&rates, t_raw)?, &state.density())
        .map_err(|e| CmdError::BadInput(e.to_string()))?;

    let mut text = to_pretty_json(&density_to_spec(&evolved));
    text.push('\n');
    write_text_output(&flags, out, &text)?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// curve

/// Everything one CSV row needs.
struct CurvePoint {
    concurrence: f64,
    negativity: f64,
    re_rho14: f64,
    re_rho23: f64,
}

fn curve_point(state: &ParsedState, rates: &DephasingRates, t_raw: f64) -> CmdResult<CurvePoint> {
    let evolved: DensityMatrix;
    let concurrence: ConcurrenceResult;
    match state {
        // Standard form: closed-form evolution and closed-form concurrence.
        ParsedState::X(x) => {
            let moved = match *rates {
                DephasingRates::Global { gamma } => evolve_global_closed_form(x, t_raw, gamma),
                DephasingRates::Local { gamma_a, gamma_b } => {
                    evolve_local_x_state(x, t_raw, gamma_a, gamma_b)
                }
            }
            .map_err(|e| CmdError::BadInput(e.to_string()))?;
            concurrence = concurrence_x_state(&moved);
            evolved = moved.embed();
        }
        // General matrices go through the operator sum and the eigenvalue
        // route.
        ParsedState::General(rho) => {
            evolved = apply_channel(&kraus_at(rates, t_raw)?, rho)
                .map_err(|e| CmdError::BadInput(e.to_string()))?;
            concurrence =
                concurrence_general(&evolved).map_err(|e| CmdError::BadInput(e.to_string()))?;
        }
    }
    let neg = negativity(&evolved).map_err(|e| CmdError::BadInput(e.to_string()))?;
    let m = evolved.matrix();
    Ok(CurvePoint {
        concurrence: concurrence.value,
        negativity: neg,
        re_rho14: m[(0, 3)].re,
        re_rho23: m[(1, 2)].re,
    })
}

fn render_curve(
    state: &ParsedState,
    rates: &DephasingRates,
    t_max_display: f64,
    steps: usize,
    units: Units,
) -> CmdResult<String> {
    let mut csv = String::from("t,concurrence,negativity,re_rho14,re_rho23\n");
    for i in 0..steps {
        let t_display = t_max_display * i as f64 / (steps - 1) as f64;
        let t_raw = to_raw_time(t_display, units, rates)?;
        let p = curve_point(state, rates, t_raw)?;
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            fmt17(t_display),
            fmt17(p.concurrence),
            fmt17(p.negativity),
            fmt17(p.re_rho14),
            fmt17(p.re_rho23),
        ));
    }
    Ok(csv)
}

pub(crate) fn cmd_curve(args: &[String], out: &mut dyn Write) -> CmdResult<i32> {
    let mut allowed = vec!["model", "t-max", "steps", "units", "out"];
    allowed.extend(RATE_FLAGS);
    let flags = parse_flags(args, &allowed)?;
    let rates = resolve_model(&flags)?;
    let units = resolve_units(&flags)?;
    let t_max = flags.require_f64("t-max")?;
    if t_max <= 0.0 {
        return Err(CmdError::BadFlags("--t-max must be positive".into()));
    }
    let steps = match flags.get("steps") {
        None => 201,
        Some(raw) => raw
            .parse::<usize>()
            .map_err(|_| CmdError::BadFlags(format!("--steps must be an integer, got '{raw}'")))?,
    };
    if steps < 2 {
        return Err(CmdError::BadFlags(
            "--steps must be at least 2 (both endpoints are included)".into(),
        ));
    }
    let state = load_state(flags.single_positional("state file")?)?;

    let csv = render_curve(&state, &rates, t_max, steps, units)?;
    write_text_output(&flags, out, &csv)?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// esd

fn branch_name(branch: Option<Branch>) -> serde_json::Value {
    match branch {
        Some(Branch::W) => json!("w"),
        Some(Branch::Z) => json!("z"),
        None => json!(null),
    }
}

fn classification_name(c: Classification) -> &'static str {
    match c {
        Classification::AlreadySeparable => "already_separable",
        Classification::FiniteDeath => "finite_death",
        Classification::AsymptoticOnly => "asymptotic_only",
    }
}

fn time_json(t_raw: Option<f64>, gref: f64) -> serde_json::Value {
    match t_raw {
        Some(t) => json!({ "raw": t, "gamma_t": gref * t }),
        None => json!(null),
    }
}

pub(crate) fn cmd_esd(args: &[String], out: &mut dyn Write) -> CmdResult<i32> {
    let mut allowed = vec!["model", "units"];
    allowed.extend(RATE_FLAGS);
    let flags = parse_flags(args, &allowed)?;
    let rates = resolve_model(&flags)?;
    let _units = resolve_units(&flags)?; // accepted for symmetry; output always carries both raw and Γ·t
    let state = load_state(flags.single_positional("state file")?)?;

    let Some(x) = state.as_x_state() else {
        return Err(CmdError::Unsupported(
            "death-time analysis needs a standard-form (X) state: populations on the \
             diagonal, coherence only on the anti-diagonal"
                .into(),
        ));
    };

    let analytic: EsdReport = match rates {
        DephasingRates::Global { gamma } => {
            if gamma <= 0.0 {
                return Err(CmdError::BadFlags(
                    "--gamma must be positive for death-time analysis".into(),
                ));
            }
            esd_time_global(x, gamma).map_err(|e| CmdError::Unsupported(e.to_string()))?
        }
        DephasingRates::Local { gamma_a, gamma_b } => {
            if gamma_a + gamma_b <= 0.0 {
                return Err(CmdError::BadFlags(
                    "at least one of --gamma-a/--gamma-b must be positive".into(),
                ));
            }
            esd_time_local(x, gamma_a, gamma_b).map_err(|e| CmdError::Unsupported(e.to_string()))?
        }
    };

    let gref = reference_rate(&rates);
    let horizon = match analytic.t_c {
        Some(t_c) => 2.0 * t_c,
        None => 20.0 / gref,
    };
    let tol_raw = 1e-6 / gref;
    let curve = |t: f64| -> ConcurrenceResult {
        let moved = match rates {
            DephasingRates::Global { gamma } => evolve_global_closed_form(x, t, gamma),
            DephasingRates::Local { gamma_a, gamma_b } => {
                evolve_local_x_state(x, t, gamma_a, gamma_b)
            }
        }
        .expect("closed forms accept all t ≥ 0");
        concurrence_x_state(&moved)
    };
    let numeric =
        esd_time_numeric(curve, horizon, tol_raw).map_err(|e| CmdError::BadInput(e.to_string()))?;

    let report = json!({
        "classification": classification_name(analytic.classification),
        "binding_branch": branch_name(analytic.binding_branch),
        "t_c": time_json(analytic.t_c, gref),
        "numeric_check": {
            "classification": classification_name(numeric.classification),
            "t_c": time_json(numeric.t_c, gref),
            "horizon_gamma_t": gref * horizon,
            "tolerance_gamma_t": 1e-6,
        },
    });
    let mut text = serde_json::to_string_pretty(&report).expect("reports always serialize");
    text.push('\n');
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// validate

pub(crate) fn cmd_validate(
    args: &[String],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult<i32> {
    let mut allowed = vec!["model", "t", "trajectories", "seed", "units"];
    allowed.extend(RATE_FLAGS);
    let flags = parse_flags(args, &allowed)?;
    let rates = resolve_model(&flags)?;
    let units = resolve_units(&flags)?;
    let t_display = nonneg_time(&flags, "t")?;
    let t_raw = to_raw_time(t_display, units, &rates)?;
    let trajectories = match flags.get("trajectories") {
        None => 20_000,
        Some(raw) => raw.parse::<usize>().map_err(|_| {
            CmdError::BadFlags(format!("--trajectories must be an integer, got '{raw}'"))
        })?,
    };
    if trajectories < 1 {
        return Err(CmdError::BadFlags(
            "--trajectories must be at least 1".into(),
        ));
    }
    if trajectories < 1000 {
        writeln!(
            err,
            "warning: {trajectories} trajectories is too few for reliable 5-sigma bounds; \
             use at least 1000"
        )
        .map_err(io_err)?;
    }
    let seed = match flags.get("seed") {
        None => 1,
        Some(raw) => raw
            .parse::<u64>()
            .map_err(|_| CmdError::BadFlags(format!("--seed must be a u64, got '{raw}'")))?,
    };

    // Default subject: the canonical sudden-death state.
    let rho0 = match flags.positionals.as_slice() {
        [] => sudden_death_demo().embed(),
        [path] => load_state(path)?.density(),
        more => {
            return Err(CmdError::BadFlags(format!(
                "expected at most one state file, got {}",
                more.len()
            )))
        }
    };

    let cfg = StochasticConfig::new(rates, trajectories, seed)
        .map_err(|e| CmdError::BadFlags(e.to_string()))?;
    let estimate =
        ensemble_evolve(&rho0, t_raw, &cfg).map_err(|e| CmdError::BadInput(e.to_string()))?;
    let predicted = apply_channel(&kraus_at(&rates, t_raw)?, &rho0)
        .map_err(|e| CmdError::BadInput(e.to_string()))?;
    let report = compare_to_channel(&estimate, &predicted);

    let model_name = match rates {
        DephasingRates::Global { .. } => "global",
        DephasingRates::Local { .. } => "local",
    };
    writeln!(
        out,
        "# stochastic-trajectory ensemble vs Kraus channel\n\
         # model: {model_name}, trajectories: {trajectories}, seed: {seed}, t: {}\n\
         element        part  estimate                 predicted                stderr        z",
        fmt17(t_display)
    )
    .map_err(io_err)?;
    for e in &report.entries {
        let z_text = match e.z {
            Some(z) => format!("{z:.3}"),
            None => {
                if e.pass {
                    "exact".to_string()
                } else {
                    "exact:FAIL".to_string()
                }
            }
        };
        writeln!(
            out,
            "rho[{}][{}]     {:<4} {:>24} {:>24} {:>13} {:>10}",
            e.row + 1,
            e.col + 1,
            e.part,
            fmt17(e.estimate),
            fmt17(e.predicted),
            format!("{:.3e}", e.stderr),
            z_text,
        )
        .map_err(io_err)?;
    }
    writeln!(out, "max |z| = {:.3}", report.max_z).map_err(io_err)?;
    if report.pass {
        writeln!(
            out,
            "PASS: ensemble agrees with the channel (all 32 comparisons)"
        )
        .map_err(io_err)?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "FAIL: ensemble disagrees with the channel").map_err(io_err)?;
        Ok(EXIT_VALIDATION_FAILED)
    }
}

// ---------------------------------------------------------------------------
// fig1

/// Reference curves: the sudden-death state and the asymptotic-decay state
/// under the collective field, Γ·t from 0 to 2, 401 points each.
pub(crate) fn cmd_fig1(args: &[String], out: &mut dyn Write) -> CmdResult<i32> {
    let flags = parse_flags(args, &["out-dir"])?;
    if !flags.positionals.is_empty() {
        return Err(CmdError::BadFlags(
            "fig1 takes no positional arguments".into(),
        ));
    }
    let dir = flags.get("out-dir").unwrap_or(".");
    std::fs::create_dir_all(dir).map_err(io_err)?;
    let rates = DephasingRates::Global { gamma: 1.0 };

    let cases: [(&str, XState); 2] = [
        ("fig1_case_I.csv", sudden_death_demo()),
        ("fig1_case_II.csv", asymptotic_decay_demo()),
    ];
    for (name, x) in &cases {
        let csv = render_curve(&ParsedState::X(*x), &rates, 2.0, 401, Units::GammaT)?;
        let path = std::path::Path::new(dir).join(name);
        std::fs::write(&path, csv).map_err(io_err)?;
        writeln!(out, "wrote {}", path.display()).map_err(io_err)?;
    }

    let death = esd_time_global(&sudden_death_demo(), 1.0)
        .map_err(|e| CmdError::BadInput(e.to_string()))?;
    writeln!(
        out,
        "case I:  finite death at gamma*t_c = {}",
        fmt17(death.t_c.expect("case I dies at finite time"))
    )
    .map_err(io_err)?;
    let decay = esd_time_global(&asymptotic_decay_demo(), 1.0)
        .map_err(|e| CmdError::BadInput(e.to_string()))?;
    writeln!(
        out,
        "case II: {} (no finite death time)",
        classification_name(decay.classification)
    )
    .map_err(io_err)?;
    Ok(EXIT_OK)
}
