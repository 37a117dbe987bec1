//! `dyngroups`: command-line front end over the dynamical-groups library.
//!
//! Verbs: `classify`, `coadjoint`, `reduce`, `symmetry-table`, `verify`.
//! Payloads are JSON on stdin or via `--in`; reports go to stdout as JSON
//! (default, deterministic byte-for-byte for identical inputs and seed) or
//! as plain text with `--text`.
//!
//! Exit codes: 0 success, 1 property failure, 2 parse error,
//! 3 invalid Lorentz matrix, 4 degenerate momentum.

mod input;
mod output;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dyngroups_core::oracle::{
    reconstruct_coadjoint, DualityGroup, ExtendedGroup, PoincareGroup, TwinGroup,
};
use dyngroups_core::poincare::{self, Momentum, PoincareElement};
use dyngroups_core::reduction;
use dyngroups_core::twinfold::{symmetry_effect_table, TwinElement};
use dyngroups_core::verify::{run_all, SignFault, VerifyConfig};
use dyngroups_core::Sign;

use input::{
    from_value, parse_error, CoadjointPayload, RawChargedMomentum, RawExtended, RawMomentum,
    RawPoincare, RawTwin, EXIT_PARSE, EXIT_PROPERTY_FAILURE,
};
use output::render_json;

#[derive(Debug)]
pub struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    pub fn new(code: i32, message: String) -> Self {
        CliError { code, message }
    }
}

#[derive(Parser)]
#[command(
    name = "dyngroups",
    version,
    about = "Dynamical groups over Minkowski space: classification, coadjoint actions, momentum reduction, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Validation tolerance for matrix and payload checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Seed for randomized suites (verify) and reproducible reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Read the input payload from a file instead of stdin.
    #[arg(long = "in", global = true, value_name = "PATH")]
    input: Option<PathBuf>,

    /// Emit JSON (default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,

    /// Emit human-readable text instead of JSON.
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a Lorentz matrix or group element into its connected
    /// component (and symmetry class for twin elements).
    Classify,
    /// Apply the selected group's coadjoint action to a momentum.
    Coadjoint {
        /// Which group's action to apply.
        #[arg(long, value_enum)]
        group: GroupSel,
        /// Cross-check the result against the duality-oracle reconstruction.
        #[arg(long)]
        check: bool,
    },
    /// Reduce a timelike momentum to its canonical form.
    Reduce {
        /// Keep a single momentum component instead of the rest-frame form.
        #[arg(long)]
        boosted: bool,
    },
    /// Print the symmetry effect table of the twin-fold group.
    SymmetryTable,
    /// Run every property suite; exit 0 only if all pass.
    Verify {
        /// Scale factor on the per-property case counts.
        #[arg(long, default_value_t = 1.0)]
        counts: f64,
        /// Negative control: flip one transcribed sign in a coadjoint
        /// formula; the run must then fail.
        #[arg(long, value_name = "SITE")]
        perturb: Option<SignFault>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum GroupSel {
    /// The Poincaré group.
    Poincare,
    /// Trivial one-charge extension (ν fixed to +1).
    Extended,
    /// Eight-connected-component charged group (ν = ±1).
    Eight,
    /// Twin-fold group.
    Twin,
}

impl GroupSel {
    fn name(self) -> &'static str {
        match self {
            GroupSel::Poincare => "poincare",
            GroupSel::Extended => "extended",
            GroupSel::Eight => "eight",
            GroupSel::Twin => "twin",
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Format {
    Json,
    Text,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, code)) => {
            print!("{report}");
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    let format = if cli.text { Format::Text } else { Format::Json };
    match cli.command {
        Command::Classify => {
            let text = read_input(&cli.input)?;
            cmd_classify(&text, cli.tol, format)
        }
        Command::Coadjoint { group, check } => {
            let text = read_input(&cli.input)?;
            cmd_coadjoint(group, &text, cli.tol, check, format)
        }
        Command::Reduce { boosted } => {
            let text = read_input(&cli.input)?;
            cmd_reduce(&text, cli.tol, boosted, format)
        }
        Command::SymmetryTable => cmd_symmetry_table(format),
        Command::Verify { counts, perturb } => {
            cmd_verify(cli.seed, cli.tol, counts, perturb, format)
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::new(EXIT_PARSE, format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::new(EXIT_PARSE, format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse_json(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| parse_error("invalid JSON input", e))
}

fn cmd_classify(text: &str, tol: f64, format: Format) -> Result<(String, i32), CliError> {
    let value = parse_json(text)?;
    let mut report = serde_json::Map::new();
    report.insert("command".into(), json!("classify"));

    let (component, mu) = match &value {
        Value::Array(_) => {
            let raw: [f64; 16] = from_value(value.clone(), "matrix")?;
            let l = input::lorentz_from(&raw, tol)?;
            (l.component(), l.mu())
        }
        Value::Object(map) if map.contains_key("mu") => {
            let raw: RawTwin = from_value(value.clone(), "twin element")?;
            let g: TwinElement = raw.into_typed(tol)?;
            let tag = g.classify_symmetry();
            report.insert("symmetry_class".into(), json!(tag.class.to_string()));
            report.insert("p_character".into(), json!(tag.p_character.to_string()));
            (g.lorentz_slot().component(), g.mu)
        }
        Value::Object(map) if map.contains_key("L") => {
            let raw: [f64; 16] = from_value(map["L"].clone(), "field 'L'")?;
            let l = input::lorentz_from(&raw, tol)?;
            (l.component(), l.mu())
        }
        _ => {
            return Err(parse_error(
                "unrecognized input",
                "expected a 16-entry matrix, an object with an \"L\" field, or a twin element",
            ))
        }
    };

    report.insert("component".into(), json!(component.to_string()));
    report.insert("mu".into(), json!(mu.as_i8()));
    report.insert("orthochron".into(), json!(component.is_orthochron()));

    let rendered = match format {
        Format::Json => render_json(&Value::Object(report)),
        Format::Text => {
            let chron = if component.is_orthochron() {
                "orthochron"
            } else {
                "antichron"
            };
            let mut line = format!("{component}, {chron}");
            if let Some(Value::String(class)) = report.get("symmetry_class") {
                let p = report["p_character"].as_str().unwrap_or_default();
                line.push_str(&format!(", class={class} (P character: {p})"));
            }
            line.push('\n');
            line
        }
    };
    Ok((rendered, 0))
}

/// Componentwise distance between a closed-form result and the oracle
/// reconstruction, on the serialized momentum coordinates.
fn oracle_residual<G: DualityGroup>(
    group: &G,
    g: &G::Element,
    j: &G::Momentum,
    closed: &G::Momentum,
) -> Result<f64, CliError> {
    let reconstructed = reconstruct_coadjoint(group, g, j).map_err(input::core_error)?;
    let a = group.momentum_coords(closed);
    let b = group.momentum_coords(&reconstructed);
    Ok(a.iter()
        .zip(b.iter())
        .fold(0.0_f64, |acc, (x, y)| acc.max((x - y).abs())))
}

fn cmd_coadjoint(
    group: GroupSel,
    text: &str,
    tol: f64,
    check: bool,
    format: Format,
) -> Result<(String, i32), CliError> {
    let payload: CoadjointPayload = from_value(parse_json(text)?, "coadjoint payload")?;

    let (momentum_json, residual) = match group {
        GroupSel::Poincare => {
            let el: PoincareElement =
                from_value::<RawPoincare>(payload.element, "element")?.into_typed(tol)?;
            let j: Momentum =
                from_value::<RawMomentum>(payload.momentum, "momentum")?.into_typed(tol)?;
            let out = poincare::coadjoint(&el, &j);
            let residual = check
                .then(|| oracle_residual(&PoincareGroup, &el, &j, &out))
                .transpose()?;
            (serde_json::to_value(out).expect("serializable"), residual)
        }
        GroupSel::Extended | GroupSel::Eight => {
            let el = from_value::<RawExtended>(payload.element, "element")?.into_typed(tol)?;
            if group == GroupSel::Extended && el.nu == Sign::Minus {
                return Err(parse_error(
                    "group/payload mismatch",
                    "the trivial extension fixes nu = +1; use --group eight for nu = -1",
                ));
            }
            let j = from_value::<RawChargedMomentum>(payload.momentum, "momentum")?
                .into_typed(tol)?;
            let out = el.coadjoint(&j).map_err(input::core_error)?;
            let oracle_group = ExtendedGroup {
                charges: el.charges(),
            };
            let residual = check
                .then(|| oracle_residual(&oracle_group, &el, &j, &out))
                .transpose()?;
            (serde_json::to_value(out).expect("serializable"), residual)
        }
        GroupSel::Twin => {
            let el = from_value::<RawTwin>(payload.element, "element")?.into_typed(tol)?;
            let j = from_value::<RawChargedMomentum>(payload.momentum, "momentum")?
                .into_typed(tol)?;
            let out = el.coadjoint(&j).map_err(input::core_error)?;
            let oracle_group = TwinGroup {
                charges: el.charges(),
            };
            let residual = check
                .then(|| oracle_residual(&oracle_group, &el, &j, &out))
                .transpose()?;
            (serde_json::to_value(out).expect("serializable"), residual)
        }
    };

    let check_pass = residual.map(|r| r <= tol);
    let mut report = serde_json::Map::new();
    report.insert("command".into(), json!("coadjoint"));
    report.insert("group".into(), json!(group.name()));
    report.insert("momentum".into(), momentum_json.clone());
    if let (Some(r), Some(ok)) = (residual, check_pass) {
        report.insert(
            "check".into(),
            json!({"oracle_residual": r, "pass": ok, "tol": tol}),
        );
    }

    let rendered = match format {
        Format::Json => render_json(&Value::Object(report)),
        Format::Text => {
            let mut line = format!("group {}: momentum {}\n", group.name(), momentum_json);
            if let (Some(r), Some(ok)) = (residual, check_pass) {
                line.push_str(&format!(
                    "oracle residual {r:.3e} ({})\n",
                    if ok { "pass" } else { "FAIL" }
                ));
            }
            line
        }
    };
    let code = if check_pass == Some(false) {
        EXIT_PROPERTY_FAILURE
    } else {
        0
    };
    Ok((rendered, code))
}

fn cmd_reduce(
    text: &str,
    tol: f64,
    boosted: bool,
    format: Format,
) -> Result<(String, i32), CliError> {
    let j: Momentum = from_value::<RawMomentum>(parse_json(text)?, "momentum")?.into_typed(tol)?;
    let reduced = if boosted {
        reduction::canonical_reduce_boosted(&j)
    } else {
        reduction::canonical_reduce(&j)
    }
    .map_err(input::core_error)?;

    let report = json!({
        "command": "reduce",
        "boosted": boosted,
        "canonical": serde_json::to_value(reduced).expect("serializable"),
    });
    let rendered = match format {
        Format::Json => render_json(&report),
        Format::Text => format!(
            "s = {:.12e}, p = {:.12e}, E = {:.12e}\n",
            reduced.s, reduced.p, reduced.e
        ),
    };
    Ok((rendered, 0))
}

fn cmd_symmetry_table(format: Format) -> Result<(String, i32), CliError> {
    let rows = symmetry_effect_table();
    let rendered = match format {
        Format::Json => {
            let report = json!({
                "command": "symmetry-table",
                "rows": serde_json::to_value(&rows).expect("serializable"),
            });
            render_json(&report)
        }
        Format::Text => {
            let mark = |s: Sign| if s.is_minus() { "flip" } else { "same" };
            let mut out = String::new();
            out.push_str(&format!(
                "{:>3} {:>3} {:<15} {:<19} {:>6} {:>6} {:>6} {:>6} {:>6}\n",
                "mu", "nu", "parity", "class", "E", "p", "q", "spin", "fold"
            ));
            for r in &rows {
                out.push_str(&format!(
                    "{:>3} {:>3} {:<15} {:<19} {:>6} {:>6} {:>6} {:>6} {:>6}\n",
                    r.mu.as_i8(),
                    r.nu.as_i8(),
                    r.p_character.to_string(),
                    r.class.to_string(),
                    mark(r.energy),
                    mark(r.momentum),
                    mark(r.charge),
                    mark(r.spin),
                    mark(r.fold),
                ));
            }
            out
        }
    };
    Ok((rendered, 0))
}

fn cmd_verify(
    seed: u64,
    tol: f64,
    counts: f64,
    perturb: Option<SignFault>,
    format: Format,
) -> Result<(String, i32), CliError> {
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(counts > 0.0) || !counts.is_finite() {
        return Err(parse_error("--counts", "must be a positive finite scale"));
    }
    let cfg = VerifyConfig {
        seed,
        tol,
        scale: counts,
        perturb,
    };
    let report = run_all(&cfg);
    let code = if report.pass { 0 } else { EXIT_PROPERTY_FAILURE };
    let rendered = match format {
        Format::Json => {
            let mut value = serde_json::to_value(&report).expect("serializable");
            value["command"] = json!("verify");
            render_json(&value)
        }
        Format::Text => {
            let mut out = String::new();
            for p in &report.properties {
                out.push_str(&format!(
                    "[{}] {:40} cases={:<5} failures={:<3} max_residual={:.3e} tol={:.3e}\n",
                    if p.pass { "PASS" } else { "FAIL" },
                    p.name,
                    p.cases,
                    p.failures,
                    p.max_residual,
                    p.tolerance,
                ));
            }
            out.push_str(&format!(
                "verify: {} (seed {seed}, counts x{counts})\n",
                if report.pass { "PASS" } else { "FAIL" }
            ));
            out
        }
    };
    Ok((rendered, code))
}
