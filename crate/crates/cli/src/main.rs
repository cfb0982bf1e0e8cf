//! Command-line front end for monomial-ideal power computations.
//!
//! Ideals are read from a file or stdin in a comma-separated monomial
//! grammar (`x^3, y^3, z^3, x*y*z`, optionally preceded by a
//! `vars: x, y, z` header). Every command reports in plain text or, with
//! `--format json`, as a stable machine-readable record.
//!
//! Exit codes: 0 success, 2 input parse error, 3 ideal not m-primary,
//! 4 closure requested for a bad ideal, 1 anything else.

mod parse;
mod report;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monobox::{
    axis_stabilize_unchecked, box_ideal, classify, freiman_check, is_very_good, oracle_closure,
    AxisStabilization, BoxCoord, Error, FreimanVerdict, MonomialIdeal,
};

use parse::IdealSpec;
use report::*;

#[derive(Parser)]
#[command(
    name = "monobox",
    version,
    about = "Powers of m-primary monomial ideals: classification, box ideals, Ratliff-Rush closure"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Input file holding the ideal; stdin when omitted or "-"
    file: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Decide good/bad under the box decomposition principle
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Ratliff-Rush closure of a good ideal (refuses bad ideals)
    Closure {
        #[command(flatten)]
        common: Common,
        /// Skip the goodness gate. Unsound: on a bad ideal the formula
        /// computes something, but not the closure.
        #[arg(long)]
        skip_classify: bool,
    },
    /// Stabilize the axis lines of box ideals
    Stabilize {
        #[command(flatten)]
        common: Common,
        /// Restrict to one axis, named by its variable
        #[arg(long)]
        axis: Option<String>,
        /// Skip the goodness gate (see `closure`)
        #[arg(long)]
        skip_classify: bool,
    },
    /// The box ideal at the given grid coordinates
    #[command(name = "box-ideal")]
    BoxIdeal {
        #[command(flatten)]
        common: Common,
        /// Box coordinates, comma separated, e.g. --coords 1,0,0
        #[arg(long, value_delimiter = ',', required = true)]
        coords: Vec<u64>,
        /// Suppress the bad-ideal warning
        #[arg(long)]
        skip_classify: bool,
    },
    /// Minimal generators of I^l
    Power {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'l', long)]
        exponent: u64,
    },
    /// Colon quotient I^power : <generators>
    Colon {
        #[command(flatten)]
        common: Common,
        /// Power of the input ideal on the left of the colon
        #[arg(long, default_value_t = 1)]
        power: u64,
        /// Generators of the right-hand ideal, same grammar and variables
        #[arg(long)]
        by: String,
    },
    /// Closure by brute force: successive quotients I^{k+1} : I^k
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u64).range(1..))]
        kmax: u64,
        /// Trailing quotients that must agree to call it stabilized
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        window: u64,
    },
    /// Freiman bound analysis for equigenerated ideals
    Freiman {
        #[command(flatten)]
        common: Common,
    },
    /// Test whether I^2 = I * <mu_1, ..., mu_n>
    #[command(name = "very-good")]
    VeryGood {
        #[command(flatten)]
        common: Common,
    },
}

enum CliError {
    Io(std::io::Error),
    Parse(parse::ParseError),
    Lib(Error),
    BadIdealGate(Box<monobox::ClassificationReport>, IdealSpec),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<parse::ParseError> for CliError {
    fn from(e: parse::ParseError) -> Self {
        CliError::Parse(e)
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::from(0),
        Err(err) => {
            let code = match &err {
                CliError::Io(e) => {
                    eprintln!("error: {e}");
                    1
                }
                CliError::Parse(e) => {
                    eprintln!("error: {e}");
                    2
                }
                CliError::Lib(Error::NotMPrimary { var }) => {
                    eprintln!(
                        "error: the ideal is not m-primary: no pure power of variable #{} among the minimal generators",
                        var + 1
                    );
                    3
                }
                CliError::Lib(e) => {
                    eprintln!("error: {e}");
                    1
                }
                CliError::BadIdealGate(report, spec) => {
                    let w = report.witness.as_ref().expect("bad verdict has a witness");
                    eprintln!(
                        "error: the ideal is bad: {} lies in I^{} but its boxes sum to at most {} (needs >= {})",
                        spec.format_monomial(&w.monomial),
                        w.power,
                        w.box_sum,
                        w.power - 1
                    );
                    eprintln!("hint: the closure formula needs a good ideal; try `monobox oracle` for a truncated brute-force closure, or --skip-classify to force the formula anyway");
                    4
                }
                CliError::Usage(msg) => {
                    eprintln!("error: {msg}");
                    2
                }
            };
            ExitCode::from(code)
        }
    }
}

fn read_input(common: &Common) -> Result<IdealSpec, CliError> {
    let text = match common.file.as_deref() {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(CliError::Io)?;
            buf
        }
        Some(path) => std::fs::read_to_string(path).map_err(CliError::Io)?,
    };
    Ok(IdealSpec::parse(&text)?)
}

fn emit<T: serde::Serialize>(
    common: &Common,
    report: Report<T>,
    text: String,
) -> Result<(), CliError> {
    match common.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{text}"),
    }
    Ok(())
}

/// Classification gate shared by `closure` and `stabilize`.
fn gate(ideal: &MonomialIdeal, spec: &IdealSpec, skip: bool) -> Result<(), CliError> {
    if skip {
        return Ok(());
    }
    let report = classify(ideal)?;
    if !report.is_good() {
        return Err(CliError::BadIdealGate(Box::new(report), spec.clone()));
    }
    Ok(())
}

fn axis_json(spec: &IdealSpec, stab: &AxisStabilization) -> AxisJson {
    AxisJson {
        axis: spec.variables[stab.axis].clone(),
        q: stab.q,
        rounds: stab
            .trace
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| f.iter().map(|m| m.exponents().to_vec()).collect())
            .collect(),
        ideal: IdealJson::from_ideal(spec, &stab.ideal),
    }
}

fn axis_text(spec: &IdealSpec, stab: &AxisStabilization) -> String {
    let mut out = format!("axis {}: q = {}\n", spec.variables[stab.axis], stab.q);
    for (t, f) in stab.trace.iter().filter(|f| !f.is_empty()).enumerate() {
        let round: Vec<String> = f.iter().map(|m| spec.format_monomial(m)).collect();
        out.push_str(&format!("  round {}: {}\n", t + 1, round.join(", ")));
    }
    out.push_str(&format!("  ideal: {}\n", spec.format_ideal(&stab.ideal)));
    out
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { common } => {
            let spec = read_input(&common)?;
            let ideal = spec.to_ideal()?;
            let report = classify(&ideal)?;
            let mut text = format!(
                "verdict: {}\nrule: {}\n",
                verdict_str(report.verdict),
                rule_str(report.rule)
            );
            if let Some(w) = &report.witness {
                text.push_str(&format!(
                    "witness: {} in I^{} (largest box sum {}, needs >= {})\n",
                    spec.format_monomial(&w.monomial),
                    w.power,
                    w.box_sum,
                    w.power - 1
                ));
            }
            if !report.k_bounds.is_empty() {
                let ks: Vec<String> = report
                    .k_bounds
                    .iter()
                    .map(|kb| format!("{}: {}", spec.format_monomial(&kb.generator), kb.power_index))
                    .collect();
                text.push_str(&format!("power indices: {}\n", ks.join(", ")));
            }
            emit(
                &common,
                Report::new("classify", &spec, ClassifyJson::from_report(&report)),
                text,
            )
        }

        Command::Closure {
            common,
            skip_classify,
        } => {
            let spec = read_input(&common)?;
            let ideal = spec.to_ideal()?;
            gate(&ideal, &spec, skip_classify)?;
            let n = ideal.num_vars();
            let mut axes = Vec::with_capacity(n);
            let mut closure: Option<MonomialIdeal> = None;
            for axis in 0..n {
                let stab = axis_stabilize_unchecked(&ideal, axis)?;
                closure = Some(match closure {
                    None => stab.ideal.clone(),
                    Some(acc) => acc.intersect(&stab.ideal)?,
                });
                axes.push(stab);
            }
            let closure = closure.expect("at least one variable");
            let added: Vec<&monobox::Monomial> = closure
                .generators()
                .iter()
                .filter(|g| !ideal.contains(g).unwrap_or(false))
                .collect();

            let mut text = format!("closure: {}\n", spec.format_ideal(&closure));
            let added_text: Vec<String> =
                added.iter().map(|g| spec.format_monomial(g)).collect();
            text.push_str(&format!(
                "added: {}\n",
                if added_text.is_empty() {
                    "(none; the ideal is Ratliff-Rush)".to_string()
                } else {
                    added_text.join(", ")
                }
            ));
            for stab in &axes {
                text.push_str(&axis_text(&spec, stab));
            }
            let result = ClosureJson {
                closure: IdealJson::from_ideal(&spec, &closure),
                added: added.iter().map(|g| g.exponents().to_vec()).collect(),
                axes: axes.iter().map(|s| axis_json(&spec, s)).collect(),
            };
            emit(&common, Report::new("closure", &spec, result), text)
        }

        Command::Stabilize {
            common,
            axis,
            skip_classify,
        } => {
            let spec = read_input(&common)?;
            let ideal = spec.to_ideal()?;
            gate(&ideal, &spec, skip_classify)?;
            let axes: Vec<usize> = match axis {
                Some(name) => {
                    let idx = spec
                        .variables
                        .iter()
                        .position(|v| *v == name)
                        .ok_or_else(|| CliError::Usage(format!("unknown axis {name}")))?;
                    vec![idx]
                }
                None => (0..ideal.num_vars()).collect(),
            };
            let mut stabs = Vec::new();
            let mut text = String::new();
            for a in axes {
                let stab = axis_stabilize_unchecked(&ideal, a)?;
                text.push_str(&axis_text(&spec, &stab));
                stabs.push(stab);
            }
            let result = StabilizeJson {
                axes: stabs.iter().map(|s| axis_json(&spec, s)).collect(),
            };
            emit(&common, Report::new("stabilize", &spec, result), text)
        }

        Command::BoxIdeal {
            common,
            coords,
            skip_classify,
        } => {
            let spec = read_input(&common)?;
            let ideal = spec.to_ideal()?;
            if coords.len() != ideal.num_vars() {
                return Err(CliError::Usage(format!(
                    "--coords needs {} entries for {} variables",
                    ideal.num_vars(),
                    ideal.num_vars()
                )));
            }
            if !skip_classify {
                let report = classify(&ideal)?;
                if !report.is_good() {
                    eprintln!(
                        "warning: the ideal is bad; the colon value below is not a box ideal in the geometric sense"
                    );
                }
            }
            let result = box_ideal(&ideal, &BoxCoord(coords.clone()))?;
            let coord_text: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
            let text = format!(
                "I_({}) = {}\n",
                coord_text.join(","),
                spec.format_ideal(&result)
            );
            let result = BoxIdealJson {
                coords,
                ideal: IdealJson::from_ideal(&spec, &result),
            };
            emit(&common, Report::new("box-ideal", &spec, result), text)
        }

        Command::Power { common, exponent } => {
            let spec = read_input(&common)?;
            let ideal = spec.to_ideal()?;
            let power = ideal.pow(exponent)?;
            let text = format!(
                "I^{} = {} ({} generators)\n",
                exponent,
                spec.format_ideal(&power),
                power.num_generators()
            );
            let result = PowerJson {
                exponent,
                ideal: IdealJson::from_ideal(&spec, &power),
            };
            emit(&common, Report::new("power", &spec, result), text)
        }

        Command::Colon { common, power, by } => {
            let spec = read_input(&common)?;
            let ideal = spec.to_ideal()?;
            let operands = spec.parse_operand(&by)?;
            let rhs = MonomialIdeal::from_generators(spec.num_vars(), operands)?;
            let result = ideal.pow(power)?.colon(&rhs)?;
            let text = format!(
                "I^{} : {} = {}\n",
                power,
                spec.format_ideal(&rhs),
                spec.format_ideal(&result)
            );
            let result = ColonJson {
                power,
                by: rhs.generators().iter().map(|g| g.exponents().to_vec()).collect(),
                ideal: IdealJson::from_ideal(&spec, &result),
            };
            emit(&common, Report::new("colon", &spec, result), text)
        }

        Command::Oracle {
            common,
            kmax,
            window,
        } => {
            let spec = read_input(&common)?;
            let ideal = spec.to_ideal()?;
            let oracle = oracle_closure(&ideal, kmax, window)?;
            let mut text = String::new();
            for (idx, count) in oracle.quotient_counts().iter().enumerate() {
                let k = idx + 1;
                text.push_str(&format!("k={}: |G(I^{}:I^{})| = {}\n", k, k + 1, k, count));
            }
            text.push_str(&format!("union: {}\n", spec.format_ideal(&oracle.union)));
            text.push_str(&format!(
                "stabilized: {} (window {} at k_max {})\n",
                oracle.stabilized, window, kmax
            ));
            if !oracle.stabilized {
                text.push_str("note: the union is a truncation; raise --kmax for more evidence\n");
            }
            let result = OracleJson {
                k_max: kmax,
                window,
                counts: oracle.quotient_counts(),
                quotients: oracle
                    .quotients
                    .iter()
                    .map(|q| q.generators().iter().map(|g| g.exponents().to_vec()).collect())
                    .collect(),
                union: IdealJson::from_ideal(&spec, &oracle.union),
                stabilized: oracle.stabilized,
            };
            emit(&common, Report::new("oracle", &spec, result), text)
        }

        Command::Freiman { common } => {
            let spec = read_input(&common)?;
            let ideal = spec.to_ideal()?;
            let report = freiman_check(&ideal)?;
            let verdict = match report.verdict {
                FreimanVerdict::Freiman => "freiman",
                FreimanVerdict::NotFreiman => "not-freiman",
                FreimanVerdict::NotApplicable => "not-applicable",
            };
            let degree = report
                .degree
                .map(|d| u64::try_from(d).map_err(|_| overflow()))
                .transpose()?;
            let bound = report
                .bound
                .map(|b| u64::try_from(b).map_err(|_| overflow()))
                .transpose()?;
            let mut text = match degree {
                Some(d) => format!("equigenerated: true (degree {d})\n"),
                None if report.equigenerated => "equigenerated: true\n".to_string(),
                None => "equigenerated: false\n".to_string(),
            };
            text.push_str(&format!(
                "n = {}, |G(I)| = {}, |G(I^2)| = {}",
                report.num_vars, report.g1, report.g2
            ));
            match bound {
                Some(b) => text.push_str(&format!(", bound = {b}\n")),
                None => text.push('\n'),
            }
            if let Some(vg) = report.very_good {
                text.push_str(&format!("very good: {vg}\n"));
            }
            text.push_str(&format!("verdict: {verdict}\n"));
            let result = FreimanJson {
                equigenerated: report.equigenerated,
                degree,
                num_vars: report.num_vars,
                g1: report.g1,
                g2: report.g2,
                bound,
                very_good: report.very_good,
                verdict,
            };
            emit(&common, Report::new("freiman", &spec, result), text)
        }

        Command::VeryGood { common } => {
            let spec = read_input(&common)?;
            let ideal = spec.to_ideal()?;
            let answer = is_very_good(&ideal)?;
            let text = format!("very good: {answer}\n");
            emit(
                &common,
                Report::new("very-good", &spec, VeryGoodJson { very_good: answer }),
                text,
            )
        }
    }
}

fn overflow() -> CliError {
    CliError::Lib(Error::ExponentOverflow)
}
