//! `critfilt`: exact critical values, base Belyi functions and
//! permutation combinatorics from the command line.
//!
//! Every command prints one JSON document with sorted keys. Exit status is
//! 0 on success, 1 when a verification fails, 2 on a usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use critfilt::constellation::{
    braid_orbits, budget_from_env, dessin_dot, enumerate, parse_passport, Constellation,
    DEFAULT_BRAID_BUDGET, DEFAULT_TRIPLE_BUDGET,
};
use critfilt::exactnum::{parse_rat, Rat, RatFunc};
use critfilt::expr::{parse_map, parse_parametric};
use critfilt::friedbase::{
    beta_bas_exact, beta_bas_sampled_verify, boxed_formula, compare_with_box,
    elimination_degree_bound, DEFAULT_DEGREE_BUDGET,
};
use critfilt::hypercurve::{canonical_name, member};
use critfilt::ratmap::{critical_data, divisor, filtration_level, passport, RatMap};
use critfilt::report;
use critfilt::verify::{verify_all, Mode};
use critfilt::Error;

#[derive(Parser)]
#[command(name = "critfilt", version, about = "Critical filtrations, Fried families and dessins")]
struct Cli {
    /// Write the JSON report to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Critical values of a rational map.
    Critvals(MapArgs),
    /// Filtration level and Belyi/Fried verdict of a rational map.
    Classify(MapArgs),
    /// Base function of a registered family against its closed form.
    BetaBas(BetaArgs),
    /// Divisor of a rational function.
    Divisor {
        #[arg(long = "func", value_name = "EXPR", allow_hyphen_values = true)]
        func: String,
    },
    /// Transitive constellations up to conjugation.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
        branch: u8,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        genus: Option<usize>,
    },
    /// Braid orbits on 4-constellations with a given passport.
    BraidOrbits {
        #[arg(long)]
        degree: usize,
        /// Four cycle types such as `2,1;2,1;2,1;2,1`.
        #[arg(long)]
        passport: String,
    },
    /// Export the I-th dessin of degree D (1-based) as Graphviz text.
    Dessin {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        index: usize,
    },
    /// Runs every acceptance criterion.
    VerifyPaper {
        /// Sampled verification only for the genus-2 family.
        #[arg(long)]
        fast: bool,
    },
}

#[derive(Args)]
struct MapArgs {
    #[arg(long = "map", value_name = "EXPR", allow_hyphen_values = true)]
    map: String,
    /// Substitute a parameter, e.g. `lambda=9`.
    #[arg(long, value_name = "NAME=VALUE")]
    param: Option<String>,
}

#[derive(Args)]
struct BetaArgs {
    #[arg(long)]
    family: String,
    /// Symbolic elimination over Q(parameter).
    #[arg(long, conflicts_with = "sample")]
    exact: bool,
    /// Agreement at N rational parameters.
    #[arg(long, value_name = "N")]
    sample: Option<usize>,
}

/// Outcome of a command: the results object and whether it verified.
struct Outcome {
    inputs: Value,
    results: Value,
    pass: bool,
}

fn parse_param(spec: &str) -> anyhow::Result<(String, Rat)> {
    let (name, value) = spec
        .split_once('=')
        .ok_or_else(|| anyhow!(Usage(format!("--param expects NAME=VALUE, got {spec:?}"))))?;
    let value = parse_rat(value)
        .ok_or_else(|| anyhow!(Usage(format!("{value:?} is not a rational number"))))?;
    Ok((name.trim().to_string(), value))
}

/// Either a concrete map or the generic member of a one-parameter family.
enum Parsed {
    Concrete(String, RatMap<Rat>),
    /// Printed expression, parameter name, generic member.
    Generic(String, String, RatMap<RatFunc>),
}

fn read_map(args: &MapArgs) -> anyhow::Result<Parsed> {
    match &args.param {
        Some(spec) => {
            let (name, value) = parse_param(spec)?;
            let pm = parse_parametric(&args.map, Some(&name))?;
            Ok(Parsed::Concrete(pm.var.clone(), pm.at(&value)?))
        }
        None => match parse_map(&args.map) {
            Ok((var, r)) => Ok(Parsed::Concrete(var, r)),
            Err(Error::MultipleVariables(_)) => {
                let pm = parse_parametric(&args.map, None)?;
                let param = pm.param.clone().expect("two variables");
                Ok(Parsed::Generic(pm.expr.to_string(), param, pm.generic()?))
            }
            Err(e) => Err(e.into()),
        },
    }
}

fn critvals(args: &MapArgs) -> anyhow::Result<Outcome> {
    let inputs = json!({"map": args.map, "param": args.param});
    let results = match read_map(args)? {
        Parsed::Concrete(var, r) => json!({
            "map": r.display_in(&var),
            "degree": r.degree(),
            "critical_data": report::critical_data(&critical_data(&r)),
        }),
        Parsed::Generic(text, param, r) => json!({
            "map": text,
            "degree": r.degree(),
            "parameter": param,
            "generic_critical_data": report::generic_critical_data(&critical_data(&r), &param),
        }),
    };
    Ok(Outcome { inputs, results, pass: true })
}

fn classify(args: &MapArgs) -> anyhow::Result<Outcome> {
    let Parsed::Concrete(var, r) = read_map(args)? else {
        bail!(Usage("classify needs a map without free parameters; pass --param".into()));
    };
    let cls = filtration_level(&r)?;
    let pp = passport(&r).ok().map(|entries| {
        entries
            .iter()
            .map(|(p, parts)| json!({"value": report::point(p), "partition": parts}))
            .collect::<Vec<_>>()
    });
    Ok(Outcome {
        inputs: json!({"map": args.map, "param": args.param}),
        results: json!({
            "map": r.display_in(&var),
            "degree": r.degree(),
            "level": cls.level,
            "verdict": cls.verdict(),
            "belyi": cls.belyi,
            "fried": cls.fried,
            "critical_values": report::critical_values(&critical_data(&r).values()),
            "passport": pp,
        }),
        pass: true,
    })
}

fn beta_bas(args: &BetaArgs) -> anyhow::Result<Outcome> {
    let family = canonical_name(&args.family)?;
    let boxed = boxed_formula(family)?;
    let generic = member(family, &RatFunc::param())?;
    let t = &boxed.value;
    let bound = 6 * elimination_degree_bound(&generic) + t.num().deg0().max(t.den().deg0());
    let estimate = elimination_degree_bound(&generic);
    let exact = args.exact || (args.sample.is_none() && estimate <= DEFAULT_DEGREE_BUDGET);
    let inputs = json!({"family": family, "exact": args.exact, "sample": args.sample});
    if exact {
        let beta = match beta_bas_exact(family, DEFAULT_DEGREE_BUDGET) {
            Ok(b) => b,
            Err(Error::DegreeBudgetExceeded { estimate, budget }) => {
                return Ok(Outcome {
                    inputs,
                    results: json!({
                        "method": "exact",
                        "attempted": false,
                        "degree_estimate": estimate,
                        "degree_budget": budget,
                        "hint": format!("use --sample N with N > {bound}"),
                    }),
                    pass: false,
                })
            }
            Err(e) => return Err(e.into()),
        };
        let cmp = compare_with_box(&beta, &boxed)?;
        return Ok(Outcome {
            inputs,
            results: json!({
                "method": "exact",
                "parameter": boxed.param,
                "beta_bas": report::ratfunc(&beta.value, boxed.param),
                "closed_form": boxed.text,
                "closed_form_kind": format!("{:?}", boxed.kind),
                "match": cmp.equal,
                "ratio": cmp.ratio.as_ref().map(report::rat),
                "formula_is_critical_value": cmp.is_critical_value,
                "degree_estimate": beta.estimate,
                "degree_budget": beta.budget,
            }),
            pass: cmp.equal,
        });
    }
    let n = args.sample.unwrap_or(bound + 1);
    let rep = match beta_bas_sampled_verify(family, &boxed, n) {
        Err(e @ Error::InsufficientSamples { .. }) => bail!(Usage(e.to_string())),
        other => other?,
    };
    Ok(Outcome {
        inputs,
        results: json!({
            "method": "sampled",
            "parameter": boxed.param,
            "closed_form": boxed.text,
            "bound": rep.bound,
            "requested": rep.requested,
            "agreed": rep.agreed.len(),
            "skipped": rep.skipped.iter()
                .map(|(p, why)| json!({"parameter": report::rat(p), "reason": why}))
                .collect::<Vec<_>>(),
            "mismatch": rep.mismatch.as_ref().map(report::rat),
            "match": rep.pass,
        }),
        pass: rep.pass,
    })
}

fn divisor_cmd(func: &str) -> anyhow::Result<Outcome> {
    let (var, r) = parse_map(func)?;
    let f = RatMap::function(r.num().clone(), r.den().clone())?;
    let div = divisor(&f)?;
    Ok(Outcome {
        inputs: json!({"func": func}),
        results: json!({"function": f.display_in(&var), "divisor": report::divisor(&div)}),
        pass: true,
    })
}

fn constellation_json(c: &Constellation) -> Value {
    json!({
        "permutations": c.perms().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "cycle_types": c.cycle_types(),
        "genus": c.genus().ok(),
    })
}

fn enumerate_cmd(branch: u8, degree: usize, genus: Option<usize>) -> anyhow::Result<Outcome> {
    let default = if branch == 4 { DEFAULT_BRAID_BUDGET } else { DEFAULT_TRIPLE_BUDGET };
    let budget = budget_from_env(default);
    let all = enumerate(branch as usize, degree, budget).map_err(usage_if_budget)?;
    let mut by_genus = std::collections::BTreeMap::new();
    for c in &all {
        *by_genus.entry(c.genus()?.to_string()).or_insert(0usize) += 1;
    }
    let chosen: Vec<&Constellation> = all
        .iter()
        .filter(|c| genus.is_none() || c.genus().ok() == genus)
        .collect();
    Ok(Outcome {
        inputs: json!({"branch": branch, "degree": degree, "genus": genus, "budget": budget}),
        results: json!({
            "count": chosen.len(),
            "counts_by_genus": by_genus,
            "representatives": chosen.iter().map(|c| constellation_json(c)).collect::<Vec<_>>(),
        }),
        pass: true,
    })
}

fn braid_cmd(degree: usize, spec: &str) -> anyhow::Result<Outcome> {
    let pp = parse_passport(spec, degree).map_err(|e| anyhow!(Usage(e.to_string())))?;
    let budget = budget_from_env(DEFAULT_BRAID_BUDGET);
    let orbits = braid_orbits(degree, &pp, budget).map_err(usage_if_budget)?;
    let rows: Vec<Value> = orbits
        .iter()
        .map(|o| {
            json!({
                "representative": constellation_json(&o.representative),
                "size": o.size,
                "by_ordered_passport": o.by_passport.iter()
                    .map(|(k, v)| json!({"cycle_types": k, "count": v}))
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(Outcome {
        inputs: json!({"degree": degree, "passport": pp, "budget": budget}),
        results: json!({
            "orbit_count": orbits.len(),
            "classes": orbits.iter().map(|o| o.size).sum::<usize>(),
            "orbits": rows,
        }),
        pass: true,
    })
}

fn dessin_cmd(degree: usize, index: usize, out: &PathBuf) -> anyhow::Result<Outcome> {
    let budget = budget_from_env(DEFAULT_TRIPLE_BUDGET);
    let all = enumerate(3, degree, budget).map_err(usage_if_budget)?;
    let c = index
        .checked_sub(1)
        .and_then(|i| all.get(i))
        .ok_or_else(|| anyhow!(Usage(format!("index {index} not in 1..={}", all.len()))))?;
    let dot = dessin_dot(c)?;
    std::fs::write(out, &dot).with_context(|| format!("writing {}", out.display()))?;
    Ok(Outcome {
        inputs: json!({"degree": degree, "index": index}),
        results: json!({
            "file": out.display().to_string(),
            "available": all.len(),
            "dessin": constellation_json(c),
        }),
        pass: true,
    })
}

/// An error in how the command was invoked.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage_if_budget(e: Error) -> anyhow::Error {
    match e {
        Error::BudgetExceeded { .. } | Error::MalformedTuple(_) => anyhow!(Usage(format!(
            "{e}; set CRITFILT_BUDGET to raise the budget"
        ))),
        other => other.into(),
    }
}

/// Errors caused by the input rather than by the mathematics.
fn is_usage(err: &anyhow::Error) -> bool {
    if err.downcast_ref::<Usage>().is_some() {
        return true;
    }
    matches!(
        err.downcast_ref::<Error>(),
        Some(
            Error::SyntaxError { .. }
                | Error::MultipleVariables(_)
                | Error::UnknownFamily(_)
                | Error::ConstantMap
                | Error::DegenerateParameter { .. }
                | Error::OutOfRange(_)
                | Error::ZeroPolynomial
        )
    )
}

fn emit(out: Option<&PathBuf>, doc: &Value) -> anyhow::Result<()> {
    let text = serde_json::to_string_pretty(doc)? + "\n";
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let (name, outcome) = match &cli.command {
        Command::Critvals(a) => ("critvals", critvals(a)?),
        Command::Classify(a) => ("classify", classify(a)?),
        Command::BetaBas(a) => ("beta-bas", beta_bas(a)?),
        Command::Divisor { func } => ("divisor", divisor_cmd(func)?),
        Command::Enumerate { branch, degree, genus } => ("enumerate", enumerate_cmd(*branch, *degree, *genus)?),
        Command::BraidOrbits { degree, passport } => ("braid-orbits", braid_cmd(*degree, passport)?),
        Command::Dessin { degree, index } => {
            let out = cli
                .out
                .as_ref()
                .ok_or_else(|| anyhow!(Usage("dessin needs --out FILE".into())))?;
            let o = dessin_cmd(*degree, *index, out)?;
            // The DOT text owns --out; the report goes to standard output.
            emit(None, &document("dessin", o.inputs, o.results, o.pass))?;
            return Ok(o.pass);
        }
        Command::VerifyPaper { fast } => {
            let mode = if *fast { Mode::Fast } else { Mode::Full };
            let rep = verify_all(mode);
            let results = json!({
                "criteria": serde_json::to_value(&rep.criteria)?,
                "passed": rep.passed,
                "failed": rep.failed,
            });
            let doc = document("verify-paper", json!({"mode": rep.mode}), results, rep.pass);
            emit(cli.out.as_ref(), &doc)?;
            return Ok(rep.pass);
        }
    };
    emit(cli.out.as_ref(), &document(name, outcome.inputs, outcome.results, outcome.pass))?;
    Ok(outcome.pass)
}

fn document(command: &str, inputs: Value, results: Value, pass: bool) -> Value {
    json!({
        "schema": report::SCHEMA,
        "command": command,
        "inputs": inputs,
        "results": results,
        "pass": pass,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_usage(&e) { 2 } else { 1 })
        }
    }
}
