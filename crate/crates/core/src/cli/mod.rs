//! Command-line front end. `run` returns the process exit code:
//! 0 all pass, 1 a check failed, 2 usage or parse error, 3 budget exceeded.

mod report;
mod spec;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

pub use report::{Outcome, Report, Verdict};
pub use spec::{GroupFile, GroupSpec};
pub use verify::{run_set, ClaimSet, Context};

use crate::classification::{check_dichotomy, derived_depth_in, Conclusion, DefectBound};
use crate::error::{Error, Result};
use crate::kernel::{Group, Permutation};
use crate::lattice::{all_subgroups, LatticeBudget};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "minsimple", version, about = "Finite group checks for minimal simple groups")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Print JSON reports, one per line.
    #[arg(long, global = true)]
    json: bool,
    /// Include the long runs.
    #[arg(long, global = true)]
    extended: bool,
    /// Largest group order for subgroup lattices.
    #[arg(long, global = true, value_name = "N")]
    budget_order: Option<u64>,
    /// Wall-clock limit per lattice, in seconds.
    #[arg(long, global = true, value_name = "S")]
    time_limit: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a group and summarize it.
    Construct {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
    },
    /// Run a claim suite.
    Verify {
        #[arg(value_enum)]
        set: ClaimSet,
    },
    /// Classify every subgroup class as subnormal or soluble of bounded length.
    Dichotomy {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        /// Defect bound, or `inf`.
        #[arg(long, default_value = "inf")]
        n: String,
        #[arg(long)]
        d: usize,
    },
    /// Check subnormality above H and find the derived term inside H.
    #[command(name = "lemma31", alias = "derived-depth")]
    DerivedDepth {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        /// A generator of H in cycle notation; repeat for more. Without
        /// any, every subgroup class representative is checked.
        #[arg(long = "gens", value_name = "CYCLES")]
        gens: Vec<String>,
    },
}

impl GlobalArgs {
    fn budget(&self) -> Result<LatticeBudget> {
        let mut b = if self.extended {
            LatticeBudget::extended()
        } else {
            LatticeBudget::default()
        };
        if let Some(n) = self.budget_order {
            b.max_group_order = n;
        }
        if let Some(s) = self.time_limit {
            b.time_limit = Some(
                Duration::try_from_secs_f64(s)
                    .map_err(|_| Error::Parse(format!("bad time limit {s}")))?,
            );
        }
        Ok(b)
    }
}

/// Parses arguments (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = std::io::stdout().lock();
    run_with_output(args, &mut out)
}

pub fn run_with_output<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_budget() {
                EXIT_BUDGET
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let budget = cli.global.budget()?;
    let json = cli.global.json;
    match &cli.command {
        Command::Construct { spec } => {
            let spec = GroupSpec::parse(spec)?;
            let g = spec.build()?;
            construct(&spec, &g, json, out)?;
            Ok(EXIT_PASS)
        }
        Command::Verify { set } => {
            let ctx = Context {
                budget,
                extended: cli.global.extended,
            };
            let reports = run_set(*set, &ctx);
            emit(&reports, json, out)?;
            Ok(exit_for(&reports))
        }
        Command::Dichotomy { spec, n, d } => {
            let spec = GroupSpec::parse(spec)?;
            let n = parse_defect(n)?;
            let g = spec.build()?;
            dichotomy(&spec, &g, n, *d, &budget, json, out)
        }
        Command::DerivedDepth { spec, gens } => {
            let spec = GroupSpec::parse(spec)?;
            let g = spec.build()?;
            let hs = if gens.is_empty() {
                None
            } else {
                let perms = gens
                    .iter()
                    .map(|t| Permutation::parse_cycles(t, g.degree()))
                    .collect::<Result<Vec<_>>>()?;
                Some(g.subgroup(perms)?)
            };
            derived_depth(&spec, &g, hs, &budget, json, out)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidParameter(format!("output: {e}"))
}

fn parse_defect(text: &str) -> Result<DefectBound> {
    match text {
        "inf" | "unbounded" => Ok(None),
        t => t
            .parse()
            .map(Some)
            .map_err(|_| Error::Parse(format!("bad defect bound {t:?}"))),
    }
}

fn exit_for(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        EXIT_FAIL
    } else {
        EXIT_PASS
    }
}

fn emit(reports: &[Report], json: bool, out: &mut dyn Write) -> Result<()> {
    for r in reports {
        if json {
            let line = serde_json::to_string(r).expect("report serializes");
            writeln!(out, "{line}").map_err(io)?;
        } else {
            writeln!(out, "{r}").map_err(io)?;
        }
    }
    Ok(())
}

fn length_text(len: Option<usize>) -> String {
    len.map_or_else(|| "NOT_SOLUBLE".to_string(), |l| l.to_string())
}

fn construct(spec: &GroupSpec, g: &Group, json: bool, out: &mut dyn Write) -> Result<()> {
    let simple = g.is_simple()?;
    let len = g.derived_length();
    if json {
        let v = serde_json::json!({
            "group": spec.to_string(),
            "degree": g.degree(),
            "order": g.order(),
            "simple": simple,
            "derived_length": len,
            "generators": report::generators_of(g),
        });
        writeln!(out, "{v}").map_err(io)?;
    } else {
        writeln!(out, "group:          {spec}").map_err(io)?;
        writeln!(out, "degree:         {}", g.degree()).map_err(io)?;
        writeln!(out, "order:          {}", g.order()).map_err(io)?;
        writeln!(out, "simple:         {simple}").map_err(io)?;
        writeln!(out, "derived length: {}", length_text(len)).map_err(io)?;
    }
    Ok(())
}

fn dichotomy(
    spec: &GroupSpec,
    g: &Group,
    n: DefectBound,
    d: usize,
    budget: &LatticeBudget,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let report = check_dichotomy(g, n, d, budget)?;
    let n_text = n.map_or_else(|| "inf".to_string(), |k| k.to_string());
    let holds = report.holds();
    let conclusion = match &report.conclusion {
        Conclusion::Soluble(l) => format!("SOLUBLE({l})"),
        Conclusion::Extension { s, m, quotient } => format!(
            "EXTENSION(|S| = {}, |G/S| = {}, M of order {})",
            s.order(),
            quotient.order(),
            m.order()
        ),
        Conclusion::Neither => "NEITHER".to_string(),
    };
    let computed = format!(
        "hypothesis {}; conclusion {conclusion}",
        if holds { "HOLDS" } else { "FAILS" }
    );
    // The checked claim is the implication: hypothesis gives a soluble group
    // or an extension of the right shape.
    let pass = !holds || !matches!(report.conclusion, Conclusion::Neither);
    let mut r = Report::run(
        format!("dichotomy/{}", spec.to_string().replace(' ', "/")),
        format!("{spec}, n = {n_text}, d = {d}"),
        "if the hypothesis holds, SOLUBLE or EXTENSION",
        || Ok(Outcome::new(computed, pass)),
    );
    r.witness = report.violation().map(|v| v.generators.clone());
    if !json {
        writeln!(out, "{:>8} {:>6} {:>7} {:>12} {:>5}", "order", "size", "defect", "derived len", "ok").map_err(io)?;
        for rec in &report.records {
            writeln!(
                out,
                "{:>8} {:>6} {:>7} {:>12} {:>5}",
                rec.order,
                rec.class_size,
                rec.defect.map_or_else(|| "-".to_string(), |k| k.to_string()),
                length_text(rec.derived_length),
                if rec.satisfies(n, d) { "yes" } else { "NO" }
            )
            .map_err(io)?;
        }
        if let Some(m) = report.observed_max_length {
            writeln!(out, "largest derived length outside the subnormal arm: {m}").map_err(io)?;
        }
    }
    emit(std::slice::from_ref(&r), json, out)?;
    Ok(exit_for(std::slice::from_ref(&r)))
}

fn derived_depth(
    spec: &GroupSpec,
    g: &Group,
    h: Option<Group>,
    budget: &LatticeBudget,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let lattice = all_subgroups(g, budget)?;
    let hs: Vec<Group> = match h {
        Some(h) => vec![h],
        None => lattice
            .classes()
            .iter()
            .map(|c| c.representative.clone())
            .collect(),
    };
    let series = g.derived_series();
    let mut reports = Vec::new();
    for h in &hs {
        let gens = report::generators_of(h);
        let label = if gens.is_empty() { "1".to_string() } else { gens.join(" ") };
        reports.push(Report::run(
            format!("derived-depth/{}", spec.to_string().replace(' ', "/")),
            format!("H = <{label}> of order {}", h.order()),
            "non-subnormal witness, or least r with G^(r) <= H",
            || {
                let res = derived_depth_in(&lattice, h)?;
                Ok(match (res.r, res.witness) {
                    (_, Some(w)) => Outcome::new(
                        format!("subgroup of order {} above H is not subnormal", w.order()),
                        true,
                    )
                    .with_witness(&w),
                    (Some(r), None) => {
                        let inside = series.terms[r].is_subgroup_of(h);
                        let least = r == 0 || !series.terms[r - 1].is_subgroup_of(h);
                        Outcome::new(
                            format!("all subnormal above H, r = {r}"),
                            inside && least && ((r == 0) == (h == g)),
                        )
                    }
                    (None, None) => Outcome::new("no derived term inside H", false),
                })
            },
        ));
    }
    emit(&reports, json, out)?;
    Ok(exit_for(&reports))
}
