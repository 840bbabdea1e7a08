//! Command dispatch for the `depthkit` binary.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use depthkit::depthcheck::{
    depth_formula_defect, descend_to_depth_one, reduce_pair, CheckOptions, StepSummary,
};
use depthkit::homology::{depth, is_tor_independent, tor, ModuleSummary};
use depthkit::instance::{parse_instance_file, InstanceFile};
use depthkit::resolution::{free_resolution, BettiTable, Over};
use depthkit::suite::{default_families, run_lemma_suite, SuiteConfig, ALL_CHECKS};
use depthkit::{Error, FPModule, Verdict};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "depthkit",
    version,
    about = "Depth, Tor and resolutions of graded modules"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Tor truncation bound [default: 2(n+1)]
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    /// Hilbert function cutoff [default: 12]
    #[arg(long, global = true)]
    pub dmax: Option<u32>,
    /// Seed for the regular element search [default: 0]
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Highest degree tried by the regular element search [default: 3]
    #[arg(long = "max-degree", global = true)]
    pub max_degree: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Depth of a module
    Depth {
        file: PathBuf,
        module: Option<String>,
    },
    /// Tor modules of a pair up to the bound
    Tor {
        file: PathBuf,
        m: Option<String>,
        n: Option<String>,
        /// Only this homological index
        #[arg(long)]
        index: Option<usize>,
    },
    /// Minimal free resolution and Betti table
    Resolve {
        file: PathBuf,
        module: Option<String>,
        /// Number of maps to compute [default: the bound]
        #[arg(long)]
        length: Option<usize>,
        /// Resolve over the ambient polynomial ring
        #[arg(long)]
        ambient: bool,
    },
    /// Tensor product of a pair
    Tensor {
        file: PathBuf,
        m: Option<String>,
        n: Option<String>,
    },
    /// Depth formula defect and Tor-independence of a pair
    CheckFormula {
        file: PathBuf,
        m: Option<String>,
        n: Option<String>,
    },
    /// Reduce a pair modulo a regular element
    Reduce {
        file: PathBuf,
        m: Option<String>,
        n: Option<String>,
        /// Descend all the way to a ring of depth one
        #[arg(long)]
        descend: bool,
    },
    /// Run the check suite over the file's families, or the default ones
    Suite {
        file: Option<PathBuf>,
        /// Comma separated check names [default: all]
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Include wall-clock time per check (makes output non-reproducible)
        #[arg(long)]
        timings: bool,
    },
}

/// Options after combining flags, file options and defaults.
#[derive(Clone, Copy, Debug)]
pub struct Resolved {
    pub bound: usize,
    pub d_max: u32,
    pub seed: u64,
    pub max_degree: u32,
}

impl Resolved {
    fn json(&self) -> Value {
        json!({
            "bound": self.bound,
            "dmax": self.d_max,
            "seed": self.seed,
            "max_degree": self.max_degree,
        })
    }

    fn check_options(&self) -> CheckOptions {
        CheckOptions {
            bound: self.bound,
            d_max: self.d_max,
            seed: self.seed,
            max_degree: self.max_degree,
            trials: 16,
        }
    }
}

pub fn resolve_options(cli: &Cli, file: Option<&InstanceFile>) -> Resolved {
    let fo = file.map(|f| f.options.clone()).unwrap_or_default();
    let n = file.map_or(2, |f| f.ring.nvars());
    Resolved {
        bound: cli.bound.or(fo.bound).unwrap_or(2 * (n + 1)),
        d_max: cli.dmax.or(fo.d_max).unwrap_or(12),
        seed: cli.seed.or(fo.seed).unwrap_or(0),
        max_degree: cli.max_degree.or(fo.max_degree).unwrap_or(3),
    }
}

type Named = (String, FPModule);

/// Exit status and the report to print.
#[derive(Debug)]
pub struct Output {
    pub code: i32,
    pub report: String,
    /// Set when the report is an error message rather than a result.
    pub error: bool,
}

/// Parses arguments, runs the command, and renders the report.
pub fn run(cli: &Cli) -> Output {
    match execute(cli) {
        Ok(o) => o,
        Err(e) => {
            let report = match cli.format {
                Format::Text => format!("error: {e}\n"),
                Format::Machine => {
                    let doc =
                        json!({"command": command_name(&cli.command), "error": e.to_string()});
                    format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
                }
            };
            Output {
                code: EXIT_INPUT,
                report,
                error: true,
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Depth { .. } => "depth",
        Command::Tor { .. } => "tor",
        Command::Resolve { .. } => "resolve",
        Command::Tensor { .. } => "tensor",
        Command::CheckFormula { .. } => "check-formula",
        Command::Reduce { .. } => "reduce",
        Command::Suite { .. } => "suite",
    }
}

fn load(path: &PathBuf) -> Result<InstanceFile, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_instance_file(&text)
}

/// One module name, defaulting to the first pair or the first module.
fn pick_one(f: &InstanceFile, name: &Option<String>) -> Result<(String, FPModule), Error> {
    let name = match name {
        Some(n) => n.clone(),
        None => f
            .pairs
            .first()
            .map(|p| p.0.clone())
            .or_else(|| f.modules.first().map(|m| m.name.clone()))
            .ok_or_else(|| Error::Name("the file defines no modules".into()))?,
    };
    let m = f.module(&name)?.clone();
    Ok((name, m))
}

/// Two module names, defaulting to the first pair.
fn pick_two(
    f: &InstanceFile,
    a: &Option<String>,
    b: &Option<String>,
) -> Result<(Named, Named), Error> {
    let (a, b) =
        match (a, b) {
            (Some(a), Some(b)) => (a.clone(), b.clone()),
            (Some(a), None) => (a.clone(), a.clone()),
            _ => f.pairs.first().cloned().ok_or_else(|| {
                Error::Name("no module names given and the file has no pair".into())
            })?,
        };
    Ok((
        (a.clone(), f.module(&a)?.clone()),
        (b.clone(), f.module(&b)?.clone()),
    ))
}

fn render(
    cli: &Cli,
    command: &str,
    opts: &Resolved,
    code: i32,
    result: Value,
    text: String,
) -> Output {
    let report = match cli.format {
        Format::Text => text,
        Format::Machine => {
            let doc = json!({
                "command": command,
                "options": opts.json(),
                "exit_code": code,
                "result": result,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
    };
    Output {
        code,
        report,
        error: false,
    }
}

fn verdict_code(v: &Verdict) -> i32 {
    match v {
        Verdict::Holds => EXIT_OK,
        Verdict::Fails { .. } => EXIT_FAILS,
        Verdict::InconclusiveUpToBound { .. } => EXIT_INCONCLUSIVE,
    }
}

fn execute(cli: &Cli) -> Result<Output, Error> {
    let name = command_name(&cli.command);
    match &cli.command {
        Command::Depth { file, module } => {
            let f = load(file)?;
            let o = resolve_options(cli, Some(&f));
            let (mn, m) = pick_one(&f, module)?;
            let d = depth(&m)?;
            let result = json!({"module": mn, "depth": d});
            Ok(render(
                cli,
                name,
                &o,
                EXIT_OK,
                result,
                format!("depth {mn} = {d}\n"),
            ))
        }
        Command::Tor { file, m, n, index } => {
            let f = load(file)?;
            let o = resolve_options(cli, Some(&f));
            let ((an, a), (bn, b)) = pick_two(&f, m, n)?;
            let range: Vec<usize> = match index {
                Some(i) => vec![*i],
                None => (0..=o.bound).collect(),
            };
            let mut rows = Vec::new();
            let mut text = String::new();
            for i in range {
                let t = tor(&a, &b, i)?;
                let hf = t.hilbert_range(0, o.d_max as i32);
                text.push_str(&format!(
                    "Tor_{i}({an}, {bn}): {} hilbert {:?}\n",
                    if t.is_zero() { "zero" } else { "nonzero" },
                    hf
                ));
                rows.push(json!({
                    "index": i,
                    "zero": t.is_zero(),
                    "module": ModuleSummary::of(&t),
                    "hilbert": hf,
                }));
            }
            let v = is_tor_independent(&a, &b, o.bound)?;
            text.push_str(&format!("Tor-independence: {v}\n"));
            let result = json!({"m": an, "n": bn, "tor": rows, "tor_independence": v});
            Ok(render(cli, name, &o, EXIT_OK, result, text))
        }
        Command::Resolve {
            file,
            module,
            length,
            ambient,
        } => {
            let f = load(file)?;
            let o = resolve_options(cli, Some(&f));
            let (mn, m) = pick_one(&f, module)?;
            let over = if *ambient { Over::Ambient } else { Over::Ring };
            let len = length.unwrap_or(o.bound);
            let res = free_resolution(&m, len, over);
            let betti = res.betti_table();
            let cert = res.certify();
            let mut text = format!("resolution of {mn} ({} maps", res.length());
            text.push_str(if res.is_complete() {
                ", complete)\n"
            } else {
                ", truncated)\n"
            });
            text.push_str(&betti_diagram(&betti));
            text.push_str(&format!(
                "certificate: {}\n",
                if cert.ok() { "ok" } else { "FAILED" }
            ));
            let code = if cert.ok() { EXIT_OK } else { EXIT_FAILS };
            let result = json!({
                "module": mn,
                "over": if *ambient { "ambient" } else { "ring" },
                "complete": res.is_complete(),
                "betti": betti.rows,
                "totals": betti.totals(),
                "certificate": cert,
            });
            Ok(render(cli, name, &o, code, result, text))
        }
        Command::Tensor { file, m, n } => {
            let f = load(file)?;
            let o = resolve_options(cli, Some(&f));
            let ((an, a), (bn, b)) = pick_two(&f, m, n)?;
            let t = a.tensor_product(&b)?.minimal_presentation();
            let s = ModuleSummary::of(&t);
            let d = if t.is_zero() { None } else { Some(depth(&t)?) };
            let hf = t.hilbert_range(0, o.d_max as i32);
            let mut text = format!(
                "{an} ⊗ {bn}: generators in degrees {:?}\n",
                s.generator_degrees
            );
            for row in &s.relations {
                text.push_str(&format!("  [{}]\n", row.join(", ")));
            }
            text.push_str(&format!("hilbert {hf:?}\n"));
            if let Some(d) = d {
                text.push_str(&format!("depth {d}\n"));
            }
            let result = json!({"m": an, "n": bn, "module": s, "hilbert": hf, "depth": d});
            Ok(render(cli, name, &o, EXIT_OK, result, text))
        }
        Command::CheckFormula { file, m, n } => {
            let f = load(file)?;
            let o = resolve_options(cli, Some(&f));
            let ((an, a), (bn, b)) = pick_two(&f, m, n)?;
            let rec = depth_formula_defect(&a, &b, o.bound)?;
            let code = match rec.tor_verdict {
                Verdict::Holds if rec.defect == 0 => EXIT_OK,
                Verdict::Holds => EXIT_FAILS,
                ref v => verdict_code(v),
            };
            let text = format!(
                "depth {an} = {}\ndepth {bn} = {}\ndepth R = {}\ndepth {an} ⊗ {bn} = {}\ndefect = {}\nTor-independence: {}\nformula: {}\n",
                rec.depth_m,
                rec.depth_n,
                rec.depth_r,
                rec.depth_tensor,
                rec.defect,
                rec.tor_verdict,
                match code {
                    EXIT_OK => "holds",
                    EXIT_FAILS if rec.applicable => "VIOLATED",
                    EXIT_FAILS => "not applicable",
                    _ => "undecided",
                }
            );
            let result = json!({"m": an, "n": bn, "record": rec});
            Ok(render(cli, name, &o, code, result, text))
        }
        Command::Reduce {
            file,
            m,
            n,
            descend,
        } => {
            let f = load(file)?;
            let o = resolve_options(cli, Some(&f));
            let ((an, a), (bn, b)) = pick_two(&f, m, n)?;
            let copts = o.check_options();
            let steps_result = if *descend {
                descend_to_depth_one(&a, &b, &copts).map(|d| (d.steps, d.levels, d.error))
            } else {
                reduce_pair(&a, &b, &copts).map(|s| (vec![s], vec![], None))
            };
            let (steps, levels, error) = match steps_result {
                Ok(x) => x,
                Err(e @ (Error::Precondition(_) | Error::DepthZeroWitness(_))) => {
                    let result = json!({"m": an, "n": bn, "precondition": e.to_string()});
                    let text = format!("{e}\n");
                    return Ok(render(cli, name, &o, EXIT_FAILS, result, text));
                }
                Err(e @ Error::SearchExhausted { .. }) => {
                    let result = json!({"m": an, "n": bn, "error": e.to_string()});
                    return Ok(render(
                        cli,
                        name,
                        &o,
                        EXIT_INCONCLUSIVE,
                        result,
                        format!("{e}\n"),
                    ));
                }
                Err(e) => return Err(e),
            };
            let summaries: Vec<StepSummary> = steps.iter().map(StepSummary::from).collect();
            let mut text = String::new();
            for (k, s) in summaries.iter().enumerate() {
                text.push_str(&format!(
                    "step {}: x = {}, depths (M, N, M⊗N, R) {:?} -> {:?}, reduced Tor {}, {}\n",
                    k + 1,
                    s.element,
                    (
                        s.depths_before.m,
                        s.depths_before.n,
                        s.depths_before.tensor,
                        s.depths_before.ring
                    ),
                    (
                        s.depths_after.m,
                        s.depths_after.n,
                        s.depths_after.tensor,
                        s.depths_after.ring
                    ),
                    s.tor_after,
                    if s.postconditions_hold {
                        "verified"
                    } else {
                        "VIOLATED"
                    }
                ));
            }
            for (d, t) in &levels {
                text.push_str(&format!("level depth {d}: depth of tensor {t}\n"));
            }
            if let Some(e) = &error {
                text.push_str(&format!("stopped: {e}\n"));
            }
            let ok = summaries.iter().all(|s| s.postconditions_hold)
                && levels.iter().all(|(d, t)| d == t);
            let code = match (&error, ok) {
                (Some(Error::SearchExhausted { .. }), true) => EXIT_INCONCLUSIVE,
                (Some(_), _) | (None, false) => EXIT_FAILS,
                (None, true) => EXIT_OK,
            };
            let result = json!({
                "m": an,
                "n": bn,
                "steps": summaries,
                "levels": levels,
                "error": error.map(|e| e.to_string()),
            });
            Ok(render(cli, name, &o, code, result, text))
        }
        Command::Suite {
            file,
            checks,
            timings,
        } => {
            let f = file.as_ref().map(load).transpose()?;
            let families = match &f {
                Some(f) if !f.families.is_empty() => f.families.clone(),
                _ => default_families(),
            };
            let fo = f.as_ref().map(|f| f.options.clone()).unwrap_or_default();
            let cfg = SuiteConfig {
                bound: cli.bound.or(fo.bound),
                d_max: cli.dmax.or(fo.d_max).unwrap_or(12),
                seed: cli.seed.or(fo.seed).unwrap_or(0),
                max_degree: cli.max_degree.or(fo.max_degree).unwrap_or(3),
                timings: *timings,
                ..SuiteConfig::default()
            };
            let names: Vec<&str> = if checks.is_empty() {
                ALL_CHECKS.to_vec()
            } else {
                for c in checks {
                    if !ALL_CHECKS.contains(&c.as_str()) {
                        return Err(Error::Name(format!("unknown check {c}")));
                    }
                }
                checks.iter().map(|s| s.as_str()).collect()
            };
            let report = run_lemma_suite(&families, &names, &cfg);
            let code = if report.has_failures() {
                EXIT_FAILS
            } else {
                EXIT_OK
            };
            let report_text = match cli.format {
                Format::Text => report.to_text(),
                Format::Machine => {
                    let doc = json!({"command": name, "exit_code": code, "result": report});
                    format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
                }
            };
            Ok(Output {
                code,
                report: report_text,
                error: false,
            })
        }
    }
}

/// Betti diagram with columns `i` and rows `degree - i`.
pub fn betti_diagram(b: &BettiTable) -> String {
    let entries: Vec<(usize, i32, usize)> = b
        .rows
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().map(move |&(d, c)| (i, d - i as i32, c)))
        .collect();
    if entries.is_empty() {
        return "(zero module)\n".to_string();
    }
    let lo = entries.iter().map(|e| e.1).min().unwrap();
    let hi = entries.iter().map(|e| e.1).max().unwrap();
    let cols = b.rows.len();
    let mut s = String::from("      ");
    for i in 0..cols {
        s.push_str(&format!("{i:>6}"));
    }
    s.push('\n');
    s.push_str("total:");
    for t in b.totals() {
        s.push_str(&format!("{t:>6}"));
    }
    s.push('\n');
    for j in lo..=hi {
        s.push_str(&format!("{j:>5}:"));
        for i in 0..cols {
            let c: usize = entries
                .iter()
                .filter(|e| e.0 == i && e.1 == j)
                .map(|e| e.2)
                .sum();
            if c == 0 {
                s.push_str(&format!("{:>6}", "."));
            } else {
                s.push_str(&format!("{c:>6}"));
            }
        }
        s.push('\n');
    }
    s
}
