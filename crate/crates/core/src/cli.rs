//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 invalid input.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::boolean_map::{anf, combinatorial_degree};
use crate::error::{Error, Result};
use crate::formats;
use crate::loops::{
    build_loop, check_cubic_axioms, check_moufang, extract_cubic_data, inverse_map,
    solve_factor_set_capped, weight_forms, DEFAULT_MAX_MOUFANG_DIM, DEFAULT_MAX_SOLVER_DIM,
};
use crate::synthesis::{
    ckey_gadget, synthesize, synthesize_audited, verify_code_against_map_with, VerifyOptions,
    DEFAULT_RANDOM_MULTISETS, DEFAULT_SEED,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

/// Default cap on `m` for synthesis; the code length grows like `2^m · 2^r`.
pub const DEFAULT_MAX_SYNTH_DIM: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "codeloop", version, about = "Codes of prescribed level from Boolean maps, and code loops")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the combinatorial degree and algebraic normal form of a map.
    Degree {
        #[arg(long)]
        map: PathBuf,
    },
    /// Build a code realising a map and write it as a generator matrix.
    Construct {
        #[arg(long)]
        map: PathBuf,
        /// Output `.gen` file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print one line per step and audit every step.
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_SYNTH_DIM)]
        max_m: usize,
    },
    /// Check a code against a map.
    Verify {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        code: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Random multisets in the equivalence sample.
        #[arg(long, default_value_t = DEFAULT_RANDOM_MULTISETS)]
        samples: usize,
    },
    /// Print the level of a code.
    Level {
        #[arg(long)]
        code: PathBuf,
    },
    /// Solve for a factor set of a doubly even code.
    Factorset {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Solver cost grows like `16^dim`.
        #[arg(long, default_value_t = DEFAULT_MAX_SOLVER_DIM)]
        max_dim: usize,
    },
    /// Build the code loop of a doubly even code and run checks on it.
    Loop {
        #[arg(long)]
        code: PathBuf,
        /// Use this factor set instead of solving for one.
        #[arg(long)]
        factor_set: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "moufang,cubic,doublestar")]
        check: Vec<LoopCheck>,
        /// Check all four Moufang identities.
        #[arg(long)]
        strict: bool,
        /// Write the Cayley table here.
        #[arg(long)]
        cayley_out: Option<PathBuf>,
        /// Exhaustive checks cost `2^{3 dim}` to `2^{4 dim}`.
        #[arg(long, default_value_t = DEFAULT_MAX_MOUFANG_DIM)]
        max_dim: usize,
    },
    /// Write the map `c -> |c|/2^r mod 2` of a level-`r` code.
    Inverse {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the weight gadget vectors for parameters `l`, `k`.
    Ckey {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LoopCheck {
    /// Exhaustive Moufang identity check.
    Moufang,
    /// Cubic space axioms on the extracted and weight-derived data.
    Cubic,
    /// Loop squares, commutators and associators agree with code weights.
    Doublestar,
}

/// One verification line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Human-readable result of a subcommand; passes iff every check passes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub info: Vec<String>,
    pub checks: Vec<CheckLine>,
}

impl Report {
    pub fn info(&mut self, line: impl Into<String>) {
        self.info.push(line.into());
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckLine {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.info {
            writeln!(f, "{line}")?;
        }
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "[{status}] {}", c.name)?;
            } else {
                writeln!(f, "[{status}] {}: {}", c.name, c.detail)?;
            }
        }
        if !self.checks.is_empty() {
            writeln!(f, "overall: {}", if self.passed() { "PASS" } else { "FAIL" })?;
        }
        Ok(())
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })
}

fn write_out(path: Option<&Path>, text: &str, report: &mut Report) -> Result<()> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| Error::Parse {
                line: 0,
                msg: format!("{}: {e}", p.display()),
            })?;
            report.info(format!("wrote {}", p.display()));
        }
        None => report.info(text.trim_end()),
    }
    Ok(())
}

fn cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        return Err(Error::CapExceeded { what, value, cap });
    }
    Ok(())
}

/// Runs a parsed command, returning its report.
pub fn execute(command: &Command) -> Result<Report> {
    let mut report = Report::default();
    match command {
        Command::Degree { map } => {
            let p = formats::parse_map(&read(map)?, true)?;
            report.info(format!("degree: {}", combinatorial_degree(&p)?));
            report.info(format!("anf: {}", anf(&p)));
        }
        Command::Construct {
            map,
            out,
            trace,
            max_m,
        } => {
            let p = formats::parse_map(&read(map)?, true)?;
            cap("map dimension", p.dim(), *max_m)?;
            let result = if *trace {
                let (result, audit) = synthesize_audited(&p)?;
                for step in &result.trace {
                    report.info(step.to_string());
                }
                report.check(
                    "step audit",
                    audit.is_clean(),
                    format!(
                        "{} product checks, {} condition checks, {} violations",
                        audit.product_checks,
                        audit.condition_checks,
                        audit.violations.len()
                    ),
                );
                result
            } else {
                synthesize(&p)?
            };
            report.info(format!(
                "level {} length {} dimension {}",
                result.level,
                result.code.length(),
                result.code.dimension()
            ));
            write_out(out.as_deref(), &formats::write_code(&result.code), &mut report)?;
        }
        Command::Verify {
            map,
            code,
            seed,
            samples,
        } => {
            let p = formats::parse_map(&read(map)?, true)?;
            let c = formats::parse_code(&read(code)?)?;
            let opts = VerifyOptions {
                seed: *seed,
                random_multisets: *samples,
            };
            let v = verify_code_against_map_with(&p, &c, opts)?;
            report.info(format!("target level r = {}", v.r));
            report.check(
                "P(c) = |c|/2^r mod 2",
                v.map_ok(),
                match v.map_mismatch {
                    None => format!("{} codewords", v.codewords_checked),
                    Some(b) => format!("fails at codeword index {b}"),
                },
            );
            report.check("level", v.level_ok(), format!("code level {}", v.level));
            let e = &v.equivalence;
            report.check(
                "sum/product conditions agree",
                e.agrees(),
                format!(
                    "{} basis subsets + {} random multisets (seed {seed}); sum condition {}/{}, product condition {}/{}",
                    e.basis_subsets,
                    e.random_multisets,
                    e.sum_condition_holds,
                    e.tested(),
                    e.product_condition_holds,
                    e.tested()
                ),
            );
        }
        Command::Level { code } => {
            let c = formats::parse_code(&read(code)?)?;
            report.info(c.level().to_string());
        }
        Command::Factorset { code, out, max_dim } => {
            let c = formats::parse_code(&read(code)?)?;
            let fs = solve_factor_set_capped(&c, *max_dim)?;
            write_out(out.as_deref(), &formats::write_factor_set(&fs), &mut report)?;
        }
        Command::Loop {
            code,
            factor_set,
            check,
            strict,
            cayley_out,
            max_dim,
        } => {
            let c = formats::parse_code(&read(code)?)?;
            cap("loop code dimension", c.dimension(), *max_dim)?;
            let fs = match factor_set {
                Some(path) => formats::parse_factor_set(&read(path)?)?,
                None => solve_factor_set_capped(&c, (*max_dim).max(DEFAULT_MAX_SOLVER_DIM))?,
            };
            let lp = build_loop(&c, &fs)?;
            report.info(format!("loop of order {}", lp.order()));
            if let Some(path) = cayley_out {
                write_out(Some(path), &lp.table().to_text(), &mut report)?;
            }
            if check.contains(&LoopCheck::Moufang) {
                let m = check_moufang(lp.table(), *strict);
                let detail = match m.counterexample {
                    None => format!("{} triples", m.triples_checked),
                    Some((id, [x, y, z])) => format!("{id} fails at ({x}, {y}, {z})"),
                };
                report.check("moufang", m.holds(), detail);
            }
            let needs_data = check.contains(&LoopCheck::Cubic) || check.contains(&LoopCheck::Doublestar);
            if needs_data {
                let extracted = extract_cubic_data(&lp)?;
                let forms = weight_forms(&c)?;
                if check.contains(&LoopCheck::Doublestar) {
                    report.check(
                        "loop data equals weight forms",
                        extracted == forms,
                        "σ = |c|/4, χ = |c*d|/2, α = |c*d*e|",
                    );
                }
                if check.contains(&LoopCheck::Cubic) {
                    for (name, data) in [("cubic axioms (loop)", &extracted), ("cubic axioms (weights)", &forms)] {
                        let a = check_cubic_axioms(data);
                        let detail = match a.violations.first() {
                            None => format!("{} checks", a.checks),
                            Some(v) => format!("{} violations, first {} at {:?}", a.violation_count, v.axiom, v.args),
                        };
                        report.check(name, a.holds(), detail);
                    }
                }
            }
        }
        Command::Inverse { code, out } => {
            let c = formats::parse_code(&read(code)?)?;
            let p = inverse_map(&c)?;
            report.info(format!("level {} degree {}", c.level(), combinatorial_degree(&p)?));
            write_out(out.as_deref(), &formats::write_map(&p), &mut report)?;
        }
        Command::Ckey { l, k } => {
            let g = ckey_gadget(*l, *k)?;
            for (i, w) in g.vectors().iter().enumerate() {
                report.info(format!("w{i} {w}"));
            }
            let violations = g.violations();
            report.check("gadget weights", violations.is_empty(), violations.join("; "));
        }
    }
    Ok(report)
}

/// Runs a command and writes its report, returning the exit code.
pub fn run(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(command) {
        Ok(report) => {
            let _ = write!(out, "{report}");
            if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

/// Parses arguments (including the program name) and runs them.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.command, out, err),
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            EXIT_INVALID
        }
        Err(e) => {
            let _ = write!(out, "{e}");
            EXIT_OK
        }
    }
}
