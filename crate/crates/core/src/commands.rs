//! Command logic shared by the `screenq` binary and the C interface. Each
//! command returns its rendered output together with an exit status; errors
//! are configuration or parse failures.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::contour::{Generator, ModuleContext, ScreeningSequence};
use crate::error::{Error, Result};
use crate::hopf::{braid_phase, verify_coproduct, verify_hopf_axioms, verify_relations, TensorContext};
use crate::hopf::VerificationReport;
use crate::root_data::{RootDatum, Weight};
use crate::serre::{singular_scan, Multidegree, ScanReport};

pub const MAX_DEPTH: usize = 12;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSource {
    Catalog(String),
    ConfigFile(PathBuf),
    ConfigJson(String),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Config(format!("unknown output format `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Coproduct,
    Hopf,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "relations" => Ok(Suite::Relations),
            "coproduct" => Ok(Suite::Coproduct),
            "hopf" => Ok(Suite::Hopf),
            "all" => Ok(Suite::All),
            other => Err(Error::Config(format!("unknown suite `{other}`"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Relations => "relations",
            Suite::Coproduct => "coproduct",
            Suite::Hopf => "hopf",
            Suite::All => "all",
        })
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub algebra: AlgebraSource,
    pub depth: usize,
    pub weight: Weight,
    pub format: OutputFormat,
    pub allow_deep: bool,
}

impl RunConfig {
    pub fn new(algebra: AlgebraSource) -> Self {
        RunConfig { algebra, depth: 4, weight: Weight::Generic, format: OutputFormat::Text, allow_deep: false }
    }

    pub fn datum(&self) -> Result<RootDatum> {
        match &self.algebra {
            AlgebraSource::Catalog(name) => RootDatum::catalog(name),
            AlgebraSource::ConfigJson(text) => RootDatum::from_config_json(text),
            AlgebraSource::ConfigFile(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
                RootDatum::from_config_json(&text)
            }
        }
    }

    /// Resolves the root datum and checks the depth bound and the weight.
    pub fn module(&self) -> Result<ModuleContext> {
        if self.depth == 0 {
            return Err(Error::Config("depth must be at least 1".into()));
        }
        if self.depth > MAX_DEPTH && !self.allow_deep {
            return Err(Error::Config(format!("depth {} exceeds {MAX_DEPTH}; pass --allow-deep", self.depth)));
        }
        let datum = self.datum()?;
        self.weight.validate(&datum)?;
        ModuleContext::new(datum, self.weight.clone(), self.depth)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { code: EXIT_PASS, output }
    }
}

/// Runs the selected verification suites and merges them into one report.
pub fn verify_report(config: &RunConfig, suite: Suite) -> Result<VerificationReport> {
    let ctx = config.module()?;
    let datum = ctx.datum().clone();
    let mut report = VerificationReport::new(&suite.to_string(), datum.name(), ctx.depth());
    if matches!(suite, Suite::Relations | Suite::All) {
        report.merge(verify_relations(&ctx)?);
    }
    if matches!(suite, Suite::Coproduct | Suite::All) {
        let tctx = match &config.weight {
            Weight::Generic => TensorContext::generic(datum.clone(), ctx.depth())?,
            w => TensorContext::new(datum.clone(), w.clone(), w.clone(), ctx.depth())?,
        };
        report.merge(verify_coproduct(&tctx)?);
    }
    if matches!(suite, Suite::Hopf | Suite::All) {
        report.merge(verify_hopf_axioms(&ctx)?);
    }
    Ok(report)
}

pub fn cmd_verify(config: &RunConfig, suite: Suite) -> Result<Outcome> {
    let report = verify_report(config, suite)?;
    let output = match config.format {
        OutputFormat::Text => report.render_text(),
        OutputFormat::Json => report.to_json() + "\n",
    };
    let code = if report.passed() { EXIT_PASS } else { EXIT_FAIL };
    Ok(Outcome { code, output })
}

#[derive(Serialize)]
struct ActReport<'a> {
    algebra: &'a str,
    word: Vec<String>,
    start: String,
    result: String,
}

/// Applies a whitespace-separated word (rightmost letter first) to a basis vector.
pub fn cmd_act(config: &RunConfig, word: &str, start: &str) -> Result<Outcome> {
    let gens = Generator::parse_word(word)?;
    let ctx = config.module()?;
    let seq = ScreeningSequence::parse(start)?;
    seq.validate(ctx.datum())?;
    if seq.len() > ctx.depth() {
        return Err(Error::DepthExceeded { depth: ctx.depth() });
    }
    let result = ctx.apply_word(&gens, &ctx.basis_vector(seq.clone()))?;
    let output = match config.format {
        OutputFormat::Text => format!("{result}\n"),
        OutputFormat::Json => {
            let report = ActReport {
                algebra: ctx.datum().name(),
                word: gens.iter().map(Generator::to_string).collect(),
                start: seq.to_string(),
                result: result.to_string(),
            };
            serde_json::to_string_pretty(&report).expect("act report serializes") + "\n"
        }
    };
    Ok(Outcome::ok(output))
}

pub fn cmd_serre_scan(config: &RunConfig, multidegree: &str) -> Result<Outcome> {
    let ctx = config.module()?;
    let d = Multidegree::parse(multidegree, ctx.rank())?;
    let scan = singular_scan(&ctx, &d)?;
    let report = ScanReport::build(&ctx, &scan)?;
    let output = match config.format {
        OutputFormat::Text => report.render_text(),
        OutputFormat::Json => report.to_json() + "\n",
    };
    Ok(Outcome::ok(output))
}

#[derive(Serialize)]
struct BraidReport<'a> {
    algebra: &'a str,
    phase: String,
}

pub fn cmd_braid(
    config: &RunConfig,
    lambda1: &str,
    seq1: &str,
    lambda2: &str,
    seq2: &str,
) -> Result<Outcome> {
    let datum = config.datum()?;
    let (w1, w2) = (Weight::parse(lambda1)?, Weight::parse(lambda2)?);
    let (s1, s2) = (ScreeningSequence::parse(seq1)?, ScreeningSequence::parse(seq2)?);
    let phase = braid_phase(&datum, &w1, &s1, &w2, &s2)?;
    let output = match config.format {
        OutputFormat::Text => format!("{phase}\n"),
        OutputFormat::Json => {
            let report = BraidReport { algebra: datum.name(), phase: phase.to_string() };
            serde_json::to_string_pretty(&report).expect("braid report serializes") + "\n"
        }
    };
    Ok(Outcome::ok(output))
}
