//! Command-line front end: reads JSON descriptions, runs constructions and
//! theorem checks, and writes JSON, JSON lines or DOT.

pub mod render;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use adframe_core::adframe::{build_ado, validate_adframe, Variant};
use adframe_core::duality::{adpt_space, is_ad_t0};
use adframe_core::json::{
    adframe_from_json, adframe_value, detect_kind, lattice_from_json, space_from_json, space_value, DocKind,
};
use adframe_core::finord::{FinPreTopSpace, Preorder};
use adframe_core::sobrify::{ads_space, standard_sobrification};
use adframe_core::theorems::{
    enumerate_spaces, random_space, rng, run_batch, run_check, SpaceMode, SweepResult, SweepSpec, TheoremId, Verdict,
};
use adframe_core::{Error, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "adframe", version, about = "Ad-frames of finite preordered topological spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Io {
    /// Input file, `-` for stdin, or inline JSON.
    #[arg(long = "in", value_name = "PATH|JSON")]
    pub input: Option<String>,
    /// Output file, written atomically; stdout when absent.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// up, down or both. Single instances default to both, sweeps to all three.
    #[arg(long)]
    pub variant: Option<Variant>,
}

#[derive(Debug, Clone, Args)]
pub struct Run {
    /// `n=K` for every space on K points, or `n=K,samples=M` for M random ones.
    #[arg(long, value_name = "SPEC", value_parser = parse_sweep)]
    pub sweep: Option<Sampling>,
    /// Seed for sampled sweeps.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Abort a sweep that runs longer than this.
    #[arg(long, value_name = "MS", value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_ms: Option<u64>,
    /// Stop at the first failure.
    #[arg(long)]
    pub fail_fast: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a space, lattice or ad-frame description.
    Validate(Io),
    /// Build adO of a space.
    Ado(Io),
    /// Spectrum of an ad-frame (or of adO of a space) as a space.
    Adpt(Io),
    /// Ad-sobrification of a space.
    Ads(Io),
    /// Standard sobrification of a space, with the equality preorder.
    Sobrify(Io),
    /// Run one registry check on an instance or a sweep.
    Check {
        #[arg(long)]
        id: TheoremId,
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        run: Run,
    },
    /// Run every registry check over a sweep.
    Sweep {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        run: Run,
    },
    /// Graphviz DOT for a space, lattice or ad-frame.
    Render(Io),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub n: usize,
    pub samples: Option<usize>,
}

fn parse_sweep(s: &str) -> std::result::Result<Sampling, String> {
    let mut n = None;
    let mut samples = None;
    for part in s.split(',') {
        let (k, v) = part.split_once('=').ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        let v: usize = v.trim().parse().map_err(|_| format!("`{v}` is not a count"))?;
        match k.trim() {
            "n" => n = Some(v),
            "samples" if v > 0 => samples = Some(v),
            "samples" => return Err("samples must be positive".into()),
            other => return Err(format!("unknown sweep key `{other}`")),
        }
    }
    Ok(Sampling { n: n.ok_or("missing n=K")?, samples })
}

/// What a command produced: text for the output and an exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub status: u8,
    /// One-line summary for stderr.
    pub note: Option<String>,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, status: 0, note: None }
    }
}

fn read_input(io: &Io) -> Result<Value> {
    let src = io.input.as_deref().ok_or_else(|| Error::Malformed("missing --in".into()))?;
    let text = if src.trim_start().starts_with('{') {
        src.to_string()
    } else if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Malformed(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(src).map_err(|e| Error::Malformed(format!("{src}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Malformed(e.to_string()))
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Malformed(e.to_string()))
}

fn read_space(io: &Io) -> Result<FinPreTopSpace> {
    let v = read_input(io)?;
    match detect_kind(&v)? {
        DocKind::Space => space_from_json(&from_value(v)?),
        other => Err(Error::Malformed(format!("expected a space, got {other:?}"))),
    }
}

fn line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("plain data");
    s.push('\n');
    s
}

pub fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Validate(io) => validate(io),
        Command::Ado(io) => {
            let x = read_space(io)?;
            Ok(Outcome::ok(line(&adframe_value(&build_ado(&x, io.variant.unwrap_or(Variant::Both))?))))
        }
        Command::Adpt(io) => {
            let v = read_input(io)?;
            let frame = match detect_kind(&v)? {
                DocKind::AdFrame => {
                    let mut f = adframe_from_json(&from_value(v)?)?;
                    if let Some(var) = io.variant {
                        f = f.with_variant(var);
                    }
                    f
                }
                DocKind::Space => build_ado(&space_from_json(&from_value(v)?)?, io.variant.unwrap_or(Variant::Both))?,
                DocKind::Lattice => return Err(Error::Malformed("expected an ad-frame or a space".into())),
            };
            Ok(Outcome::ok(line(&space_value(&adpt_space(&frame)?.space))))
        }
        Command::Ads(io) => {
            let x = read_space(io)?;
            Ok(Outcome::ok(line(&space_value(&ads_space(&x, io.variant.unwrap_or(Variant::Both))?.space))))
        }
        Command::Sobrify(io) => {
            let x = read_space(io)?;
            let s = standard_sobrification(&x)?;
            let n = s.space.n();
            let out = FinPreTopSpace::new(s.space, Preorder::discrete(n))?;
            Ok(Outcome::ok(line(&space_value(&out))))
        }
        Command::Check { id, io, run } => check(&[*id], io, run),
        Command::Sweep { io, run } => check(&TheoremId::ALL, io, run),
        Command::Render(io) => {
            let v = read_input(io)?;
            let dot = match detect_kind(&v)? {
                DocKind::Space => render::space_dot(&space_from_json(&from_value(v)?)?)?,
                DocKind::Lattice => render::lattice_dot(&lattice_from_json(&from_value(v)?)?)?,
                DocKind::AdFrame => render::adframe_dot(&adframe_from_json(&from_value(v)?)?)?,
            };
            Ok(Outcome::ok(dot))
        }
    }
}

fn validate(io: &Io) -> Result<Outcome> {
    let v = read_input(io)?;
    match detect_kind(&v)? {
        DocKind::Space => {
            let x = space_from_json(&from_value(v)?)?;
            let t0 = x.topology().is_t0();
            Ok(Outcome::ok(line(&json!({
                "kind": "space", "valid": true, "points": x.n(), "opens": x.opens().len(),
                "t0": t0, "ad_t0": is_ad_t0(&x),
            }))))
        }
        DocKind::Lattice => {
            let l = lattice_from_json(&from_value(v)?)?;
            let a = l.analyze();
            Ok(Outcome::ok(line(&json!({
                "kind": "lattice", "valid": true, "size": l.len(), "distributive": a.distributive,
                "primes": a.primes, "coprimes": a.coprimes, "pitchfork": a.pitchfork,
            }))))
        }
        DocKind::AdFrame => {
            let mut f = adframe_from_json(&from_value(v)?)?;
            if let Some(var) = io.variant {
                f = f.with_variant(var);
            }
            let r = validate_adframe(&f)?;
            let checks: Vec<Value> = r
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "witness": c.witness }))
                .collect();
            let passed = r.passed();
            Ok(Outcome {
                text: line(&json!({ "kind": "adframe", "valid": passed, "variant": f.variant(), "checks": checks })),
                status: if passed { 0 } else { 1 },
                note: (!passed).then(|| {
                    let c = r.first_failure().expect("failed report");
                    format!("invalid ad-frame: {} ({})", c.name, c.witness.clone().unwrap_or_default())
                }),
            })
        }
    }
}

fn check(ids: &[TheoremId], io: &Io, run: &Run) -> Result<Outcome> {
    let mut lines = String::new();
    let mut failures = 0;
    let mut summary = Vec::new();
    match (&run.sweep, &io.input) {
        (Some(_), Some(_)) => return Err(Error::Malformed("give either --in or --sweep, not both".into())),
        (None, None) => return Err(Error::Malformed("give --in or --sweep".into())),
        (None, Some(_)) => {
            let x = read_space(io)?;
            let variants = io.variant.map_or_else(|| vec![Variant::Both], |v| vec![v]);
            for &id in ids {
                for &v in &variants {
                    let r = run_check(id, &x, v);
                    failures += usize::from(r.verdict == Verdict::Fail);
                    lines.push_str(&r.to_line());
                    lines.push('\n');
                }
            }
        }
        (Some(s), None) => {
            let spaces = match s.samples {
                None => enumerate_spaces(s.n, &SpaceMode::All)?,
                Some(m) => {
                    let mut r = rng(run.seed);
                    (0..m).map(|_| random_space(s.n, &mut r)).collect()
                }
            };
            let spec = SweepSpec {
                n: s.n,
                variants: io.variant.map_or_else(|| Variant::ALL.to_vec(), |v| vec![v]),
                mode: SpaceMode::All,
                fail_fast: run.fail_fast,
                budget: run.budget_ms.map(Duration::from_millis),
            };
            for &id in ids {
                let res: SweepResult = run_batch(id, &spaces, &spec)?;
                for r in &res.reports {
                    lines.push_str(&r.to_line());
                    lines.push('\n');
                }
                let t = res.tally;
                failures += t.fail;
                summary.push(format!(
                    "{id}: {} pass, {} fail, {} expected-fail, {} skip{}",
                    t.pass,
                    t.fail,
                    t.expected_fail,
                    t.skip,
                    if res.stopped_early { " (stopped early)" } else { "" }
                ));
                if run.fail_fast && t.fail > 0 {
                    break;
                }
            }
        }
    }
    Ok(Outcome { text: lines, status: u8::from(failures > 0), note: (!summary.is_empty()).then(|| summary.join("\n")) })
}

/// Writes `text` to `path` through a temporary file in the same directory.
pub fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

impl Command {
    pub fn out(&self) -> Option<&Path> {
        let io = match self {
            Command::Validate(io)
            | Command::Ado(io)
            | Command::Adpt(io)
            | Command::Ads(io)
            | Command::Sobrify(io)
            | Command::Render(io) => io,
            Command::Check { io, .. } | Command::Sweep { io, .. } => io,
        };
        io.out.as_deref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_spec_parsing() {
        assert_eq!(parse_sweep("n=2"), Ok(Sampling { n: 2, samples: None }));
        assert_eq!(parse_sweep("n=5,samples=10"), Ok(Sampling { n: 5, samples: Some(10) }));
        assert!(parse_sweep("m=2").is_err());
        assert!(parse_sweep("n=two").is_err());
        assert!(parse_sweep("n=2,samples=0").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
