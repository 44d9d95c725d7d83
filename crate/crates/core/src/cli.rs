//! The `ghs` command line: argument parsing, input loading and rendering.
//!
//! [`run`] does all the work and returns the text to print together with the
//! exit code, so the binary is a thin wrapper and the commands are testable
//! in-process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 invalid embedding, 4 size guard.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::count::{CremonaReport, PointCounter, StrataCount, VerifyReport};
use crate::embedding::{HalfEdge, RotationSystem};
use crate::error::Error;
use crate::graph::{Family, Multigraph};
use crate::irred::{classify_graph, classify_poly, Verdict};
use crate::kirchhoff::psi;
use crate::motive::{banana_alternative_value, family_class, ClassPoly};
use crate::multipoly::SubsetPoly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_EMBEDDING: i32 = 3;
pub const EXIT_SIZE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "ghs", version, about = "Graph hypersurfaces: Kirchhoff polynomials, duals, classes and point counts")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Refuse point counts with q^n above 2^MAX_WORK.
    #[arg(long, global = true, default_value_t = crate::count::DEFAULT_MAX_WORK_BITS)]
    pub max_work: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BananaVariant {
    /// Off-hyperplane part plus the class of S_n.
    Summed,
    /// The single closed expression with denominators T; kept for comparison.
    Alternative,
}

/// A graph given either as a JSON file (graph or rotation system) or as a
/// family member.
#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Graph or rotation-system JSON file.
    pub file: Option<PathBuf>,
    #[arg(long, value_parser = parse_family)]
    pub family: Option<Family>,
    #[arg(long)]
    pub n: Option<usize>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Kirchhoff polynomial.
    Psi(Source),
    /// Print the planar dual of an embedded graph.
    Dual(Source),
    /// Print the Grothendieck class of a family member.
    Class {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Count zeros of the Kirchhoff polynomial over F_q.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        q: u64,
    },
    /// Check class predictions and the Cremona bijection against point counts.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = BananaVariant::Summed)]
        variant: BananaVariant,
    },
    /// Decide reducibility of the hypersurface.
    Irred(Source),
    /// List the families, or print the canonical embedding of one member.
    Families {
        #[arg(long, value_parser = parse_family)]
        family: Option<Family>,
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Structured record of one command invocation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    pub result: Payload,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pass: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Polynomial {
        text: String,
        polynomial: SubsetPoly,
    },
    Dual {
        rotation_system: RotationSystem,
    },
    Class {
        family: Family,
        n: usize,
        t_basis: String,
        l_basis: String,
        coefficients: ClassPoly,
    },
    Counts {
        q: u64,
        #[serde(flatten)]
        counts: StrataCount,
    },
    Verify {
        #[serde(skip_serializing_if = "Option::is_none", default)]
        class: Option<VerifyReport>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        alternative: Option<AlternativeReport>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        cremona: Option<CremonaReport>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        kirchhoff: Option<KirchhoffReport>,
    },
    Verdict {
        verdict: Verdict,
        poly_verdict: Verdict,
        agree: bool,
    },
    Families {
        families: Vec<FamilyInfo>,
    },
}

/// The alternative banana expression at `T = q - 1` against the count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternativeReport {
    pub q: u64,
    pub total: u64,
    pub value: String,
    pub pass: bool,
}

/// Self-consistency of `Ψ` for an arbitrary graph file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KirchhoffReport {
    pub q: u64,
    pub terms: u64,
    pub spanning_trees: u64,
    pub homogeneous: bool,
    pub counts: StrataCount,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInfo {
    pub family: Family,
    pub min_n: usize,
    pub dual: Family,
}

/// What the process should print and how it should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotSphereEmbedding(_) | Error::InvalidRotation(_) => EXIT_EMBEDDING,
            Error::DomainTooLarge(_) => EXIT_SIZE,
            Error::Overflow(_) | Error::InexactDivision(_) | Error::Defect(_) => EXIT_FAIL,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

struct Loaded {
    graph: Multigraph,
    rotation: Option<RotationSystem>,
    bytes: Vec<u8>,
}

#[derive(Deserialize)]
struct RotationFile {
    graph: Multigraph,
    rotation: Vec<Vec<HalfEdge>>,
}

fn load(source: &Source) -> Result<Loaded, Failure> {
    match (&source.file, source.family, source.n) {
        (Some(path), None, None) => {
            let bytes = std::fs::read(path)
                .map_err(|e| input_failure(format!("cannot read {}: {e}", path.display())))?;
            let value: serde_json::Value = serde_json::from_slice(&bytes)
                .map_err(|e| input_failure(format!("invalid JSON: {e}")))?;
            if value.get("rotation").is_some() {
                let file: RotationFile = serde_json::from_value(value)
                    .map_err(|e| input_failure(format!("invalid rotation file: {e}")))?;
                let rotation = RotationSystem::new(file.graph, file.rotation)?;
                Ok(Loaded {
                    graph: rotation.graph().clone(),
                    rotation: Some(rotation),
                    bytes,
                })
            } else {
                let graph: Multigraph = serde_json::from_value(value)
                    .map_err(|e| input_failure(format!("invalid graph file: {e}")))?;
                Ok(Loaded {
                    graph,
                    rotation: None,
                    bytes,
                })
            }
        }
        (None, Some(family), Some(n)) => {
            let rotation = RotationSystem::family(family, n)?;
            Ok(Loaded {
                graph: rotation.graph().clone(),
                rotation: Some(rotation),
                bytes: format!("family={family} n={n}").into_bytes(),
            })
        }
        _ => Err(input_failure("give either a FILE or both --family and --n")),
    }
}

fn digest(parts: &[&[u8]]) -> String {
    let mut hasher = Sha256::new();
    for p in parts {
        hasher.update((p.len() as u64).to_le_bytes());
        hasher.update(p);
    }
    hex::encode(hasher.finalize())
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let echo = args
        .iter()
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let cli = match Cli::try_parse_from(std::iter::once(OsString::from("ghs")).chain(args)) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { stdout: rendered, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: rendered, code }
            };
        }
    };
    run_cli(&cli, &echo)
}

pub fn run_cli(cli: &Cli, echo: &str) -> Outcome {
    match execute(cli, echo) {
        Ok((report, text)) => {
            let stdout = match cli.format {
                Format::Text => text,
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
                    s.push('\n');
                    s
                }
            };
            let code = match report.pass {
                Some(false) => EXIT_FAIL,
                _ => EXIT_OK,
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code,
            }
        }
        Err(f) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
            code: f.code,
        },
    }
}

fn execute(cli: &Cli, echo: &str) -> Result<(RunReport, String), Failure> {
    let counter = PointCounter::new(cli.max_work);
    let report = |result: Payload, bytes: &[u8], pass: Option<bool>| RunReport {
        command: echo.to_string(),
        inputs_digest: digest(&[echo.as_bytes(), bytes]),
        result,
        pass,
    };
    match &cli.command {
        Command::Psi(source) => {
            let input = load(source)?;
            let p = psi(&input.graph)?;
            let text = format!("{p}\n");
            let payload = Payload::Polynomial {
                text: p.to_string(),
                polynomial: p,
            };
            Ok((report(payload, &input.bytes, None), text))
        }
        Command::Dual(source) => {
            let input = load(source)?;
            let rotation = input
                .rotation
                .ok_or_else(|| input_failure("dual needs a rotation system, not a bare graph"))?;
            let dual = rotation.dual()?;
            let text = format!("{}\n", serde_json::to_string_pretty(&dual).expect("serializes"));
            let payload = Payload::Dual {
                rotation_system: dual,
            };
            Ok((report(payload, &input.bytes, None), text))
        }
        Command::Class { family, n } => {
            let class = family_class(*family, *n)?;
            let text = format!("{class}\n{}\n", class.lefschetz_string());
            let payload = Payload::Class {
                family: *family,
                n: *n,
                t_basis: class.to_string(),
                l_basis: class.lefschetz_string(),
                coefficients: class,
            };
            Ok((report(payload, b"", None), text))
        }
        Command::Count { source, q } => {
            let input = load(source)?;
            let p = psi(&input.graph)?;
            let counts = counter.count_zeros(&p, *q)?;
            let text = format!(
                "total {}\noff_sigma {}\non_sigma {}\n",
                counts.total, counts.off_sigma, counts.on_sigma
            );
            let payload = Payload::Counts { q: *q, counts };
            Ok((report(payload, &input.bytes, None), text))
        }
        Command::Verify { source, q, variant } => verify(&counter, source, *q, *variant)
            .map(|(payload, pass, text, bytes)| (report(payload, &bytes, Some(pass)), text)),
        Command::Irred(source) => {
            let input = load(source)?;
            let verdict = classify_graph(&input.graph)?;
            let poly_verdict = classify_poly(&psi(&input.graph)?)?;
            let agree = verdict.kind() == poly_verdict.kind();
            let text = format!("{}\n", render_verdict(&verdict));
            let payload = Payload::Verdict {
                verdict,
                poly_verdict,
                agree,
            };
            Ok((report(payload, &input.bytes, Some(agree)), text))
        }
        Command::Families { family, n } => match (family, n) {
            (Some(family), Some(n)) => {
                let r = RotationSystem::family(*family, *n)?;
                let text = format!("{}\n", serde_json::to_string_pretty(&r).expect("serializes"));
                let payload = Payload::Dual { rotation_system: r };
                Ok((report(payload, b"", None), text))
            }
            (None, None) => {
                let families: Vec<FamilyInfo> = Family::ALL
                    .iter()
                    .map(|&f| FamilyInfo {
                        family: f,
                        min_n: f.min_size(),
                        dual: f.dual(),
                    })
                    .collect();
                let text = families
                    .iter()
                    .map(|f| format!("{} n>={} dual={}\n", f.family, f.min_n, f.dual))
                    .collect();
                Ok((report(Payload::Families { families }, b"", None), text))
            }
            _ => Err(input_failure("give both --family and --n, or neither")),
        },
    }
}

type VerifyOutput = (Payload, bool, String, Vec<u8>);

fn verify(
    counter: &PointCounter,
    source: &Source,
    q: u64,
    variant: BananaVariant,
) -> Result<VerifyOutput, Failure> {
    let input = load(source)?;
    let p = psi(&input.graph)?;
    let mut text = String::new();
    let mut pass = true;
    let (mut class, mut alternative, mut kirchhoff) = (None, None, None);

    match (source.family, source.n, variant) {
        (Some(Family::Banana), Some(n), BananaVariant::Alternative) => {
            let value = banana_alternative_value(n, q)?;
            let counts = counter.count_zeros(&p, q)?;
            let ok = value.is_integer() && value.to_integer() == counts.total.into();
            text.push_str(&format!(
                "alternative banana expression at q={q}: {value}, count {}: {}\n",
                counts.total,
                verdict_word(ok)
            ));
            pass &= ok;
            alternative = Some(AlternativeReport {
                q,
                total: counts.total,
                value: value.to_string(),
                pass: ok,
            });
        }
        (Some(family), Some(n), _) => {
            if variant == BananaVariant::Alternative {
                return Err(input_failure("--variant alternative applies to the banana family only"));
            }
            let c = family_class(family, n)?;
            let r = counter.verify_class(&c, &p, q)?;
            text.push_str(&format!(
                "class {c} at q={q}: {}, count {}: {}\n",
                r.class_value,
                r.total,
                verdict_word(r.pass)
            ));
            pass &= r.pass;
            class = Some(r);
        }
        _ => {
            if variant == BananaVariant::Alternative {
                return Err(input_failure("--variant alternative applies to --family banana only"));
            }
            let counts = counter.count_zeros(&p, q)?;
            let trees = input.graph.spanning_tree_count()?;
            let ok = trees == p.term_count() as u128
                && p.is_homogeneous()
                && p.terms().all(|(_, c)| c == 1)
                && counts.total == counts.off_sigma + counts.on_sigma;
            text.push_str(&format!(
                "psi: {} terms, {trees} spanning trees, count {} at q={q}: {}\n",
                p.term_count(),
                counts.total,
                verdict_word(ok)
            ));
            pass &= ok;
            kirchhoff = Some(KirchhoffReport {
                q,
                terms: p.term_count() as u64,
                spanning_trees: u64::try_from(trees).map_err(|_| Error::Overflow("tree count"))?,
                homogeneous: p.is_homogeneous(),
                counts,
                pass: ok,
            });
        }
    }

    let cremona = match &input.rotation {
        Some(r) => {
            let c = counter.cremona_point_check(r, q)?;
            text.push_str(&format!(
                "cremona at q={q}: {} -> {} off-sigma zeros: {}\n",
                c.primal_off_sigma,
                c.dual_off_sigma,
                verdict_word(c.pass)
            ));
            pass &= c.pass;
            Some(c)
        }
        None => None,
    };
    let payload = Payload::Verify {
        class,
        alternative,
        cremona,
        kirchhoff,
    };
    Ok((payload, pass, text, input.bytes))
}

fn verdict_word(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn render_verdict(v: &Verdict) -> String {
    match v {
        Verdict::EmptyHypersurface => "EmptyHypersurface".to_string(),
        Verdict::Irreducible => "Irreducible".to_string(),
        Verdict::Reducible(w) => {
            let at = w
                .separating_vertex
                .map(|v| format!(" at vertex {v}"))
                .unwrap_or_default();
            format!(
                "Reducible{at}: {} | {} = ({}) * ({})",
                w.first, w.second, w.factors.0, w.factors.1
            )
        }
    }
}
