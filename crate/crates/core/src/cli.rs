//! Command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde_json::json;
use thiserror::Error;

use crate::chain::library::{named_tableaux, tableau_by_name};
use crate::chain::{classify, letter_images, ClassTag, Transform};
use crate::classifier::{
    census_c2, circuit_depth_witness, enumerate_5site, match_family, realize_staircase,
    CensusCounts, ImagePair,
};
use crate::clifford::CliffordTableau;
use crate::hamiltonian::models::{model_by_name, named_models};
use crate::hamiltonian::{frustration_graph, transform, HamiltonianError, Symbol, TIHamiltonian};
use crate::numeric::{run_checks, CHECK_NAMES};

/// Environment variable capping the worker-thread count.
pub const THREADS_ENV: &str = "CLIFFCHAIN_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "cliffchain",
    version,
    about = "Translation-invariant Clifford transforms of spin chains"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every two-site Clifford staircase.
    Census {
        /// Compare per-class counts against this file; drift exits nonzero.
        #[arg(long)]
        golden: Option<PathBuf>,
        /// Write one JSON line per tableau here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerate locality-preserving maps with images on five sites.
    Enumerate5 {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Classify one tableau, given by registry name or JSON file.
    Classify {
        tableau: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Rewrite a Hamiltonian under a transform chain such as `U4*U2`
    /// (rightmost applied first).
    Transform {
        /// Model name or TOML/JSON file.
        model: String,
        /// Transform chain: registry names, tableau files or `inv(NAME)`, joined by `*`.
        #[arg(long = "by")]
        by: String,
        /// Substitute a numeric anisotropy.
        #[arg(long)]
        delta: Option<f64>,
        /// Substitute a numeric field; promotes `xxz` to `xxz_field`.
        #[arg(long)]
        h: Option<f64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the dense numerical checks.
    Verify {
        /// Run only this check.
        #[arg(long)]
        check: Option<String>,
        /// Chain length for checks that take one.
        #[arg(short = 'L')]
        sites: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Anticommutation graph of a model's term instances.
    Graph {
        model: String,
        /// Instances `n` in `-window..=window`.
        #[arg(long, default_value_t = 3)]
        window: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown transform {name:?}{hint}; known: {known}")]
    UnknownTransform {
        name: String,
        hint: String,
        known: String,
    },
    #[error("unknown model {name:?}{hint}; known: {known}")]
    UnknownModel {
        name: String,
        hint: String,
        known: String,
    },
    #[error("unknown check {name:?}; known: {known}")]
    UnknownCheck { name: String, known: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("cannot parse {path}: {message}")]
    Parse { path: String, message: String },
    #[error("{0} is not a representable parameter value")]
    BadNumber(f64),
    #[error(transparent)]
    Hamiltonian(#[from] HamiltonianError),
    #[error(transparent)]
    Chain(#[from] crate::chain::ChainError),
    #[error("write failed: {0}")]
    Write(#[from] std::io::Error),
}

fn hint(name: &str, known: &[&str]) -> String {
    let lower = name.to_ascii_lowercase();
    let close: Vec<&str> = known
        .iter()
        .copied()
        .filter(|k| {
            let k = k.to_ascii_lowercase();
            k.starts_with(&lower) || lower.starts_with(&k) || k.contains(&lower)
        })
        .collect();
    if close.is_empty() {
        String::new()
    } else {
        format!(" (did you mean {}?)", close.join(" or "))
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// A registry name, or a path to a JSON tableau.
pub fn load_tableau(spec: &str) -> Result<CliffordTableau, CliError> {
    if let Some(t) = tableau_by_name(spec) {
        return Ok(t);
    }
    let path = Path::new(spec);
    if path.exists() {
        return CliffordTableau::from_json(&read(path)?).map_err(|e| CliError::Parse {
            path: spec.to_string(),
            message: e.to_string(),
        });
    }
    let names: Vec<&str> = named_tableaux().into_iter().map(|(n, _)| n).collect();
    Err(CliError::UnknownTransform {
        name: spec.to_string(),
        hint: hint(spec, &names),
        known: names.join(", "),
    })
}

/// Parses `A*B*inv(C)`: factors apply right to left; `inv(..)` is the local
/// inverse of a locality-preserving staircase.
pub fn parse_transform(spec: &str) -> Result<Transform, CliError> {
    let mut parts = Vec::new();
    for raw in spec.split('*') {
        let f = raw.trim();
        let inner = f.strip_prefix("inv(").and_then(|r| r.strip_suffix(')'));
        let part = match inner {
            Some(name) => {
                Transform::Local(Transform::staircase(load_tableau(name.trim())?).inverse(8)?)
            }
            None => Transform::staircase(load_tableau(f)?),
        };
        parts.push(part);
    }
    Ok(if parts.len() == 1 {
        parts.pop().expect("one factor")
    } else {
        Transform::Compose(parts)
    })
}

/// A model name (with `xxz` promoted to `xxz_field` when a field is given),
/// or a TOML/JSON file.
pub fn load_model(spec: &str, with_field: bool) -> Result<TIHamiltonian, CliError> {
    let name = if with_field && spec.eq_ignore_ascii_case("xxz") {
        "xxz_field"
    } else {
        spec
    };
    if let Some(h) = model_by_name(name) {
        return Ok(h);
    }
    let path = Path::new(spec);
    if path.exists() {
        return Ok(TIHamiltonian::from_file(path)?);
    }
    let names: Vec<&str> = named_models().into_iter().map(|(n, _)| n).collect();
    Err(CliError::UnknownModel {
        name: spec.to_string(),
        hint: hint(spec, &names),
        known: names.join(", "),
    })
}

fn rational(x: f64) -> Result<Rational64, CliError> {
    Rational64::approximate_float(x).ok_or(CliError::BadNumber(x))
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("report serializes")
}

/// Sizes the global worker pool from `CLIFFCHAIN_THREADS` if set.
pub fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

/// Runs a parsed command, writing the report to `out`. Returns the exit status.
pub fn run<W: Write>(cli: Cli, out: &mut W) -> Result<i32, CliError> {
    match cli.command {
        Command::Census {
            golden,
            out: entries_path,
            format,
        } => {
            let census = census_c2()?;
            let counts = census.counts();
            if let Some(path) = entries_path {
                let mut text = String::new();
                for e in &census.entries {
                    text.push_str(&e.to_json_line());
                    text.push('\n');
                }
                std::fs::write(&path, text).map_err(|e| CliError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
            }
            match format {
                Format::Json => writeln!(out, "{}", pretty(&counts))?,
                Format::Table => {
                    for (class, n) in &counts.counts {
                        writeln!(out, "{class:<14} {n:>6}")?;
                    }
                    writeln!(out, "{:<14} {:>6}", "total", counts.total)?;
                }
            }
            if let Some(path) = golden {
                let frozen: CensusCounts =
                    serde_json::from_str(&read(&path)?).map_err(|e| CliError::Parse {
                        path: path.display().to_string(),
                        message: e.to_string(),
                    })?;
                if frozen != counts {
                    writeln!(out, "golden mismatch against {}", path.display())?;
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Command::Enumerate5 { format } => {
            let survivors = enumerate_5site();
            let mut unclassified = 0;
            match format {
                Format::Json => {
                    for s in &survivors {
                        writeln!(
                            out,
                            "{}",
                            serde_json::to_string(s).expect("survivor serializes")
                        )?;
                    }
                }
                Format::Table => {
                    for s in &survivors {
                        writeln!(
                            out,
                            "{:<4} shift={:>2}  X->{}  Z->{}",
                            s.family, s.shift, s.pair.img_x, s.pair.img_z
                        )?;
                    }
                }
            }
            for s in &survivors {
                if s.family == ClassTag::Unclassified {
                    unclassified += 1;
                }
            }
            Ok(i32::from(unclassified > 0))
        }
        Command::Classify { tableau, format } => {
            let t = load_tableau(&tableau)?;
            let class = classify(&t)?;
            let images = letter_images(&t)?;
            let depth = circuit_depth_witness(&t).ok().map(|c| c.depth());
            let pair = match (images[0].local(), images[2].local()) {
                (Some(x), Some(z)) => Some(ImagePair::new(x.clone(), z.clone())),
                _ => None,
            };
            let realization = pair
                .as_ref()
                .and_then(|p| realize_staircase(p).ok())
                .map(|r| r.base);
            // five-site family of a local map, with the translation removed
            let family = pair.as_ref().and_then(|p| {
                let c = p.reflection_center()?;
                Some((match_family(&p.translate(-c)).0, c))
            });
            match format {
                Format::Json => {
                    let report = json!({
                        "tableau": t,
                        "class": class.tag,
                        "params": class.params,
                        "images": { "X": images[0], "Y": images[1], "Z": images[2] },
                        "family": family.map(|(f, shift)| json!({ "tag": f, "shift": shift })),
                        "circuit_depth": depth,
                        "realized_by": realization,
                    });
                    writeln!(out, "{}", pretty(&report))?;
                }
                Format::Table => {
                    writeln!(out, "tableau  {t}")?;
                    writeln!(out, "class    {}", class.tag)?;
                    for (k, v) in &class.params {
                        writeln!(out, "  {k} = {v}")?;
                    }
                    for (l, img) in ["X", "Y", "Z"].iter().zip(&images) {
                        writeln!(out, "{l}[n] -> {img}")?;
                    }
                    if let Some((f, shift)) = family {
                        writeln!(out, "family   {f} (shift {shift})")?;
                    }
                    if let Some(d) = depth {
                        writeln!(out, "circuit depth {d}")?;
                    }
                }
            }
            Ok(0)
        }
        Command::Transform {
            model,
            by,
            delta,
            h,
            format,
        } => {
            let src = load_model(&model, h.is_some())?;
            let t = parse_transform(&by)?;
            let mut image = transform(&src, &t)?;
            image.name = format!("{by}({})", src.name);
            if let Some(d) = delta {
                image = image.substitute(Symbol::Delta, rational(d)?);
            }
            if let Some(f) = h {
                image = image.substitute(Symbol::Field, rational(f)?);
            }
            match format {
                Format::Json => writeln!(out, "{}", image.to_json())?,
                Format::Table => writeln!(out, "{image}")?,
            }
            Ok(0)
        }
        Command::Verify {
            check,
            sites,
            format,
        } => {
            if let Some(name) = &check {
                if !CHECK_NAMES.contains(&name.as_str()) {
                    return Err(CliError::UnknownCheck {
                        name: name.clone(),
                        known: CHECK_NAMES.join(", "),
                    });
                }
            }
            let results = run_checks(check.as_deref(), sites);
            for r in &results {
                match format {
                    Format::Json => writeln!(
                        out,
                        "{}",
                        serde_json::to_string(r).expect("result serializes")
                    )?,
                    Format::Table => writeln!(
                        out,
                        "{:<20} L={:<2} residual={:<12.3e} {}  {}",
                        r.check,
                        r.sites,
                        r.residual,
                        if r.pass { "PASS" } else { "FAIL" },
                        r.params
                    )?,
                }
            }
            Ok(i32::from(results.iter().any(|r| !r.pass)))
        }
        Command::Graph {
            model,
            window,
            format,
        } => {
            let h = load_model(&model, false)?;
            let g = frustration_graph(&h, -window..=window);
            match format {
                Format::Json => {
                    let vertices: Vec<_> = g
                        .vertices
                        .iter()
                        .map(|&(a, n)| json!({ "term": h.terms[a].op.translate(n), "n": n }))
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        pretty(&json!({ "model": h.name, "vertices": vertices, "edges": g.edges }))
                    )?;
                }
                Format::Table => {
                    for (i, &(a, n)) in g.vertices.iter().enumerate() {
                        let nb: Vec<String> =
                            g.neighbours(i).iter().map(|j| j.to_string()).collect();
                        writeln!(
                            out,
                            "{i:>4}  {:<24} -- {}",
                            h.terms[a].op.translate(n).to_string(),
                            nb.join(" ")
                        )?;
                    }
                }
            }
            Ok(0)
        }
    }
}
