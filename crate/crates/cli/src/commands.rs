use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use alo_ipcm::analysis::{self, format_significant, Dominance, IndexPoint, Thresholds};
use alo_ipcm::{AloGroup, IsoMap, MatrixFile, ScaleId, Tolerance};

#[derive(Parser)]
#[command(
    name = "alo-ipcm",
    version,
    about = "Consistency and indeterminacy analysis for pairwise comparison matrices \
             with real or interval entries on the multiplicative, additive, or fuzzy scale"
)]
pub struct Cli {
    /// Comparison tolerance, measured in additive coordinates.
    #[arg(
        long,
        global = true,
        env = "ALO_IPCM_TOLERANCE",
        default_value_t = 1e-9
    )]
    pub tolerance: f64,

    /// Largest matrix order the exhaustive relabelling search will accept.
    #[arg(long, global = true, default_value_t = 8)]
    pub perm_cap: usize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    Reciprocity,
    Liu,
    Approx,
    Full,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Consistency,
    Indeterminacy,
    Both,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check reciprocity and the consistency conditions of a matrix.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = CheckMode::All)]
        mode: CheckMode,
        /// Re-tag the file's values with this scale instead of the declared one.
        #[arg(long)]
        scale: Option<String>,
    },
    /// Compute the consistency and indeterminacy indices of a matrix.
    Index {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Which::Both)]
        which: Which,
        /// Also report the indices transported to this scale.
        #[arg(long)]
        to_scale: Option<String>,
        #[arg(long)]
        scale: Option<String>,
    },
    /// Evaluate several matrices on a common reference scale and compare them.
    Compare {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value = "fuzzy")]
        reference_scale: String,
        /// Acceptance thresholds "I,delta" on the reference scale.
        #[arg(long)]
        thresholds: Option<String>,
    },
    /// Map a matrix file onto another scale.
    Transport {
        file: PathBuf,
        to_scale: String,
        /// Write the result here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        scale: Option<String>,
    },
}

pub fn run(cli: Cli) -> Result<ExitCode> {
    let tol = Tolerance::new(cli.tolerance)?;
    match cli.command {
        Command::Check { file, mode, scale } => {
            check(&file, mode, scale.as_deref(), tol, cli.perm_cap, cli.format)
        }
        Command::Index {
            file,
            which,
            to_scale,
            scale,
        } => index(
            &file,
            which,
            to_scale.as_deref(),
            scale.as_deref(),
            tol,
            cli.format,
        ),
        Command::Compare {
            files,
            reference_scale,
            thresholds,
        } => compare(
            &files,
            &reference_scale,
            thresholds.as_deref(),
            tol,
            cli.format,
        ),
        Command::Transport {
            file,
            to_scale,
            output,
            scale,
        } => transport(&file, &to_scale, output.as_deref(), scale.as_deref(), tol),
    }
}

fn parse_scale(name: &str) -> Result<AloGroup> {
    let id: ScaleId = name.parse()?;
    AloGroup::builtin(id).context("custom scales cannot be named on the command line")
}

fn load(path: &Path, scale_override: Option<&str>, tol: Tolerance) -> Result<MatrixFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let scale = scale_override.map(|s| s.parse::<ScaleId>()).transpose()?;
    MatrixFile::from_json_str(&text, scale, tol)
        .with_context(|| format!("parsing {}", path.display()))
}

fn check(
    path: &Path,
    mode: CheckMode,
    scale_override: Option<&str>,
    tol: Tolerance,
    perm_cap: usize,
    format: Format,
) -> Result<ExitCode> {
    let file = load(path, scale_override, tol)?;
    let matrix = file.to_ipcm();
    let reciprocal = matrix.is_reciprocal(tol);

    let wants = |m: CheckMode| mode == m || mode == CheckMode::All;
    let mut pass = true;
    let mut lines = Vec::new();
    let mut report = json!({
        "file": path.display().to_string(),
        "scale": file.group().id().name(),
        "order": file.order(),
        "kind": file.kind(),
    });

    if wants(CheckMode::Reciprocity) {
        pass &= reciprocal;
        lines.push(format!("reciprocal: {}", yes_no(reciprocal)));
        report["reciprocal"] = json!(reciprocal);
    }
    if wants(CheckMode::Liu) {
        let liu = reciprocal && matrix.is_liu_consistent(tol)?;
        pass &= liu;
        lines.push(format!("liu-consistent: {}", yes_no(liu)));
        report["liu_consistent"] = json!(liu);
    }
    if wants(CheckMode::Approx) {
        let witness = if reciprocal {
            matrix.approx_consistency(tol, perm_cap)?
        } else {
            None
        };
        pass &= witness.is_some();
        match &witness {
            Some(sigma) => lines.push(format!("approx-consistent: yes (witness: {sigma})")),
            None => lines.push("approx-consistent: no".into()),
        }
        report["approx_consistent"] = json!(witness.is_some());
        report["witness"] = json!(witness.map(|s| s.to_string()));
    }
    if wants(CheckMode::Full) {
        let full = matrix.is_full_consistent(tol);
        pass &= full;
        lines.push(format!("full-consistent: {}", yes_no(full)));
        report["full_consistent"] = json!(full);
    }
    report["pass"] = json!(pass);

    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Text | Format::Tsv => {
            println!("file: {}", path.display());
            println!(
                "scale: {}, order: {}, kind: {}",
                file.group().id().name(),
                file.order(),
                file.kind()
            );
            for line in lines {
                println!("{line}");
            }
            println!("overall: {}", if pass { "pass" } else { "fail" });
        }
    }
    Ok(ExitCode::from(u8::from(!pass)))
}

fn index(
    path: &Path,
    which: Which,
    to_scale: Option<&str>,
    scale_override: Option<&str>,
    tol: Tolerance,
    format: Format,
) -> Result<ExitCode> {
    let file = load(path, scale_override, tol)?;
    let matrix = file.to_ipcm();
    let native = matrix.group().clone();

    let consistency = match which {
        Which::Consistency | Which::Both => Some(matrix.consistency_index(tol)?),
        Which::Indeterminacy => None,
    };
    let indeterminacy = match which {
        Which::Indeterminacy | Which::Both => Some(matrix.indeterminacy_index(tol)?),
        Which::Consistency => None,
    };

    let target = to_scale.map(parse_scale).transpose()?;
    let mapped = match &target {
        Some(target_group) => {
            let iso = IsoMap::between(&native, target_group);
            let map = |v: Option<alo_ipcm::GroupElement>| v.map(|e| iso.apply(e)).transpose();
            Some((map(consistency)?, map(indeterminacy)?))
        }
        None => None,
    };

    match format {
        Format::Json => {
            let mut report = json!({
                "file": path.display().to_string(),
                "scale": native.id().name(),
                "consistency_index": consistency.map(|e| e.value()),
                "indeterminacy_index": indeterminacy.map(|e| e.value()),
            });
            if let (Some((i, d)), Some(target_group)) = (&mapped, &target) {
                report["to_scale"] = json!(target_group.id().name());
                report["consistency_index_transported"] = json!(i.map(|e| e.value()));
                report["indeterminacy_index_transported"] = json!(d.map(|e| e.value()));
            }
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Format::Text | Format::Tsv => {
            println!("file: {}", path.display());
            println!("scale: {}", native.id().name());
            if let Some(i) = consistency {
                println!("consistency-index: {}", format_significant(i.value(), 6));
            }
            if let Some(d) = indeterminacy {
                println!("indeterminacy-index: {}", format_significant(d.value(), 6));
            }
            if let (Some((i, d)), Some(target_group)) = (&mapped, &target) {
                println!("to-scale: {}", target_group.id().name());
                if let Some(i) = i {
                    println!(
                        "consistency-index ({}): {}",
                        target_group.id().name(),
                        format_significant(i.value(), 6)
                    );
                }
                if let Some(d) = d {
                    println!(
                        "indeterminacy-index ({}): {}",
                        target_group.id().name(),
                        format_significant(d.value(), 6)
                    );
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// File stems, falling back to the full path whenever two files share a stem.
fn labels_for(paths: &[PathBuf]) -> Vec<String> {
    let stems: Vec<String> = paths
        .iter()
        .map(|p| {
            p.file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| p.display().to_string())
        })
        .collect();
    paths
        .iter()
        .zip(&stems)
        .map(|(path, stem)| {
            if stems.iter().filter(|s| *s == stem).count() > 1 {
                path.display().to_string()
            } else {
                stem.clone()
            }
        })
        .collect()
}

fn compare(
    paths: &[PathBuf],
    reference_scale: &str,
    thresholds: Option<&str>,
    tol: Tolerance,
    format: Format,
) -> Result<ExitCode> {
    let reference = parse_scale(reference_scale)?;
    let thresholds = thresholds
        .map(|raw| -> Result<Thresholds> {
            let (i, d) = raw
                .split_once(',')
                .context("thresholds must be two comma-separated numbers, e.g. 0.7,0.7")?;
            let i: f64 = i.trim().parse().context("parsing consistency threshold")?;
            let d: f64 = d
                .trim()
                .parse()
                .context("parsing indeterminacy threshold")?;
            Ok(Thresholds::new(
                &reference,
                reference.element(i)?,
                reference.element(d)?,
                tol,
            )?)
        })
        .transpose()?;

    let labels = labels_for(paths);
    let mut points = Vec::with_capacity(paths.len());
    for (path, label) in paths.iter().zip(&labels) {
        let matrix = load(path, None, tol)?.to_ipcm();
        let point = analysis::evaluate(&matrix, label.clone(), &reference, tol)
            .with_context(|| format!("evaluating {}", path.display()))?;
        points.push(point);
    }
    points.sort_by(|a, b| a.label.cmp(&b.label));

    let relations = pairwise_relations(&points, &reference, tol)?;

    match format {
        Format::Json => {
            let report = json!({
                "reference_scale": reference.id().name(),
                "points": points.iter().map(|p| {
                    let verdict = thresholds.as_ref().map(|t| {
                        analysis::classify(p, t, &reference, tol)
                            .map(|v| v.to_string())
                    }).transpose()?;
                    Ok(json!({
                        "label": p.label,
                        "consistency_index": p.consistency.value(),
                        "indeterminacy_index": p.indeterminacy.value(),
                        "verdict": verdict,
                    }))
                }).collect::<Result<Vec<_>>>()?,
                "dominance": relations,
            });
            println!("{}", serde_json::to_string_pretty(&report)?);
        }
        Format::Text | Format::Tsv => {
            print!(
                "{}",
                analysis::plot_data(&points, &reference, thresholds.as_ref(), tol)?
            );
            if points.len() > 1 {
                println!();
                for line in relations {
                    println!("{line}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn pairwise_relations(
    points: &[IndexPoint],
    group: &AloGroup,
    tol: Tolerance,
) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    for (a, b) in pairs(points) {
        let relation = match analysis::dominance(a, b, group, tol)? {
            Dominance::FirstDominates => format!("{} dominates {}", a.label, b.label),
            Dominance::SecondDominates => format!("{} dominates {}", b.label, a.label),
            Dominance::Equal => format!("{} and {} are equal", a.label, b.label),
            Dominance::Incomparable => format!("{} and {} are incomparable", a.label, b.label),
        };
        lines.push(relation);
    }
    Ok(lines)
}

fn pairs<T>(items: &[T]) -> impl Iterator<Item = (&T, &T)> {
    items
        .iter()
        .enumerate()
        .flat_map(move |(i, a)| items[i + 1..].iter().map(move |b| (a, b)))
}

fn transport(
    path: &Path,
    to_scale: &str,
    output: Option<&Path>,
    scale_override: Option<&str>,
    tol: Tolerance,
) -> Result<ExitCode> {
    let file = load(path, scale_override, tol)?;
    let target = parse_scale(to_scale)?;
    let iso = IsoMap::between(file.group(), &target);
    let mapped = file.transport(&iso, tol)?;
    let serialized = mapped.to_json_string();
    match output {
        Some(out) => {
            fs::write(out, serialized).with_context(|| format!("writing {}", out.display()))?
        }
        None => print!("{serialized}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
