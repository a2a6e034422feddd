//! `ihopf`: check, transform and build Hopf algebra presentations from the
//! command line.
//!
//! Exit status: 0 when every reported check passes, 1 when a check fails,
//! 2 on usage, parse or I/O errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ihopf_core::axioms::{all_hold, verify_all, AxiomReport};
use ihopf_core::base_change::{transform_presentation, transport_witness, TransitionData};
use ihopf_core::catalog::{self, AbelianGroupSpec};
use ihopf_core::duality::{dualize, selfdual_reports, DualityWitness};
use ihopf_core::format::{load_matrix, PresentationFile};
use ihopf_core::ihopf::{i_construct_general, i_construct_scaled, i_construct_simple, verify_cyclic_witness, IAlgebra};
use ihopf_core::scalar::{parse_field_spec, parse_scalar, Field};
use ihopf_core::table::render_table;
use ihopf_core::{BialgebraPresentation, Construction, Element, Error};

#[derive(Parser)]
#[command(name = "ihopf", version, about = "Exact Hopf algebra presentations and their i-algebras")]
struct Cli {
    /// Worker threads for the verifiers.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every axiom check on a presentation.
    Check { file: PathBuf },
    /// Write the dual presentation.
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Change basis by a transition matrix (new basis vectors in columns).
    Basechange {
        file: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check a named witness as a self-duality and report its symmetry.
    Selfdual {
        file: PathBuf,
        #[arg(long)]
        witness: String,
    },
    /// Build the i-algebra and print its multiplication table.
    Ihopf(IhopfArgs),
    /// Check that an element generates a cyclic group basis: independent powers and x^m = 1.
    WitnessIso {
        file: PathBuf,
        /// Coordinates, separated by commas or semicolons.
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(long)]
        order: usize,
    },
    /// List the catalog families, or write one of them.
    Catalog {
        /// `list`, `group`, `taft` or `tensor-dual`.
        family: String,
        /// Family parameters: cyclic factors for `group`, n for `taft`,
        /// and `group ...` or `taft n` for `tensor-dual`.
        params: Vec<String>,
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the multiplication table of a presentation file.
    Table {
        file: PathBuf,
        /// Replacement labels, separated by commas.
        #[arg(long)]
        labels: Option<String>,
    },
}

#[derive(Args)]
struct IhopfArgs {
    file: PathBuf,
    /// Use the named witness from the file.
    #[arg(long, group = "mode")]
    witness: Option<String>,
    /// Use the F = G construction.
    #[arg(long, group = "mode")]
    simple: bool,
    /// Use the scaled construction with these weights.
    #[arg(long, group = "mode", allow_hyphen_values = true)]
    scaled: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Replacement labels for the printed table, separated by commas.
    #[arg(long)]
    labels: Option<String>,
}

enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build_global()
    {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Check { file } => {
            let p = load_presentation(&file)?;
            Ok(print_reports(&verify_all(&p)))
        }
        Command::Dual { file, output } => {
            let file = PresentationFile::load(&file)?;
            let p = file.to_presentation()?;
            let mut out = PresentationFile::from_presentation(&dualize(&p));
            out.note = file.note.map(|n| format!("dual of: {n}"));
            out.save(&output)?;
            Ok(Outcome::Pass)
        }
        Command::Basechange { file, matrix, output } => {
            let file = PresentationFile::load(&file)?;
            let p = file.to_presentation()?;
            let td = TransitionData::new(load_matrix(&matrix)?)?;
            let mut out = PresentationFile::from_presentation(&transform_presentation(&p, &td)?);
            out.note = file.note.clone();
            for (name, w) in &file.witnesses {
                let moved = transport_witness(&DualityWitness::new(w.clone())?, &td)?;
                out.witnesses.insert(name.clone(), moved.matrix().clone());
            }
            out.save(&output)?;
            Ok(Outcome::Pass)
        }
        Command::Selfdual { file, witness } => {
            let file = PresentationFile::load(&file)?;
            let p = file.to_presentation()?;
            let w = named_witness(&file, &witness)?;
            let mut reports = selfdual_reports(&p, &w);
            reports.push(symmetry_report(&w));
            Ok(print_reports(&reports))
        }
        Command::Ihopf(args) => ihopf(args),
        Command::WitnessIso { file, element, order } => {
            let algebra = load_algebra(&file)?;
            let coords = split_list(&element)
                .iter()
                .map(|s| parse_scalar(algebra.field(), s))
                .collect::<Result<Vec<_>, _>>()?;
            if coords.len() != algebra.dim() {
                return Err(Error::DimensionMismatch {
                    expected: algebra.dim(),
                    found: coords.len(),
                });
            }
            let report = verify_cyclic_witness(&algebra, &Element(coords), order)?;
            let commutative = if algebra.is_commutative() {
                AxiomReport::pass("commutative")
            } else {
                let mut r = AxiomReport::pass("commutative");
                r.first_violation = first_noncommuting(&algebra);
                r
            };
            Ok(print_reports(&[commutative, report]))
        }
        Command::Catalog {
            family,
            params,
            field,
            output,
        } => catalog_command(&family, &params, &field, output.as_deref()),
        Command::Table { file, labels } => {
            let file = PresentationFile::load(&file)?;
            let labels = relabel(&file.labels, labels.as_deref())?;
            print!("{}", render_table(&file.mult, &labels));
            Ok(Outcome::Pass)
        }
    }
}

fn ihopf(args: IhopfArgs) -> Result<Outcome, Error> {
    let file = PresentationFile::load(&args.file)?;
    let p = file.to_presentation()?;
    let algebra = if let Some(name) = &args.witness {
        i_construct_general(&p, &named_witness(&file, name)?)?
    } else if args.simple {
        i_construct_simple(&p)?
    } else if let Some(weights) = &args.scaled {
        let w = split_list(weights)
            .iter()
            .map(|s| parse_scalar(p.field(), s))
            .collect::<Result<Vec<_>, _>>()?;
        i_construct_scaled(&p, &w)?
    } else {
        return Err(Error::Parse("choose one of --witness, --simple or --scaled".into()));
    };
    if let Some(out) = &args.output {
        PresentationFile::from_ialgebra(&algebra).save(out)?;
    }
    let labels = relabel(algebra.labels(), args.labels.as_deref())?;
    print!("{}", render_table(algebra.mult(), &labels));
    Ok(Outcome::Pass)
}

fn catalog_command(family: &str, params: &[String], field: &str, output: Option<&Path>) -> Result<Outcome, Error> {
    if family == "list" {
        for (name, about) in catalog::FAMILIES {
            println!("{name:<12} {about}");
        }
        return Ok(Outcome::Pass);
    }
    let field = Field::from_spec(parse_field_spec(field)?)?;
    let file = build_family(family, params, &field)?;
    let text = file.serialize();
    match output {
        Some(path) => file.save(path)?,
        None => print!("{text}"),
    }
    Ok(Outcome::Pass)
}

fn parse_numbers(params: &[String]) -> Result<Vec<u32>, Error> {
    params
        .iter()
        .map(|s| s.parse::<u32>().map_err(|_| Error::Parse(format!("expected a positive integer, found `{s}`"))))
        .collect()
}

fn build_family(family: &str, params: &[String], field: &Field) -> Result<PresentationFile, Error> {
    match family {
        "group" => {
            let factors = parse_numbers(params)?;
            if factors.is_empty() {
                return Err(Error::Parse("group needs at least one cyclic factor".into()));
            }
            let spec = AbelianGroupSpec::new(factors.clone())?;
            let p = catalog::group_algebra(&spec, field)?;
            let names: Vec<String> = factors.iter().map(|f| format!("Z/{f}")).collect();
            let mut file = PresentationFile::from_presentation(&p).with_note(&format!("group algebra of {}", names.join(" x ")));
            if let Ok(w) = catalog::group_selfdual_witness(&spec, field) {
                file = file.with_witness("character", w.matrix().clone());
            }
            Ok(file)
        }
        "taft" => {
            let [n] = parse_numbers(params)?[..] else {
                return Err(Error::Parse("taft takes exactly one parameter n".into()));
            };
            let p = catalog::taft(n as usize, field)?;
            let mut file = PresentationFile::from_presentation(&p).with_note(&format!("Taft algebra H_{n}(q)"));
            if n == 2 {
                file = file.with_witness("phi", catalog::taft2_witness(field)?.matrix().clone());
            }
            Ok(file)
        }
        "tensor-dual" => {
            let (inner, rest) = params
                .split_first()
                .ok_or_else(|| Error::Parse("tensor-dual needs an inner family".into()))?;
            if inner == "tensor-dual" {
                return Err(Error::Parse("tensor-dual cannot be nested".into()));
            }
            let base = build_family(inner, rest, field)?;
            let p = catalog::tensor_with_dual(&base.to_presentation()?)?;
            let note = base.note.unwrap_or_default();
            Ok(PresentationFile::from_presentation(&p).with_note(&format!("A (x) A* for A = {note}")))
        }
        other => Err(Error::Parse(format!("unknown family `{other}`; try `catalog list`"))),
    }
}

fn load_presentation(path: &Path) -> Result<BialgebraPresentation, Error> {
    PresentationFile::load(path)?.to_presentation()
}

fn load_algebra(path: &Path) -> Result<IAlgebra, Error> {
    let file = PresentationFile::load(path)?;
    IAlgebra::new(
        file.labels.clone(),
        file.mult.clone(),
        file.unit.clone(),
        Construction::General,
        path.display().to_string(),
    )
}

fn named_witness(file: &PresentationFile, name: &str) -> Result<DualityWitness, Error> {
    let m = file
        .witness(name)
        .ok_or_else(|| Error::Parse(format!("no witness named `{name}` in the file")))?;
    DualityWitness::new(m.clone())
}

fn symmetry_report(w: &DualityWitness) -> AxiomReport {
    let m = w.matrix();
    let mut report = AxiomReport::pass("symmetric");
    'scan: for r in 0..m.rows() {
        for c in 0..m.cols() {
            if m.get(r, c) != m.get(c, r) {
                report.first_violation = Some(ihopf_core::Violation {
                    indices: vec![r, c],
                    lhs: m.get(r, c).clone(),
                    rhs: m.get(c, r).clone(),
                    detail: None,
                });
                break 'scan;
            }
        }
    }
    report
}

fn first_noncommuting(a: &IAlgebra) -> Option<ihopf_core::Violation> {
    let n = a.dim();
    let t = a.mult();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if t.get(i, j, k) != t.get(j, i, k) {
                    return Some(ihopf_core::Violation {
                        indices: vec![i, j, k],
                        lhs: t.get(i, j, k).clone(),
                        rhs: t.get(j, i, k).clone(),
                        detail: None,
                    });
                }
            }
        }
    }
    None
}

fn print_reports(reports: &[AxiomReport]) -> Outcome {
    for r in reports {
        println!("{r}");
    }
    if all_hold(reports) {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn relabel(current: &[String], replacement: Option<&str>) -> Result<Vec<String>, Error> {
    let Some(text) = replacement else {
        return Ok(current.to_vec());
    };
    let labels: Vec<String> = text.split(',').map(|s| s.trim().to_string()).collect();
    if labels.len() != current.len() {
        return Err(Error::DimensionMismatch {
            expected: current.len(),
            found: labels.len(),
        });
    }
    Ok(labels)
}

/// Splits on `,` or `;` outside square brackets, so cyclotomic scalars
/// such as `[0, 1, 0, 0] @ zeta(8)` stay whole.
fn split_list(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for ch in text.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' | ';' if depth == 0 => {
                out.push(current.trim().to_string());
                current.clear();
                continue;
            }
            _ => {}
        }
        current.push(ch);
    }
    out.push(current.trim().to_string());
    out
}
