//! The `thicket` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid mathematical input,
//! 3 verification mismatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classifier::{
    classification_report, count_thick_formula, enumerate_thick, overview_markdown, overview_table, reduce_criterion,
    CategoryType, InvarianceCriterion, Order,
};
use crate::derived::{brute_force_classify, DerivedModel, ThickDescriptorJson};
use crate::error::Error;
use crate::ncp::{enumerate_nc_a, enumerate_nc_b, enumerate_nc_d, PartitionJson};
use crate::render::{Diagram, DiagramSpec, StripWindow};
use crate::root_coxeter::{DynkinType, RootSystem, Series};
use crate::verify::run_battery;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

/// Default cap on the rank of E types; raise with `THICKET_MAX_RANK`.
pub const DEFAULT_E_CAP: usize = 6;

#[derive(Debug, Parser)]
#[command(name = "thicket", version, about = "Thick subcategories of finite triangulated categories of Dynkin type")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct TypeArgs {
    /// A, D or E
    #[arg(long)]
    pub series: char,
    #[arg(long)]
    pub rank: usize,
    #[arg(long)]
    pub r: u64,
    /// 1, 2, 3 or inf
    #[arg(long, default_value = "1")]
    pub t: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    A,
    B,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Noncrossing-partition criterion
    Nc,
    /// Invariant vertex sets on the translation quiver
    Brute,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of thick subcategories
    Count {
        #[command(flatten)]
        ty: TypeArgs,
        /// Leave out the zero subcategory and the whole category
        #[arg(long)]
        proper: bool,
        #[arg(long)]
        json: bool,
        /// Also enumerate and brute-force; exit 3 on disagreement
        #[arg(long)]
        check: bool,
    },
    /// List noncrossing partitions as JSON lines
    Enumerate {
        #[arg(long, value_enum, ignore_case = true)]
        model: Model,
        #[arg(long)]
        n: usize,
    },
    /// List the thick subcategories
    Classify {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, ignore_case = true, default_value = "nc")]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Write SVG (and ASCII) diagrams
    Render {
        #[command(subcommand)]
        what: RenderCommand,
    },
    /// The overview of classifications
    Table {
        #[arg(long)]
        json: bool,
    },
    /// Run the cross-check battery
    Verify {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum RenderCommand {
    /// Chord diagram of a partition given as JSON
    Circle {
        /// e.g. '{"model":"A","n":4,"blocks":[[1,2],[3],[4]]}'
        #[arg(long)]
        partition: String,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value = "circle")]
        name: String,
        #[arg(long)]
        radius: Option<f64>,
    },
    /// One strip per thick subcategory of the type
    Strip {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 0)]
        m0: i64,
        /// Defaults to three identification widths
        #[arg(long)]
        m1: Option<i64>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value = "strip")]
        name: String,
    },
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Mismatch(String),
    /// The reader went away; not an error.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            Failure::Closed
        } else {
            Failure::Invalid(e.to_string())
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type CmdResult = std::result::Result<(), Failure>;

fn e_cap() -> usize {
    std::env::var("THICKET_MAX_RANK").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_E_CAP)
}

fn category_type(args: &TypeArgs) -> Result<CategoryType, Failure> {
    let series = Series::from_letter(args.series.to_ascii_uppercase())
        .ok_or_else(|| Failure::Invalid(format!("unknown series {}", args.series)))?;
    let delta = DynkinType::new(series, args.rank)?;
    if series == Series::E && args.rank > e_cap() {
        return Err(Failure::Invalid(format!("{delta} is above THICKET_MAX_RANK = {}", e_cap())));
    }
    let t: Order = args.t.parse()?;
    Ok(CategoryType::new(delta, args.r, t)?)
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> CmdResult {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

#[derive(Serialize)]
struct CountJson {
    #[serde(rename = "type")]
    category: CategoryType,
    criterion: InvarianceCriterion,
    count: u128,
    proper: bool,
}

fn cmd_count(out: &mut dyn Write, ty: &TypeArgs, proper: bool, json: bool, check: bool) -> CmdResult {
    let ct = category_type(ty)?;
    let total = match count_thick_formula(&ct) {
        Ok(c) => c,
        Err(Error::NoClosedForm(_)) => enumerate_thick(&ct)?.len() as u128,
        Err(e) => return Err(e.into()),
    };
    let count = if proper { total.saturating_sub(2) } else { total };
    if check {
        let rep = classification_report(&ct)?;
        if json {
            json_line(out, &rep)?;
        } else {
            writeln!(out, "{count}")?;
            writeln!(
                out,
                "formula {}, enumerated {}, brute force {}, same set {}",
                rep.count_formula.map_or("-".to_string(), |c| c.to_string()),
                rep.count_enumerated,
                rep.count_brute_force,
                rep.same_set
            )?;
        }
        if !rep.agree {
            return Err(Failure::Mismatch(format!("{ct}: counts disagree")));
        }
    } else if json {
        json_line(out, &CountJson { category: ct, criterion: reduce_criterion(&ct), count, proper })?;
    } else {
        writeln!(out, "{count}")?;
    }
    Ok(())
}

fn cmd_enumerate(out: &mut dyn Write, model: Model, n: usize) -> CmdResult {
    let lines: Vec<PartitionJson> = match model {
        Model::A => enumerate_nc_a(n).iter().map(PartitionJson::from).collect(),
        Model::B => enumerate_nc_b(n).iter().map(PartitionJson::from).collect(),
        Model::D => {
            let rs = RootSystem::new(DynkinType::new(Series::D, n)?);
            enumerate_nc_d(&rs)?.iter().map(PartitionJson::from).collect()
        }
    };
    for p in &lines {
        json_line(out, p)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassifyJson {
    #[serde(rename = "type")]
    category: CategoryType,
    criterion: InvarianceCriterion,
    count: usize,
    descriptors: Vec<ThickDescriptorJson>,
}

fn cmd_classify(out: &mut dyn Write, ty: &TypeArgs, method: Method, json: bool) -> CmdResult {
    let ct = category_type(ty)?;
    let found = match method {
        Method::Nc => enumerate_thick(&ct)?,
        Method::Brute => brute_force_classify(&ct)?,
    };
    let model = DerivedModel::shared(ct.delta());
    let crit = reduce_criterion(&ct);
    if json {
        let descriptors = found.iter().map(|d| d.to_json(model.root_system(), model.walk(), Some(ct))).collect();
        json_line(out, &ClassifyJson { category: ct, criterion: crit, count: found.len(), descriptors })?;
    } else {
        writeln!(out, "{ct}: {} = {}, {} thick subcategories", crit.name(), crit.s(), found.len())?;
        let rs = model.root_system();
        for d in &found {
            let roots: Vec<&Vec<i64>> = d.roots().iter().map(|&i| &rs.positives()[i]).collect();
            writeln!(out, "  {} roots: {roots:?}", roots.len())?;
        }
    }
    Ok(())
}

fn cmd_render(out: &mut dyn Write, what: &RenderCommand) -> CmdResult {
    match what {
        RenderCommand::Circle { partition, out: dir, name, radius } => {
            let p: PartitionJson = serde_json::from_str(partition)?;
            let diagram = match &p {
                PartitionJson::A { .. } => Diagram::CircleA(p.to_a().expect("model A")?),
                PartitionJson::D { .. } => Diagram::CircleD(p.to_d().expect("model D")?),
                PartitionJson::B { .. } => Diagram::CircleA(p.to_b().expect("model B")?.to_circle()),
            };
            let mut spec = DiagramSpec::new(diagram);
            if let Some(r) = radius {
                spec.circle.radius = *r;
            }
            for path in spec.render()?.write(dir, name)? {
                writeln!(out, "{}", path.display())?;
            }
        }
        RenderCommand::Strip { ty, m0, m1, out: dir, name } => {
            let ct = category_type(ty)?;
            let m1 = m1.unwrap_or(m0 + 3 * ct.r() as i64);
            for (k, descriptor) in enumerate_thick(&ct)?.into_iter().enumerate() {
                let spec = DiagramSpec::new(Diagram::ArStrip {
                    delta: ct.delta(),
                    descriptor,
                    window: StripWindow::new(*m0, m1),
                    width: Some(ct.r()),
                });
                for path in spec.render()?.write(dir, &format!("{name}_{k}"))? {
                    writeln!(out, "{}", path.display())?;
                }
            }
        }
    }
    Ok(())
}

fn cmd_table(out: &mut dyn Write, json: bool) -> CmdResult {
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&overview_table())?)?;
    } else {
        write!(out, "{}", overview_markdown())?;
    }
    Ok(())
}

fn cmd_verify(out: &mut dyn Write, max_rank: usize, json: bool) -> CmdResult {
    let reports = run_battery(max_rank, e_cap())?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?;
    } else {
        for r in &reports {
            if r.passed() {
                writeln!(out, "PASS {} ({} cases)", r.name, r.checked)?;
            } else {
                writeln!(out, "FAIL {} ({} of {} cases)", r.name, r.failures.len(), r.checked)?;
                for f in r.failures.iter().take(5) {
                    writeln!(out, "    {f}")?;
                }
            }
        }
        if failed == 0 {
            writeln!(out, "all checks passed")?;
        } else {
            writeln!(out, "{failed} of {} checks failed", reports.len())?;
        }
    }
    if failed > 0 {
        return Err(Failure::Mismatch(format!("{failed} checks failed")));
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Count { ty, proper, json, check } => cmd_count(out, ty, *proper, *json, *check),
        Command::Enumerate { model, n } => cmd_enumerate(out, *model, *n),
        Command::Classify { ty, method, json } => cmd_classify(out, ty, *method, *json),
        Command::Render { what } => cmd_render(out, what),
        Command::Table { json } => cmd_table(out, *json),
        Command::Verify { max_rank, json } => cmd_verify(out, *max_rank, *json),
    };
    match result {
        Ok(()) | Err(Failure::Closed) => EXIT_OK,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "mismatch: {msg}");
            EXIT_MISMATCH
        }
    }
}
