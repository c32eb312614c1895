//! The `distset` command line. [`run`] returns the process exit code:
//! 0 success, 1 a table row failed certification, 2 invalid input,
//! 3 a computed solution failed re-certification, 4 `mydim` above the bound.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use distset_core::atlas::{mydim_bounded, seed_level, step, AtlasEntry, AtlasSummary, Executor};
use distset_core::exact::Mode;
use distset_core::graph::{decode, decode_auto};

use crate::catalog::{self, CatalogWriter, Header};
use crate::exec::Rayon;
use crate::fixtures;
use crate::table::{rows, rows_tsv, summary_rows, summary_tsv};
use crate::verify::{recertify, verify_row};
use crate::DistsetError;

#[derive(Debug, Parser)]
#[command(name = "distset", version, about = "Classify two-distance sets through candidate Gram matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the level-by-level search and write a catalog and tables.
    Classify(RunConfig),
    /// Certify the built-in table rows, or rows from a JSON file.
    Verify(VerifyArgs),
    /// Smallest dimension in which a graph is a two-distance set.
    Mydim(MydimArgs),
    /// Emit rows or the summary of an existing catalog.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Spherical,
    General,
    Both,
}

impl ModeArg {
    fn modes(self) -> &'static [Mode] {
        match self {
            ModeArg::Spherical => &[Mode::Spherical],
            ModeArg::General => &[Mode::General],
            ModeArg::Both => &[Mode::General, Mode::Spherical],
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            ModeArg::Spherical => "spherical",
            ModeArg::General => "general",
            ModeArg::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Debug, Args)]
pub struct RunConfig {
    #[arg(long, default_value_t = 4)]
    pub dim: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Both)]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 6)]
    pub seed_n: usize,
    #[arg(long, default_value_t = 11)]
    pub max_n: usize,
    #[arg(long, env = "DISTSET_JOBS", default_value_t = 1)]
    pub jobs: usize,
    /// Output directory.
    #[arg(long, default_value = "distset-out")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Continue from the completed levels of an existing catalog.
    #[arg(long)]
    pub resume: bool,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), DistsetError> {
        let bad = |m: String| Err(DistsetError::Config(m));
        if !(1..=6).contains(&self.dim) {
            return bad(format!("--dim must be in 1..=6, got {}", self.dim));
        }
        if self.seed_n < 2 || self.seed_n > distset_core::graph::MAX_ENUM_ORDER {
            return bad(format!("--seed-n must be in 2..={}, got {}", distset_core::graph::MAX_ENUM_ORDER, self.seed_n));
        }
        if self.seed_n > self.max_n || self.max_n > 12 {
            return bad(format!("need seed-n <= max-n <= 12, got {} and {}", self.seed_n, self.max_n));
        }
        if self.jobs == 0 {
            return bad("--jobs must be at least 1".into());
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    /// JSON array of rows in the built-in fixture format.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long, default_value_t = 4)]
    pub dim: usize,
    /// Skip recomputing the `mydim` values stated in remarks.
    #[arg(long)]
    pub skip_mydim: bool,
}

#[derive(Clone, Debug, Args)]
pub struct MydimArgs {
    pub code: String,
    /// Order of the graph; inferred from the code length if omitted.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub max_dim: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Summary,
    Rows,
}

#[derive(Clone, Debug, Args)]
pub struct TableArgs {
    pub catalog: PathBuf,
    #[arg(long, value_enum, default_value_t = Which::Rows)]
    pub which: Which,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
}

/// Parse `args` (including the program name) and run.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Classify(cfg) => classify(&cfg, out),
        Command::Verify(args) => cmd_verify(&args, out),
        Command::Mydim(args) => cmd_mydim(&args, out),
        Command::Table(args) => cmd_table(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                DistsetError::Certification(_) => 3,
                _ => 2,
            }
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), DistsetError> {
    fs::write(path, text).map_err(DistsetError::io(path))
}

fn out_write(out: &mut dyn Write, text: &str) -> Result<(), DistsetError> {
    out.write_all(text.as_bytes()).map_err(DistsetError::io("<stdout>"))
}

fn emit(entries: &[AtlasEntry], summary: &AtlasSummary, which: Which, format: Format) -> Result<String, DistsetError> {
    Ok(match (which, format) {
        (Which::Rows, Format::Tsv) => rows_tsv(&rows(entries)),
        (Which::Rows, Format::Json) => serde_json::to_string_pretty(&rows(entries))? + "\n",
        (Which::Summary, Format::Tsv) => summary_tsv(summary),
        (Which::Summary, Format::Json) => serde_json::to_string_pretty(&summary_rows(summary))? + "\n",
    })
}

fn solve_level(
    exec: &impl Executor,
    cfg: &RunConfig,
    mode: Mode,
    n: usize,
    prev: &[AtlasEntry],
) -> Result<Vec<AtlasEntry>, DistsetError> {
    let level = if n == cfg.seed_n {
        seed_level(n, cfg.dim, mode, exec)?
    } else if prev.iter().any(|e| e.survived) {
        step(prev, cfg.dim, mode, exec)?
    } else {
        Vec::new()
    };
    let checks = exec.map(&level, &|e| recertify(e, cfg.dim));
    if let Some(msg) = checks.into_iter().find_map(Result::err) {
        return Err(DistsetError::Certification(msg));
    }
    Ok(level)
}

pub fn classify(cfg: &RunConfig, out: &mut dyn Write) -> Result<u8, DistsetError> {
    cfg.validate()?;
    fs::create_dir_all(&cfg.out).map_err(DistsetError::io(&cfg.out))?;
    let path = cfg.out.join("catalog.jsonl");
    let header = Header { d: cfg.dim, mode: cfg.mode.as_str().into(), seed_n: cfg.seed_n, version: catalog::VERSION.into() };
    let (mut writer, done) = if cfg.resume && path.exists() {
        let (w, c) = CatalogWriter::resume(&path)?;
        if (c.header.d, c.header.mode.as_str(), c.header.seed_n) != (header.d, header.mode.as_str(), header.seed_n) {
            return Err(DistsetError::Config(format!("{} was written with a different configuration", path.display())));
        }
        (w, Some(c))
    } else {
        (CatalogWriter::create(&path, &header)?, None)
    };
    let exec = Rayon::new(cfg.jobs).map_err(|e| DistsetError::Config(e.to_string()))?;

    let mut all: Vec<AtlasEntry> = done.as_ref().map(|c| c.entries.clone()).unwrap_or_default();
    for &mode in cfg.mode.modes() {
        let (mut n, mut prev) = match done.as_ref().and_then(|c| c.last_level(mode)) {
            Some((n, entries)) => (n + 1, entries),
            None => (cfg.seed_n, Vec::new()),
        };
        while n <= cfg.max_n {
            let level = solve_level(&exec, cfg, mode, n, &prev)?;
            writer.write_level(mode, n, &level)?;
            all.extend(level.iter().cloned());
            prev = level;
            n += 1;
        }
    }
    all.retain(|e| e.n <= cfg.max_n);
    all.sort_by(|x, y| (x.n, x.mode, &x.class_key).cmp(&(y.n, y.mode, &y.class_key)));
    let summary = AtlasSummary::from_entries(cfg.dim, cfg.seed_n..=cfg.max_n, &all);
    let ext = match cfg.format {
        Format::Tsv => "tsv",
        Format::Json => "json",
    };
    let summary_text = emit(&all, &summary, Which::Summary, cfg.format)?;
    write_file(&cfg.out.join(format!("summary.{ext}")), &summary_text)?;
    write_file(&cfg.out.join(format!("rows.{ext}")), &emit(&all, &summary, Which::Rows, cfg.format)?)?;
    out_write(out, &summary_text)?;
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<u8, DistsetError> {
    let rows = match &args.file {
        Some(p) => fixtures::load(p)?,
        None => fixtures::builtin(),
    };
    let mut failed = Vec::new();
    for row in &rows {
        let r = verify_row(row, args.dim, !args.skip_mydim)?;
        let status = if r.pass() { "PASS" } else { "FAIL" };
        let mut line = format!("{status}\ttable {}\t{}\t{}", r.table, r.label, row.printed);
        for p in &r.points {
            line.push_str(&format!("\t({}, {}) rank {}", p.a, p.b, p.report.rank));
            if !p.valid {
                line.push_str(&format!(" [{:?}]", p.report));
            }
        }
        line.push('\n');
        for note in &r.notes {
            line.push_str(&format!("\tnote: {note}\n"));
        }
        out_write(out, &line)?;
        if !r.pass() {
            failed.push(r.label.clone());
        }
    }
    out_write(out, &format!("{} of {} rows certified\n", rows.len() - failed.len(), rows.len()))?;
    if failed.is_empty() {
        Ok(0)
    } else {
        out_write(out, &format!("failing rows: {}\n", failed.join(", ")))?;
        Ok(1)
    }
}

fn cmd_mydim(args: &MydimArgs, out: &mut dyn Write) -> Result<u8, DistsetError> {
    let g = match args.n {
        Some(n) => decode(&args.code, n)?,
        None => decode_auto(&args.code)?,
    };
    let n = g.order();
    if g.is_complete() || g.is_empty() {
        // a single distance: the regular simplex
        out_write(out, &format!("{}\n", n - 1))?;
        return Ok(if args.max_dim.is_some_and(|m| m < n - 1) { 4 } else { 0 });
    }
    let bound = args.max_dim.unwrap_or(n - 1);
    match mydim_bounded(&g, bound)? {
        Some(d) => {
            out_write(out, &format!("{d}\n"))?;
            Ok(0)
        }
        None => {
            out_write(out, &format!(">= {}\n", bound + 1))?;
            Ok(4)
        }
    }
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Result<u8, DistsetError> {
    let (c, _) = catalog::read(&args.catalog)?;
    let orders = match (c.entries.iter().map(|e| e.n).min(), c.levels.iter().map(|l| l.n).max()) {
        (Some(lo), Some(hi)) => lo..=hi,
        _ => c.header.seed_n..=c.header.seed_n,
    };
    let summary = AtlasSummary::from_entries(c.header.d, orders, &c.entries);
    out_write(out, &emit(&c.entries, &summary, args.which, args.format)?)?;
    Ok(0)
}
