//! `vmosaic`: command-line front end for virtual knot mosaics.
//!
//! Exit status is 0 on success, 1 when the input is well formed but the
//! answer is negative or a domain error occurs (invalid mosaic, bad code,
//! nothing found), and 2 for usage errors and unreadable or empty input.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use vmosaic_core::{
    build_row, census, eject, fixtures, indexpoly, inject, render, row_number_bound, row_number_upper_bound, surface,
    tile_number_bound, trace, Error, GaussCode, InjectionSite, Mosaic, SearchOptions,
};

#[derive(Parser)]
#[command(name = "vmosaic", version, about = "Virtual knot mosaics: validation, genus, Gauss codes, moves and search")]
struct Cli {
    /// Also write a JSON report to this path (`-` for standard output).
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check tile and boundary consistency.
    Validate { file: PathBuf },
    /// Vertex count, genus and virtual crossings of the closure surface.
    Genus { file: PathBuf },
    /// Trace the diagram: components, crossings, signs and Gauss code.
    Trace { file: PathBuf },
    /// Intersection indices and the index polynomial of a knot mosaic.
    Poly { file: PathBuf },
    /// Build a row mosaic realizing a Gauss code.
    BuildRow {
        code: String,
        /// Write the mosaic here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Insert a band of two rows, two columns, or both.
    Inject(MoveArgs),
    /// Remove a band inserted by an injection.
    Eject(MoveArgs),
    /// Enumerate the knots carried by mosaics of one shape.
    Census {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Keep only mosaics whose surface has this genus.
        #[arg(long)]
        genus: Option<usize>,
        /// Try every pairing of blank boundary edges.
        #[arg(long)]
        blank_pairings: bool,
        /// Largest number of cells to search.
        #[arg(long, default_value_t = vmosaic_core::search::DEFAULT_GUARD)]
        max_area: usize,
    },
    /// Least mosaic area carrying a code, within a bound.
    TileNumber {
        code: String,
        #[arg(long, default_value_t = 8)]
        max_area: usize,
    },
    /// Least row mosaic width carrying a code, within a bound.
    RowNumber {
        code: String,
        #[arg(long, default_value_t = 8)]
        max_width: usize,
    },
    /// Draw a mosaic as ASCII art or SVG.
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Draw the closure with virtual crossings marked (SVG only).
        #[arg(long)]
        closure: bool,
    },
    /// Check the fixture corpus against its manifest.
    FixturesCheck {
        /// Corpus directory holding manifest.txt.
        #[arg(long)]
        root: Option<PathBuf>,
    },
}

#[derive(Args)]
struct MoveArgs {
    file: PathBuf,
    /// Cut below the first I rows.
    #[arg(long, value_name = "I", conflicts_with_all = ["col", "square"])]
    row: Option<usize>,
    /// Cut right of the first J columns.
    #[arg(long, value_name = "J", conflicts_with = "square")]
    col: Option<usize>,
    /// Cut at both.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    square: Option<Vec<usize>>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

impl MoveArgs {
    fn site(&self) -> Option<InjectionSite> {
        match (self.row, self.col, self.square.as_deref()) {
            (Some(i), None, None) => Some(InjectionSite::Row(i)),
            (None, Some(j), None) => Some(InjectionSite::Col(j)),
            (None, None, Some(&[i, j])) => Some(InjectionSite::Square(i, j)),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

/// A failure and the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::EmptyInput | Error::Io(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

/// What a command produced: text for the terminal, JSON for `--json`, and
/// whether the answer was positive.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| usage(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?
    };
    Ok(text)
}

fn load(path: &Path) -> Result<Mosaic, Failure> {
    Ok(Mosaic::parse(&read_input(path)?)?)
}

fn parse_code(text: &str) -> Result<GaussCode, Failure> {
    Ok(text.parse::<GaussCode>()?)
}

fn write_or_print(output: Option<&Path>, text: &str) -> Result<String, Failure> {
    match output {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))?;
            Ok(format!("wrote {}", p.display()))
        }
        None => Ok(text.trim_end().to_string()),
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Validate { file } => {
            let m = load(file)?;
            let report = m.validate();
            Ok(Output { text: report.to_string(), json: serde_json::to_value(&report).unwrap_or(Value::Null), ok: report.is_valid() })
        }
        Command::Genus { file } => {
            let r = surface::genus(&load(file)?)?;
            Ok(Output::ok(
                format!("v={} genus={} virtual_crossings={}", r.v_d, r.genus, r.virtual_crossings),
                serde_json::to_value(r).unwrap_or(Value::Null),
            ))
        }
        Command::Trace { file } => {
            let t = trace::trace(&load(file)?)?;
            let signs: Vec<String> = t.signs.iter().map(|s| s.symbol().to_string()).collect();
            let mut text = format!("components={} crossings={}\nsigns: {}", t.components(), t.crossing_count(), signs.join(" "));
            if let Some(code) = &t.gauss {
                text.push_str(&format!("\ngauss: {code}\ncanonical: {}", code.canonicalize(false)));
            }
            Ok(Output::ok(text, serde_json::to_value(&t).unwrap_or(Value::Null)))
        }
        Command::Poly { file } => {
            let r = indexpoly::index_report(&load(file)?)?;
            let indices: Vec<String> = r.indices().iter().map(i64::to_string).collect();
            Ok(Output::ok(
                format!("{}\n{}", indices.join(" "), r.polynomial),
                json!({
                    "crossings": r.crossings,
                    "indices": r.indices(),
                    "polynomial": r.polynomial.to_string(),
                }),
            ))
        }
        Command::BuildRow { code, output } => {
            let m = build_row(&parse_code(code)?)?;
            let text = m.serialize();
            Ok(Output::ok(
                write_or_print(output.as_deref(), &text)?,
                json!({ "width": m.cols(), "mosaic": text }),
            ))
        }
        Command::Inject(args) | Command::Eject(args) => {
            let site = args.site().ok_or_else(|| usage("give exactly one of --row, --col or --square"))?;
            let m = load(&args.file)?;
            let out = if matches!(cli.command, Command::Inject(_)) { inject(&m, site)? } else { eject(&m, site)? };
            let text = out.serialize();
            Ok(Output::ok(
                write_or_print(args.output.as_deref(), &text)?,
                json!({ "site": site.to_string(), "rows": out.rows(), "cols": out.cols(), "mosaic": text }),
            ))
        }
        Command::Census { rows, cols, genus, blank_pairings, max_area } => {
            let opts = SearchOptions {
                genus: *genus,
                blank_pairings: *blank_pairings,
                guard: *max_area,
                ..SearchOptions::knots()
            };
            let entries = census(*rows, *cols, &opts)?;
            let mut text = format!("{} entries", entries.len());
            for e in &entries {
                text.push_str(&format!("\n{} g={} {}", e.crossings, e.genus, e.code));
            }
            Ok(Output::ok(text, serde_json::to_value(&entries).unwrap_or(Value::Null)))
        }
        Command::TileNumber { code, max_area } => {
            let (area, m) = tile_number_bound(&parse_code(code)?, *max_area)?;
            Ok(Output::ok(
                format!("tile number <= {area} ({}x{})\n{}", m.rows(), m.cols(), m.serialize().trim_end()),
                json!({ "area": area, "rows": m.rows(), "cols": m.cols(), "mosaic": m.serialize() }),
            ))
        }
        Command::RowNumber { code, max_width } => {
            let code = parse_code(code)?;
            let upper = row_number_upper_bound(&code)?;
            let (width, m) = row_number_bound(&code, *max_width)?;
            Ok(Output::ok(
                format!("row number = {width} within width {max_width} (builder gives {upper})\n{}", m.serialize().trim_end()),
                json!({ "width": width, "builder_width": upper, "mosaic": m.serialize() }),
            ))
        }
        Command::Render { file, format, closure } => {
            let m = load(file)?;
            let text = match format {
                Format::Ascii if *closure => return Err(usage("--closure needs --format svg")),
                Format::Ascii => render::render_ascii(&m),
                Format::Svg => render::render_svg(&m, *closure)?,
            };
            Ok(Output::ok(text.trim_end().to_string(), json!({ "format": if matches!(format, Format::Svg) { "svg" } else { "ascii" }, "output": text })))
        }
        Command::FixturesCheck { root } => {
            let root = root.clone().unwrap_or_else(default_fixture_root);
            let report = fixtures::check_fixtures(&root)?;
            let mut text = format!("checked {} fixtures, {} problems", report.checked, report.problems.len());
            for p in &report.problems {
                text.push_str(&format!("\n{p}"));
            }
            let problems: Vec<String> = report.problems.iter().map(|p| p.to_string()).collect();
            Ok(Output { text, json: json!({ "checked": report.checked, "problems": problems }), ok: report.is_ok() })
        }
    }
}

/// `fixtures/` in the working directory if present, else the corpus the
/// binary was built from.
fn default_fixture_root() -> PathBuf {
    let local = PathBuf::from("fixtures");
    if local.join("manifest.txt").exists() {
        local
    } else {
        fixtures::default_root()
    }
}

/// Prints a line, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            if let Some(path) = &cli.json {
                let body = serde_json::to_string_pretty(&out.json).unwrap_or_default();
                if path == Path::new("-") {
                    emit(&body);
                } else if let Err(e) = std::fs::write(path, body + "\n") {
                    eprintln!("vmosaic: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if cli.json.as_deref() != Some(Path::new("-")) {
                emit(&out.text);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("vmosaic: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
