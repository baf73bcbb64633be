use std::fs;
use std::io::{self, Read, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use chained_rooks::asm::{visit_chained_asm, ChainedAsm, Limits};
use chained_rooks::counting::{count_max_circular, count_max_linear, count_placements_formula};
use chained_rooks::io::{
    convert, render, render_chain_graph, render_grid_graph, verify_tables, Document, Family, Form, Format, Status,
    VerifyOptions,
};
use chained_rooks::placements::{
    build_chain_graph, count_placements_brute, visit_placements, ChainedPermutation, OneLine, RookPlacement,
};
use chained_rooks::views::build_grid_graph;
use chained_rooks::{BoardSpec, Error, Shape};

#[derive(Parser)]
#[command(name = "chained-rooks", version, about = "Rook placements and alternating sign matrices on chained chessboards")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Linear,
    Circular,
}

impl From<ShapeArg> for Shape {
    fn from(s: ShapeArg) -> Self {
        match s {
            ShapeArg::Linear => Shape::Linear,
            ShapeArg::Circular => Shape::Circular,
        }
    }
}

#[derive(clap::Args)]
struct BoardArgs {
    #[arg(long, value_enum)]
    shape: ShapeArg,
    #[arg(short)]
    n: usize,
    #[arg(short)]
    k: usize,
}

impl BoardArgs {
    fn spec(&self) -> Result<BoardSpec, Error> {
        BoardSpec::new(self.shape.into(), self.n, self.k)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Closed,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumFamily {
    Placements,
    Perms,
    Asm,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphArg {
    Chain,
    Grid,
}

#[derive(Subcommand)]
enum Command {
    /// Number of non-attacking placements of m rooks.
    Count {
        #[command(flatten)]
        board: BoardArgs,
        /// Defaults to the maximum number of rooks.
        #[arg(short)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value = "formula")]
        method: Method,
    },
    /// Writes every object as a canonical document, one after another.
    Enumerate {
        #[arg(long, value_enum)]
        family: EnumFamily,
        #[command(flatten)]
        board: BoardArgs,
        /// Placements only; defaults to the maximum.
        #[arg(short)]
        m: Option<usize>,
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Converts a document between descriptions of the same object.
    Convert {
        #[arg(long, value_parser = parse_form)]
        from: Form,
        #[arg(long, value_parser = parse_form)]
        to: Form,
        /// Reads standard input when absent.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Checks a document and prints its diagnostics.
    Validate {
        #[arg(long)]
        family: Option<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Draws a document, or a whole graph when --graph is given.
    Render {
        #[arg(long, value_enum)]
        format: FormatArg,
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, requires_all = ["shape", "n", "k"])]
        graph: Option<GraphArg>,
        #[arg(long, value_enum)]
        shape: Option<ShapeArg>,
        #[arg(short)]
        n: Option<usize>,
        #[arg(short)]
        k: Option<usize>,
    },
    /// Recounts the known chained ASM numbers and writes a TSV report.
    VerifyTables {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 9)]
        max_k: usize,
        #[arg(long, default_value_t = 60.0)]
        budget_seconds: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_form(s: &str) -> Result<Form, String> {
    s.parse().map_err(|_| {
        let all: Vec<&str> = Form::ALL.iter().map(|f| f.as_str()).collect();
        format!("expected one of {}", all.join(", "))
    })
}

/// Failure with its exit code: 1 for bad input data or a mismatch, 2 for
/// a request that makes no sense.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) | Error::Unsupported(_) => 2,
            _ => 1,
        };
        Failure(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(1, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(2, msg.into())
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    Ok(match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure(1, format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    })
}

fn read_document(path: &Option<PathBuf>) -> Result<Document, Failure> {
    Ok(Document::deserialize(&read_input(path)?)?)
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(
            fs::File::create(p).map_err(|e| Failure(1, format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn count(board: &BoardSpec, m: Option<usize>, method: Method) -> Result<(), Failure> {
    let max = board.max_rooks();
    let m = m.unwrap_or(max);
    let c = match method {
        Method::Formula => count_placements_formula(board, m)?,
        Method::Brute => count_placements_brute(board, m)?,
        Method::Closed if m != max => {
            return Err(usage(format!("--method closed needs m = {max}, the maximum for {board}")))
        }
        Method::Closed => match board.shape() {
            Shape::Linear => count_max_linear(board.n(), board.k())?,
            Shape::Circular => count_max_circular(board.n(), board.k())?,
        },
    };
    println!("{c}");
    Ok(())
}

fn enumerate(
    family: EnumFamily,
    board: &BoardSpec,
    m: Option<usize>,
    limit: Option<u64>,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    let mut w = output(out)?;
    let mut written = 0u64;
    let mut failed: Option<Failure> = None;
    let mut emit = |doc: Document| {
        if limit.is_some_and(|l| written >= l) {
            return ControlFlow::Break(());
        }
        if let Err(e) = w.write_all(doc.serialize().as_bytes()) {
            failed = Some(e.into());
            return ControlFlow::Break(());
        }
        written += 1;
        ControlFlow::Continue(())
    };
    match family {
        EnumFamily::Placements | EnumFamily::Perms => {
            let perms = matches!(family, EnumFamily::Perms);
            if perms && m.is_some_and(|m| m != board.max_rooks()) {
                return Err(usage("chained permutations always have the maximum number of rooks"));
            }
            visit_placements(board, m.unwrap_or(board.max_rooks()), |sq| {
                let p = RookPlacement::new(*board, sq.to_vec()).expect("squares come from the board");
                if perms {
                    emit(ChainedPermutation::from_placement(&p).expect("maximum placement").into())
                } else {
                    emit(p.into())
                }
            })?;
        }
        EnumFamily::Asm => {
            if m.is_some() {
                return Err(usage("-m applies to placements only"));
            }
            visit_chained_asm(board, Limits::default(), |cells| {
                emit(ChainedAsm::from_flat(board, cells).into())
            })?;
        }
    }
    if let Some(f) = failed {
        return Err(f);
    }
    w.flush()?;
    eprintln!("{written} objects");
    Ok(())
}

fn convert_cmd(from: Form, to: Form, input: &Option<PathBuf>) -> Result<(), Failure> {
    let text = read_input(input)?;
    // a bare one-line string is accepted as well as a document
    let doc = if from == Form::OneLine && !text.trim_start().starts_with('{') {
        Document::OneLine(text.trim().parse::<OneLine>()?)
    } else {
        Document::deserialize(&text)?
    };
    if Form::of(&doc) != Some(from) {
        return Err(usage(format!("--from {from} does not accept a {} document", doc.family())));
    }
    let v = doc.validate();
    if !v.is_valid() {
        for d in &v.diagnostics {
            eprintln!("{d}");
        }
        return Err(Failure(1, format!("input {} is invalid", doc.family())));
    }
    print!("{}", convert(&doc, to)?.serialize());
    Ok(())
}

fn validate(family: &Option<String>, input: &Option<PathBuf>) -> Result<(), Failure> {
    let doc = read_document(input)?;
    if let Some(f) = family {
        let f: Family = f.parse().map_err(|e: Error| usage(e.to_string()))?;
        if f != doc.family() {
            return Err(Failure(1, format!("expected a {f} document, found {}", doc.family())));
        }
    }
    let v = doc.validate();
    if v.is_valid() {
        println!("valid {}", doc.family());
        Ok(())
    } else {
        for d in &v.diagnostics {
            eprintln!("{d}");
        }
        Err(Failure(1, format!("invalid {}: {} problems", doc.family(), v.diagnostics.len())))
    }
}

fn render_cmd(
    format: FormatArg,
    input: &Option<PathBuf>,
    graph: Option<GraphArg>,
    board: Option<(ShapeArg, usize, usize)>,
) -> Result<(), Failure> {
    let format = match format {
        FormatArg::Ascii => Format::Ascii,
        FormatArg::Dot => Format::Dot,
    };
    let text = match (graph, board) {
        (Some(g), Some((shape, n, k))) => {
            if format != Format::Dot {
                return Err(usage("graphs render as dot only"));
            }
            let b = BoardSpec::new(shape.into(), n, k)?;
            match g {
                GraphArg::Chain => render_chain_graph(&build_chain_graph(&b)),
                GraphArg::Grid => render_grid_graph(&build_grid_graph(&b)?),
            }
        }
        _ => render(&read_document(input)?, format)?,
    };
    print!("{text}");
    Ok(())
}

fn verify(max_n: usize, max_k: usize, budget_seconds: f64, out: &Option<PathBuf>) -> Result<(), Failure> {
    if !budget_seconds.is_finite() || budget_seconds <= 0.0 {
        return Err(usage("--budget-seconds must be positive"));
    }
    let report = verify_tables(&VerifyOptions {
        max_n,
        max_k,
        budget_seconds,
    })?;
    let mut w = output(out)?;
    w.write_all(report.to_tsv().as_bytes())?;
    w.flush()?;
    for r in report.records.iter().filter(|r| r.status == Status::Skipped) {
        eprintln!("skipped {} {}: over the {budget_seconds}s budget", r.family, r.board);
    }
    eprintln!(
        "{} passed, {} failed, {} skipped",
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::Skipped)
    );
    if report.passed() {
        Ok(())
    } else {
        Err(Failure(1, "some entries do not match".into()))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Count { board, m, method } => count(&board.spec()?, m, method),
        Command::Enumerate {
            family,
            board,
            m,
            limit,
            out,
        } => enumerate(family, &board.spec()?, m, limit, &out),
        Command::Convert { from, to, input } => convert_cmd(from, to, &input),
        Command::Validate { family, input } => validate(&family, &input),
        Command::Render {
            format,
            input,
            graph,
            shape,
            n,
            k,
        } => {
            let board = match (shape, n, k) {
                (Some(s), Some(n), Some(k)) => Some((s, n, k)),
                _ => None,
            };
            render_cmd(format, &input, graph, board)
        }
        Command::VerifyTables {
            max_n,
            max_k,
            budget_seconds,
            out,
        } => verify(max_n, max_k, budget_seconds, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
