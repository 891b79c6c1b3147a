//! The `parity-rna` command line.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a counterexample, 2 on
//! usage, parse or I/O errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::graph::{
    enumerate_connected_labeled, generate, parse_graph6, read_graph6, write_graph6, Family,
    FamilySpec, Graph, MAX_ENUMERATION_ORDER,
};
use crate::parity::{spectrum, Spectrum, SPECTRUM_SOFT_LIMIT};
use crate::signed::{signature_from_partition, ParityPartition};
use crate::solver::{
    default_start, rna_descent_with_restarts, rna_exact_bnb, rna_exact_bruteforce,
    rna_switch_descent, upper_bound_main, upper_bound_trivial, Method, RnaResult,
};
use crate::verify::{
    classify_family, family_memberships, parse_checks, run_corpus, CorpusSource, FamilyTag,
    JsonRecord,
};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "parity-rna",
    version,
    about = "rna numbers and spectra of parity signed graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum number of negative edges over parity signatures.
    Rna(RnaArgs),
    /// All achievable negative-edge counts.
    Spectrum(ReportArgs),
    /// Named-family recognition.
    Classify(ReportArgs),
    /// Check the theorems over a corpus.
    Verify(VerifyArgs),
    /// Emit a named family member.
    Gen(GenArgs),
    /// Re-encode graphs.
    Convert(ConvertArgs),
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// graph6 file, or `g6:STRING` for a single inline graph.
    #[arg(long, short)]
    pub input: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct RnaArgs {
    #[command(flatten)]
    pub input: InputArg,
    #[arg(long, value_enum, default_value_t = Method::Bnb)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Seed for randomized descent restarts.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of randomized descent restarts (needs --seed, defaults to 8).
    #[arg(long, requires = "seed")]
    pub restarts: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub input: InputArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyFormat {
    Table,
    /// One JSON object per graph per check; the summary goes to stderr.
    Json,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["input", "enumerate"])))]
pub struct VerifyArgs {
    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all")]
    pub checks: String,
    /// graph6 corpus file.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Every connected labeled graph on 1..=N vertices.
    #[arg(long, value_name = "N")]
    pub enumerate: Option<usize>,
    /// Skip graphs with more vertices than this.
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = VerifyFormat::Table)]
    pub format: VerifyFormat,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    /// Print an edge list instead of graph6.
    #[arg(long)]
    pub edges: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    G6,
    Edges,
    /// graph6 line followed by the negative edges of a parity signature.
    Signed,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[command(flatten)]
    pub input: InputArg,
    #[arg(long)]
    pub to: Target,
    /// Parity-partition for `--to signed`, e.g. `v1=0,2;v2=1,3`. Defaults to
    /// a minimum one.
    #[arg(long)]
    pub partition: Option<ParityPartition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RnaRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub method: Method,
    pub sigma: usize,
    pub witness: ParityPartition,
    pub trivial_bound: usize,
    pub main_bound: usize,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    #[serde(with = "as_text")]
    pub spectrum: Spectrum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub family: FamilyTag,
    /// Every matching tag, `|`-separated.
    pub memberships: String,
}

mod as_text {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Graphs named by an `--input` value.
pub fn load_input(spec: &str) -> Result<Vec<Graph>> {
    if let Some(inline) = spec.strip_prefix("g6:") {
        return Ok(vec![parse_graph6(inline.as_bytes())?]);
    }
    let path = PathBuf::from(spec);
    let file = File::open(&path).map_err(|source| Error::File { path, source })?;
    read_graph6(BufReader::new(file))
        .map(|r| r.map(|(_, g)| g))
        .collect()
}

fn encode(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| g.to_edge_list())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Rna(a) => cmd_rna(a, out),
        Command::Spectrum(a) => cmd_spectrum(a, out, err),
        Command::Classify(a) => cmd_classify(a, out),
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Gen(a) => cmd_gen(a, out),
        Command::Convert(a) => cmd_convert(a, out),
    }
}

fn solve(g: &Graph, args: &RnaArgs) -> Result<RnaResult> {
    Ok(match args.method {
        Method::Bruteforce => rna_exact_bruteforce(g),
        Method::Bnb => rna_exact_bnb(g),
        Method::Descent => match args.seed {
            Some(seed) => rna_descent_with_restarts(g, args.restarts.unwrap_or(8), seed),
            None => rna_switch_descent(g, &default_start(g.order()))?,
        },
    })
}

fn cmd_rna(args: RnaArgs, out: &mut dyn Write) -> Result<i32> {
    let graphs = load_input(&args.input.input)?;
    let rows = graphs
        .iter()
        .map(|g| {
            let r = solve(g, &args)?;
            Ok(RnaRow {
                graph6: encode(g),
                n: g.order(),
                m: g.size(),
                method: r.method,
                sigma: r.value,
                witness: r.witness,
                trivial_bound: upper_bound_trivial(g.order()),
                main_bound: upper_bound_main(g.size(), g.order()),
                nodes: r.nodes_explored,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    emit(
        &rows,
        args.format,
        out,
        |r| {
            vec![
                r.graph6.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.method.to_string(),
                r.sigma.to_string(),
                r.witness.to_string(),
                r.trivial_bound.to_string(),
                r.main_bound.to_string(),
            ]
        },
        &[
            "graph6", "n", "m", "method", "sigma", "witness", "trivial", "main",
        ],
    )?;
    Ok(EXIT_OK)
}

fn cmd_spectrum(args: ReportArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let graphs = load_input(&args.input.input)?;
    let mut rows = Vec::with_capacity(graphs.len());
    for g in &graphs {
        if g.order() > SPECTRUM_SOFT_LIMIT {
            writeln!(
                err,
                "warning: spectrum of a graph on {} vertices enumerates every parity-partition",
                g.order()
            )?;
        }
        rows.push(SpectrumRow {
            graph6: encode(g),
            n: g.order(),
            m: g.size(),
            spectrum: spectrum(g)?,
        });
    }
    emit(
        &rows,
        args.format,
        out,
        |r| {
            vec![
                r.graph6.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.spectrum.to_string(),
            ]
        },
        &["graph6", "n", "m", "spectrum"],
    )?;
    Ok(EXIT_OK)
}

fn cmd_classify(args: ReportArgs, out: &mut dyn Write) -> Result<i32> {
    let graphs = load_input(&args.input.input)?;
    let rows: Vec<ClassifyRow> = graphs
        .iter()
        .map(|g| {
            let tags: Vec<&str> = family_memberships(g).iter().map(|t| t.name()).collect();
            ClassifyRow {
                graph6: encode(g),
                n: g.order(),
                m: g.size(),
                family: classify_family(g),
                memberships: tags.join("|"),
            }
        })
        .collect();
    emit(
        &rows,
        args.format,
        out,
        |r| {
            vec![
                r.graph6.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.family.name().to_string(),
                r.memberships.clone(),
            ]
        },
        &["graph6", "n", "m", "family", "memberships"],
    )?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let checks = parse_checks(&args.checks)?;
    let source = match (args.input, args.enumerate) {
        (Some(path), _) => CorpusSource::File(path),
        (None, Some(max_n)) => {
            if max_n == 0 || max_n > MAX_ENUMERATION_ORDER {
                return Err(Error::EnumerationTooLarge {
                    n: max_n,
                    max: MAX_ENUMERATION_ORDER,
                });
            }
            // Fail fast on the cap before any output.
            enumerate_connected_labeled(max_n)?;
            CorpusSource::Enumerate { max_n }
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    let report = match args.format {
        VerifyFormat::Table => {
            let report = run_corpus(&source, &checks, args.max_n, None)?;
            out.write_all(report.render_table().as_bytes())?;
            report
        }
        VerifyFormat::Json => {
            let mut io_err = None;
            let mut sink = |r: &JsonRecord| {
                if io_err.is_some() {
                    return;
                }
                let line = serde_json::to_string(r).expect("record serializes");
                if let Err(e) = writeln!(out, "{line}") {
                    io_err = Some(e);
                }
            };
            let report = run_corpus(&source, &checks, args.max_n, Some(&mut sink))?;
            if let Some(e) = io_err {
                return Err(e.into());
            }
            err.write_all(report.render_table().as_bytes())?;
            report
        }
    };
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    })
}

fn cmd_gen(args: GenArgs, out: &mut dyn Write) -> Result<i32> {
    let g = generate(FamilySpec::new(args.family, args.n)?);
    if args.edges {
        writeln!(out, "{}", g.to_edge_list())?;
    } else {
        writeln!(out, "{}", write_graph6(&g)?)?;
    }
    Ok(EXIT_OK)
}

fn cmd_convert(args: ConvertArgs, out: &mut dyn Write) -> Result<i32> {
    for g in load_input(&args.input.input)? {
        match args.to {
            Target::G6 => writeln!(out, "{}", write_graph6(&g)?)?,
            Target::Edges => writeln!(out, "{}", g.to_edge_list())?,
            Target::Signed => {
                let p = match args.partition {
                    Some(p) => p,
                    None => rna_exact_bnb(&g).witness,
                };
                let s = signature_from_partition(&g, &p)?;
                writeln!(out, "{}", s.to_text()?)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn emit<R: Serialize>(
    rows: &[R],
    format: Format,
    out: &mut dyn Write,
    cells: impl Fn(&R) -> Vec<String>,
    header: &[&str],
) -> Result<()> {
    match format {
        Format::Json => {
            for r in rows {
                let line = serde_json::to_string(r).expect("row serializes");
                writeln!(out, "{line}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r).map_err(csv_io)?;
            }
            w.flush()?;
        }
        Format::Table => {
            let body: Vec<Vec<String>> = rows.iter().map(cells).collect();
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in &body {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.len());
                }
            }
            let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
            for row in std::iter::once(&header).chain(&body) {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                writeln!(out, "{}", line.join("  ").trim_end())?;
            }
        }
    }
    Ok(())
}

fn csv_io(e: csv::Error) -> Error {
    Error::Io(io::Error::other(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("parity-rna").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn rna_inline() {
        let (code, out, _) = call(&[
            "rna", "--input", "g6:C~", "--method", "bnb", "--format", "csv",
        ]);
        assert_eq!(code, 0);
        let mut rdr = csv::Reader::from_reader(out.as_bytes());
        let rows: Vec<RnaRow> = rdr.deserialize().map(|r| r.unwrap()).collect();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].sigma, 4);
        assert_eq!(rows[0].trivial_bound, 4);

        let (code, out, _) = call(&[
            "rna",
            "-i",
            "g6:Bg",
            "--method",
            "bruteforce",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        let row: RnaRow = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(row.sigma, 1);
        assert_eq!(row.method, Method::Bruteforce);
    }

    #[test]
    fn missing_file_is_usage_error() {
        let (code, _, err) = call(&["rna", "--input", "/no/such/file.g6"]);
        assert_eq!(code, 2);
        assert!(err.contains("/no/such/file.g6"));
    }

    #[test]
    fn gen_examples() {
        assert_eq!(call(&["gen", "--family", "complete", "--n", "4"]).1, "C~\n");
        assert_eq!(call(&["gen", "--family", "star", "--n", "4"]).1, "Cs\n");
        assert_eq!(
            call(&["gen", "--family", "path", "--n", "3", "--edges"]).1,
            "3: 0-1,1-2\n"
        );
        assert_eq!(
            call(&["gen", "--family", "complete_minus_triangle", "--n", "2"]).0,
            2
        );
        assert_eq!(call(&["gen", "--family", "bogus", "--n", "4"]).0, 2);
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(
            call(&["verify", "--enumerate", "4", "--checks", "all"]).0,
            0
        );
        assert_eq!(
            call(&["verify", "--enumerate", "4", "--checks", "selftest"]).0,
            1
        );
        assert_eq!(
            call(&["verify", "--enumerate", "4", "--checks", "bogus"]).0,
            2
        );
        assert_eq!(call(&["verify", "--enumerate", "9"]).0, 2);
        assert_eq!(call(&["verify", "--checks", "all"]).0, 2);
    }

    #[test]
    fn spectrum_and_classify_round_trip() {
        let (code, out, _) = call(&["spectrum", "-i", "g6:Ds_", "--format", "csv"]);
        assert_eq!(code, 0);
        let mut rdr = csv::Reader::from_reader(out.as_bytes());
        let row: SpectrumRow = rdr.deserialize().next().unwrap().unwrap();
        assert_eq!(row.spectrum.to_string(), "{2,3}");

        let (code, out, _) = call(&["classify", "-i", "g6:Cs", "--format", "json"]);
        assert_eq!(code, 0);
        let row: ClassifyRow = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(row.family, FamilyTag::CompleteMinusTriangle);
        assert_eq!(row.memberships, "complete_minus_triangle|star");
    }

    #[test]
    fn convert_targets() {
        assert_eq!(
            call(&["convert", "-i", "g6:Bg", "--to", "edges"]).1,
            "3: 0-1,1-2\n"
        );
        assert_eq!(call(&["convert", "-i", "g6:Bg", "--to", "g6"]).1, "Bg\n");
        let (code, out, _) = call(&[
            "convert",
            "-i",
            "g6:Bg",
            "--to",
            "signed",
            "--partition",
            "v1=1;v2=0,2",
        ]);
        assert_eq!(code, 0);
        assert!(out.starts_with("Bg\n"));
    }

    #[test]
    fn help_is_not_an_error() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("verify"));
        assert_eq!(call(&[]).0, 2);
    }
}
