//! The `vcrit` command line.
//!
//! Exit status: 0 on success, 1 when a graph is outside the requested
//! family, 2 for bad flags or unreadable input, 3 when an internal
//! invariant fails (incomplete database, audit violation, rejected
//! certificate).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::audit::run_audits;
use crate::certify::{decide, format_certificate, verify_certificate, DecideError};
use crate::coloring::{chromatic_number, is_critical};
use crate::critical::{enumerate_critical, reproduce_counts_table, CriticalDatabase, MAX_K, MIN_K};
use crate::graph6::{encode_graph6, Graph6Reader};
use crate::pattern::{parse_pattern_list, PatternId};

#[derive(Debug, Parser)]
#[command(name = "vcrit", version, about = "Vertex-critical graphs in 2P2-free families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate the database of k-vertex-critical graphs avoiding the patterns.
    Gen {
        #[arg(long)]
        k: usize,
        /// Comma-separated patterns, e.g. `2P2,bull` or `2P2,squid:4:1`.
        #[arg(long, default_value = "2P2")]
        forbid: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Report chromatic number and k-vertex-criticality for each input graph.
    Check {
        #[arg(long)]
        k: usize,
        /// graph6 file; standard input when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Decide k-colourability of (2P2, H)-free graphs with a certificate.
    Certify {
        #[arg(long)]
        k: usize,
        /// The pattern H.
        #[arg(long)]
        family: String,
        /// Database of (k+1)-vertex-critical graphs.
        #[arg(long)]
        db: PathBuf,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Print per-order counts of critical (2P2, bull)-free graphs for k = 4..=kmax.
    Table {
        #[arg(long, default_value_t = 6)]
        kmax: usize,
    },
    /// Run the structural audits for one k.
    Audit {
        #[arg(long)]
        k: usize,
    },
    /// Print a named pattern in graph6.
    Catalog {
        #[arg(long)]
        pattern: String,
    },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn outside(message: impl ToString) -> Failure {
    Failure {
        code: 1,
        message: message.to_string(),
    }
}

fn input(message: impl ToString) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

fn internal(message: impl ToString) -> Failure {
    Failure {
        code: 3,
        message: message.to_string(),
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        input(e)
    }
}

/// Parses `args` (program name first), runs the command and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(args, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`main_with_args`] with explicit streams.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = execute(cli.command, stdin, stdout);
    let _ = stdout.flush();
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn check_k(k: usize) -> Result<(), Failure> {
    if (MIN_K..=MAX_K).contains(&k) {
        Ok(())
    } else {
        Err(input(format!("unsupported k = {k}, expected {MIN_K}..={MAX_K}")))
    }
}

fn open_input<'a>(path: &Option<PathBuf>, stdin: &'a mut dyn BufRead) -> Result<Box<dyn BufRead + 'a>, Failure> {
    match path {
        Some(p) => {
            let f = File::open(p).map_err(|e| input(format!("{}: {e}", p.display())))?;
            Ok(Box::new(BufReader::new(f)))
        }
        None => Ok(Box::new(stdin)),
    }
}

fn execute(command: Command, stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Gen { k, forbid, out } => {
            check_k(k)?;
            let forbidden = parse_pattern_list(&forbid).map_err(input)?;
            let db = enumerate_critical(k, &forbidden).map_err(input)?;
            let file = File::create(&out).map_err(|e| input(format!("{}: {e}", out.display())))?;
            let mut w = BufWriter::new(file);
            db.write_graph6(&mut w)?;
            w.flush()?;
            let mut sidecar = out.into_os_string();
            sidecar.push(".manifest");
            std::fs::write(&sidecar, db.manifest())?;
            stdout.write_all(db.manifest().as_bytes())?;
        }
        Command::Check { k, input: path } => {
            let source = open_input(&path, stdin)?;
            for item in Graph6Reader::new(source) {
                let (line, g) = item.map_err(input)?;
                let chi = if g.order() == 0 {
                    0
                } else {
                    chromatic_number(&g).map_err(input)?
                };
                let yes = chi == k && is_critical(&g, k);
                writeln!(
                    stdout,
                    "{line} chi={chi} critical@{k}={}",
                    if yes { "yes" } else { "no" }
                )?;
            }
        }
        Command::Certify {
            k,
            family,
            db,
            input: path,
        } => {
            if k + 1 > MAX_K || k + 1 < MIN_K {
                return Err(input(format!(
                    "unsupported k = {k}, databases exist for k+1 in {MIN_K}..={MAX_K}"
                )));
            }
            let h: PatternId = family.parse().map_err(input)?;
            let mut fam = vec![PatternId::TwoP2];
            if h != PatternId::TwoP2 {
                fam.push(h);
            }
            let mut db_family = vec![PatternId::P3PlusEllP1(1)];
            db_family.extend(fam.iter().cloned());
            let file = File::open(&db).map_err(|e| input(format!("{}: {e}", db.display())))?;
            let database = CriticalDatabase::read_graph6(k + 1, db_family, BufReader::new(file)).map_err(input)?;
            database
                .validate()
                .map_err(|e| input(format!("{}: {e}", db.display())))?;
            let source = open_input(&path, stdin)?;
            for item in Graph6Reader::new(source) {
                let (line, g) = item.map_err(input)?;
                let cert = decide(&g, k, &fam, &database).map_err(|e| match e {
                    DecideError::OutsideFamily(_) => outside(format!("line {line}: {e}")),
                    DecideError::IncompleteDatabase { .. } => internal(format!("line {line}: {e}")),
                    _ => input(format!("line {line}: {e}")),
                })?;
                if !verify_certificate(&g, k, &cert, &database) {
                    return Err(internal(format!("line {line}: certificate failed verification")));
                }
                stdout.write_all(format_certificate(&cert, &database).as_bytes())?;
            }
        }
        Command::Table { kmax } => {
            let table = reproduce_counts_table(kmax).map_err(input)?;
            write!(stdout, "{table}")?;
        }
        Command::Audit { k } => {
            check_k(k)?;
            let reports = run_audits(k).map_err(input)?;
            let mut violations = 0;
            for r in &reports {
                writeln!(stdout, "{r}")?;
                for v in &r.violations {
                    writeln!(stdout, "  {}", v.detail)?;
                }
                violations += r.violations.len();
            }
            if violations > 0 {
                return Err(internal(format!("{violations} audit violations")));
            }
        }
        Command::Catalog { pattern } => {
            let p: PatternId = pattern.parse().map_err(input)?;
            let g = p.build().map_err(input)?;
            writeln!(stdout, "{}", encode_graph6(&g).map_err(input)?)?;
        }
    }
    Ok(())
}
