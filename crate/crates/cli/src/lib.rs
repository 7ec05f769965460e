//! Command-line front end for the `coxpoly` library.
//!
//! [`run`] turns parsed arguments into an [`Output`]: computed values plus a
//! stream of verification records. The binary renders it and exits 0 iff
//! every record holds.

pub mod args;
mod commands;
pub mod output;
mod verify;

use std::fmt;
use std::path::Path;

use coxpoly::algebra::{Coeff, IntLaurent, Matrix};
use coxpoly::braid::BraidWord;
use coxpoly::diagram::Diagram;

pub use args::Cli;
pub use output::{Output, Record};

#[derive(Debug)]
pub enum CliError {
    /// Flags that parse but make no sense together.
    Usage(String),
    /// Error reported by the library.
    Domain(coxpoly::Error),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<coxpoly::Error> for CliError {
    fn from(e: coxpoly::Error) -> Self {
        CliError::Domain(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

/// Runs one command.
pub fn run(cli: &Cli) -> CliResult<Output> {
    use args::Command;
    let format = cli.output_format();
    if format == args::Format::Eval && !matches!(cli.command, Command::Cfrac(_)) {
        return usage("--format eval only applies to cfrac");
    }
    let ctx = Ctx { timings: cli.timings };
    match &cli.command {
        Command::Coxeter(a) => commands::coxeter(a),
        Command::Diagram(a) => commands::diagram(a),
        Command::Cfrac(a) => commands::cfrac(a, format),
        Command::Divide(a) => commands::divide(a),
        Command::Poly(p) => commands::poly(p),
        Command::Verify(a) => verify::run(a, &ctx),
        Command::Kostant(a) => commands::kostant(a, &ctx),
        Command::Braid(b) => commands::braid(b, &ctx),
    }
}

pub(crate) struct Ctx {
    pub timings: bool,
}

/// A built-in name, a path to a diagram file, or inline diagram text.
pub fn load_diagram(source: &str) -> CliResult<Diagram> {
    if source.contains('\n') {
        return Ok(Diagram::parse(source)?);
    }
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{source}: {e}")))?;
        return Ok(Diagram::parse(&text)?);
    }
    Ok(Diagram::from_name(source)?)
}

/// `"E6:0 A3:2"`: diagrams with the vertex glued to the new centre.
pub fn parse_join(text: &str) -> CliResult<Vec<(Diagram, usize)>> {
    let mut parts = Vec::new();
    for tok in text.split_whitespace() {
        let Some((name, v)) = tok.rsplit_once(':') else {
            return usage(format!("join part `{tok}` is not NAME:VERTEX"));
        };
        let v = v.parse().map_err(|_| CliError::Usage(format!("bad vertex in `{tok}`")))?;
        parts.push((load_diagram(name)?, v));
    }
    if parts.is_empty() {
        return usage("empty --join");
    }
    Ok(parts)
}

/// Rows split on `;`, entries on `sep`, each entry parsed by `entry`.
fn parse_rows<R: coxpoly::algebra::Ring>(
    text: &str,
    sep: Option<char>,
    entry: impl Fn(&str) -> CliResult<R>,
) -> CliResult<Matrix<R>> {
    let mut rows = Vec::new();
    for row in text.split(';').map(str::trim).filter(|r| !r.is_empty()) {
        let cells: Vec<&str> = match sep {
            Some(c) => row.split(c).map(str::trim).collect(),
            None => row.split_whitespace().collect(),
        };
        rows.push(cells.into_iter().map(&entry).collect::<CliResult<Vec<R>>>()?);
    }
    let width = rows.first().map_or(0, Vec::len);
    if rows.is_empty() || rows.iter().any(|r| r.len() != width) {
        return usage(format!("ragged or empty matrix `{text}`"));
    }
    Ok(Matrix::from_rows(rows))
}

pub fn parse_int_matrix(text: &str) -> CliResult<Matrix<Coeff>> {
    parse_rows(text, None, |s| {
        s.parse::<Coeff>()
            .map_err(|_| CliError::Usage(format!("bad integer `{s}`")))
    })
}

pub fn parse_laurent_matrix(text: &str) -> CliResult<Matrix<IntLaurent>> {
    parse_rows(text, Some(','), |s| Ok(IntLaurent::parse(s, "q")?))
}

/// Parses a braid word, inferring the strand count when not given.
pub fn parse_braid(word: &str, strands: Option<usize>) -> CliResult<BraidWord> {
    let n = match strands {
        Some(n) => n,
        None => {
            let top = word
                .split_whitespace()
                .filter_map(|t| t.trim_start_matches('-').trim_start_matches('s').parse::<usize>().ok())
                .max()
                .unwrap_or(1);
            top + 1
        }
    };
    Ok(BraidWord::parse(n, word)?)
}

/// Every library operation and a command line that reaches it.
pub const DISPATCH: &[(&str, &[&str])] = &[
    ("algebra::z_substitute", &["poly", "z-sub", "z^2 - 2"]),
    ("algebra::q_to_z", &["poly", "to-z", "q^-2 + q^2"]),
    ("algebra::det_exact", &["poly", "det", "q, 1; 1, q^-1"]),
    ("algebra::bezoutian", &["poly", "bez", "q + q^-1", "1"]),
    ("algebra::wronskian", &["poly", "wr", "q^2 + 1", "q"]),
    ("algebra::series_sqrt1p", &["poly", "sqrt1p", "--order", "6"]),
    ("diagram::build", &["diagram", "--diagram", "~D5"]),
    ("diagram::delete", &["diagram", "--diagram", "E8", "--delete", "0,7"]),
    ("diagram::join", &["diagram", "--join", "A2:0 A3:1 A1:0"]),
    ("diagram::bipartite_order", &["diagram", "--diagram", "~A4", "--bipartite"]),
    ("coxeter::coxeter_poly", &["coxeter", "--diagram", "E8"]),
    ("coxeter::char_poly", &["coxeter", "--diagram", "D5", "--char"]),
    ("coxeter::alexander_conway", &["coxeter", "--diagram", "A2", "--conway"]),
    ("coxeter::schur_step", &["coxeter", "--diagram", "~E6", "--schur", "2"]),
    ("coxeter::join_poly", &["coxeter", "--join", "A2:0 A2:1 A2:0"]),
    ("coxeter::cofactors", &["coxeter", "--diagram", "A3", "--cofactors"]),
    ("coxeter::path_sum_h", &["coxeter", "--diagram", "~A3", "--paths", "0,2"]),
    ("coxeter::walk_gf", &["coxeter", "--diagram", "~E6", "--walks", "0,0", "--max-len", "8"]),
    ("coxeter::identity7_check", &["coxeter", "--diagram", "D6", "--identity7", "1,4"]),
    ("coxeter::divide_identity", &["divide", "--a", "1 0; 1 2", "--b", "2 0; 0 4", "--c", "1 0; 1 4"]),
    ("cfrac::expand_tree", &["cfrac", "--diagram", "~E6"]),
    ("cfrac::expand_cycle", &["cfrac", "--diagram", "~A5"]),
    ("cfrac::evaluate", &["cfrac", "--diagram", "~D4", "--format", "eval"]),
    ("cfrac::render", &["cfrac", "--diagram", "E6", "--root", "3", "--format", "latex"]),
    ("identities::cd_coxeter", &["verify", "cd-coxeter", "--diagram", "E7"]),
    ("identities::cd_wronskian", &["verify", "cd-wronskian", "--diagram", "~D6"]),
    ("identities::chain_identities", &["verify", "chain", "--diagram", "E8"]),
    ("identities::cd_char", &["verify", "cd-char", "--diagram", "A5"]),
    ("identities::binet_cauchy", &["verify", "binet-cauchy", "--diagram", "A5", "--seed", "3"]),
    ("identities::poincare_cd", &["verify", "poincare-cd", "--diagram", "~A4", "--diagram", "~E6"]),
    ("kostant::klein_data", &["kostant", "--type", "~E8"]),
    ("kostant::poincare_series", &["kostant", "--type", "~E8", "--series", "0", "--terms", "30"]),
    ("kostant::verify_system", &["kostant", "--type", "~D5", "--verify", "15"]),
    ("kostant::ebeling_ratios", &["kostant", "--type", "~A4", "--verify", "17"]),
    ("kostant::a2m_closed_form", &["kostant", "--type", "~A6", "--verify", "closed"]),
    ("kostant::prop2_squares", &["kostant", "--type", "~E6", "--verify", "squares"]),
    ("kostant::walk_series_check", &["kostant", "--type", "~A2", "--verify", "walks"]),
    ("kostant::perfect_square_check", &["kostant", "--type", "~E7", "--verify", "exponents"]),
    ("braid::burau", &["braid", "burau", "--word", "s1 s1 -s2", "--strands", "3", "--reduced"]),
    ("braid::det_ratio", &["braid", "ratio", "--link", "s1 s1 s1", "--word", "-s1 -s1"]),
    ("braid::artin_action", &["braid", "artin", "--word", "s1 -s2"]),
    ("braid::longitudes", &["braid", "longitudes", "--word", "s1 s1 s2 s2"]),
    ("braid::magnus", &["braid", "magnus", "--word", "s1 s1", "--order", "5"]),
    ("braid::milnor", &["braid", "milnor", "--word", "s1 s1", "--order", "6"]),
    ("braid::levin_check", &["braid", "levin", "--word", "s1 s1", "--order", "16"]),
];
