use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone)]
#[command(name = "coxpoly", version, about = "Exact Coxeter polynomial, Poincare series and braid invariant toolkit")]
pub struct Cli {
    /// Output format. `ascii` is the same as `text`; `eval` only applies to `cfrac`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// Fill in `elapsed_ms` (otherwise null, so output stays reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    #[value(alias = "ascii")]
    Text,
    Json,
    Latex,
    Eval,
}

impl Cli {
    pub fn output_format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Coxeter, characteristic and Conway polynomials and cofactor data.
    Coxeter(CoxeterArgs),
    /// Print, delete from, join or bipartition a diagram.
    Diagram(DiagramArgs),
    /// Branching continued fraction of a tree or a cycle.
    Cfrac(CfracArgs),
    /// Three-block divide identity for integer blocks A, B, C.
    Divide(DivideArgs),
    /// Polynomial utilities.
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Run an identity suite.
    Verify(VerifyArgs),
    /// Klein group Poincare series data and checks.
    Kostant(KostantArgs),
    /// Braid invariants.
    #[command(subcommand)]
    Braid(BraidCommand),
}

#[derive(Args, Debug, Clone)]
pub struct CoxeterArgs {
    /// Built-in name (A5, ~E7, ...) or a diagram file.
    #[arg(long, required_unless_present = "join")]
    pub diagram: Option<String>,
    /// Glue diagrams through a new vertex: "E6:0 A3:2".
    #[arg(long, conflicts_with = "diagram")]
    pub join: Option<String>,
    /// Vertex order for the Coxeter element, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub order: Option<Vec<usize>>,
    /// Print the characteristic polynomial in z instead.
    #[arg(long = "char")]
    pub char_poly: bool,
    /// Print the Alexander-Conway polynomial instead.
    #[arg(long)]
    pub conway: bool,
    /// Print the full cofactor table.
    #[arg(long)]
    pub cofactors: bool,
    /// Print the Schur decomposition at this pivot.
    #[arg(long)]
    pub schur: Option<usize>,
    /// Cofactor as a sum over simple paths, "i,j".
    #[arg(long, value_parser = parse_pair)]
    pub paths: Option<(usize, usize)>,
    /// Walk counts between "i,j".
    #[arg(long, value_parser = parse_pair)]
    pub walks: Option<(usize, usize)>,
    /// Longest walk length for `--walks`.
    #[arg(long, default_value_t = 10)]
    pub max_len: usize,
    /// Residual of the cofactor square identity at "i,j".
    #[arg(long, value_parser = parse_pair)]
    pub identity7: Option<(usize, usize)>,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (i, j) = s.split_once(',').ok_or("expected i,j")?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((num(i)?, num(j)?))
}

#[derive(Args, Debug, Clone)]
pub struct DiagramArgs {
    #[arg(long, required_unless_present = "join")]
    pub diagram: Option<String>,
    #[arg(long, conflicts_with = "diagram")]
    pub join: Option<String>,
    /// Vertices to delete, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub delete: Option<Vec<usize>>,
    /// Report a bipartite order or an odd cycle.
    #[arg(long)]
    pub bipartite: bool,
}

#[derive(Args, Debug, Clone)]
pub struct CfracArgs {
    #[arg(long)]
    pub diagram: String,
    #[arg(long, default_value_t = 0)]
    pub root: usize,
    /// Steps per arm on a cycle (default: all).
    #[arg(long)]
    pub depth: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct DivideArgs {
    /// Rows separated by `;`, entries by whitespace.
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
    #[arg(long)]
    pub c: String,
}

#[derive(Subcommand, Debug, Clone)]
pub enum PolyCommand {
    /// Substitute z = q + 1/q into a polynomial in z.
    ZSub { poly: String },
    /// Rewrite a symmetric Laurent polynomial in q as a polynomial in z.
    ToZ { poly: String },
    /// Bezoutian of two Laurent polynomials in q.
    Bez { f: String, g: String },
    /// Wronskian of two Laurent polynomials in q.
    Wr { f: String, g: String },
    /// Determinant of a Laurent matrix: rows by `;`, entries by `,`.
    Det { matrix: String },
    /// Power series of sqrt(1 + u).
    Sqrt1p {
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    All,
    Coincidence,
    Symmetry,
    Schur,
    Paths,
    Walks,
    Identity7,
    CdCoxeter,
    CdWronskian,
    CdChar,
    Chain,
    BinetCauchy,
    Cfrac,
    PoincareCd,
    Kostant,
    Burau,
    Levin,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub identity: Suite,
    /// Restrict to these diagrams (repeatable); default is every built-in
    /// diagram up to `--max-rank` plus random trees.
    #[arg(long)]
    pub diagram: Vec<String>,
    #[arg(long, default_value_t = 8)]
    pub max_rank: usize,
    #[arg(long, default_value_t = 20)]
    pub random_trees: usize,
    #[arg(long, default_value_t = 8)]
    pub max_vertices: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum KostantCheck {
    All,
    /// Ratios of series against cofactors.
    #[value(name = "17")]
    Ratios,
    /// Linear system with series.
    #[value(name = "14")]
    Series,
    /// Linear system with numerators.
    #[value(name = "15")]
    Numerators,
    /// Linear system over cofactors.
    #[value(name = "16")]
    Cofactors,
    Squares,
    Walks,
    /// Numerators recomputed by Cramer's rule.
    Cramer,
    /// Closed form on odd cycles.
    Closed,
    /// The bare-sum reading of the odd cycle recurrence (fails from rank 4).
    Literal,
    Exponents,
}

#[derive(Args, Debug, Clone)]
pub struct KostantArgs {
    /// Affine type: ~A4, ~D6, ~E8, ...
    #[arg(long = "type")]
    pub kind: String,
    /// Expand the series at vertex i (-1 for the auxiliary vertex).
    #[arg(long, allow_hyphen_values = true)]
    pub series: Option<i64>,
    #[arg(long, default_value_t = 30)]
    pub terms: usize,
    #[arg(long, value_enum)]
    pub verify: Option<KostantCheck>,
    /// Walk length for `--verify walks`.
    #[arg(long, default_value_t = 20)]
    pub walk_len: usize,
}

#[derive(Args, Debug, Clone)]
pub struct WordArgs {
    /// Braid word: "s1 s1 -s2".
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// Strand count (default: one more than the largest generator).
    #[arg(long)]
    pub strands: Option<usize>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum BraidCommand {
    /// Burau matrix.
    Burau {
        #[command(flatten)]
        braid: WordArgs,
        #[arg(long)]
        reduced: bool,
    },
    /// Milnor invariants of a pure braid.
    Milnor {
        #[command(flatten)]
        braid: WordArgs,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Two-strand Milnor sums against the Conway ratio.
    Levin {
        #[command(flatten)]
        braid: WordArgs,
        #[arg(long, default_value_t = 16)]
        order: usize,
    },
    /// Burau determinant ratio for a string link `--link` and braid `--word`.
    Ratio {
        #[command(flatten)]
        braid: WordArgs,
        #[arg(long, allow_hyphen_values = true)]
        link: String,
        /// Use the unreduced representation (its determinant vanishes).
        #[arg(long)]
        unreduced: bool,
    },
    /// Images of the free generators under the braid.
    Artin {
        #[command(flatten)]
        braid: WordArgs,
    },
    /// Longitudes of a pure braid.
    Longitudes {
        #[command(flatten)]
        braid: WordArgs,
    },
    /// Magnus expansion of one longitude.
    Magnus {
        #[command(flatten)]
        braid: WordArgs,
        /// 1-based strand.
        #[arg(long, default_value_t = 1)]
        strand: usize,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
}
