use clap::{Args, Parser, Subcommand, ValueEnum};
use diagmin::algebra::MonomialOrder;

#[derive(Debug, Parser)]
#[command(
    name = "diagmin",
    version,
    about = "Ideals of diagonal 2-minors of graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Include wall-clock timings (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// Edge-list file or family spec such as `path:4`, `cycle:5`, `star:3`, `complete:4`.
    #[arg(long)]
    pub graph: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OrderArg {
    Lex,
    #[value(alias = "revlex")]
    Degrevlex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Degrevlex => MonomialOrder::DegRevLex,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generators, reduced Gröbner basis, initial ideal and height.
    Analyze {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value = "degrevlex")]
        order: OrderArg,
    },
    /// Rank of the divisor class group.
    Rank {
        #[command(flatten)]
        graph: GraphArg,
    },
    /// Minimal primes of `(P_G, x[j,i])` for one edge.
    MinPrimes {
        #[command(flatten)]
        graph: GraphArg,
        /// Edge as `i,j`.
        #[arg(long, value_parser = parse_edge)]
        edge: (usize, usize),
    },
    /// Ranks of all connected graphs with a given number of edges.
    Survey {
        #[arg(long)]
        edges: usize,
        /// Lift the size guard.
        #[arg(long)]
        force: bool,
    },
    /// Run invariant suites; exits 1 if any fails.
    Verify {
        /// gb, minprimes, variety, bounds, oracle or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Corpus size in edges (defaults depend on the suite).
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long)]
        force: bool,
    },
    /// A graph with a given class group rank.
    FindRank {
        #[arg(long)]
        rank: u64,
    },
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected i,j but got '{s}'"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("'{t}' is not a vertex"))
    };
    Ok((parse(a)?, parse(b)?))
}
