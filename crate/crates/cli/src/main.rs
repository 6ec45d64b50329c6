mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// Seifert matrix S-equivalence, Milnor invariants of link diagrams, and
/// certification of free-sliceness hypotheses for good boundary links.
///
/// Exit codes: 0 success or certified, 1 inconclusive, 2 hypothesis failed or
/// mathematically invalid input, 64 usage or parse error.
#[derive(Parser)]
#[command(name = "slicecert", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the boundary link Seifert matrix invariants.
    Validate { matrix: PathBuf },
    /// Search for a chain of S-reductions down to the null matrix.
    Reduce {
        matrix: PathBuf,
        /// Maximum number of matrices expanded.
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        /// Only reduce pairs at the front of a block.
        #[arg(long)]
        front_only: bool,
        /// Write the reduction moves here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Find an ordering of the basis pairs giving good-basis form.
    Goodbasis {
        matrix: PathBuf,
        /// Write the ordering, signs and reduction moves here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Replay a move file from a matrix and report where it ends.
    Replay {
        matrix: PathBuf,
        moves: PathBuf,
        /// Require the path to end at this matrix.
        #[arg(long)]
        expect: Option<PathBuf>,
        /// Write the final matrix here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rewrite a move file so that no enlargement follows a reduction.
    Normalize {
        matrix: PathBuf,
        moves: PathBuf,
        /// Write the normalized moves here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute one μ̄ invariant of a diagram (string links are closed up).
    Mu {
        diagram: PathBuf,
        /// Component indices, 1-based, comma separated; the last names the
        /// longitude.
        #[arg(long, value_delimiter = ',', required = true)]
        index: Vec<usize>,
        /// Truncation degree plus one; defaults to the index length.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide homotopic triviality from the non-repeating μ̄ invariants.
    Ht {
        diagram: PathBuf,
        /// Write the table of invariants here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether the pair (J, K) is homotopically trivial+.
    Htplus {
        diagram: PathBuf,
        /// Labels of the components forming K; all components by default.
        #[arg(long, value_delimiter = ',')]
        sublink: Option<Vec<String>>,
        /// Labels of the components forming J; all components by default.
        #[arg(long, value_delimiter = ',')]
        link: Option<Vec<String>>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Certify the free-sliceness hypotheses for a matrix and its derived links.
    Certify(CertifyArgs),
    /// Build the L(β) bundle for a 2-strand string link and certify it.
    Lbeta {
        beta: PathBuf,
        /// Write the bundle here.
        #[arg(long)]
        bundle_out: Option<PathBuf>,
        /// Write the certificate here.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// List or export the bundled examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Bounded search for an S-equivalence between two matrices.
    Sequiv {
        a: PathBuf,
        b: PathBuf,
        /// Maximum number of matrices visited.
        #[arg(long, default_value_t = 200_000)]
        budget: usize,
        /// Largest matrix side explored; defaults to the larger input plus 4.
        #[arg(long)]
        size_cap: Option<usize>,
        /// Largest entry magnitude explored.
        #[arg(long, default_value_t = 8)]
        entry_cap: i64,
        /// Enlargement entries range over [-x, x].
        #[arg(long, default_value_t = 1)]
        enlarge_entry_cap: i64,
        /// Write the connecting moves here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CertifyArgs {
    /// Seifert matrix; omit when using --bundle.
    #[arg(required_unless_present = "bundle", conflicts_with = "bundle")]
    matrix: Option<PathBuf>,
    /// Derived link diagrams K ⊔ a_j and K ⊔ b_j, alternating a and b, one
    /// pair per basis pair in natural order.
    #[arg(long, num_args = 1..)]
    derived: Vec<PathBuf>,
    /// A bundle file holding the matrix and its derived links.
    #[arg(long, conflicts_with = "derived")]
    bundle: Option<PathBuf>,
    /// Longest μ̄ index examined; defaults to the component count.
    #[arg(long)]
    depth: Option<usize>,
    /// Write the certificate here.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List entries with their kind and checksum.
    List,
    /// Write an entry's payload to a file, or to stdout.
    Export {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { io::EXIT_USAGE } else { io::EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(io::exit_code(&e))
        }
    }
}
