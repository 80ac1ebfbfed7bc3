use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lcm_cli::commands::{parse_frac, DEFAULT_PMAX};
use lcm_cli::syntax::DEFAULT_MAX_WORD_LEN;
use lcm_cli::verify::{Suite, VerifyConfig, DEFAULT_TRIALS};
use lcm_cli::{run, CliError, Command, MonoidSpec, Options};
use lcm_core::oracle::DEFAULT_BFS_BOUND;

/// Right lcms, fractions and torsion witnesses in braid, Klein, N^k and Z/n monoids.
#[derive(Debug, Parser)]
#[command(name = "lcm", version)]
struct Cli {
    /// braid:<n>, klein, nk:<k> or cyclic:<n>
    #[arg(long, global = true)]
    monoid: Option<String>,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Longest accepted input word, counted in generators
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_WORD_LEN)]
    max_word_len: usize,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Normal form of a positive word
    Nf { word: String },
    /// Right lcm of two positive words with both complements
    Lcm { a: String, b: String },
    /// Torsion check of the fraction a signed word evaluates to
    Torsion {
        word: String,
        #[arg(long, default_value_t = DEFAULT_PMAX)]
        pmax: usize,
    },
    /// Seeded property suites
    Verify {
        /// uniq, rlcm, eq123 or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_BFS_BOUND)]
        bfs_bound: usize,
    },
    /// Abelianization test for conjugacy in the Klein group
    Conjcheck { a: String, b: String },
    /// Fraction arithmetic: eval W, eq W V, mul W V, inv W, pow W K
    #[command(allow_negative_numbers = true)]
    Frac {
        op: String,
        #[arg(num_args = 1..=2)]
        args: Vec<String>,
    },
}

fn command(sub: Sub) -> Result<Command, CliError> {
    Ok(match sub {
        Sub::Nf { word } => Command::Nf(word),
        Sub::Lcm { a, b } => Command::Lcm(a, b),
        Sub::Torsion { word, pmax } => Command::Torsion { word, pmax },
        Sub::Verify {
            suite,
            seed,
            trials,
            bfs_bound,
        } => Command::Verify {
            suite: suite.parse::<Suite>()?,
            config: VerifyConfig {
                seed,
                trials,
                bfs_bound,
            },
        },
        Sub::Conjcheck { a, b } => Command::Conjcheck(a, b),
        Sub::Frac { op, args } => Command::Frac(parse_frac(&op, &args)?),
    })
}

fn execute(cli: Cli) -> Result<lcm_cli::Output, CliError> {
    let spec: MonoidSpec = match (&cli.monoid, &cli.command) {
        (Some(s), _) => s.parse()?,
        (None, Sub::Conjcheck { .. }) => MonoidSpec::klein(),
        (None, _) => return Err(CliError::usage("--monoid is required")),
    };
    let opts = Options {
        json: cli.json,
        max_word_len: cli.max_word_len,
    };
    run(spec, &command(cli.command)?, &opts)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match execute(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
