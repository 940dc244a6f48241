use clap::{Args, Parser, Subcommand};
use ratsum::{cmd_check_identities, cmd_eval_psi, cmd_sum, cmd_transform, exit, Output, Transform};

/// Exact definite sums of rational summands: sum_{k=0}^{n-1} R(k, n).
#[derive(Parser)]
#[command(name = "ratsum", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the sum is a rational function of n.
    Sum {
        expr: String,
        #[arg(long)]
        json: bool,
        /// Compare the closed form with direct summation at this many points.
        #[arg(long, default_value_t = 0)]
        verify: u64,
        #[arg(long)]
        trace: bool,
    },
    /// Rewrite the summand without changing the sum.
    Transform {
        expr: String,
        #[command(flatten)]
        which: TransformArg,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the normalized polygamma of order S at X.
    EvalPsi {
        s: u32,
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// Digits after the decimal point.
        #[arg(long, default_value_t = 10)]
        prec: usize,
    },
    /// Check the shift, reflection and multiplication identities numerically.
    CheckIdentities {
        #[arg(long, default_value_t = 100)]
        points: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TransformArg {
    /// k -> n - 1 - k
    #[arg(long)]
    reflect: bool,
    /// Split by k mod M (M >= 2).
    #[arg(long, value_name = "M")]
    msection: Option<u32>,
    /// Peel off the terms k = 0..=M.
    #[arg(long, value_name = "M")]
    split: Option<u32>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::ERROR } else { exit::OK };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let out: Output = match cli.command {
        Command::Sum { expr, json, verify, trace } => cmd_sum(&expr, json, verify, trace),
        Command::Transform { expr, which, json } => {
            let which = match (which.reflect, which.msection, which.split) {
                (true, _, _) => Transform::Reflect,
                (_, Some(m), _) => Transform::MSection(m),
                (_, _, Some(m)) => Transform::Split(m),
                _ => unreachable!("clap enforces exactly one transform"),
            };
            cmd_transform(&expr, which, json)
        }
        Command::EvalPsi { s, x, prec } => cmd_eval_psi(s, &x, prec),
        Command::CheckIdentities { points } => cmd_check_identities(points),
    };
    if !out.stdout.is_empty() {
        println!("{}", out.stdout);
    }
    if !out.stderr.is_empty() {
        eprintln!("{}", out.stderr);
    }
    std::process::exit(out.code);
}
