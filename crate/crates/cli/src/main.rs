use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use maxsym::DEFAULT_BUDGET;
use maxsym_cli::commands::MapArg;
use maxsym_cli::{classify, glue, order, verify_paper, Format, GroupFamily, OrderSource, Rendered, UsageError};

#[derive(Parser)]
#[command(name = "maxsym")]
#[command(about = "Coxeter tetrahedra, twisted Coxeter groups and minimal handlebody orbifolds")]
#[command(version)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Geometry of a labeled tetrahedron C(n,m;a,b;c,d)
    Classify {
        /// Six labels n,m,a,b,c,d
        #[arg(long, value_delimiter = ',', required = true)]
        labels: Vec<u32>,
    },
    /// Group order by coset enumeration
    #[command(group(ArgGroup::new("source").required(true).args(["family", "labels", "presentation"])))]
    Order {
        /// C, Cmu on C(n,m;2,2;2,3); Ctau, Ctaumu on C(n,m;3,3;2,2)
        #[arg(long, value_enum, requires_all = ["n", "m"])]
        family: Option<GroupFamily>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        /// Coxeter group of the tetrahedron with these six labels
        #[arg(long, value_delimiter = ',')]
        labels: Option<Vec<u32>>,
        /// Presentation such as "a,b | a^2/b^2/(a b)^3"
        #[arg(long)]
        presentation: Option<String>,
        /// Maximum number of live cosets
        #[arg(long, env = maxsym_cli::BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Glue two minimal handlebody orbifolds along their boundaries
    Glue {
        /// H2..H5 or Ht2..Ht5
        #[arg(long)]
        left: String,
        /// H2..H5 or Ht2..Ht5
        #[arg(long)]
        right: String,
        #[arg(long, value_enum)]
        map: MapArg,
    },
    /// Recompute every numeric claim and compare with the expected values
    VerifyPaper,
}

fn run(cli: Cli) -> Result<Rendered, UsageError> {
    match cli.command {
        Command::Classify { labels } => classify(&labels, cli.format),
        Command::Order { family, n, m, labels, presentation, budget } => {
            let source = match (family, n, m, labels, presentation) {
                (Some(family), Some(n), Some(m), None, None) => OrderSource::Family { family, n, m },
                (None, None, None, Some(labels), None) => OrderSource::Labels(labels),
                (None, None, None, None, Some(text)) => OrderSource::Presentation(text),
                _ => return Err(UsageError("--n and --m go with --family only".into())),
            };
            order(&source, budget, cli.format)
        }
        Command::Glue { left, right, map } => glue(&left, &right, map.into(), cli.format),
        Command::VerifyPaper => Ok(verify_paper(cli.format)),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(rendered) => {
            print!("{}", rendered.stdout);
            ExitCode::from(rendered.status.code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(UsageError::CODE)
        }
    }
}
