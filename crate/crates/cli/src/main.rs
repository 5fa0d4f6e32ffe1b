mod args;
mod commands;
mod errors;
mod output;
mod svg;

use clap::Parser;

use args::{Cli, Command};

fn main() {
    let cli = Cli::parse();
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .expect("thread pool configured once");
    }
    let result = match &cli.command {
        Command::Stats(a) => commands::cmd_stats(a),
        Command::Oov(a) => commands::cmd_oov(a),
        Command::Trajectory(a) => commands::cmd_trajectory(a),
        Command::Similarity(a) => commands::cmd_similarity(a),
        Command::Crime(a) => commands::cmd_crime(a),
        Command::Report(a) => commands::cmd_report(a),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        let mut source = std::error::Error::source(&e);
        while let Some(s) = source {
            eprintln!("  caused by: {s}");
            source = s.source();
        }
        std::process::exit(e.exit_code());
    }
}
