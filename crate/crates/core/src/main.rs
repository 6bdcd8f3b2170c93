use clap::Parser;
use symrees::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
