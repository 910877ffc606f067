use clap::Parser;
use lieinv::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
