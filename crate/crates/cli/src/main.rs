use clap::Parser;

fn main() {
    let cli = detquartic_cli::Cli::parse();
    std::process::exit(detquartic_cli::run(&cli));
}
