use clap::Parser;

fn main() {
    let cli = commlab_cli::Cli::parse();
    if let Err(e) = commlab_cli::run(cli) {
        eprintln!("commlab: {e}");
        std::process::exit(e.exit_code());
    }
}
