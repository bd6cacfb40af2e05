use clap::Parser;

fn main() {
    let cli = qwalk_cli::Cli::parse();
    if let Err(err) = qwalk_cli::run(cli.command) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
