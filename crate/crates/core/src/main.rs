use clap::Parser;

fn main() {
    let cli = sizett::cli::Cli::parse();
    let code = sizett::cli::run(cli, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
