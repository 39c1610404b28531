use clap::Parser;
use cyclemonoid_cli::args::Cli;

fn main() {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match cyclemonoid_cli::run(&cli, &mut stdout) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}
