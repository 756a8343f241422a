use clap::Parser;

fn main() {
    let cli = support_forge::cli::Cli::parse();
    std::process::exit(support_forge::cli::main_with(cli));
}
