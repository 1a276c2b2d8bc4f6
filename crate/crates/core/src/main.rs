use clap::Parser;

fn main() {
    let cli = mixvol::cli::Cli::parse();
    std::process::exit(mixvol::cli::main_entry(cli));
}
