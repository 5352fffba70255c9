use clap::Parser;

fn main() {
    let cli = gel_cli::Cli::parse();
    let outcome = gel_cli::run(&cli);
    if outcome.code == 0 {
        print!("{}", outcome.output);
        if !outcome.output.ends_with('\n') && !outcome.output.is_empty() {
            println!();
        }
    } else {
        eprintln!("{}", outcome.output.trim_end());
    }
    std::process::exit(outcome.code);
}
