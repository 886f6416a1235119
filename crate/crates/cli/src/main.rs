use clap::Parser;

fn main() {
    let cli = bicat_cli::Cli::parse();
    let (code, text) = bicat_cli::run(&cli);
    if code == 2 {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    std::process::exit(code);
}
