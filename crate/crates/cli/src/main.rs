use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let (code, out, err) = toruslab_cli::run(&argv);
    print!("{out}");
    eprint!("{err}");
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
