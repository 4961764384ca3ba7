fn main() {
    let code = cdlaplace::cli::run(std::env::args(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
