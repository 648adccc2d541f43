fn main() {
    let code = minsimple::cli::run(std::env::args_os());
    std::process::exit(code);
}
