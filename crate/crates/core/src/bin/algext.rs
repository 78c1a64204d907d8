fn main() {
    std::process::exit(algext::cli::run(std::env::args_os()));
}
