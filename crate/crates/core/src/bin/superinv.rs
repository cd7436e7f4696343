fn main() {
    std::process::exit(superinv::cli::run(std::env::args_os()));
}
