fn main() {
    std::process::exit(homlong::cli::run(std::env::args_os()));
}
