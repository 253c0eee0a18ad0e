fn main() {
    std::process::exit(sectio::cli::main_with_args(std::env::args_os()));
}
