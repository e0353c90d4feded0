fn main() {
    std::process::exit(hyperspace::cli::main_with_args(std::env::args_os()));
}
