fn main() {
    std::process::exit(gqc::cli::main_with_args(std::env::args_os()));
}
