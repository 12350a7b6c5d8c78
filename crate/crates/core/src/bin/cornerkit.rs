fn main() {
    std::process::exit(cornerkit::cli::main_with_args(std::env::args_os()));
}
