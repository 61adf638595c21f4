fn main() {
    std::process::exit(littlewood::cli::main_with_args(std::env::args_os()));
}
