fn main() {
    std::process::exit(regsel::cli::main_with_args(std::env::args_os()));
}
