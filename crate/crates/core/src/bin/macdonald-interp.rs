fn main() {
    std::process::exit(macdonald_interp::cli::main_with_args(std::env::args_os()));
}
