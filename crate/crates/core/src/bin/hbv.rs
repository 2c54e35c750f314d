fn main() {
    std::process::exit(handlebody_braids::cli::main_with_args(std::env::args_os()));
}
