fn main() {
    std::process::exit(kgroth::cli::main_with_args(std::env::args_os()));
}
