fn main() {
    std::process::exit(vcrit::cli::main_with_args(std::env::args_os()));
}
