fn main() {
    std::process::exit(shifted_hyp::cli::main_with_args(std::env::args_os()));
}
