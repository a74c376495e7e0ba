fn main() {
    std::process::exit(colour_contraction_cli::run_cli(std::env::args_os()));
}
