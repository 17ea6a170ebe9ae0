fn main() {
    std::process::exit(signed_bell::cli::run(std::env::args_os()));
}
