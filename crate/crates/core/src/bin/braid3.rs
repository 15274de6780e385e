fn main() {
    std::process::exit(braid3::cli::run(std::env::args_os()));
}
