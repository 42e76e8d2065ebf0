fn main() {
    std::process::exit(simpade_cli::run(std::env::args_os()));
}
