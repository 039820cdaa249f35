fn main() {
    std::process::exit(springer_cli::run(std::env::args_os()));
}
