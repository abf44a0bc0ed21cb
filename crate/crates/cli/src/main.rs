fn main() {
    std::process::exit(duadiq_cli::run(std::env::args_os()));
}
