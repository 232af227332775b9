fn main() {
    std::process::exit(leray_cli::run(std::env::args_os()));
}
