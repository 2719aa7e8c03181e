fn main() {
    std::process::exit(sprayplan_cli::run(std::env::args_os()));
}
