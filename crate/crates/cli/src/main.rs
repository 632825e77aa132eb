fn main() {
    std::process::exit(geocheck_cli::main_with_args(std::env::args_os()));
}
