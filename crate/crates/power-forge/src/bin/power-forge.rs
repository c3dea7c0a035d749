fn main() {
    std::process::exit(power_forge::cli::run(std::env::args_os()));
}
