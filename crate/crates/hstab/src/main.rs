fn main() {
    std::process::exit(hstab::cli::run(std::env::args_os()));
}
