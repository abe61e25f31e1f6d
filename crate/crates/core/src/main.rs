fn main() {
    std::process::exit(arrtop::cli::run(std::env::args_os()));
}
