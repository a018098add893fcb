fn main() {
    std::process::exit(khalfin::cli::run(std::env::args_os()));
}
