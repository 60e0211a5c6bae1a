fn main() {
    std::process::exit(cnchars::cli::run());
}
