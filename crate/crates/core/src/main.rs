fn main() {
    std::process::exit(zetafix::cli::run());
}
