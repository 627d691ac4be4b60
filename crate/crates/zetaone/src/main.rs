fn main() {
    std::process::exit(zetaone::cli::run());
}
