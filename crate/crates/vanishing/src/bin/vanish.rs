fn main() {
    std::process::exit(vanishing::cli::run());
}
