fn main() {
    std::process::exit(flanders::cli::run());
}
