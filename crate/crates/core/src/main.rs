fn main() {
    std::process::exit(mutvis::cli::run());
}
