fn main() {
    std::process::exit(laurent_goldbach::cli::run());
}
