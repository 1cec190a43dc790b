fn main() {
    std::process::exit(contred::cli::main());
}
