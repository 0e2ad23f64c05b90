fn main() {
    std::process::exit(asdimlab::cli::run());
}
