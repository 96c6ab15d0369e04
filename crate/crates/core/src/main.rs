fn main() {
    std::process::exit(stable_kneser::cli::main());
}
