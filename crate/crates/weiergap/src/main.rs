fn main() {
    std::process::exit(weiergap::cli::main());
}
