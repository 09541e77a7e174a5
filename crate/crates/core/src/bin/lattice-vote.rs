fn main() {
    std::process::exit(lattice_vote::cli::run(std::env::args_os()));
}
