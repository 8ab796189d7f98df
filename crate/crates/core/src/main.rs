fn main() {
    std::process::exit(complement_eigen::cli::run(std::env::args_os()));
}
