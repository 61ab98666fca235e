fn main() {
    std::process::exit(kauffman_bmw::cli::run(std::env::args_os()));
}
