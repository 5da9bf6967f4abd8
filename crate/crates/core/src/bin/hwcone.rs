fn main() {
    let code = hwcone::cli::run(std::env::args_os());
    std::process::exit(code);
}
