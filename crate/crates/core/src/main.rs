fn main() {
    let code = vhp::cli::run(std::env::args_os());
    std::process::exit(code);
}
