fn main() {
    std::process::exit(koszul_verify::run(std::env::args_os()));
}
