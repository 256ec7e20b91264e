fn main() {
    std::process::exit(quandle::shell::run(std::env::args_os()));
}
