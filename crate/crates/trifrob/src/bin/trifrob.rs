fn main() {
    std::process::exit(trifrob::cli::main_with_args(std::env::args_os()));
}
