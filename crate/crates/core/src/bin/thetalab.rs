fn main() {
    std::process::exit(thetalab::cli::parse_and_dispatch(std::env::args_os()));
}
