fn main() {
    std::process::exit(plr::cli::run(std::env::args_os()));
}
