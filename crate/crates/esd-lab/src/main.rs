fn main() {
    std::process::exit(esd_lab::cli::run_from_env());
}
