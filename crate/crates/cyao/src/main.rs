fn main() {
    cyao::cli::init_threads_from_env();
    std::process::exit(cyao::cli::run(std::env::args_os()));
}
