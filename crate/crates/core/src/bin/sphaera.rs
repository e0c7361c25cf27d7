fn main() -> std::process::ExitCode {
    sphaera::cli::run(std::env::args_os())
}
