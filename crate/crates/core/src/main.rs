fn main() -> std::process::ExitCode {
    raag::cli::main()
}
