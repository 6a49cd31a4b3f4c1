fn main() -> std::process::ExitCode {
    supergrade::cli::main()
}
