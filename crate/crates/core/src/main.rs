fn main() -> std::process::ExitCode {
    hhaudit::cli::main()
}
