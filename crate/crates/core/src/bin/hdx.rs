fn main() -> std::process::ExitCode {
    hdx_core::cli::main()
}
