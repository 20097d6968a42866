fn main() -> std::process::ExitCode {
    foldecode::cli::main_entry()
}
