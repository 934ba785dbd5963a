use std::process::ExitCode;

fn main() -> ExitCode {
    dehncert::cli::run()
}
