use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(qubit_indirect_cli::run(std::env::args_os()))
}
