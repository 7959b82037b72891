use std::process::ExitCode;

fn main() -> ExitCode {
    let code = cliquelab_cli::cmd_dispatch(std::env::args_os());
    ExitCode::from(code as u8)
}
