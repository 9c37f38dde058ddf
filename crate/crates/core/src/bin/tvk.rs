use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(tvk::cli::run(std::env::args_os()))
}
