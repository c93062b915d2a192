use std::io::Write;
use std::process::ExitCode;

use gitgr::cli::{run, MAX_ENUM_VAR};

fn main() -> ExitCode {
    let cap = std::env::var(MAX_ENUM_VAR).ok();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = run(std::env::args_os(), cap.as_deref(), &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
