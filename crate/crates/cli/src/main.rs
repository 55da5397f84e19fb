use std::io;
use std::process::ExitCode;

use franklin_cli::{run, Io};

fn main() -> ExitCode {
    let code = run(
        std::env::args_os(),
        Io {
            stdin: &mut io::stdin().lock(),
            stdout: &mut io::stdout().lock(),
            stderr: &mut io::stderr().lock(),
        },
    );
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}
