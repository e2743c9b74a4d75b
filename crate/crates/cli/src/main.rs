use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cap = std::env::var(empire_cli::SOLVER_CAP_VAR).ok();
    let code = empire_cli::run(
        std::env::args_os(),
        cap.as_deref(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code.clamp(0, 255) as u8)
}
