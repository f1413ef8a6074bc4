use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = altrun::cli::run_cli(std::env::args_os());
    std::io::stdout()
        .write_all(&out.stdout)
        .expect("write stdout");
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
