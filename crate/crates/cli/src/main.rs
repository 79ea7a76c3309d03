use std::process::ExitCode;

fn main() -> ExitCode {
    let code = match otsuki_cli::parse_args(std::env::args_os()) {
        Ok(config) => otsuki_cli::run(&config),
        Err(e) => {
            let code = e.exit_code();
            if code == otsuki_cli::EXIT_OK {
                print!("{e}");
            } else {
                eprintln!("{e}");
            }
            code
        }
    };
    ExitCode::from(code as u8)
}
