//! Command-line front end for `sov-core`: computes Macdonald and separated
//! polynomials, applies the separating operator and runs the verification
//! suites.

pub mod args;
pub mod commands;
pub mod golden;
pub mod report;
pub mod suites;

use clap::Parser;

/// What one invocation printed and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let mut text = e.render().to_string();
            if code == 2 && !text.contains("Usage:") {
                text = format!("{text}\n{}\n", usage());
            }
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match commands::execute(&cli) {
        Ok(r) => Output {
            code: r.exit_code(),
            stdout: if cli.json { r.render_json() } else { r.render_text() },
            stderr: String::new(),
        },
        Err(e) => Output { code: 2, stdout: String::new(), stderr: format!("error: {e}\n\n{}\n", usage()) },
    }
}

fn usage() -> String {
    use clap::CommandFactory;
    args::Cli::command().render_usage().to_string()
}
