use std::io::Write;

fn main() {
    let (code, out) = lrcforge_cli::cmd_dispatch(std::env::args_os());
    // A closed pipe on the reading side is not an error worth reporting.
    let _ = if code == 0 {
        writeln!(std::io::stdout().lock(), "{}", out.trim_end())
    } else {
        writeln!(std::io::stderr().lock(), "{}", out.trim_end())
    };
    std::process::exit(code);
}
