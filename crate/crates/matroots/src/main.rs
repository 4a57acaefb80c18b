use std::io::{stderr, stdout};

fn main() {
    let code = matroots::cli::run_command(std::env::args_os(), &mut stdout(), &mut stderr());
    std::process::exit(code);
}
