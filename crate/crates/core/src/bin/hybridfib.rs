use std::io::{self, Write};

fn main() {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let code = hybridfib::cli::main_with_args(std::env::args_os(), &mut out, &mut err);
    if out.flush().is_err() {
        std::process::exit(2);
    }
    std::process::exit(code);
}
