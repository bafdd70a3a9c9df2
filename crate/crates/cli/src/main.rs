use std::io::Write;

fn main() {
    let done = atlas_cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(done.stdout.as_bytes());
    let _ = std::io::stderr().write_all(done.stderr.as_bytes());
    std::process::exit(done.code);
}
