use std::io::{Read, Write};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let out = filiform_cli::run_command(&args, || {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    });
    // a closed pipe downstream is not our failure
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.status);
}
