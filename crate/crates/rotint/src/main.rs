use std::io::Write;

fn main() {
    let result = rotint::execute(std::env::args_os().skip(1));
    if !result.artifact.is_empty() {
        let mut out = std::io::stdout().lock();
        let _ = out.write_all(result.artifact.as_bytes());
        if !result.artifact.ends_with('\n') {
            let _ = out.write_all(b"\n");
        }
    }
    if !result.summary.is_empty() {
        eprintln!("{}", result.summary.trim_end());
    }
    std::process::exit(result.code);
}
