fn main() {
    let (code, out) = macdaha_cli::run(std::env::args());
    if code == 2 {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
