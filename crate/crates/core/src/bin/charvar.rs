fn main() {
    let (code, out) = charvar::cli::run(std::env::args_os());
    if code == 0 {
        print!("{out}");
    } else {
        eprint!("{out}");
    }
    std::process::exit(code);
}
