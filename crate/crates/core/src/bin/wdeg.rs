fn main() {
    let (code, out) = wdeg::cli::run(std::env::args_os());
    println!("{out}");
    std::process::exit(code);
}
