//! Driving the command-line front end in-process and reading its JSON.

fn main() {
    for args in [
        vec!["wdeg", "classify", "A4", "-p", "3", "-w", "[0,1,0,0]"],
        vec!["wdeg", "wdeg", "--oracle", "B3", "-p", "3", "-w", "[1,0,1]"],
        vec!["wdeg", "branch", "C3", "-p", "3", "-w", "[0,0,1]", "--to", "2"],
        vec!["wdeg", "system", "enumerate", "C", "-p", "2", "-s", "1"],
        vec!["wdeg", "classify", "A4", "-p", "4", "-w", "[0,1,0,0]"],
    ] {
        let (code, out) = wdeg::cli::run(&args);
        println!("$ {}\nexit {code}: {out}\n", args[1..].join(" "));
    }
}
