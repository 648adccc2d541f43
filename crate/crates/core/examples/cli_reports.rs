//! Drives the command-line front end in-process.

fn main() {
    for args in [
        vec!["minsimple", "construct", "psl2", "13"],
        vec!["minsimple", "verify", "out"],
        vec!["minsimple", "dichotomy", "sym", "5", "--n", "inf", "--d", "3", "--json"],
        vec!["minsimple", "lemma31", "quaternion8"],
    ] {
        println!("$ {}", args.join(" "));
        let code = minsimple::cli::run(args);
        println!("exit {code}\n");
    }
}
