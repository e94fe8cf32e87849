//! Drives the command-line front end in-process and prints both output formats.

use holonomy::cli::{dispatch, emit_report, Format};

fn main() {
    let runs: [&[&str]; 3] = [
        &["holonomy", "rep", "cg", "2", "1"],
        &["holonomy", "--decimal", "curvature", "sectional", "--json", r#"{"n":3,"entries":[{"idx":[1,2,1,2],"coeff":"2/3"}]}"#, "--x", "1,0,0", "--y", "0,1,0"],
        &["holonomy", "verify", "flag-nk"],
    ];
    for argv in runs {
        let r = dispatch(argv);
        println!("$ {}\nexit {}", argv[1..].join(" "), r.exit_code);
        println!("{}", emit_report(&r, Format::Markdown));
    }
    println!("{}", emit_report(&dispatch(&["holonomy", "octonion", "tabel"]), Format::Json));
}
