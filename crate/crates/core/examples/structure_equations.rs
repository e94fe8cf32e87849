//! Runs every structure-equation check and prints the reports.

fn main() -> holonomy::Result<()> {
    let mut failed = 0;
    for report in holonomy::invariant::all_checks()? {
        print!("{report}");
        failed += usize::from(!report.passed());
    }
    println!("{failed} failing checks");
    Ok(())
}
