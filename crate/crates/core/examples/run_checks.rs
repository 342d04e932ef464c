//! Run every verification suite with reduced bounds and print the reports.

use ncprop::verify::{run_suite, Bounds, SUITES};
use ncprop::Result;

fn main() -> Result<()> {
    let mut bounds = Bounds::default();
    for (key, value) in [("mackey_size", "2"), ("injection_m", "3"), ("matrix_mid", "3"), ("ordering_n", "3")] {
        bounds.set(key, value)?;
    }
    for suite in SUITES {
        let report = run_suite(suite, &bounds)?;
        println!("{report}");
        for criterion in &report.criteria {
            println!("  {criterion}");
            for failure in &criterion.failures {
                println!("    {failure}");
            }
        }
    }
    Ok(())
}
