//! Machine checks of the transform table and the operational rules.

use cdlaplace::catalog::{all_pass, lookup, rules::lookup_rule, verify_rule, CheckRecord};
use cdlaplace::catalog::verify::catalog_suite;

fn show(records: &[CheckRecord]) {
    for r in records.iter().filter(|r| !r.pass && !r.informational) {
        println!("  FAIL {} at {}: dev {:.2e} > {:.1e}", r.name, r.probe, r.dev, r.tol);
    }
}

fn main() -> cdlaplace::Result<()> {
    let records = catalog_suite(42, None);
    let informational = records.iter().filter(|r| r.informational).count();
    println!("catalog: {} checks ({informational} informational), all pass: {}", records.len(), all_pass(&records));
    show(&records);

    let pair = lookup("damped_cos")?;
    println!("damped_cos: strip {:?}, provenance {:?}", pair.strip, pair.provenance);

    for name in ["shift_exp", "derivative", "convolution"] {
        let rule = lookup_rule(name)?;
        let records = verify_rule(rule, "damped_sin", 42, 3, None);
        println!("{name}: {} checks, all pass: {}", records.len(), all_pass(&records));
        show(&records);
    }
    Ok(())
}
