//! The spherical kernel against the linear one, on and off the complex slice.

use cdlaplace::catalog::verify::{kernel_derivative_dev, spherical_suite};
use cdlaplace::kernel::{eval_u, KernelSpec};
use cdlaplace::{parse_literal, CDNumber};

fn main() -> cdlaplace::Result<()> {
    let zeta = CDNumber::zero(2);
    for text in ["1 + 2i1", "1 + 1i1 + 1i2"] {
        let p = parse_literal(text, None)?;
        let lin = eval_u(KernelSpec::linear(2), &p, 0.7, &zeta)?;
        let sph = eval_u(KernelSpec::spherical(2), &p, 0.7, &zeta)?;
        println!("p = {p}");
        println!("  linear    {lin}");
        println!("  spherical {sph}");
        println!("  d/dt identity deviation {:.2e}", kernel_derivative_dev(&p, 0.7, &zeta));
    }
    for r in spherical_suite(42).iter().filter(|r| !r.pass) {
        println!("fails: {} at {} (dev {:.2e})", r.name, r.probe, r.dev);
    }
    Ok(())
}
