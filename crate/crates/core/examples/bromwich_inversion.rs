//! Numerical inversion along a vertical line in a quaternion direction.

use cdlaplace::catalog::{build_pair, Params};
use cdlaplace::inversion::{bromwich_invert, BromwichOptions};
use cdlaplace::{parse_literal, CDNumber, Error};

fn main() -> cdlaplace::Result<()> {
    let params = Params::from([("omega".to_string(), 1.5)]);
    let pair = build_pair("cos", &params)?;
    let s = parse_literal("0.6i1 + 0.8i2", None)?;
    let image = |p: &_| pair.image(p).expect("inside the half-plane");
    let opts = BromwichOptions::one_sided(pair.strip.0);
    for t in [-1.0, 0.0, 0.5, 1.0, 2.0] {
        let inv = match bromwich_invert(image, 1.0, &s, t, pair.kernel, 1e-6, &opts) {
            Ok(inv) => inv,
            // the jump at t = 0 converges slowly, so report the best value
            Err(Error::Accuracy { best, err, .. }) => {
                println!("t = {t:>4}: {} (tolerance missed, err {err:.1e})", CDNumber::from_slice(2, &best));
                continue;
            }
            Err(e) => return Err(e),
        };
        println!(
            "t = {t:>4}: {} (exact {}, err {:.1e}, theta_max {}{})",
            inv.value,
            pair.original.eval(t),
            inv.err_estimate,
            inv.theta_max,
            if inv.jump_midpoint { ", jump midpoint" } else { "" }
        );
    }
    Ok(())
}
