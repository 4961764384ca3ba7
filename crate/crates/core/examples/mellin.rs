//! Mellin transforms and their inversion through the two-sided transform.

use cdlaplace::catalog::{build_pair, Params};
use cdlaplace::catalog::verify::gamma_round_trip;
use cdlaplace::inversion::mellin_invert;
use cdlaplace::transforms::mellin_forward;
use cdlaplace::{parse_literal, CDNumber};

fn main() -> cdlaplace::Result<()> {
    let pair = build_pair("mellin_rational", &Params::new())?;
    let p = parse_literal("0.5 + 0.7i2", None)?;
    let zeta = CDNumber::zero(2);
    let q = mellin_forward(&pair.original, pair.kernel, &p, &zeta, 1e-10)?;
    println!("M[1/(1+tau)] at {p}: {} (closed form {})", q.value, pair.image(&p)?);

    let s = parse_literal("1i2", None)?;
    let image = |w: &_| pair.image(w).expect("inside the strip");
    for tau in [0.5, 1.0, 3.0] {
        let inv = mellin_invert(image, 0.5, &s, tau, 1e-7, pair.strip)?;
        println!("tau = {tau}: {} (exact {:.10})", inv.value, 1.0 / (1.0 + tau));
    }

    for r in gamma_round_trip() {
        println!("{}: dev {:.1e} pass {}", r.name, r.dev, r.pass);
    }
    Ok(())
}
