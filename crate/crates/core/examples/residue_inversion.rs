//! Exact inversion of rational images by residues, with the Laurent series
//! as a second route.

use cdlaplace::inversion::{residue_invert_rational, series_invert, RationalImage};
use cdlaplace::{parse_literal, KernelSpec};

fn main() -> cdlaplace::Result<()> {
    // 1 / (p (p^3 + 1))
    let r = RationalImage::real(vec![1.0], vec![0.0, 1.0, 0.0, 0.0, 1.0])?;
    let tail = r.laurent_tail(60)?;
    for t in [0.5, 1.0, 2.0] {
        let res = residue_invert_rational(&r, t)?;
        let ser = series_invert(&tail, t)?;
        println!("t = {t}: residues {res}, series {} (remainder <= {:.1e})", ser.value, ser.remainder_bound);
    }

    // quaternion numerator over a repeated pole: (1i2 + p 1i1) / (p^2 + 1)^2
    let num = vec![parse_literal("1i2", None)?, parse_literal("1i1", None)?];
    let r = RationalImage::new(num, vec![1.0, 0.0, 2.0, 0.0, 1.0], KernelSpec::linear(2))?;
    println!("repeated poles at t = 1: {}", residue_invert_rational(&r, 1.0)?);
    Ok(())
}
