//! Arithmetic in quaternions, octonions and sedenions.

use cdlaplace::{parse_literal, CDNumber};

fn main() -> cdlaplace::Result<()> {
    let i1 = CDNumber::unit(2, 1)?;
    let i2 = CDNumber::unit(2, 2)?;
    println!("i1 i2 = {}", i1.try_mul(&i2)?);
    println!("i2 i1 = {}", i2.try_mul(&i1)?);

    // octonions lose associativity
    let e = |j| CDNumber::unit(3, j);
    let (a, b, c) = (e(1)?, e(2)?, e(4)?);
    let left = a.try_mul(&b)?.try_mul(&c)?;
    let right = a.try_mul(&b.try_mul(&c)?)?;
    println!("(e1 e2) e4 = {left}, e1 (e2 e4) = {right}");

    let q = parse_literal("1 + 2i1 - 0.5i3", None)?;
    let polar = q.polar()?;
    println!("q = {q}, |q| = {:.6}, axis angle = {}", polar.modulus, polar.axis_angle);
    println!("exp(ln q) = {}", q.ln()?.exp());
    println!("q^-1 q = {}", q.inverse()?.try_mul(&q)?);

    // mixed levels embed into the larger algebra
    let s = parse_literal("1i9", None)? + q.clone();
    println!("sedenion sum at level {}: {s}", s.level());
    Ok(())
}
