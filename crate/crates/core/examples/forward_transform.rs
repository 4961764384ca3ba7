//! Forward one-sided and two-sided transforms by quadrature, compared with
//! catalog closed forms.

use cdlaplace::catalog::{build_pair, Params};
use cdlaplace::transforms::{laplace_one_sided, laplace_two_sided, Original, Support, TransformRequest};
use cdlaplace::{parse_literal, CDNumber, KernelSpec};

fn main() -> cdlaplace::Result<()> {
    let p = parse_literal("1 + 1i1 + 0.5i2", None)?;
    let params = Params::from([("omega".to_string(), 2.0)]);
    let pair = build_pair("sin", &params)?;
    let req = TransformRequest::new(pair.original.clone(), pair.kernel, p.clone()).with_tol(1e-10);
    let q = laplace_one_sided(&req)?;
    let closed = pair.image(&p)?;
    println!("sin(2t) at p = {p}");
    println!("  quadrature  {} (err {:.1e}, {} panels)", q.value, q.err_estimate, q.panels_used);
    println!("  closed form {closed}");

    // exp(-|t|) over the whole line converges for |Re p| < 1
    let f = Original::new("exp(-|t|)", Support::TwoSided, -1.0, 1.0, |t: f64| CDNumber::real(2, (-t.abs()).exp()));
    let p = parse_literal("0.25 + 1i3", None)?;
    let req = TransformRequest::new(f, KernelSpec::linear(2), p.clone()).with_tol(1e-10);
    let q = laplace_two_sided(&req)?;
    println!("two-sided exp(-|t|) at p = {p}: {}", q.value);
    Ok(())
}
