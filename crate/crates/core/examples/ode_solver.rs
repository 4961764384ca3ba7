//! A quaternion forced oscillator solved by residues and by line inversion.

use cdlaplace::ode::{grid, solve_ode, Forcing, Method, ODEProblem, SolveOptions};
use cdlaplace::{parse_literal, CDNumber};

fn main() -> cdlaplace::Result<()> {
    // x'' + 4x = sin(2t) i2, x(0) = 1, x'(0) = 0
    let coeffs = vec![CDNumber::real(2, 1.0), CDNumber::zero(2), CDNumber::real(2, 4.0)];
    let forcing = Forcing::Pair {
        name: "sin".into(),
        params: [("omega".to_string(), 2.0)].into(),
        coeff: parse_literal("1i2", None)?,
    };
    let prob = ODEProblem::new(coeffs, vec![CDNumber::real(2, 1.0), CDNumber::zero(2)], forcing)?;
    let ts = grid(0.0, 3.0, 0.5)?;
    for method in [Method::Residue, Method::Bromwich] {
        let sol = solve_ode(&prob, &ts, method, SolveOptions::default())?;
        println!("{method:?}: max defect {:.1e}", sol.defect.max_defect);
        for (t, x) in sol.t.iter().zip(&sol.x) {
            let exact_i2 = (2.0 * t).sin() / 8.0 - t * (2.0 * t).cos() / 4.0;
            println!("  t = {t:.1}: {x}  (exact {:.6}, {exact_i2:.6}i2)", (2.0 * t).cos());
        }
    }
    Ok(())
}
