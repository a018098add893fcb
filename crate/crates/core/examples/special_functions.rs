//! E1(z), its scaled form and both real branches of Lambert W.

use khalfin::numerics::{exp_integral_e1, exp_integral_e1_scaled, lambert_w, LambertBranch};
use khalfin::ComplexValue;

fn main() -> khalfin::Result<()> {
    for z in [
        ComplexValue::new(1.0, 0.0),
        ComplexValue::new(0.5, -50.0),
        ComplexValue::new(-20.0, -0.5),
    ] {
        println!("E1({z}) = {}", exp_integral_e1(z)?);
    }
    // e^z E1(z) stays finite where E1 itself would underflow.
    let far = ComplexValue::new(800.0, 1.0);
    println!("e^z E1(z) at {far} = {}", exp_integral_e1_scaled(far)?);

    let x = -0.05;
    let w0 = lambert_w(LambertBranch::Principal, x)?;
    let wm1 = lambert_w(LambertBranch::Lower, x)?;
    println!("W0({x}) = {w0}, residual {:e}", w0 * w0.exp() - x);
    println!("W-1({x}) = {wm1}, residual {:e}", wm1 * wm1.exp() - x);
    Ok(())
}
