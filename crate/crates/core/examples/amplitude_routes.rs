//! Survival amplitude of a narrow resonance by three routes.

use khalfin::survival::{
    amplitude_asymptotic, amplitude_closed_form, amplitude_quadrature, asymptotic_threshold, default_quadrature_spec,
};
use khalfin::{NormalizedDensity, ResonanceParams};

fn main() -> khalfin::Result<()> {
    let d = NormalizedDensity::new(ResonanceParams::from_ratio(0.0, 100.0, 1.0, 1.0)?)?;
    let spec = default_quadrature_spec();
    let threshold = asymptotic_threshold(&d)?;
    println!("asymptotic form reported beyond t = {threshold:.2}");
    println!("{:>8} {:>14} {:>14} {:>14}", "t", "P closed", "P quadrature", "P asymptotic");
    for t in [0.5, 5.0, 20.0, 40.0, 100.0, 400.0] {
        let closed = amplitude_closed_form(&d, t)?;
        let quad = amplitude_quadrature(&d, t, &spec)?;
        let asym = if t > threshold {
            format!("{:14.6e}", amplitude_asymptotic(&d, t, 2)?.probability())
        } else {
            format!("{:>14}", "-")
        };
        println!("{t:8.1} {:14.6e} {:14.6e} {asym}", closed.probability(), quad.probability());
    }
    Ok(())
}
