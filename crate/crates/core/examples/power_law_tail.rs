//! Fit a power-law model to closed-form tail samples and compare its
//! effective Hamiltonian with the exact one.

use khalfin::crossover::solve_crossover;
use khalfin::effham::{effective_hamiltonian, fit_powerlaw_tail, powerlaw_hamiltonian};
use khalfin::survival::sweep_closed_form;
use khalfin::{NormalizedDensity, ResonanceParams};

fn main() -> khalfin::Result<()> {
    let p = ResonanceParams::from_ratio(0.0, 100.0, 1.0, 1.0)?;
    let d = NormalizedDensity::new(p)?;
    let t_as = solve_crossover(&d)?.t_as(&p);
    let times: Vec<f64> = (0..30).map(|k| 20.0 * t_as * 10f64.powf(k as f64 / 29.0)).collect();
    let fit = fit_powerlaw_tail(&sweep_closed_form(&d, &times)?, p.e_min, p.hbar)?;
    println!(
        "lambda = {:.5}, c0 = {:.6e}, rms log residual {:.2e}",
        fit.model.lambda, fit.model.coefficients[0], fit.rms_log_residual
    );
    for k in [30.0, 100.0] {
        let t = k * t_as;
        let model = powerlaw_hamiltonian(&fit.model, t)?;
        let exact = effective_hamiltonian(&d, t)?;
        println!("t = {t:9.2}: Im h model {:.6e}, exact {:.6e}", model.h.im, exact.h.im);
    }
    Ok(())
}
