//! Crossover from exponential to power-law decay as a function of
//! x = (E⁰ - E_min)/γ⁰, next to the closed approximation 8.28 + 4 ln x + ...

use khalfin::crossover::{paper_approx_in_range, solve_crossover};
use khalfin::{NormalizedDensity, ResonanceParams};

fn main() -> khalfin::Result<()> {
    println!("{:>8} {:>12} {:>12} {:>10}", "x", "s exact", "s approx", "rel diff");
    for x in [10.0, 100.0, 1e3, 1e4, 1e6] {
        let d = NormalizedDensity::new(ResonanceParams::from_ratio(0.0, x, 1.0, 1.0)?)?;
        let r = solve_crossover(&d)?;
        let approx = r.s_paper_approx.map_or("-".to_string(), |s| format!("{s:.4}"));
        let note = if paper_approx_in_range(&d) { "" } else { "  (outside quoted range)" };
        println!(
            "{x:8.0e} {:12.4} {approx:>12} {:10.4}{note}",
            r.s_exact_large,
            r.approx_discrepancy().unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
