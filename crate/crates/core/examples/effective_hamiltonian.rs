//! Instantaneous energy and decay rate: the energy drops below E_min and
//! the rate falls off as 2ħ/t once the power-law tail takes over.

use khalfin::crossover::solve_crossover;
use khalfin::effham::{effective_hamiltonian, effective_hamiltonian_fd};
use khalfin::{NormalizedDensity, ResonanceParams};

fn main() -> khalfin::Result<()> {
    let p = ResonanceParams::from_ratio(0.0, 100.0, 1.0, 1.0)?;
    let d = NormalizedDensity::new(p)?;
    let t_as = solve_crossover(&d)?.t_as(&p);
    println!("t_as = {t_as:.4}");
    println!("{:>10} {:>16} {:>14} {:>10} {:>10}", "t/t_as", "E - E_min", "rate", "rate t/2", "fd diff");
    for k in [0.01, 0.1, 0.5, 2.0, 10.0, 100.0] {
        let t = k * t_as;
        let h = effective_hamiltonian(&d, t)?;
        let fd = effective_hamiltonian_fd(&d, t)?;
        let diff = (fd.h - h.h).norm() / h.h.norm();
        println!(
            "{k:10.2} {:16.6e} {:14.6e} {:10.6} {diff:10.1e}{}",
            h.energy - p.e_min,
            h.rate,
            h.rate * t / (2.0 * p.hbar),
            if h.ill_conditioned { "  (near a zero of a)" } else { "" }
        );
    }
    Ok(())
}
