//! Observed asymptotic energies of a four-line catalog from a receding
//! source, and the double ratios that survive the Doppler shift.

use khalfin::redshift::{demo_catalog, observed_line_table, ratio_diagnostic, rest_ratio, DopplerFrame};

fn main() -> khalfin::Result<()> {
    let cat = demo_catalog();
    let frame = DopplerFrame::new(0.1)?;
    let t = 50.0 * cat.max_crossover_time()?;
    let table = observed_line_table(&cat, &frame, t)?;
    println!("t = {t:.1}, kappa = {:.6}", table.kappa);
    for row in &table.rows {
        println!("{:>3} E0' = {:.6}  Einf' = {:.6e}  gaps ok: {}", row.id, row.e0_obs, row.e_inf_obs, row.delta_pair_check);
    }
    let l = cat.lines();
    println!("rest double ratio       {:.6}", rest_ratio(&l[0], &l[1], &l[2], &l[3])?);
    println!("asymptotic double ratio {:.6}", ratio_diagnostic(&l[0], &l[1], &l[2], &l[3])?);
    Ok(())
}
