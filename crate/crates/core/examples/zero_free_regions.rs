//! Optimal constants of the case analysis and the resulting region widths.

use pretentious::zfr::{cases, case_ledger, optimal_constant, region_width};

fn main() -> pretentious::Result<()> {
    for (name, spec) in [("3/(σ−1) − 4/(σ−β) + ℒ", cases::THM1_CASE1), ("52/17 variant", cases::THM1_CASE2_1)] {
        let o = optimal_constant(&spec)?;
        println!("{name}: minimal C_z = {:.6} at C_σ = {:.6}", o.value, o.argmin);
    }
    for e in case_ledger() {
        println!("{:<22} {:>12.6}  (published {})", e.case_id, e.computed, e.paper_value);
    }
    println!("widths at m = m′ = 2, conductors 10, t = 100, over ℚ:");
    for theorem in 1..=3 {
        let w = region_width(theorem, 2, Some(2), 10.0, Some(10.0), 100.0, 1, false)?;
        println!("  theorem {theorem}: σ ≥ 1 − {w:.3e}");
    }
    Ok(())
}
