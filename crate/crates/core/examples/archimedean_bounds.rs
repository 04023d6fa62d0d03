//! Digamma, gamma-factor log-derivatives and the margin of
//! |Re ψ_v(s) − log|s|| below its explicit bound.

use num_complex::Complex64;
use pretentious::archimedean::{c1, digamma, euler_gamma, gamma_factor_logderiv, hijt_margin, PlaceKind};

fn main() -> pretentious::Result<()> {
    println!("γ = {:.15}, c₁ = {:.10}", euler_gamma(), c1());
    for z in [Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.0), Complex64::new(-2.5, 0.0), Complex64::new(1.0, 10.0)] {
        let psi = digamma(z)?;
        println!("ψ({z}) = {:.12} {:+.12}i", psi.re, psi.im);
    }
    for place in [PlaceKind::Real, PlaceKind::Complex] {
        let g = gamma_factor_logderiv(place, Complex64::new(1.0, 0.0))?;
        println!("{place:?} gamma factor log-derivative at 1: {:.6}", g.re);
        let mut worst = f64::INFINITY;
        for i in 1..100 {
            for j in -100..=100 {
                let s = Complex64::new(1.0 + i as f64 / 100.0, j as f64 / 2.0);
                worst = worst.min(hijt_margin(place, s)?);
            }
        }
        println!("  smallest margin on 1 < σ < 2, |t| ≤ 50: {worst:.6}");
    }
    Ok(())
}
