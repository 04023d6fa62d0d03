//! Truncated −L′/L sums with their certified tails.

use num_complex::Complex64;
use pretentious::arithmetic::{kronecker_character, NumberField};
use pretentious::eulersum::log_derivative_standard;
use pretentious::repdata::AutomorphicRepData;

fn main() -> pretentious::Result<()> {
    let zeta = AutomorphicRepData::trivial(NumberField::Rational);
    let s = Complex64::new(2.0, 0.0);
    println!("−ζ′/ζ(2) (true value 0.5699609930…):");
    for x in [1e2, 1e3, 1e4, 1e5, 1e6] {
        let v = log_derivative_standard(&zeta, s, x)?;
        println!("  X = {x:>9}: {:.10}  tail ≤ {:.3e}", v.value.re, v.tail_bound);
    }
    let chi = AutomorphicRepData::from_character(&kronecker_character(-4)?);
    for t in [0.0, 6.02, 14.0] {
        let v = log_derivative_standard(&chi, Complex64::new(1.5, t), 1e5)?;
        println!("−L′/L(1.5 + {t}i, χ₋₄) = {:.8} {:+.8}i", v.value.re, v.value.im);
    }
    let dedekind = AutomorphicRepData::trivial(NumberField::quadratic(-1)?);
    let v = log_derivative_standard(&dedekind, s, 1e5)?;
    println!("−ζ′_K/ζ_K(2) for K = ℚ(i): {:.8} (= −ζ′/ζ(2) − L′/L(2, χ₋₄))", v.value.re);
    Ok(())
}
