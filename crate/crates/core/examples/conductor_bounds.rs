//! Analytic conductors and the local tensor-product conductor inequality.

use num_complex::Complex64;
use pretentious::arithmetic::{character_group, NumberField};
use pretentious::conductor::{
    analytic_conductor, conductor_inequality_margin, local_conductor, mu_helper_margin, rs_analytic_conductor,
    weil_tensor, WeilRepParameter,
};
use pretentious::repdata::{AutomorphicRepData, RankinSelbergPair};

fn main() -> pretentious::Result<()> {
    let zeta = AutomorphicRepData::trivial(NumberField::Rational);
    println!("𝔠(ζ) = {}", analytic_conductor(&zeta, 0.0));
    let chi = AutomorphicRepData::from_character(&character_group(7)[1]);
    println!("𝔠(it, χ mod 7) at t = 0, 10: {:.4}, {:.4}", analytic_conductor(&chi, 0.0), analytic_conductor(&chi, 10.0));
    let pair = RankinSelbergPair::explicit_characters(&chi, &chi)?;
    let check = rs_analytic_conductor(&pair, 5.0);
    println!("𝔠(5i, χ×χ) = {:.4} ≤ {:.4}: {}", check.value, check.bound, check.holds);

    let a = WeilRepParameter::real_induced(3, Complex64::new(0.1, 2.0))?;
    let b = WeilRepParameter::real_induced(1, Complex64::new(-0.2, -1.0))?;
    let d = weil_tensor(&a, &b)?;
    for s in &d.summands {
        println!(
            "  summand k = {}, μ = {:.2}, 𝔠 = {:.4}{}",
            s.param.k(),
            s.param.mu(),
            local_conductor(&s.param, 0.0),
            if s.reducible { " (reducible)" } else { "" }
        );
    }
    println!("inequality margin at t = 4: {:.6}", conductor_inequality_margin(&a, &b, 4.0)?);
    for nu in [-0.4, -0.49, -0.4999] {
        println!("helper margin k = 1, ν = {nu}: {:.6}", mu_helper_margin(1, Complex64::new(nu, 0.0))?);
    }
    Ok(())
}
