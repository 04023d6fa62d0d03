//! The Hadamard-product upper bound for −Re ζ′/ζ(s) as zeros are added.

use num_complex::Complex64;
use pretentious::arithmetic::NumberField;
use pretentious::eulersum::log_derivative_standard;
use pretentious::hadamard::{hadamard_bound, zeta_zeros};
use pretentious::repdata::{AutomorphicRepData, RankinSelbergPair};

fn main() -> pretentious::Result<()> {
    let zeta = AutomorphicRepData::trivial(NumberField::Rational);
    let pair = RankinSelbergPair::with_contragredient(&zeta);
    let zeros = zeta_zeros().with_conjugates();
    for t in [0.0, 5.0, 14.134725] {
        let s = Complex64::new(1.5, t);
        let lhs = log_derivative_standard(&zeta, s, 1e6)?;
        print!("t = {t:<9} −Re ζ′/ζ = {:.6};  bound with n zeros:", lhs.value.re);
        for n in [0, 2, 20, zeros.len()] {
            print!("  {n}: {:.4}", hadamard_bound(s, &zeros, &pair, n)?);
        }
        println!();
    }
    Ok(())
}
