//! Positivity behind D*: the Gram-type matrices over a character family,
//! the classical 3-4-1 combination and its D* form.

use pretentious::arithmetic::{character_group, prime_ideal, IdealKey, NumberField};
use pretentious::metric::{psd_check, standard_combination, three_four_one_terms};
use pretentious::repdata::AutomorphicRepData;

fn main() -> pretentious::Result<()> {
    let family: Vec<_> = character_group(8).iter().map(AutomorphicRepData::from_character).collect();
    for p in [3u64, 5, 7, 97] {
        let ideal = prime_ideal(NumberField::Rational, IdealKey::new(p, 0))?;
        for k in 1..=3 {
            let r = psd_check(&family, &ideal, k)?;
            println!(
                "mod 8 family at {p}^{k}: hermitian error {:.1e}, min eigenvalue {:+.3e}",
                r.hermitian_error, r.min_eigenvalue
            );
        }
    }

    let worst = three_four_one_terms(1.1, 14.134725, 1e5)?
        .into_iter()
        .map(|t| t.combination)
        .fold(f64::INFINITY, f64::min);
    println!("smallest 3-4-1 term at σ = 1.1, γ = 14.134725: {worst:.3e}");

    let chi = AutomorphicRepData::from_character(&character_group(5)[1]);
    let c = standard_combination(&chi, 2.0, 1.5, 1e5)?;
    println!(
        "D* combination {:.10} vs four-term sum {:.10} (residual {:.1e})",
        c.via_dstar, c.direct, c.residual
    );
    Ok(())
}
