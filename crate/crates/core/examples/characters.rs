//! The Dirichlet character group mod 12 and a few Kronecker symbols.

use pretentious::arithmetic::{character_group, kronecker_character};

fn main() -> pretentious::Result<()> {
    let q = 12;
    for (i, chi) in character_group(q).iter().enumerate() {
        let values: Vec<String> = (1..q as i64)
            .map(|n| {
                let v = chi.value(n);
                if v.norm() == 0.0 {
                    "0".to_string()
                } else {
                    format!("{:+.0}", v.re)
                }
            })
            .collect();
        println!(
            "χ_{i} mod {q}: conductor {:>2}, parity {:+}, values {}",
            chi.conductor(),
            chi.parity(),
            values.join(" ")
        );
    }
    for d in [-4, 5, -7, 8, 12] {
        let chi = kronecker_character(d)?;
        println!("(d/·) for d = {d}: modulus {}, χ(2..8) = {:?}", chi.modulus(), (2..9).map(|n| chi.value(n).re).collect::<Vec<_>>());
    }
    Ok(())
}
