//! Prime ideals of small norm over ℚ, a real and an imaginary quadratic field.

use pretentious::arithmetic::{prime_ideals_up_to, NumberField};

fn main() -> pretentious::Result<()> {
    let fields = [
        NumberField::Rational,
        NumberField::quadratic(5)?,
        NumberField::quadratic(-1)?,
    ];
    for field in fields {
        let table = prime_ideals_up_to(field, 60.0)?;
        println!(
            "{field:?}: discriminant {}, {} prime ideals of norm ≤ 60",
            field.discriminant(),
            table.len()
        );
        for p in table.iter().take(12) {
            let kind = match (field, p.ramified, p.residue_degree) {
                (NumberField::Rational, _, _) => "",
                (_, true, _) => "ramified",
                (_, false, 2) => "inert",
                _ => "split",
            };
            let line = format!("  over {:>3} (#{}) norm {:>4}  {kind}", p.residue_prime, p.index, p.norm);
            println!("{}", line.trim_end());
        }
    }
    Ok(())
}
