//! D_σ between representations read from a config file (default: χ and χ̄
//! mod 5), with the six-term expansion and a triangle check.
//!
//!     cargo run --example metric_distance -- examples/configs/chi5_pair.toml

use pretentious::cli::RepConfig;
use pretentious::metric::{distance, distance_sq_expansion, triangle_defect, ExpansionPairs, MetricPoint};
use pretentious::repdata::{AutomorphicRepData, ConductorMode};

fn main() -> pretentious::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/configs/chi5_pair.toml").into());
    let (r1, r2) = RepConfig::load(path.as_ref())?.build_pair()?;
    let (sigma, x) = (1.5, 1e5);
    let x1 = MetricPoint::new(&r1, -1.0, 1)?;
    let x2 = MetricPoint::new(&r2, 1.0, 1)?;
    let d = distance(&x1, &x2, sigma, x)?;
    println!("D_{sigma}(x₁, x₂) = {:.10} (tail ≤ {:.3e})", d.value, d.tail_bound);

    let pairs = ExpansionPairs::new(&r1, &r2, ConductorMode::UpperBound)?;
    let e = distance_sq_expansion(&x1, &x2, sigma, x, &pairs)?;
    println!("log terms {:?}", e.log_terms);
    println!("E terms   {:?}", e.e_terms);
    println!("D² = {:.12}, expansion = {:.12}, residual {:.2e}", e.distance_sq, e.total, e.residual);

    let trivial = AutomorphicRepData::trivial(r1.field());
    let x3 = MetricPoint::new(&trivial, 0.0, -1)?;
    let defect = triangle_defect(&x1, &x2, &x3, sigma, x)?;
    println!("D(x₁,𝟙) + D(𝟙,x₂) − D(x₁,x₂) = {defect:.10}");
    Ok(())
}
