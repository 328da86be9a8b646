//! Build Γ(2,3;1) and print its projectives.
//!
//! cargo run --example build -- "gamma(2,3,1)" 0

use ssb::families::{validate_structure, FamilySpec};
use ssb::kernel::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let spec: FamilySpec = args.next().as_deref().unwrap_or("gamma(2,3,1)").parse()?;
    let ch: u64 = args.next().map_or(Ok(0), |s| s.parse())?;
    let a = spec.build(Field::new(ch)?)?;
    println!("{spec} over char {ch}: dimension {} (closed form {})", a.dim(), spec.expected_dim());
    for p in a.projective_structure() {
        println!("  P{}: dim {}, layers {:?}", p.vertex + 1, p.dimension, p.radical_layers);
    }
    println!("{:?}", validate_structure(&a));
    Ok(())
}
