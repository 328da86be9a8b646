//! Cartan data, centre and the Külshammer quotient of Γ(2,2;3) in characteristic 2.

use ssb::families::FamilySpec;
use ssb::invariants::{cartan_determinant, cartan_invariants, cartan_matrix, centre, kulshammer_report};
use ssb::kernel::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = FamilySpec::Gamma { p: 2, q: 2, r: 3 }.build(Field::new(2)?)?;
    println!("Cartan matrix {:?}", cartan_matrix(&a).to_i64());
    println!("invariants {:?}, determinant {}", cartan_invariants(&a), cartan_determinant(&a));
    println!("dim Z = {}", centre(&a).dim());
    let k = kulshammer_report(&a, 1)?;
    println!(
        "dim κ = {}, dim T_1^⊥ = {}, Z/T_1^⊥ layers {:?}",
        k.commutator_dim, k.t_perp_dim, k.quotient_radical_layers
    );
    Ok(())
}
