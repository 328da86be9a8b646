//! The isomorphism Γ(1,1;1) ≅ Λ(1,1;2,2) away from characteristic 2.

use ssb::classify::verify_explicit_iso;
use ssb::kernel::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for ch in [0, 3, 5, 7, 2] {
        match verify_explicit_iso(Field::new(ch)?) {
            Ok(rep) => println!(
                "char {ch}: ε = {}, adjoined i: {}, isomorphism: {}",
                rep.epsilon, rep.adjoined, rep.isomorphism
            ),
            Err(e) => println!("char {ch}: {e}"),
        }
    }
    Ok(())
}
