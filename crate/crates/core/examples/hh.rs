//! Hochschild cohomology of Γ(3,4;2) up to degree 2p-2 = 4, in characteristics 0, 2, 3.

use ssb::families::FamilySpec;
use ssb::hochschild::{hh_table, verify_resolution};
use ssb::kernel::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = FamilySpec::Gamma { p: 3, q: 4, r: 2 };
    for ch in [0, 2, 3] {
        let a = x.build(Field::new(ch)?)?;
        let rep = verify_resolution(&a, 6)?;
        let t = hh_table(&a, 4)?;
        println!("{x} char {ch}: {:?} (resolution exact {}, minimal {})", t.dims, rep.exact, rep.minimal);
    }
    Ok(())
}
