//! Cross-check the engine against the brute-force oracles.

use ssb::families::FamilySpec;
use ssb::hochschild::hh_dim;
use ssb::kernel::Field;
use ssb::oracle::{brute_basis, hh1_derivations, hh2_reduced_bar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (FamilySpec::Gamma { p: 1, q: 1, r: 2 }, 0),
        (FamilySpec::Lambda { p: 1, q: 2, s: 3, t: 2 }, 3),
        (FamilySpec::Gamma { p: 3, q: 3, r: 1 }, 2),
    ];
    // "-" where the explicit resolution stops at stage 2 and HH^2 is only known to the oracle
    for (x, ch) in cases {
        let a = x.build(Field::new(ch)?)?;
        let pres = a.presentation();
        println!(
            "{x} char {ch}: dim {} / {}, HH^1 {} / {}, HH^2 {} / {}",
            a.dim(),
            brute_basis(pres)?.dimension,
            hh_dim(&a, 1)?,
            hh1_derivations(pres)?,
            hh_dim(&a, 2).map_or("-".to_string(), |d| d.to_string()),
            hh2_reduced_bar(pres)?,
        );
    }
    Ok(())
}
