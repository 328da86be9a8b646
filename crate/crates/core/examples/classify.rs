//! Classify a few pairs and audit the separating invariant.

use ssb::classify::{classify, Auditor, Relation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pairs = [
        (Relation::Derived, "gamma(2,3,2)", "gamma(3,2,2)", 0),
        (Relation::Derived, "gamma(2,4,1)", "gamma(3,3,1)", 0),
        (Relation::Derived, "gamma(1,1,1)", "lambda(1,1,2,2)", 2),
        (Relation::StableMorita, "lambda(1,4,2,3)", "lambda(2,3,3,2)", 0),
        (Relation::StableMorita, "nakayama(3,2)", "nakayama(3,3)", 0),
        (Relation::Derived, "gamma(2,2,3)", "lambda(2,2,2,2)", 2),
    ];
    let mut auditor = Auditor::new();
    for (rel, x, y, ch) in pairs {
        let v = classify(rel, x.parse()?, y.parse()?, ch)?;
        println!("{v}");
        for f in &v.cited_facts {
            println!("    [{}] {}", f.key, f.statement);
        }
        if v.separator().is_some() {
            println!("    audit passed: {}", auditor.audit(&v)?.passed());
        }
    }
    Ok(())
}
