//! Run the closed-form grid at a small size.

use ssb::suite::{run, SuiteConfig};

fn main() {
    let cfg = SuiteConfig { max: 2, ..SuiteConfig::default() };
    for r in run(&cfg) {
        println!("{r}");
    }
}
