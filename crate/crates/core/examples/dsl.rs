//! Parse a presentation document, build it, and print it back with its DOT graph.

use ssb::dsl::{emit, parse_presentation, to_dot};
use ssb::engine::build_algebra;

const DOC: &str = "# a Brauer graph algebra on two vertices
algebra { char = 3
  vertices = [1, 2]
  arrows = [ a: 1 -> 1, b: 1 -> 2, c: 2 -> 1 ]
  relations = [ a*a - b*c, a*b, c*a ]
}
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = parse_presentation(DOC, 0)?;
    let a = build_algebra(&p)?;
    println!("dimension {}", a.dim());
    println!("{}", emit(&p));
    print!("{}", to_dot(&p, "example"));
    Ok(())
}
