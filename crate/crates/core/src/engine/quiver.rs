use std::fmt;

use crate::error::{Result, SsbError};
use crate::families::FamilySpec;
use crate::kernel::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Directed multigraph. Vertices are indexed from 0 and carry display labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// A path written left to right: `start` then `arrows[0]`, `arrows[1]`, ...
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { start: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Quiver> {
        if vertices.is_empty() {
            return Err(SsbError::ValidationError("quiver has no vertices".into()));
        }
        for a in &arrows {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(SsbError::ValidationError(format!("arrow {} has an invalid endpoint", a.name)));
            }
        }
        for (i, a) in arrows.iter().enumerate() {
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(SsbError::ValidationError(format!("duplicate arrow name {}", a.name)));
            }
        }
        let q = Quiver { vertices, arrows };
        if !q.is_connected() {
            return Err(SsbError::ValidationError("quiver is not connected".into()));
        }
        Ok(q)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    /// Terminal vertex of a path, or `None` when consecutive arrows do not compose.
    pub fn path_end(&self, p: &Path) -> Option<usize> {
        let mut v = p.start;
        for &a in &p.arrows {
            let ar = self.arrows.get(a)?;
            if ar.source != v {
                return None;
            }
            v = ar.target;
        }
        Some(v)
    }

    /// Build a path from a sequence of arrows (must be nonempty and composable).
    pub fn path_of(&self, arrows: &[usize]) -> Option<Path> {
        let start = self.arrows.get(*arrows.first()?)?.source;
        let p = Path { start, arrows: arrows.to_vec() };
        self.path_end(&p).map(|_| p)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn format_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e{}", self.vertices[p.start])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// Scalar combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn monomial(field: Field, p: Path) -> Relation {
        Relation { terms: vec![(field.one(), p)] }
    }

    pub fn binomial(field: Field, p: Path, q: Path) -> Relation {
        Relation { terms: vec![(field.one(), p), (field.from_i64(-1), q)] }
    }

    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).max().unwrap_or(0)
    }
}

/// Quiver with relations over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub field: Field,
    /// Set when the presentation was produced by a family constructor.
    pub family: Option<FamilySpec>,
}

impl Presentation {
    pub fn new(quiver: Quiver, relations: Vec<Relation>, field: Field) -> Result<Presentation> {
        let p = Presentation { quiver, relations, field, family: None };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (k, r) in self.relations.iter().enumerate() {
            if r.terms.is_empty() {
                return Err(SsbError::ValidationError(format!("relation {k} is empty")));
            }
            let mut ends = None;
            for (c, p) in &r.terms {
                if c.characteristic() != self.field.characteristic() {
                    return Err(SsbError::ValidationError(format!(
                        "relation {k} has a coefficient in the wrong field"
                    )));
                }
                let end = self
                    .quiver
                    .path_end(p)
                    .ok_or_else(|| SsbError::ValidationError(format!("relation {k} contains a non-composable path")))?;
                let key = (p.start, end);
                match ends {
                    None => ends = Some(key),
                    Some(e) if e != key => {
                        return Err(SsbError::ValidationError(format!(
                            "relation {k} mixes paths with different endpoints"
                        )))
                    }
                    _ => {}
                }
                if p.len() < 2 {
                    return Err(SsbError::NonAdmissible(format!(
                        "relation {k} has a term of length {} (must be at least 2)",
                        p.len()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn max_relation_len(&self) -> usize {
        self.relations.iter().map(|r| r.max_len()).max().unwrap_or(0)
    }

    pub fn format_relation(&self, r: &Relation) -> String {
        let mut s = String::new();
        for (i, (c, p)) in r.terms.iter().enumerate() {
            let (neg, mag) = c.signed_parts();
            if i > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            if mag != "1" {
                s.push_str(&mag);
                s.push('*');
            }
            s.push_str(&self.quiver.format_path(p));
        }
        s
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra {{")?;
        writeln!(f, "  char = {}", self.field.characteristic())?;
        writeln!(f, "  vertices = [{}]", self.quiver.vertex_labels().join(", "))?;
        let arrows: Vec<String> = self
            .quiver
            .arrows()
            .iter()
            .map(|a| {
                format!("{}: {} -> {}", a.name, self.quiver.vertex_label(a.source), self.quiver.vertex_label(a.target))
            })
            .collect();
        writeln!(f, "  arrows = [{}]", arrows.join(", "))?;
        let rels: Vec<String> = self.relations.iter().map(|r| self.format_relation(r)).collect();
        writeln!(f, "  relations = [{}]", rels.join(", "))?;
        write!(f, "}}")
    }
}
