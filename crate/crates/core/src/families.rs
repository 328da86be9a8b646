//! The three families Γ(p,q;r), Λ(p,q;s,t) and N_m^n.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::{Arrow, FiniteAlgebra, Path, Presentation, Quiver, Relation};
use crate::error::{Result, SsbError};
use crate::kernel::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    Gamma { p: u32, q: u32, r: u32 },
    Lambda { p: u32, q: u32, s: u32, t: u32 },
    Nakayama { n: u32, m: u32 },
}

impl FamilySpec {
    /// Canonical form: p <= q, and (s,t) sorted when p = q. Checks the parameter constraints.
    pub fn canonical(self) -> Result<FamilySpec> {
        Ok(self.canonical_with_swap()?.0)
    }

    /// Canonical form and whether the two cycles were exchanged.
    pub fn canonical_with_swap(self) -> Result<(FamilySpec, bool)> {
        match self {
            FamilySpec::Gamma { p, q, r } => {
                if p == 0 || q == 0 || r == 0 {
                    return Err(SsbError::InvalidParams(format!("{self}: parameters must be positive")));
                }
                if p > q {
                    Ok((FamilySpec::Gamma { p: q, q: p, r }, true))
                } else {
                    Ok((self, false))
                }
            }
            FamilySpec::Lambda { p, q, s, t } => {
                if p == 0 || q == 0 || s == 0 || t == 0 {
                    return Err(SsbError::InvalidParams(format!("{self}: parameters must be positive")));
                }
                let (p, q, s, t, swapped) = if p > q { (q, p, t, s, true) } else { (p, q, s, t, false) };
                let (s, t) = if p == q && s > t { (t, s) } else { (s, t) };
                if p == 1 && s < 2 {
                    return Err(SsbError::InvalidParams(format!("{self}: p = 1 requires s >= 2")));
                }
                if q == 1 && (p != 1 || s < 2 || t < 2) {
                    return Err(SsbError::InvalidParams(format!("{self}: q = 1 requires p = 1, s >= 2 and t >= 2")));
                }
                Ok((FamilySpec::Lambda { p, q, s, t }, swapped))
            }
            FamilySpec::Nakayama { n, m } => {
                if n == 0 || m == 0 {
                    return Err(SsbError::InvalidParams(format!("{self}: parameters must be positive")));
                }
                Ok((self, false))
            }
        }
    }

    pub fn num_simples(&self) -> u32 {
        match *self {
            FamilySpec::Gamma { p, q, .. } | FamilySpec::Lambda { p, q, .. } => p + q - 1,
            FamilySpec::Nakayama { n, .. } => n,
        }
    }

    /// Dimension predicted by the closed formulas. For Λ this counts the basis of
    /// paths cut off by γ^s = δ^t, so s weighs the α cycle.
    pub fn expected_dim(&self) -> u64 {
        match *self {
            FamilySpec::Gamma { p, q, r } => {
                let (p, q, r) = (p as u64, q as u64, r as u64);
                (p + q) * (p + q) * r + p + q - 2
            }
            FamilySpec::Lambda { p, q, s, t } => {
                let (p, q, s, t) = (p as u64, q as u64, s as u64, t as u64);
                s * p * p + t * q * q + p + q - 2
            }
            FamilySpec::Nakayama { n, m } => {
                let (n, m) = (n as u64, m as u64);
                n * (n * m + 1)
            }
        }
    }

    pub fn presentation(&self, field: Field) -> Result<Presentation> {
        match *self {
            FamilySpec::Gamma { p, q, r } => gamma(p, q, r, field),
            FamilySpec::Lambda { p, q, s, t } => lambda(p, q, s, t, field),
            FamilySpec::Nakayama { n, m } => nakayama(n, m, field),
        }
    }

    pub fn build(&self, field: Field) -> Result<FiniteAlgebra> {
        crate::engine::build_algebra(&self.presentation(field)?)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Gamma { p, q, r } => write!(f, "gamma({p},{q},{r})"),
            FamilySpec::Lambda { p, q, s, t } => write!(f, "lambda({p},{q},{s},{t})"),
            FamilySpec::Nakayama { n, m } => write!(f, "nakayama({n},{m})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = SsbError;

    fn from_str(text: &str) -> Result<FamilySpec> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
        let err = |msg: &str| SsbError::ParseError { line: 1, col: 1, msg: format!("{msg}: {text:?}") };
        let open = compact.find('(').ok_or_else(|| err("expected '('"))?;
        if !compact.ends_with(')') {
            return Err(err("expected ')'"));
        }
        let name = &compact[..open];
        let args: Vec<u32> = compact[open + 1..compact.len() - 1]
            .split(',')
            .map(|a| a.parse::<u32>().map_err(|_| err("expected a positive integer argument")))
            .collect::<Result<_>>()?;
        match (name, args.as_slice()) {
            ("gamma", &[p, q, r]) => Ok(FamilySpec::Gamma { p, q, r }),
            ("lambda", &[p, q, s, t]) => Ok(FamilySpec::Lambda { p, q, s, t }),
            ("nakayama", &[n, m]) => Ok(FamilySpec::Nakayama { n, m }),
            ("gamma" | "lambda" | "nakayama", _) => Err(err("wrong number of arguments")),
            _ => Err(err("unknown family")),
        }
    }
}

/// Index helpers for the two-cycle quiver Q_(p,q). Arrow and vertex indices
/// follow the 1-based labelling α_i, β_j and vertices 1..p+q-1, returned as
/// 0-based internal indices.
#[derive(Clone, Copy, Debug)]
pub struct CycleQuiver {
    pub p: usize,
    pub q: usize,
}

impl CycleQuiver {
    pub fn new(p: usize, q: usize) -> CycleQuiver {
        CycleQuiver { p, q }
    }

    pub fn alpha(&self, i: usize) -> usize {
        (i - 1) % self.p
    }

    pub fn beta(&self, j: usize) -> usize {
        self.p + (j - 1) % self.q
    }

    /// Vertex at position k of the α cycle: o(α_k), read cyclically.
    pub fn av(&self, k: i64) -> usize {
        (k - 1).rem_euclid(self.p as i64) as usize
    }

    /// Vertex at position k of the β cycle: t(β_k); position 0 is vertex 1.
    pub fn bv(&self, k: i64) -> usize {
        let r = k.rem_euclid(self.q as i64) as usize;
        if r == 0 {
            0
        } else {
            self.p + r - 1
        }
    }

    /// Vertex index of the label written e_v in formulas indexed along the β cycle
    /// (labels p+1..p+q-1, with p+q and p meaning vertex 1).
    pub fn beta_label(&self, label: i64) -> usize {
        self.bv(label - self.p as i64)
    }

    pub fn quiver(&self) -> Quiver {
        let (p, q) = (self.p, self.q);
        let vertices = (1..p + q).map(|v| v.to_string()).collect();
        let mut arrows = Vec::new();
        for i in 1..=p {
            arrows.push(Arrow { name: format!("a{i}"), source: self.av(i as i64), target: self.av(i as i64 + 1) });
        }
        for j in 1..=q {
            arrows.push(Arrow { name: format!("b{j}"), source: self.bv(j as i64 - 1), target: self.bv(j as i64) });
        }
        Quiver::new(vertices, arrows).expect("two-cycle quiver is valid")
    }

    /// α_from ⋯ α_to; empty (the trivial path at o(α_from)) when to = from - 1.
    pub fn a_run(&self, from: i64, to: i64) -> Path {
        assert!(to >= from - 1, "malformed α run {from}..{to}");
        Path { start: self.av(from), arrows: (from..=to).map(|i| self.alpha(i as usize)).collect() }
    }

    pub fn b_run(&self, from: i64, to: i64) -> Path {
        assert!(to >= from - 1, "malformed β run {from}..{to}");
        Path { start: self.bv(from - 1), arrows: (from..=to).map(|j| self.beta(j as usize)).collect() }
    }

    pub fn gamma(&self) -> Path {
        self.a_run(1, self.p as i64)
    }

    pub fn delta(&self) -> Path {
        self.b_run(1, self.q as i64)
    }

    /// γ_i = α_i ⋯ α_p α_1 ⋯ α_{i-1}
    pub fn gamma_i(&self, i: i64) -> Path {
        cat(&[self.a_run(i, self.p as i64), self.a_run(1, i - 1)])
    }

    pub fn delta_j(&self, j: i64) -> Path {
        cat(&[self.b_run(j, self.q as i64), self.b_run(1, j - 1)])
    }

    /// η_i = α_i ⋯ α_p δ α_1 ⋯ α_{i-1}
    pub fn eta(&self, i: i64) -> Path {
        cat(&[self.a_run(i, self.p as i64), self.delta(), self.a_run(1, i - 1)])
    }

    /// θ_j = β_j ⋯ β_q γ β_1 ⋯ β_{j-1}
    pub fn theta(&self, j: i64) -> Path {
        cat(&[self.b_run(j, self.q as i64), self.gamma(), self.b_run(1, j - 1)])
    }
}

/// Concatenate paths; trivial factors are skipped. The start of the result is the
/// start of the first factor.
pub fn cat(parts: &[Path]) -> Path {
    let start = parts.first().map(|p| p.start).expect("nonempty product");
    let mut arrows = Vec::new();
    for p in parts {
        arrows.extend_from_slice(&p.arrows);
    }
    Path { start, arrows }
}

pub fn power(p: &Path, k: usize) -> Path {
    Path { start: p.start, arrows: p.arrows.repeat(k) }
}

pub fn gamma(p: u32, q: u32, r: u32, field: Field) -> Result<Presentation> {
    let spec = FamilySpec::Gamma { p, q, r }.canonical()?;
    let FamilySpec::Gamma { p, q, r } = spec else { unreachable!() };
    let (p, q, r) = (p as usize, q as usize, r as usize);
    let c = CycleQuiver::new(p, q);
    let quiver = c.quiver();
    let gd = cat(&[c.gamma(), c.delta()]);
    let dg = cat(&[c.delta(), c.gamma()]);
    let mut rels = vec![Relation::binomial(field, power(&gd, r), power(&dg, r))];
    for i in 2..p.saturating_sub(1) + 1 {
        let i = i as i64;
        rels.push(Relation::monomial(field, cat(&[power(&c.eta(i), r), c.a_run(i, i)])));
    }
    rels.push(Relation::monomial(field, cat(&[c.a_run(p as i64, p as i64), c.a_run(1, 1)])));
    rels.push(Relation::monomial(field, cat(&[c.b_run(q as i64, q as i64), c.b_run(1, 1)])));
    for j in 2..q.saturating_sub(1) + 1 {
        let j = j as i64;
        rels.push(Relation::monomial(field, cat(&[power(&c.theta(j), r), c.b_run(j, j)])));
    }
    let mut pres = Presentation::new(quiver, rels, field)?;
    pres.family = Some(spec);
    Ok(pres)
}

/// Γ with the superfluous i = p and j = q generators added.
pub fn gamma_with_superfluous(p: u32, q: u32, r: u32, field: Field) -> Result<Presentation> {
    let mut pres = gamma(p, q, r, field)?;
    let Some(FamilySpec::Gamma { p, q, r }) = pres.family else { unreachable!() };
    let (p, q, r) = (p as usize, q as usize, r as usize);
    let c = CycleQuiver::new(p, q);
    if p >= 2 {
        let i = p as i64;
        pres.relations.push(Relation::monomial(field, cat(&[power(&c.eta(i), r), c.a_run(i, i)])));
    }
    if q >= 2 {
        let j = q as i64;
        pres.relations.push(Relation::monomial(field, cat(&[power(&c.theta(j), r), c.b_run(j, j)])));
    }
    pres.validate()?;
    Ok(pres)
}

pub fn lambda(p: u32, q: u32, s: u32, t: u32, field: Field) -> Result<Presentation> {
    let spec = FamilySpec::Lambda { p, q, s, t }.canonical()?;
    let FamilySpec::Lambda { p, q, s, t } = spec else { unreachable!() };
    let (p, q, s, t) = (p as usize, q as usize, s as usize, t as usize);
    let c = CycleQuiver::new(p, q);
    let quiver = c.quiver();
    let (pi, qi) = (p as i64, q as i64);
    let mut rels = vec![Relation::binomial(field, power(&c.gamma(), s), power(&c.delta(), t))];
    for i in 2..pi {
        rels.push(Relation::monomial(field, cat(&[c.a_run(i, pi), power(&c.gamma(), s - 1), c.a_run(1, i)])));
    }
    rels.push(Relation::monomial(field, cat(&[c.a_run(pi, pi), c.b_run(1, 1)])));
    rels.push(Relation::monomial(field, cat(&[c.b_run(qi, qi), c.a_run(1, 1)])));
    for j in 2..qi {
        rels.push(Relation::monomial(field, cat(&[c.b_run(j, qi), power(&c.delta(), t - 1), c.b_run(1, j)])));
    }
    let mut pres = Presentation::new(quiver, rels, field)?;
    pres.family = Some(spec);
    Ok(pres)
}

pub fn nakayama(n: u32, m: u32, field: Field) -> Result<Presentation> {
    let spec = FamilySpec::Nakayama { n, m }.canonical()?;
    let (n, m) = (n as usize, m as usize);
    let vertices = (1..=n).map(|v| v.to_string()).collect();
    let arrows = (0..n).map(|i| Arrow { name: format!("a{}", i + 1), source: i, target: (i + 1) % n }).collect();
    let quiver = Quiver::new(vertices, arrows)?;
    let len = n * m + 1;
    let rels = (0..n)
        .map(|v| Relation::monomial(field, Path { start: v, arrows: (0..len).map(|k| (v + k) % n).collect() }))
        .collect();
    let mut pres = Presentation::new(quiver, rels, field)?;
    pres.family = Some(spec);
    Ok(pres)
}

/// Structural checks on a built algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub special_biserial: bool,
    pub weakly_symmetric: bool,
    pub symmetric_form_ok: bool,
    pub arrow_degrees_ok: bool,
    pub nonuniserial_count: usize,
}

impl StructureReport {
    pub fn all_ok(&self) -> bool {
        self.special_biserial && self.weakly_symmetric && self.symmetric_form_ok && self.arrow_degrees_ok
    }
}

pub fn validate_structure(a: &FiniteAlgebra) -> StructureReport {
    let q = &a.presentation().quiver;
    let nv = q.num_vertices();
    let na = q.arrows().len();
    let out_deg: Vec<usize> = (0..nv).map(|v| q.arrows().iter().filter(|x| x.source == v).count()).collect();
    let in_deg: Vec<usize> = (0..nv).map(|v| q.arrows().iter().filter(|x| x.target == v).count()).collect();
    let nonzero = |x: usize, y: usize| !a.mul_basis(a.arrow_basis(x), a.arrow_basis(y)).is_empty();
    let succ: Vec<usize> =
        (0..na).map(|x| (0..na).filter(|&y| q.arrow(x).target == q.arrow(y).source && nonzero(x, y)).count()).collect();
    let pred: Vec<usize> =
        (0..na).map(|x| (0..na).filter(|&y| q.arrow(y).target == q.arrow(x).source && nonzero(y, x)).count()).collect();

    let special_biserial = out_deg.iter().all(|&d| d <= 2)
        && in_deg.iter().all(|&d| d <= 2)
        && succ.iter().all(|&c| c <= 1)
        && pred.iter().all(|&c| c <= 1);

    let weakly_symmetric = (0..nv).all(|v| {
        let soc = a.socle_of_projective(v);
        soc.len() == 1 && soc[0].iter().all(|(b, _)| a.basis()[*b].target == v)
    });

    let symmetric_form_ok = crate::invariants::symmetrizing_form(a).is_ok();

    // K[X]/(X^2) is the one algebra where an arrow has no nonzero continuation
    let is_dual_numbers = nv == 1 && na == 1 && a.dim() == 2;
    let arrow_degrees_ok = is_dual_numbers
        || (succ.iter().all(|&c| c == 1)
            && pred.iter().all(|&c| c == 1)
            && (0..nv).all(|v| in_deg[v] == out_deg[v] && (1..=2).contains(&in_deg[v])));

    let nonuniserial_count = a.projective_structure().iter().filter(|r| !r.uniserial).count();
    StructureReport { special_biserial, weakly_symmetric, symmetric_form_ok, arrow_degrees_ok, nonuniserial_count }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        assert_eq!(" Gamma ( 2, 3 ,1 ) ".parse::<FamilySpec>().unwrap(), FamilySpec::Gamma { p: 2, q: 3, r: 1 });
        assert_eq!("LAMBDA(1,3,2,2)".parse::<FamilySpec>().unwrap(), FamilySpec::Lambda { p: 1, q: 3, s: 2, t: 2 });
        assert!("nakayama(2)".parse::<FamilySpec>().is_err());
        assert!("delta(1,1)".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn canonical_forms() {
        let l = FamilySpec::Lambda { p: 3, q: 3, s: 5, t: 2 }.canonical().unwrap();
        assert_eq!(l, FamilySpec::Lambda { p: 3, q: 3, s: 2, t: 5 });
        let g = FamilySpec::Gamma { p: 3, q: 2, r: 2 }.canonical_with_swap().unwrap();
        assert_eq!(g, (FamilySpec::Gamma { p: 2, q: 3, r: 2 }, true));
        let l = FamilySpec::Lambda { p: 3, q: 1, s: 2, t: 4 }.canonical().unwrap();
        assert_eq!(l, FamilySpec::Lambda { p: 1, q: 3, s: 4, t: 2 });
        assert!(FamilySpec::Lambda { p: 1, q: 3, s: 1, t: 2 }.canonical().is_err());
        assert!(FamilySpec::Lambda { p: 2, q: 1, s: 2, t: 2 }.canonical().is_ok());
        assert!(FamilySpec::Gamma { p: 0, q: 1, r: 1 }.canonical().is_err());
    }

    #[test]
    fn cycle_vertices() {
        let c = CycleQuiver::new(2, 3);
        // vertices 1..4 -> indices 0..3
        assert_eq!(c.bv(0), 0);
        assert_eq!(c.bv(1), 2);
        assert_eq!(c.bv(2), 3);
        assert_eq!(c.bv(3), 0);
        assert_eq!(c.av(3), 0);
        let q = c.quiver();
        assert_eq!(q.num_vertices(), 4);
        assert_eq!(q.arrow(c.beta(3)).target, 0);
    }

    #[test]
    fn gamma_one_one_relations() {
        let f = Field::rationals();
        let pres = gamma(1, 1, 1, f).unwrap();
        assert_eq!(pres.quiver.num_vertices(), 1);
        assert_eq!(pres.relations.len(), 3);
    }
}
