use std::collections::HashMap;

use super::quiver::{Path, Presentation};
use super::rewrite::{Poly, RewriteSystem, Word};
use crate::error::{Result, SsbError};
use crate::kernel::{Accum, Echelon, Field, FieldMatrix, Scalar, SparseVec};

/// Element of a finite algebra in the normal-form path basis.
pub type Elem = SparseVec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPath {
    pub path: Path,
    pub source: usize,
    pub target: usize,
}

impl BasisPath {
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_idempotent(&self) -> bool {
        self.path.is_trivial()
    }
}

#[derive(Clone, Debug)]
pub struct BuildOptions {
    /// Longest path the closure may reach before giving up.
    pub len_bound: Option<usize>,
    /// Check associativity on every composable basis triple.
    pub check_associativity: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { len_bound: None, check_associativity: true }
    }
}

impl BuildOptions {
    /// Default options, with the length bound taken from `SSB_LEN_BOUND` when set.
    pub fn from_env() -> BuildOptions {
        let len_bound = std::env::var("SSB_LEN_BOUND").ok().and_then(|v| v.trim().parse().ok());
        BuildOptions { len_bound, ..Default::default() }
    }
}

/// Per-vertex data on the right projective `e_i A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveReport {
    pub vertex: usize,
    pub dimension: usize,
    pub radical_layers: Vec<usize>,
    pub uniserial: bool,
}

/// Finite-dimensional algebra `KQ/I` with exact structure constants.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    pres: Presentation,
    basis: Vec<BasisPath>,
    index: HashMap<Path, usize>,
    idempotents: Vec<usize>,
    arrow_elems: Vec<usize>,
    products: Vec<Elem>,
    system: RewriteSystem,
}

pub fn default_len_bound(pres: &Presentation) -> usize {
    4 * pres.max_relation_len().max(2) * pres.quiver.arrows().len().max(1)
}

pub fn build_algebra(pres: &Presentation) -> Result<FiniteAlgebra> {
    build_algebra_with(pres, &BuildOptions::default())
}

pub fn build_algebra_with(pres: &Presentation, opts: &BuildOptions) -> Result<FiniteAlgebra> {
    pres.validate()?;
    let field = pres.field;
    let bound = opts.len_bound.unwrap_or_else(|| default_len_bound(pres));
    let rels: Vec<Poly> =
        pres.relations.iter().map(|r| r.terms.iter().map(|(c, p)| (c.clone(), to_word(&p.arrows))).collect()).collect();
    let system = RewriteSystem::complete(field, rels, bound)?;

    // irreducible words, grown one arrow at a time
    let q = &pres.quiver;
    let mut basis: Vec<BasisPath> =
        (0..q.num_vertices()).map(|v| BasisPath { path: Path::trivial(v), source: v, target: v }).collect();
    let mut frontier: Vec<usize> = (0..basis.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for b in frontier {
            let (src, tgt) = (basis[b].source, basis[b].target);
            for (ai, a) in q.arrows().iter().enumerate() {
                if a.source != tgt {
                    continue;
                }
                let mut w = to_word(&basis[b].path.arrows);
                w.push(ai as u32);
                if system.has_lead_suffix(&w) {
                    continue;
                }
                if w.len() > bound {
                    return Err(SsbError::NotFiniteDimensional(bound));
                }
                let path = Path { start: src, arrows: basis[b].path.arrows.iter().copied().chain([ai]).collect() };
                basis.push(BasisPath { path, source: src, target: a.target });
                next.push(basis.len() - 1);
            }
        }
        frontier = next;
    }

    let index: HashMap<Path, usize> = basis.iter().enumerate().map(|(i, b)| (b.path.clone(), i)).collect();
    let idempotents: Vec<usize> = (0..q.num_vertices()).collect();
    let arrow_elems: Vec<usize> =
        (0..q.arrows().len()).map(|ai| index[&Path { start: q.arrow(ai).source, arrows: vec![ai] }]).collect();

    let dim = basis.len();
    let mut alg =
        FiniteAlgebra { pres: pres.clone(), basis, index, idempotents, arrow_elems, products: Vec::new(), system };
    let mut products = vec![Vec::new(); dim * dim];
    for x in 0..dim {
        for y in 0..dim {
            if alg.basis[x].target != alg.basis[y].source {
                continue;
            }
            products[x * dim + y] = if alg.basis[x].is_idempotent() {
                vec![(y, field.one())]
            } else if alg.basis[y].is_idempotent() {
                vec![(x, field.one())]
            } else {
                let mut w = to_word(&alg.basis[x].path.arrows);
                w.extend(alg.basis[y].path.arrows.iter().map(|&a| a as u32));
                alg.word_to_elem(&[(field.one(), w)], alg.basis[x].source)?
            };
        }
    }
    alg.products = products;
    if opts.check_associativity {
        alg.check_associativity()?;
    }
    Ok(alg)
}

fn to_word(arrows: &[usize]) -> Word {
    arrows.iter().map(|&a| a as u32).collect()
}

impl FiniteAlgebra {
    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn field(&self) -> Field {
        self.pres.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.idempotents.len()
    }

    pub fn basis(&self) -> &[BasisPath] {
        &self.basis
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    /// Basis index of the arrow with the given index.
    pub fn arrow_basis(&self, a: usize) -> usize {
        self.arrow_elems[a]
    }

    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.system
    }

    fn word_to_elem(&self, p: &[(Scalar, Word)], start: usize) -> Result<Elem> {
        let nf = self.system.reduce(p);
        let mut acc = Accum::new();
        for (c, w) in nf {
            let path = Path { start, arrows: w.iter().map(|&a| a as usize).collect() };
            let i = self.index.get(&path).ok_or_else(|| {
                SsbError::NonConfluent(format!(
                    "normal form {} is not a basis path",
                    self.pres.quiver.format_path(&path)
                ))
            })?;
            acc.add(*i, c);
        }
        Ok(acc.into_vec())
    }

    /// Class of a path in the algebra. Panics if the path does not compose.
    pub fn path_elem(&self, p: &Path) -> Elem {
        assert!(self.pres.quiver.path_end(p).is_some(), "path does not compose");
        if p.is_trivial() {
            return vec![(self.idempotents[p.start], self.field().one())];
        }
        let mut cur: Elem = vec![(self.idempotents[p.start], self.field().one())];
        for &a in &p.arrows {
            cur = self.mul(&cur, &[(self.arrow_elems[a], self.field().one())]);
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        vec![(i, self.field().one())]
    }

    pub fn one(&self) -> Elem {
        self.idempotents.iter().map(|&i| (i, self.field().one())).collect()
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, x: usize, y: usize) -> &Elem {
        &self.products[x * self.dim() + y]
    }

    pub fn mul(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> Elem {
        let mut acc = Accum::new();
        for (i, a) in x {
            for (j, b) in y {
                if self.basis[*i].target != self.basis[*j].source {
                    continue;
                }
                let ab = a * b;
                acc.add_vec(&ab, self.mul_basis(*i, *j));
            }
        }
        acc.into_vec()
    }

    pub fn mul3(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)], z: &[(usize, Scalar)]) -> Elem {
        let xy = self.mul(x, y);
        self.mul(&xy, z)
    }

    pub fn sub(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> Elem {
        crate::kernel::axpy(x, &self.field().from_i64(-1), y)
    }

    pub fn pow(&self, x: &[(usize, Scalar)], n: u64) -> Elem {
        let mut r = self.one();
        for _ in 0..n {
            r = self.mul(&r, x);
        }
        r
    }

    /// Indices of basis paths in `e_i A e_j`.
    pub fn corner(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].source == i && self.basis[b].target == j).collect()
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> usize {
        self.basis.iter().filter(|b| b.source == i && b.target == j).count()
    }

    pub fn format_basis(&self, i: usize) -> String {
        self.pres.quiver.format_path(&self.basis[i].path)
    }

    pub fn format_elem(&self, x: &[(usize, Scalar)]) -> String {
        if x.is_empty() {
            return "0".into();
        }
        x.iter()
            .map(|(i, c)| if c.is_one() { self.format_basis(*i) } else { format!("{}*{}", c, self.format_basis(*i)) })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Exhaustive associativity on composable basis triples (other triples vanish on both sides).
    pub fn check_associativity(&self) -> Result<()> {
        let n = self.dim();
        let by_source: Vec<Vec<usize>> =
            (0..self.num_vertices()).map(|v| (0..n).filter(|&b| self.basis[b].source == v).collect()).collect();
        for x in 0..n {
            for &y in &by_source[self.basis[x].target] {
                let xy = self.mul_basis(x, y);
                for &z in &by_source[self.basis[y].target] {
                    let left = self.mul(xy, &self.basis_elem(z));
                    let yz = self.mul_basis(y, z);
                    let right = self.mul(&self.basis_elem(x), yz);
                    if left != right {
                        return Err(SsbError::NonConfluent(format!(
                            "associativity fails on ({}, {}, {})",
                            self.format_basis(x),
                            self.format_basis(y),
                            self.format_basis(z)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Left multiplication `x -> a x` as a matrix in the path basis (column convention).
    pub fn left_mult_matrix(&self, a: &[(usize, Scalar)]) -> FieldMatrix {
        let n = self.dim();
        let mut cols: Vec<Elem> = Vec::with_capacity(n);
        for b in 0..n {
            cols.push(self.mul(a, &self.basis_elem(b)));
        }
        columns_to_matrix(self.field(), n, &cols)
    }

    /// Right multiplication `x -> x a`.
    pub fn right_mult_matrix(&self, a: &[(usize, Scalar)]) -> FieldMatrix {
        let n = self.dim();
        let mut cols: Vec<Elem> = Vec::with_capacity(n);
        for b in 0..n {
            cols.push(self.mul(&self.basis_elem(b), a));
        }
        columns_to_matrix(self.field(), n, &cols)
    }

    /// Radical layers of the right projective `e_v A`.
    pub fn projective_report(&self, v: usize) -> ProjectiveReport {
        let field = self.field();
        let mut current: Vec<Elem> =
            (0..self.dim()).filter(|&b| self.basis[b].source == v).map(|b| self.basis_elem(b)).collect();
        let total = current.len();
        let mut layers = Vec::new();
        let mut prev = total;
        while prev > 0 {
            let mut next = Echelon::new(field);
            let mut gens = Vec::new();
            for x in &current {
                for &a in &self.arrow_elems {
                    let y = self.mul(x, &self.basis_elem(a));
                    if !y.is_empty() && next.insert(&y) {
                        gens.push(y);
                    }
                }
            }
            layers.push(prev - next.rank());
            prev = next.rank();
            current = gens;
        }
        let uniserial = layers.iter().all(|&d| d <= 1);
        ProjectiveReport { vertex: v, dimension: total, radical_layers: layers, uniserial }
    }

    pub fn projective_structure(&self) -> Vec<ProjectiveReport> {
        (0..self.num_vertices()).map(|v| self.projective_report(v)).collect()
    }

    /// Right socle of `e_v A`: elements killed by every arrow on the right.
    pub fn socle_of_projective(&self, v: usize) -> Vec<Elem> {
        let field = self.field();
        let cols: Vec<usize> = (0..self.dim()).filter(|&b| self.basis[b].source == v).collect();
        let mut m = FieldMatrix::new(field, cols.len());
        let mut rows: HashMap<usize, Accum> = HashMap::new();
        let n = self.dim();
        for a in 0..self.pres.quiver.arrows().len() {
            for (k, &b) in cols.iter().enumerate() {
                for (j, c) in self.mul(&self.basis_elem(b), &self.basis_elem(self.arrow_elems[a])) {
                    rows.entry(a * n + j).or_default().add(k, c);
                }
            }
        }
        let mut keys: Vec<usize> = rows.keys().copied().collect();
        keys.sort();
        for key in keys {
            m.push_row(rows.remove(&key).unwrap().into_vec());
        }
        m.kernel_basis().into_iter().map(|v| v.into_iter().map(|(k, c)| (cols[k], c)).collect()).collect()
    }
}

pub(crate) fn columns_to_matrix(field: Field, nrows: usize, cols: &[Elem]) -> FieldMatrix {
    FieldMatrix::from_columns(field, nrows, cols)
}
