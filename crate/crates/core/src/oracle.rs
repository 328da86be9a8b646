//! Brute-force reference computations used to cross-check the engine.
//!
//! Nothing here touches the rewriting engine or [`FiniteAlgebra`]: the algebra is
//! rebuilt from the presentation by closing the relation span under arrow
//! multiplication inside the space of paths of bounded length, and every
//! cohomology count is an explicit rank computation over that model.
//!
//! [`FiniteAlgebra`]: crate::engine::FiniteAlgebra

use std::collections::{HashMap, VecDeque};

use crate::engine::Presentation;
use crate::error::{Result, SsbError};
use crate::kernel::{Accum, Echelon, Field, Scalar, SparseVec};

/// Largest algebra accepted by [`hh1_derivations`].
pub const HH1_LIMIT: usize = 60;
/// Largest algebra accepted by [`hh2_reduced_bar`].
pub const HH2_LIMIT: usize = 60;
/// Largest algebra accepted by [`hh_bimodule`].
pub const BIMODULE_LIMIT: usize = 160;

const MAX_PATH_LEN: usize = 64;
const MAX_PATHS: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct RawPath {
    start: usize,
    arrows: Vec<usize>,
}

/// Algebra rebuilt by brute force: basis paths and a full product table.
#[derive(Clone, Debug)]
pub struct OracleAlgebra {
    field: Field,
    num_vertices: usize,
    /// `(start, arrows, end)` of each basis path
    basis: Vec<(usize, Vec<usize>, usize)>,
    products: Vec<SparseVec>,
    arrow_basis: Vec<usize>,
    idempotents: Vec<usize>,
}

/// Basis paths (start vertex and arrow indices) and the dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteBasis {
    pub paths: Vec<(usize, Vec<usize>)>,
    pub dimension: usize,
}

fn path_order(a: &RawPath, b: &RawPath) -> std::cmp::Ordering {
    // largest first: longer, then lexicographically larger arrow word
    b.arrows.len().cmp(&a.arrows.len()).then_with(|| b.arrows.cmp(&a.arrows)).then_with(|| a.start.cmp(&b.start))
}

struct PathSpace {
    paths: Vec<RawPath>,
    index: HashMap<RawPath, usize>,
    ends: Vec<usize>,
}

fn enumerate_paths(pres: &Presentation, len: usize) -> Result<PathSpace> {
    let q = &pres.quiver;
    let mut paths = Vec::new();
    let mut layer: Vec<RawPath> = (0..q.num_vertices()).map(|v| RawPath { start: v, arrows: Vec::new() }).collect();
    let mut ends: Vec<usize> = (0..q.num_vertices()).collect();
    let mut layer_ends = ends.clone();
    paths.extend(layer.iter().cloned());
    for _ in 0..len {
        let mut next = Vec::new();
        let mut next_ends = Vec::new();
        for (p, &e) in layer.iter().zip(&layer_ends) {
            for (k, arr) in q.arrows().iter().enumerate() {
                if arr.source == e {
                    let mut w = p.arrows.clone();
                    w.push(k);
                    next.push(RawPath { start: p.start, arrows: w });
                    next_ends.push(arr.target);
                }
            }
        }
        if paths.len() + next.len() > MAX_PATHS {
            return Err(SsbError::TooLarge { dim: paths.len() + next.len(), limit: MAX_PATHS });
        }
        paths.extend(next.iter().cloned());
        ends.extend(next_ends.iter().copied());
        layer = next;
        layer_ends = next_ends;
    }
    let mut order: Vec<usize> = (0..paths.len()).collect();
    order.sort_by(|&a, &b| path_order(&paths[a], &paths[b]));
    let paths: Vec<RawPath> = order.iter().map(|&i| paths[i].clone()).collect();
    let ends: Vec<usize> = order.iter().map(|&i| ends[i]).collect();
    let index = paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    Ok(PathSpace { paths, index, ends })
}

/// Span of the ideal modulo paths longer than `len`.
fn ideal_span(pres: &Presentation, sp: &PathSpace, len: usize) -> Echelon {
    let field = pres.field;
    let q = &pres.quiver;
    let mut ech = Echelon::new(field);
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for rel in &pres.relations {
        let mut acc = Accum::new();
        for (c, p) in &rel.terms {
            if p.len() <= len {
                let rp = RawPath { start: p.start, arrows: p.arrows.clone() };
                acc.add(sp.index[&rp], c.clone());
            }
        }
        queue.push_back(acc.into_vec());
    }
    while let Some(v) = queue.pop_front() {
        if v.is_empty() || !ech.insert(&v) {
            continue;
        }
        for (k, arr) in q.arrows().iter().enumerate() {
            let mut left = Accum::new();
            let mut right = Accum::new();
            for (i, c) in &v {
                let p = &sp.paths[*i];
                if p.arrows.len() >= len {
                    continue;
                }
                if sp.ends[*i] == arr.source {
                    let mut w = p.arrows.clone();
                    w.push(k);
                    right.add(sp.index[&RawPath { start: p.start, arrows: w }], c.clone());
                }
                if p.start == arr.target {
                    let mut w = vec![k];
                    w.extend_from_slice(&p.arrows);
                    left.add(sp.index[&RawPath { start: arr.source, arrows: w }], c.clone());
                }
            }
            queue.push_back(left.into_vec());
            queue.push_back(right.into_vec());
        }
    }
    ech
}

impl OracleAlgebra {
    /// Rebuild the algebra of `pres` by brute force.
    pub fn build(pres: &Presentation) -> Result<OracleAlgebra> {
        let start = pres.max_relation_len().max(1);
        for len in start..=MAX_PATH_LEN {
            let sp = enumerate_paths(pres, len)?;
            let ech = ideal_span(pres, &sp, len);
            let all_long_vanish = (0..sp.paths.len())
                .filter(|&i| sp.paths[i].arrows.len() == len)
                .all(|i| ech.contains(&[(i, pres.field.one())]));
            if !all_long_vanish {
                continue;
            }
            return Ok(OracleAlgebra::from_span(pres, &sp, &ech));
        }
        Err(SsbError::NotFiniteDimensional(MAX_PATH_LEN))
    }

    fn from_span(pres: &Presentation, sp: &PathSpace, ech: &Echelon) -> OracleAlgebra {
        let field = pres.field;
        let pivots: std::collections::HashSet<usize> = ech.pivot_columns().collect();
        let standard: Vec<usize> = (0..sp.paths.len()).filter(|i| !pivots.contains(i)).collect();
        let pos: HashMap<usize, usize> = standard.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let basis: Vec<(usize, Vec<usize>, usize)> =
            standard.iter().map(|&i| (sp.paths[i].start, sp.paths[i].arrows.clone(), sp.ends[i])).collect();
        let dim = basis.len();
        let mut products = Vec::with_capacity(dim * dim);
        for x in 0..dim {
            for y in 0..dim {
                let (s1, w1, e1) = &basis[x];
                let (s2, w2, _) = &basis[y];
                if e1 != s2 {
                    products.push(Vec::new());
                    continue;
                }
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                let rp = RawPath { start: *s1, arrows: w };
                let v = match sp.index.get(&rp) {
                    Some(&i) => ech.reduce(&[(i, field.one())]),
                    None => Vec::new(),
                };
                products.push(v.into_iter().map(|(i, c)| (pos[&i], c)).collect());
            }
        }
        let find =
            |start: usize, arrows: &[usize]| basis.iter().position(|(s, w, _)| *s == start && w.as_slice() == arrows);
        let idempotents = (0..pres.quiver.num_vertices()).map(|v| find(v, &[]).expect("vertex survives")).collect();
        let arrow_basis =
            pres.quiver.arrows().iter().enumerate().map(|(k, a)| find(a.source, &[k]).unwrap_or(usize::MAX)).collect();
        OracleAlgebra { field, num_vertices: pres.quiver.num_vertices(), basis, products, arrow_basis, idempotents }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    fn source(&self, b: usize) -> usize {
        self.basis[b].0
    }

    fn target(&self, b: usize) -> usize {
        self.basis[b].2
    }

    fn is_idempotent(&self, b: usize) -> bool {
        self.basis[b].1.is_empty()
    }

    fn mul_basis(&self, x: usize, y: usize) -> &SparseVec {
        &self.products[x * self.dim() + y]
    }

    fn mul(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = Accum::new();
        for (i, a) in x {
            for (j, b) in y {
                if self.target(*i) == self.source(*j) {
                    acc.add_vec(&(a * b), self.mul_basis(*i, *j));
                }
            }
        }
        acc.into_vec()
    }

    fn corner(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.source(b) == i && self.target(b) == j).collect()
    }

    fn arrows(&self) -> Vec<usize> {
        self.arrow_basis.iter().copied().filter(|&b| b != usize::MAX).collect()
    }

    /// Centre by a direct solve: elements commuting with every idempotent and arrow.
    pub fn centre_dim(&self) -> usize {
        let n = self.dim();
        let mut gens: Vec<usize> = self.idempotents.clone();
        gens.extend(self.arrows());
        // rows: for each generator g and output coordinate, coefficient of x_b in (b g - g b)
        let mut rows: HashMap<(usize, usize), Accum> = HashMap::new();
        for b in 0..n {
            for &g in &gens {
                let bg = self.mul_basis_or_empty(b, g);
                let gb = self.mul_basis_or_empty(g, b);
                for (i, c) in bg {
                    rows.entry((g, i)).or_default().add(b, c);
                }
                for (i, c) in gb {
                    rows.entry((g, i)).or_default().add(b, -&c);
                }
            }
        }
        let mut ech = Echelon::new(self.field);
        for (_, r) in rows {
            ech.insert(&r.into_vec());
        }
        n - ech.rank()
    }

    fn mul_basis_or_empty(&self, x: usize, y: usize) -> SparseVec {
        if self.target(x) == self.source(y) {
            self.mul_basis(x, y).clone()
        } else {
            Vec::new()
        }
    }
}

/// Path basis and dimension by brute-force closure.
pub fn brute_basis(pres: &Presentation) -> Result<BruteBasis> {
    let a = OracleAlgebra::build(pres)?;
    let paths = a.basis.iter().map(|(s, w, _)| (*s, w.clone())).collect();
    Ok(BruteBasis { paths, dimension: a.dim() })
}

fn check_size(dim: usize, limit: usize) -> Result<()> {
    if dim > limit {
        Err(SsbError::TooLarge { dim, limit })
    } else {
        Ok(())
    }
}

/// `dim HH^1` as derivations modulo inner derivations.
///
/// Every derivation is inner-equivalent to one killing the idempotents, so
/// this counts `D(a) ∈ e_o(a) A e_t(a)` on arrows with `D(relation) = 0`, minus
/// the inner derivations `ad x` for `x ∈ ⊕ e_v A e_v`, whose kernel is the centre.
pub fn hh1_derivations(pres: &Presentation) -> Result<usize> {
    let a = OracleAlgebra::build(pres)?;
    check_size(a.dim(), HH1_LIMIT)?;
    let field = a.field;
    let q = &pres.quiver;
    // unknown index: (arrow, basis element of its corner)
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    for (k, arr) in q.arrows().iter().enumerate() {
        for b in a.corner(arr.source, arr.target) {
            unknowns.push((k, b));
        }
    }
    let arrow_elem = |k: usize| -> SparseVec {
        match a.arrow_basis[k] {
            usize::MAX => Vec::new(),
            b => vec![(b, field.one())],
        }
    };
    // each unknown gives a column: its contribution to D(relation) for all relations
    let mut cols: Vec<SparseVec> = Vec::with_capacity(unknowns.len());
    for &(k, b) in &unknowns {
        let mut col = Accum::new();
        let mut offset = 0;
        for rel in &pres.relations {
            let mut image = Accum::new();
            for (c, p) in &rel.terms {
                for (pos, &arr) in p.arrows.iter().enumerate() {
                    if arr != k {
                        continue;
                    }
                    let mut left = vec![(a.idempotents[p.start], field.one())];
                    for &x in &p.arrows[..pos] {
                        left = a.mul(&left, &arrow_elem(x));
                    }
                    let mut mid = a.mul(&left, &[(b, field.one())]);
                    for &x in &p.arrows[pos + 1..] {
                        mid = a.mul(&mid, &arrow_elem(x));
                    }
                    image.add_vec(c, &mid);
                }
            }
            for (i, v) in image.into_vec() {
                col.add(offset + i, v);
            }
            offset += a.dim();
        }
        cols.push(col.into_vec());
    }
    let mut ech = Echelon::new(field);
    for c in &cols {
        ech.insert(c);
    }
    let derivations = unknowns.len() - ech.rank();
    let diagonal: usize = (0..a.num_vertices).map(|v| a.corner(v, v).len()).sum();
    let inner = diagonal - a.centre_dim();
    Ok(derivations - inner)
}

/// `dim HH^2` from the bar complex reduced relative to the vertex span.
///
/// Cochains in degree n are maps on composable n-tuples of radical basis paths,
/// with values in the matching corner of the algebra.
pub fn hh2_reduced_bar(pres: &Presentation) -> Result<usize> {
    let a = OracleAlgebra::build(pres)?;
    check_size(a.dim(), HH2_LIMIT)?;
    let rad: Vec<usize> = (0..a.dim()).filter(|&b| !a.is_idempotent(b)).collect();
    let tuples = |n: usize| -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for t in &out {
                for &x in &rad {
                    if t.last().map_or(true, |&l| a.target(l) == a.source(x)) {
                        let mut u = t.clone();
                        u.push(x);
                        next.push(u);
                    }
                }
            }
            out = next;
        }
        out
    };
    let c1 = tuples(1);
    let c2 = tuples(2);
    let c3 = tuples(3);
    let r1 = bar_rank(&a, &c1, &c2);
    let r2 = bar_rank(&a, &c2, &c3);
    let dim2: usize = c2.iter().map(|t| a.corner(a.source(t[0]), a.target(*t.last().unwrap())).len()).sum();
    Ok(dim2 - r1 - r2)
}

/// Rank of the Hochschild coboundary from n-cochains to (n+1)-cochains.
fn bar_rank(a: &OracleAlgebra, lower: &[Vec<usize>], upper: &[Vec<usize>]) -> usize {
    let field = a.field;
    // coordinates of the lower cochain space
    let mut lower_pos: HashMap<(Vec<usize>, usize), usize> = HashMap::new();
    for t in lower {
        for b in a.corner(a.source(t[0]), a.target(*t.last().unwrap())) {
            let n = lower_pos.len();
            lower_pos.insert((t.clone(), b), n);
        }
    }
    let lower_index: HashMap<&Vec<usize>, ()> = lower.iter().map(|t| (t, ())).collect();
    let n = upper[0].len();
    // each upper coordinate (tuple, output basis) is a row; collect as rows
    let mut ech = Echelon::new(field);
    for t in upper {
        let mut rows: HashMap<usize, Accum> = HashMap::new();
        // x_1 f(x_2..)
        let rest = t[1..].to_vec();
        if lower_index.contains_key(&rest) {
            for b in a.corner(a.source(rest[0]), a.target(*rest.last().unwrap())) {
                for (o, c) in a.mul(&[(t[0], field.one())], &[(b, field.one())]) {
                    rows.entry(o).or_default().add(lower_pos[&(rest.clone(), b)], c);
                }
            }
        }
        // Σ (-1)^i f(.., x_i x_{i+1}, ..)
        for i in 0..n - 1 {
            let sign = if (i + 1) % 2 == 0 { field.one() } else { field.from_i64(-1) };
            for (m, c) in a.mul_basis(t[i], t[i + 1]).clone() {
                let mut u = t[..i].to_vec();
                u.push(m);
                u.extend_from_slice(&t[i + 2..]);
                for b in a.corner(a.source(u[0]), a.target(*u.last().unwrap())) {
                    if let Some(&col) = lower_pos.get(&(u.clone(), b)) {
                        rows.entry(b).or_default().add(col, &sign * &c);
                    }
                }
            }
        }
        // (-1)^n f(x_1..x_{n-1}) x_n
        let init = t[..n - 1].to_vec();
        let sign = if n % 2 == 0 { field.one() } else { field.from_i64(-1) };
        for b in a.corner(a.source(init[0]), a.target(*init.last().unwrap())) {
            for (o, c) in a.mul(&[(b, field.one())], &[(t[n - 1], field.one())]) {
                rows.entry(o).or_default().add(lower_pos[&(init.clone(), b)], &sign * &c);
            }
        }
        for (_, r) in rows {
            ech.insert(&r.into_vec());
        }
    }
    ech.rank()
}

/// A bimodule `⊕ A e_i ⊗ e_j A` in coordinates `(summand, x, y)`.
struct FreeBimodule {
    pairs: Vec<(usize, usize)>,
    coords: Vec<(usize, usize, usize)>,
    position: HashMap<(usize, usize, usize), usize>,
}

impl FreeBimodule {
    fn new(a: &OracleAlgebra, pairs: Vec<(usize, usize)>) -> FreeBimodule {
        let mut coords = Vec::new();
        for (s, &(i, j)) in pairs.iter().enumerate() {
            for x in (0..a.dim()).filter(|&x| a.target(x) == i) {
                for y in (0..a.dim()).filter(|&y| a.source(y) == j) {
                    coords.push((s, x, y));
                }
            }
        }
        let position = coords.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        FreeBimodule { pairs, coords, position }
    }

    fn dim(&self) -> usize {
        self.coords.len()
    }

    /// `z · v · w` for basis paths `z`, `w` (either may be absent).
    fn act(&self, a: &OracleAlgebra, z: Option<usize>, v: &[(usize, Scalar)], w: Option<usize>) -> SparseVec {
        let mut acc = Accum::new();
        for (k, c) in v {
            let (s, x, y) = self.coords[*k];
            let left: SparseVec = match z {
                Some(z) => a.mul_basis_or_empty(z, x),
                None => vec![(x, a.field.one())],
            };
            if left.is_empty() {
                continue;
            }
            let right: SparseVec = match w {
                Some(w) => a.mul_basis_or_empty(y, w),
                None => vec![(y, a.field.one())],
            };
            for (x2, c1) in &left {
                for (y2, c2) in &right {
                    acc.add(self.position[&(s, *x2, *y2)], &(c * c1) * c2);
                }
            }
        }
        acc.into_vec()
    }
}

fn kernel_of(field: Field, rows: usize, cols: &[SparseVec]) -> Vec<SparseVec> {
    crate::kernel::FieldMatrix::from_columns(field, rows, cols).kernel_basis()
}

/// `dim HH^n` for `n = 0..=max_degree` from a minimal bimodule resolution
/// computed numerically, generator by generator.
pub fn hh_bimodule(pres: &Presentation, max_degree: usize) -> Result<Vec<usize>> {
    Ok(bimodule_resolution(pres, max_degree)?.0)
}

/// Vertex pairs `(i, j)` of the summands `A e_i ⊗ e_j A` of a minimal bimodule
/// resolution, degrees `0..=max_degree`.
pub fn bimodule_summands(pres: &Presentation, max_degree: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    let (_, stages) = bimodule_resolution(pres, max_degree.saturating_sub(1))?;
    Ok(stages.into_iter().take(max_degree + 1).collect())
}

fn bimodule_resolution(pres: &Presentation, max_degree: usize) -> Result<(Vec<usize>, Vec<Vec<(usize, usize)>>)> {
    let a = OracleAlgebra::build(pres)?;
    check_size(a.dim(), BIMODULE_LIMIT)?;
    let field = a.field;
    let nv = a.num_vertices;
    let arrows = a.arrows();

    let p0 = FreeBimodule::new(&a, (0..nv).map(|v| (v, v)).collect());
    // multiplication map P^0 -> A
    let mut cols = Vec::with_capacity(p0.dim());
    for &(_, x, y) in &p0.coords {
        cols.push(a.mul_basis_or_empty(x, y));
    }
    let mut kernel = kernel_of(field, a.dim(), &cols);
    let mut modules = vec![p0];
    let mut generators: Vec<Vec<SparseVec>> = vec![Vec::new()];
    for _ in 0..=max_degree {
        let cur = modules.last().unwrap();
        // minimal generators of the kernel, one (i, j) corner at a time
        let mut rad = Vec::new();
        for k in &kernel {
            for &x in &arrows {
                rad.push(cur.act(&a, Some(x), k, None));
                rad.push(cur.act(&a, None, k, Some(x)));
            }
        }
        let mut pairs = Vec::new();
        let mut gens = Vec::new();
        for i in 0..nv {
            for j in 0..nv {
                let proj = |v: &SparseVec| -> SparseVec {
                    v.iter()
                        .filter(|(k, _)| {
                            let (_, x, y) = cur.coords[*k];
                            a.source(x) == i && a.target(y) == j
                        })
                        .cloned()
                        .collect()
                };
                let mut ech = Echelon::new(field);
                for r in &rad {
                    let p = proj(r);
                    if !p.is_empty() {
                        ech.insert(&p);
                    }
                }
                for k in &kernel {
                    let p = proj(k);
                    if !p.is_empty() && ech.insert(&p) {
                        pairs.push((i, j));
                        gens.push(p);
                    }
                }
            }
        }
        let next = FreeBimodule::new(&a, pairs);
        let mut cols = Vec::with_capacity(next.dim());
        for &(s, x, y) in &next.coords {
            cols.push(cur.act(&a, Some(x), &gens[s], Some(y)));
        }
        kernel = kernel_of(field, cur.dim(), &cols);
        modules.push(next);
        generators.push(gens);
    }

    // Hom(P^n, A) = ⊕ e_i A e_j; the coboundary evaluates φ on generator images
    let hom_coords = |m: &FreeBimodule| -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (s, &(i, j)) in m.pairs.iter().enumerate() {
            for b in a.corner(i, j) {
                out.push((s, b));
            }
        }
        out
    };
    let coboundary_rank = |n: usize| -> usize {
        let lower = &modules[n];
        let upper = &modules[n + 1];
        let dst: HashMap<(usize, usize), usize> =
            hom_coords(upper).into_iter().enumerate().map(|(k, c)| (c, k)).collect();
        let mut ech = Echelon::new(field);
        for (s, b) in hom_coords(lower) {
            let mut col = Accum::new();
            for (s2, g) in generators[n + 1].iter().enumerate() {
                for (k, c) in g {
                    let (t, x, y) = lower.coords[*k];
                    if t != s {
                        continue;
                    }
                    let xb = a.mul_basis_or_empty(x, b);
                    let v = a.mul(&xb, &[(y, field.one())]);
                    for (o, d) in v {
                        col.add(dst[&(s2, o)], c * &d);
                    }
                }
            }
            ech.insert(&col.into_vec());
        }
        ech.rank()
    };
    let mut dims = Vec::new();
    let mut prev_rank = 0;
    for n in 0..=max_degree {
        let hom = hom_coords(&modules[n]).len();
        let r = coboundary_rank(n);
        dims.push(hom - r - prev_rank);
        prev_rank = r;
    }
    let stages = modules.into_iter().map(|m| m.pairs).collect();
    Ok((dims, stages))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn pres(spec: &str, ch: u64) -> Presentation {
        spec.parse::<FamilySpec>().unwrap().presentation(Field::new(ch).unwrap()).unwrap()
    }

    #[test]
    fn brute_dimensions() {
        assert_eq!(brute_basis(&pres("lambda(1,1,2,2)", 0)).unwrap().dimension, 4);
        assert_eq!(brute_basis(&pres("gamma(2,2,1)", 0)).unwrap().dimension, 18);
        assert_eq!(brute_basis(&pres("nakayama(3,2)", 0)).unwrap().dimension, 21);
    }

    #[test]
    fn derivation_examples() {
        assert_eq!(hh1_derivations(&pres("lambda(1,2,2,2)", 3)).unwrap(), 3);
        assert_eq!(hh1_derivations(&pres("gamma(2,2,1)", 0)).unwrap(), 2);
        assert_eq!(hh1_derivations(&pres("gamma(1,1,1)", 2)).unwrap(), 8);
    }

    #[test]
    fn size_limits() {
        assert!(matches!(hh2_reduced_bar(&pres("gamma(3,4,2)", 0)), Err(SsbError::TooLarge { .. })));
    }
}
