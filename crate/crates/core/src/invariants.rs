//! Cartan data, centre, symmetrizing form, commutators and Külshammer ideals.

use num_bigint::BigInt;
use serde::Serialize;

use crate::engine::{columns_to_matrix, Elem, FiniteAlgebra};
use crate::error::{Result, SsbError};
use crate::kernel::{Accum, Echelon, Field, FieldMatrix, IntMatrix, Scalar, SparseVec};

/// Linear subspace of an algebra, kept as reduced rows in the path basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    echelon: Echelon,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { ambient, echelon: Echelon::new(field) }
    }

    pub fn spanned_by<'a>(field: Field, ambient: usize, vecs: impl IntoIterator<Item = &'a SparseVec>) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for v in vecs {
            s.echelon.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.echelon.field()
    }

    pub fn contains(&self, v: &[(usize, Scalar)]) -> bool {
        self.echelon.contains(v)
    }

    pub fn insert(&mut self, v: &[(usize, Scalar)]) -> bool {
        self.echelon.insert(v)
    }

    /// Reduced basis rows.
    pub fn basis(&self) -> Vec<SparseVec> {
        self.echelon.rref()
    }

    /// Canonical representative of `v` modulo this subspace.
    pub fn reduce(&self, v: &[(usize, Scalar)]) -> SparseVec {
        self.echelon.reduce(v)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(&v);
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let field = self.field();
        let u = self.basis();
        let w = other.basis();
        // columns: coefficients of u then of w; rows: ambient coordinates of Σa u - Σb w
        let mut cols: Vec<Elem> = u.clone();
        let minus = field.from_i64(-1);
        cols.extend(w.iter().map(|v| crate::kernel::scale(v, &minus)));
        let m = columns_to_matrix(field, self.ambient, &cols);
        let mut out = Subspace::zero(field, self.ambient);
        for k in m.kernel_basis() {
            let mut acc = Accum::new();
            for (i, c) in k {
                if i < u.len() {
                    acc.add_vec(&c, &u[i]);
                }
            }
            out.insert(&acc.into_vec());
        }
        out
    }
}

/// Linear functional on an algebra whose bilinear form `(a,b) -> f(ab)` is symmetric and nondegenerate.
#[derive(Clone, Debug)]
pub struct SymmetrizingForm {
    pub coefficients: SparseVec,
}

impl SymmetrizingForm {
    pub fn eval(&self, x: &[(usize, Scalar)]) -> Scalar {
        let field = match x.first() {
            Some((_, c)) => c.field(),
            None => return self.coefficients.first().map_or(Field::rationals().zero(), |(_, c)| c.field().zero()),
        };
        let mut acc = field.zero();
        for (i, c) in x {
            if let Ok(k) = self.coefficients.binary_search_by_key(i, |e| e.0) {
                acc = &acc + &(c * &self.coefficients[k].1);
            }
        }
        acc
    }

    fn eval_basis(&self, i: usize) -> Option<&Scalar> {
        self.coefficients.binary_search_by_key(&i, |e| e.0).ok().map(|k| &self.coefficients[k].1)
    }
}

pub fn cartan_matrix(a: &FiniteAlgebra) -> IntMatrix {
    let n = a.num_vertices();
    let data: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| a.cartan_entry(i, j) as i64).collect()).collect();
    IntMatrix::from_i64(&data)
}

pub fn cartan_invariants(a: &FiniteAlgebra) -> Vec<BigInt> {
    cartan_matrix(a).smith_normal_form()
}

pub fn cartan_determinant(a: &FiniteAlgebra) -> BigInt {
    cartan_matrix(a).determinant()
}

/// Kernel of `x -> (x g - g x)_g` over the generators `g` (idempotents and arrows).
pub fn centre(a: &FiniteAlgebra) -> Subspace {
    let field = a.field();
    let n = a.dim();
    let mut gens: Vec<usize> = (0..a.num_vertices()).map(|v| a.idempotent(v)).collect();
    gens.extend((0..a.presentation().quiver.arrows().len()).map(|x| a.arrow_basis(x)));
    let mut cols = Vec::with_capacity(n);
    for b in 0..n {
        let mut acc = Accum::new();
        for (k, &g) in gens.iter().enumerate() {
            let bg = a.mul_basis(b, g);
            let gb = a.mul_basis(g, b);
            for (i, c) in bg {
                acc.add(k * n + i, c.clone());
            }
            for (i, c) in gb {
                acc.add(k * n + i, -c);
            }
        }
        cols.push(acc.into_vec());
    }
    let m = columns_to_matrix(field, gens.len() * n, &cols);
    Subspace::spanned_by(field, n, &m.kernel_basis())
}

/// soc(A) as the sum of the socles of the indecomposable projectives.
pub fn socle(a: &FiniteAlgebra) -> Subspace {
    let mut s = Subspace::zero(a.field(), a.dim());
    for v in 0..a.num_vertices() {
        for x in a.socle_of_projective(v) {
            s.insert(&x);
        }
    }
    s
}

/// f = 1 on the socle path of each projective and 0 on every other basis path;
/// then symmetry and nondegeneracy are checked.
pub fn symmetrizing_form(a: &FiniteAlgebra) -> Result<SymmetrizingForm> {
    let field = a.field();
    let mut coeffs: Vec<(usize, Scalar)> = Vec::new();
    for v in 0..a.num_vertices() {
        let soc = a.socle_of_projective(v);
        if soc.len() != 1 {
            return Err(SsbError::NotSymmetric(format!(
                "socle of the projective at vertex {} has dimension {}",
                a.presentation().quiver.vertex_label(v),
                soc.len()
            )));
        }
        // normalize on the longest path in the socle element
        let (i, c) = soc[0].iter().max_by_key(|(i, _)| (a.basis()[*i].len(), *i)).unwrap();
        coeffs.push((*i, c.inv().unwrap()));
    }
    coeffs.sort_by_key(|e| e.0);
    coeffs.dedup_by_key(|e| e.0);
    let form = SymmetrizingForm { coefficients: coeffs };

    let n = a.dim();
    let zero = field.zero();
    let f_of = |x: &Elem| -> Scalar {
        let mut acc = field.zero();
        for (i, c) in x {
            if let Some(fc) = form.eval_basis(*i) {
                acc = &acc + &(c * fc);
            }
        }
        acc
    };
    let mut gram = FieldMatrix::new(field, n);
    for i in 0..n {
        let mut row = Vec::new();
        for j in 0..n {
            let fij = f_of(a.mul_basis(i, j));
            let fji = f_of(a.mul_basis(j, i));
            if fij != fji {
                return Err(SsbError::NotSymmetric(format!(
                    "f({}*{}) != f({}*{})",
                    a.format_basis(i),
                    a.format_basis(j),
                    a.format_basis(j),
                    a.format_basis(i)
                )));
            }
            if fij != zero {
                row.push((j, fij));
            }
        }
        gram.push_row(row);
    }
    if gram.rank() != n {
        return Err(SsbError::NotSymmetric("bilinear form is degenerate".into()));
    }
    Ok(form)
}

/// κ(A): span of all commutators of basis paths.
pub fn commutator_subspace(a: &FiniteAlgebra) -> Subspace {
    let field = a.field();
    let n = a.dim();
    let mut s = Subspace::zero(field, n);
    let minus = field.from_i64(-1);
    for i in 0..n {
        for j in i + 1..n {
            let c = crate::kernel::axpy(a.mul_basis(i, j), &minus, a.mul_basis(j, i));
            if !c.is_empty() {
                s.insert(&c);
            }
        }
    }
    s
}

/// T_n(A) = {x : x^(ℓ^n) ∈ κ(A)} in characteristic ℓ.
///
/// Modulo κ the power map is additive, and over a prime field it is linear,
/// so T_n is the kernel of a matrix whose columns are the reduced powers of basis paths.
pub fn kulshammer_t(a: &FiniteAlgebra, n: u32, kappa: &Subspace) -> Result<Subspace> {
    let field = a.field();
    let ell = field.characteristic();
    if ell == 0 {
        return Err(SsbError::CharZero);
    }
    let e = ell.pow(n);
    let cols: Vec<Elem> = (0..a.dim())
        .map(|b| {
            let x = a.basis_elem(b);
            let mut y = x.clone();
            for _ in 1..e {
                if y.is_empty() {
                    break;
                }
                y = a.mul(&y, &x);
            }
            kappa.reduce(&y)
        })
        .collect();
    let m = columns_to_matrix(field, a.dim(), &cols);
    Ok(Subspace::spanned_by(field, a.dim(), &m.kernel_basis()))
}

/// Orthogonal of `s` under `(x,y) -> f(xy)`.
pub fn perp(a: &FiniteAlgebra, form: &SymmetrizingForm, s: &Subspace) -> Subspace {
    let field = a.field();
    let n = a.dim();
    let mut m = FieldMatrix::new(field, n);
    for x in s.basis() {
        let mut row = Accum::new();
        for (i, c) in &x {
            for j in 0..n {
                let f = form.eval(a.mul_basis(*i, j));
                if !f.is_zero() {
                    row.add(j, c * &f);
                }
            }
        }
        m.push_row(row.into_vec());
    }
    Subspace::spanned_by(field, n, &m.kernel_basis())
}

/// T_n(A)^⊥ with respect to the constructed symmetrizing form.
pub fn kulshammer_perp(a: &FiniteAlgebra, n: u32) -> Result<Subspace> {
    if a.field().characteristic() == 0 {
        return Err(SsbError::CharZero);
    }
    let form = symmetrizing_form(a)?;
    let kappa = commutator_subspace(a);
    let t = kulshammer_t(a, n, &kappa)?;
    Ok(perp(a, &form, &t))
}

/// Dimensions of rad^k / rad^(k+1), k = 0, 1, ..., of the commutative algebra `z / ideal`,
/// where `z` is a subalgebra of the centre. Entry 0 is the dimension of the top.
pub fn quotient_radical_profile(a: &FiniteAlgebra, z: &Subspace, ideal: &Subspace) -> Result<Vec<usize>> {
    if !ideal.is_subspace_of(z) {
        return Err(SsbError::NotAnIdeal("not contained in the ambient subalgebra".into()));
    }
    let zb = z.basis();
    let ib = ideal.basis();
    for x in &zb {
        for y in &ib {
            if !ideal.contains(&a.mul(x, y)) {
                return Err(SsbError::NotAnIdeal(format!(
                    "{} * {} leaves the ideal",
                    a.format_elem(x),
                    a.format_elem(y)
                )));
            }
        }
    }
    // rad(z) = z ∩ rad(A), and rad(A) is spanned by the paths of positive length
    let field = a.field();
    let arrows_span: Vec<SparseVec> =
        (0..a.dim()).filter(|&b| !a.basis()[b].is_idempotent()).map(|b| a.basis_elem(b)).collect();
    let rad_a = Subspace::spanned_by(field, a.dim(), &arrows_span);
    let rad = z.intersection(&rad_a);
    let rad_basis = rad.basis();

    let mut layers = vec![z.dim() - rad.sum(ideal).dim()];
    let mut power = rad.clone();
    loop {
        let mut next = Subspace::zero(field, a.dim());
        for x in power.basis() {
            for y in &rad_basis {
                let xy = a.mul(&x, y);
                if !xy.is_empty() {
                    next.insert(&xy);
                }
            }
        }
        let cur = power.sum(ideal).dim();
        let nxt = next.sum(ideal).dim();
        if cur == nxt {
            break;
        }
        layers.push(cur - nxt);
        power = next;
    }
    Ok(layers)
}

/// Külshammer data for n = 1, as compared by the classifier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KulshammerReport {
    pub n: u32,
    pub commutator_dim: usize,
    pub t_dim: usize,
    pub t_perp_dim: usize,
    pub quotient_dim: usize,
    pub quotient_radical_layers: Vec<usize>,
    /// Set when ℓ != 2: the ℓ^n power map is used in place of squaring.
    pub extension_beyond_char_two: bool,
}

pub fn kulshammer_report(a: &FiniteAlgebra, n: u32) -> Result<KulshammerReport> {
    let form = symmetrizing_form(a)?;
    let kappa = commutator_subspace(a);
    let t = kulshammer_t(a, n, &kappa)?;
    let tp = perp(a, &form, &t);
    let z = centre(a);
    let layers = quotient_radical_profile(a, &z, &tp)?;
    Ok(KulshammerReport {
        n,
        commutator_dim: kappa.dim(),
        t_dim: t.dim(),
        t_perp_dim: tp.dim(),
        quotient_dim: z.dim() - tp.dim(),
        quotient_radical_layers: layers,
        extension_beyond_char_two: a.field().characteristic() != 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn build(s: &str, ch: u64) -> FiniteAlgebra {
        s.parse::<FamilySpec>().unwrap().build(Field::new(ch).unwrap()).unwrap()
    }

    #[test]
    fn cartan_examples() {
        let g = build("gamma(2,3,2)", 0);
        assert_eq!(cartan_determinant(&g), BigInt::from(8));
        assert_eq!(cartan_invariants(&g), [1, 1, 1, 8].map(BigInt::from).to_vec());
        let g = build("gamma(1,2,1)", 0);
        assert_eq!(cartan_invariants(&g), [2, 2].map(BigInt::from).to_vec());
        let l = build("lambda(2,3,2,3)", 0);
        assert_eq!(cartan_invariants(&l), [1, 1, 1, 23].map(BigInt::from).to_vec());
    }

    #[test]
    fn centre_examples() {
        assert_eq!(centre(&build("lambda(1,2,2,3)", 0)).dim(), 6);
        assert_eq!(centre(&build("gamma(1,1,1)", 0)).dim(), 4);
        assert_eq!(centre(&build("gamma(2,2,2)", 3)).dim(), 5);
    }

    #[test]
    fn forms_and_commutators() {
        for s in ["gamma(1,1,1)", "lambda(1,1,2,2)", "nakayama(1,1)", "gamma(2,3,1)", "nakayama(3,2)"] {
            let a = build(s, 0);
            let f = symmetrizing_form(&a).unwrap();
            let k = commutator_subspace(&a);
            for v in k.basis() {
                assert!(f.eval(&v).is_zero(), "{s}");
            }
        }
        assert_eq!(commutator_subspace(&build("gamma(1,1,1)", 0)).dim(), 0);
        assert_eq!(commutator_subspace(&build("gamma(2,2,1)", 0)).dim(), 14);
    }

    #[test]
    fn socle_inside_perp_inside_centre() {
        let a = build("gamma(2,2,3)", 2);
        let tp = kulshammer_perp(&a, 1).unwrap();
        let z = centre(&a);
        assert!(socle(&a).is_subspace_of(&tp));
        assert!(tp.is_subspace_of(&z));
        assert!(tp.dim() < z.dim());
    }

    #[test]
    fn char_zero_rejected() {
        assert!(matches!(kulshammer_perp(&build("gamma(1,1,1)", 0), 1), Err(SsbError::CharZero)));
    }
}
