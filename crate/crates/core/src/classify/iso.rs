//! The isomorphism Γ(1,1;1) -> Λ(1,1;2,2), α ↦ α + εβ, β ↦ α - εβ, with ε² = -1.
//!
//! When -1 has no square root in the prime field, the check runs over K(i),
//! i² = -1, with elements stored as pairs `re + i·im`.

use serde::Serialize;

use crate::engine::{Elem, FiniteAlgebra, Path};
use crate::error::{Result, SsbError};
use crate::families::FamilySpec;
use crate::kernel::{axpy, scale, Field, FieldMatrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub characteristic: u64,
    /// ε as written in the working field.
    pub epsilon: String,
    /// Whether i with i² = -1 had to be adjoined.
    pub adjoined: bool,
    pub relations_checked: usize,
    pub relations_vanish: bool,
    pub dimension: usize,
    pub rank: usize,
    pub isomorphism: bool,
}

#[derive(Clone, Debug)]
struct Gauss {
    re: Elem,
    im: Elem,
}

impl Gauss {
    fn add(&self, c: &Scalar, other: &Gauss) -> Gauss {
        Gauss { re: axpy(&self.re, c, &other.re), im: axpy(&self.im, c, &other.im) }
    }

    fn mul(&self, a: &FiniteAlgebra, other: &Gauss) -> Gauss {
        let minus = a.field().from_i64(-1);
        let re = axpy(&a.mul(&self.re, &other.re), &minus, &a.mul(&self.im, &other.im));
        let im = axpy(&a.mul(&self.re, &other.im), &a.field().one(), &a.mul(&self.im, &other.re));
        Gauss { re, im }
    }

    fn is_zero(&self) -> bool {
        self.re.is_empty() && self.im.is_empty()
    }
}

/// Square root of -1 in F_ℓ, if one exists.
pub fn sqrt_minus_one(field: Field) -> Option<Scalar> {
    let l = field.characteristic();
    if l == 0 {
        return None;
    }
    (1..l).find(|&x| (x * x + 1) % l == 0).map(|x| field.from_i64(x as i64))
}

pub fn verify_explicit_iso(field: Field) -> Result<IsoReport> {
    let ch = field.characteristic();
    if ch == 2 {
        // ε = 1 here, so α and β have the same image
        return Err(SsbError::CharUnsupported(2));
    }
    let gamma = FamilySpec::Gamma { p: 1, q: 1, r: 1 }.build(field)?;
    let lambda = FamilySpec::Lambda { p: 1, q: 1, s: 2, t: 2 }.build(field)?;
    let (eps_re, eps_im, adjoined) = match sqrt_minus_one(field) {
        Some(e) => (e, field.zero(), false),
        None => (field.zero(), field.one(), true),
    };
    let alpha = lambda.path_elem(&Path { start: 0, arrows: vec![0] });
    let beta = lambda.path_elem(&Path { start: 0, arrows: vec![1] });
    let eps_beta = Gauss { re: scale(&beta, &eps_re), im: scale(&beta, &eps_im) };
    let alpha = Gauss { re: alpha, im: Vec::new() };
    let one = field.one();
    let minus = field.from_i64(-1);
    let images = [alpha.add(&one, &eps_beta), alpha.add(&minus, &eps_beta)];

    let image_of = |p: &Path| -> Gauss {
        let mut acc = Gauss { re: lambda.one(), im: Vec::new() };
        for &k in &p.arrows {
            acc = acc.mul(&lambda, &images[k]);
        }
        acc
    };

    let rels = &gamma.presentation().relations;
    let mut vanish = true;
    for rel in rels {
        let mut sum = Gauss { re: Vec::new(), im: Vec::new() };
        for (c, p) in &rel.terms {
            sum = sum.add(c, &image_of(p));
        }
        vanish &= sum.is_zero();
    }

    // K(i)-linear map M = R + iI, realised over K as [[R, -I], [I, R]]
    let n = gamma.dim();
    let mut cols = Vec::with_capacity(2 * n);
    let imgs: Vec<Gauss> = gamma.basis().iter().map(|b| image_of(&b.path)).collect();
    for g in &imgs {
        cols.push(stack(&g.re, &g.im, n));
    }
    for g in &imgs {
        cols.push(stack(&scale(&g.im, &minus), &g.re, n));
    }
    let rank = FieldMatrix::from_columns(field, 2 * lambda.dim(), &cols).rank();

    let epsilon = if adjoined { "i".to_string() } else { eps_re.to_string() };
    let isomorphism = vanish && n == lambda.dim() && rank == 2 * n;
    Ok(IsoReport {
        characteristic: ch,
        epsilon,
        adjoined,
        relations_checked: rels.len(),
        relations_vanish: vanish,
        dimension: n,
        rank: rank / 2,
        isomorphism,
    })
}

fn stack(top: &Elem, bottom: &Elem, n: usize) -> Elem {
    let mut v = top.clone();
    v.extend(bottom.iter().map(|(i, c)| (i + n, c.clone())));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_minus_one() {
        assert_eq!(sqrt_minus_one(Field::new(5).unwrap()), Some(Field::new(5).unwrap().from_i64(2)));
        assert_eq!(sqrt_minus_one(Field::new(7).unwrap()), None);
        assert_eq!(sqrt_minus_one(Field::new(0).unwrap()), None);
    }

    #[test]
    fn iso_holds_away_from_two() {
        for ch in [0, 3, 5, 7, 13] {
            let rep = verify_explicit_iso(Field::new(ch).unwrap()).unwrap();
            assert!(rep.isomorphism, "char {ch}: {rep:?}");
            assert_eq!(rep.adjoined, ch % 4 != 1);
        }
        assert!(matches!(verify_explicit_iso(Field::new(2).unwrap()), Err(SsbError::CharUnsupported(2))));
    }
}
