use std::collections::BTreeMap;

use super::scalar::{Field, Scalar};

/// Sparse vector: entries sorted by index, no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// `a + c*b` for sorted sparse vectors.
pub fn axpy(a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = c * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(v: &[(usize, Scalar)], c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, c * x)).collect()
}

/// Accumulates scattered contributions into a sparse vector.
#[derive(Clone, Debug, Default)]
pub struct Accum {
    map: BTreeMap<usize, Scalar>,
}

impl Accum {
    pub fn new() -> Accum {
        Accum { map: BTreeMap::new() }
    }

    pub fn add(&mut self, idx: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&idx) {
            Some(v) => {
                *v = &*v + &c;
                if v.is_zero() {
                    self.map.remove(&idx);
                }
            }
            None => {
                self.map.insert(idx, c);
            }
        }
    }

    pub fn add_vec(&mut self, c: &Scalar, v: &[(usize, Scalar)]) {
        for (i, x) in v {
            self.add(*i, c * x);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn into_vec(self) -> SparseVec {
        self.map.into_iter().collect()
    }
}

/// Row echelon form built incrementally. Pivot rows are monic in their
/// leading column.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(field: Field) -> Echelon {
        Echelon { field, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduce `row` against the current pivots (leading-column elimination).
    pub fn reduce(&self, row: &[(usize, Scalar)]) -> SparseVec {
        let mut r: SparseVec = row.to_vec();
        let mut k = 0;
        while k < r.len() {
            let col = r[k].0;
            if let Some(p) = self.pivots.get(&col) {
                let c = -&r[k].1;
                r = axpy(&r, &c, p);
                // entries before position k are untouched since p starts at col
            } else {
                k += 1;
            }
        }
        r
    }

    /// Insert a row; returns true when it enlarged the span.
    pub fn insert(&mut self, row: &[(usize, Scalar)]) -> bool {
        let r = self.reduce(row);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.inv().unwrap();
        let r = scale(&r, &inv);
        self.pivots.insert(r[0].0, r);
        true
    }

    pub fn contains(&self, row: &[(usize, Scalar)]) -> bool {
        self.reduce(row).is_empty()
    }

    /// Fully reduced row echelon form: each pivot column is zero in all other rows.
    pub fn rref(&self) -> Vec<SparseVec> {
        let cols: Vec<usize> = self.pivots.keys().copied().collect();
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for &c in cols.iter().rev() {
            let mut r = self.pivots[&c].clone();
            let mut k = 1;
            while k < r.len() {
                let col = r[k].0;
                if let Some(p) = done.get(&col) {
                    let coef = -&r[k].1;
                    r = axpy(&r, &coef, p);
                } else {
                    k += 1;
                }
            }
            done.insert(c, r);
        }
        done.into_values().collect()
    }
}

/// Matrix over a field, stored as sparse rows.
#[derive(Clone, Debug)]
pub struct FieldMatrix {
    field: Field,
    cols: usize,
    rows: Vec<SparseVec>,
}

impl FieldMatrix {
    pub fn new(field: Field, cols: usize) -> FieldMatrix {
        FieldMatrix { field, cols, rows: Vec::new() }
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> FieldMatrix {
        FieldMatrix { field, cols, rows: vec![Vec::new(); rows] }
    }

    pub fn identity(field: Field, n: usize) -> FieldMatrix {
        let rows = (0..n).map(|i| vec![(i, field.one())]).collect();
        FieldMatrix { field, cols: n, rows }
    }

    pub fn from_i64_rows(field: Field, data: &[Vec<i64>]) -> FieldMatrix {
        let cols = data.first().map_or(0, |r| r.len());
        let mut m = FieldMatrix::new(field, cols);
        for r in data {
            assert_eq!(r.len(), cols, "ragged matrix");
            let row: SparseVec =
                r.iter().enumerate().map(|(j, &v)| (j, field.from_i64(v))).filter(|(_, v)| !v.is_zero()).collect();
            m.rows.push(row);
        }
        m
    }

    /// Matrix with the given sparse columns.
    pub fn from_columns(field: Field, nrows: usize, cols: &[SparseVec]) -> FieldMatrix {
        let mut rows: Vec<Accum> = vec![Accum::new(); nrows];
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col {
                rows[*i].add(j, c.clone());
            }
        }
        let mut m = FieldMatrix::new(field, cols.len());
        for r in rows {
            m.push_row(r.into_vec());
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn push_row(&mut self, row: SparseVec) {
        debug_assert!(row.iter().all(|(j, _)| *j < self.cols));
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        self.rows.push(row);
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.rows[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field);
        for r in &self.rows {
            e.insert(r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of `{x : M x = 0}`, one sparse vector per free column.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        let rref = self.echelon().rref();
        let pivot_of: BTreeMap<usize, &SparseVec> = rref.iter().map(|r| (r[0].0, r)).collect();
        let mut out = Vec::new();
        for f in 0..self.cols {
            if pivot_of.contains_key(&f) {
                continue;
            }
            let mut v: Vec<(usize, Scalar)> = vec![(f, self.field.one())];
            for (&pc, row) in &pivot_of {
                if let Ok(k) = row.binary_search_by_key(&f, |e| e.0) {
                    v.push((pc, -&row[k].1));
                }
            }
            v.sort_by_key(|e| e.0);
            out.push(v);
        }
        out
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                cols[*j].push((i, v.clone()));
            }
        }
        FieldMatrix { field: self.field, cols: self.rows.len(), rows: cols }
    }

    /// `M v` for a sparse column vector.
    pub fn apply(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut acc = self.field.zero();
            let (mut a, mut b) = (0, 0);
            while a < r.len() && b < v.len() {
                if r[a].0 < v[b].0 {
                    a += 1;
                } else if v[b].0 < r[a].0 {
                    b += 1;
                } else {
                    acc = &acc + &(&r[a].1 * &v[b].1);
                    a += 1;
                    b += 1;
                }
            }
            if !acc.is_zero() {
                out.push((i, acc));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_matrix_rank() {
        let f = Field::rationals();
        let m = FieldMatrix::zeros(f, 3, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_dim(), 3);
    }

    #[test]
    fn identity_rank() {
        let m = FieldMatrix::identity(Field::rationals(), 4);
        assert_eq!(m.rank(), 4);
        assert_eq!(m.kernel_dim(), 0);
    }

    #[test]
    fn even_matrix_over_gf2() {
        let f = Field::new(2).unwrap();
        let m = FieldMatrix::from_i64_rows(f, &[vec![4, 2], vec![2, 2]]);
        assert_eq!(m.rank(), 0);
        let q = FieldMatrix::from_i64_rows(Field::rationals(), &[vec![4, 2], vec![2, 2]]);
        assert_eq!(q.rank(), 2);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        for ch in [0u64, 2, 3, 5] {
            let f = Field::new(ch).unwrap();
            let m = FieldMatrix::from_i64_rows(
                f,
                &[vec![1, 2, 3, 4, 0], vec![2, 4, 6, 8, 1], vec![0, 1, 1, 0, 0], vec![1, 3, 4, 4, 1]],
            );
            let k = m.kernel_basis();
            assert_eq!(k.len(), m.kernel_dim());
            for v in &k {
                assert!(m.apply(v).is_empty());
            }
        }
    }

    #[test]
    fn rank_plus_nullity() {
        let f = Field::new(3).unwrap();
        let m = FieldMatrix::from_i64_rows(f, &[vec![1, 1, 1], vec![1, 2, 0], vec![2, 0, 1]]);
        assert_eq!(m.rank() + m.kernel_dim(), 3);
        assert_eq!(m.rank(), 2);
    }
}
