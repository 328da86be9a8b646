use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(data: Vec<Vec<BigInt>>) -> IntMatrix {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64(data: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::new(data.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn identity(n: usize) -> IntMatrix {
        let data =
            (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
        IntMatrix { rows: n, cols: n, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn data(&self) -> &[Vec<BigInt>] {
        &self.data
    }

    pub fn to_i64(&self) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.data.iter().map(|r| r.iter().map(|v| v.to_i64().expect("entry fits in i64")).collect()).collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// Invariant factors d1 | d2 | ..., length min(rows, cols), zeros last.
    pub fn smith_normal_form(&self) -> Vec<BigInt> {
        let mut a = self.data.clone();
        let (m, n) = (self.rows, self.cols);
        let mut diag = Vec::new();
        for t in 0..m.min(n) {
            // pivot of minimal nonzero absolute value, first in (row, col) order
            loop {
                let mut best: Option<(usize, usize)> = None;
                for i in t..m {
                    for j in t..n {
                        if a[i][j].is_zero() {
                            continue;
                        }
                        match best {
                            Some((bi, bj)) if a[bi][bj].abs() <= a[i][j].abs() => {}
                            _ => best = Some((i, j)),
                        }
                    }
                }
                let Some((pi, pj)) = best else {
                    // remaining block is zero
                    for _ in t..m.min(n) {
                        diag.push(BigInt::zero());
                    }
                    return finish(diag);
                };
                a.swap(t, pi);
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                let mut clean = true;
                for i in t + 1..m {
                    if a[i][t].is_zero() {
                        continue;
                    }
                    let q = a[i][t].div_floor(&a[t][t]);
                    for j in t..n {
                        let v = &a[i][j] - &q * &a[t][j];
                        a[i][j] = v;
                    }
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..n {
                    if a[t][j].is_zero() {
                        continue;
                    }
                    let q = a[t][j].div_floor(&a[t][t]);
                    for i in t..m {
                        let v = &a[i][j] - &q * &a[i][t];
                        a[i][j] = v;
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    continue;
                }
                // divisibility of the rest by the pivot
                let p = a[t][t].clone();
                let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &p).is_zero()));
                match bad {
                    Some(i) => {
                        for j in t..n {
                            let v = &a[t][j] + &a[i][j];
                            a[t][j] = v;
                        }
                    }
                    None => break,
                }
            }
            diag.push(a[t][t].abs());
        }
        finish(diag)
    }
}

fn finish(mut diag: Vec<BigInt>) -> Vec<BigInt> {
    // the reduction already yields a divisibility chain; the sort only moves zeros last
    diag.sort_by(|x, y| match (x.is_zero(), y.is_zero()) {
        (true, false) => std::cmp::Ordering::Greater,
        (false, true) => std::cmp::Ordering::Less,
        _ => std::cmp::Ordering::Equal,
    });
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(m: &[Vec<i64>]) -> Vec<i64> {
        use num_traits::ToPrimitive;
        IntMatrix::from_i64(m).smith_normal_form().iter().map(|v| v.to_i64().unwrap()).collect()
    }

    #[test]
    fn small_cartan_examples() {
        assert_eq!(snf(&[vec![4, 2], vec![2, 2]]), vec![2, 2]);
        assert_eq!(snf(&[vec![4, 2], vec![2, 3]]), vec![1, 8]);
    }

    #[test]
    fn identity_is_all_ones() {
        let m = IntMatrix::identity(5);
        assert!(m.smith_normal_form().iter().all(|v| v.is_one()));
        assert_eq!(m.determinant(), BigInt::one());
    }

    #[test]
    fn rectangular_and_singular() {
        assert_eq!(snf(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(snf(&[vec![1, 2], vec![2, 4]]), vec![1, 0]);
        assert_eq!(snf(&[vec![6, 4, 0]]), vec![2]);
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(m.determinant(), BigInt::from(-144));
        let z = IntMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(z.determinant(), BigInt::from(-1));
    }
}
