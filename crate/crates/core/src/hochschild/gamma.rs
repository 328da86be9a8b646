//! Term table for the bimodule resolution of Γ(p,q;r), p > 1, up to degree 2p.
//!
//! Every generator e_l ⊗ e_r of P^n is sent to a signed sum of tensors u ⊗ v.
//! The summand of P^(n-1) hit by u ⊗ v is read off from the end of u and the
//! start of v; a cycle tag breaks the tie between the two (1,1) summands that
//! P^(2p-1) has when p = q.

use crate::engine::Path;
use crate::families::{cat, power, CycleQuiver};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cycle {
    Alpha,
    Beta,
}

#[derive(Clone, Debug)]
pub struct RawTerm {
    pub sign: i64,
    pub left: Path,
    pub right: Path,
    pub cycle: Cycle,
}

#[derive(Clone, Debug)]
pub struct RawSummand {
    pub left: usize,
    pub right: usize,
    pub cycle: Cycle,
    pub label: String,
    pub terms: Vec<RawTerm>,
}

fn sgn(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

struct Gen {
    c: CycleQuiver,
    p: i64,
    q: i64,
    r: usize,
}

struct Bullet<'a> {
    g: &'a Gen,
    s: RawSummand,
}

impl Bullet<'_> {
    fn add(&mut self, sign: i64, left: Path, right: Path) {
        let cycle = self.s.cycle;
        self.s.terms.push(RawTerm { sign, left, right, cycle });
    }

    fn add_on(&mut self, cycle: Cycle, sign: i64, left: Path, right: Path) {
        self.s.terms.push(RawTerm { sign, left, right, cycle });
    }

    fn e(&self, v: usize) -> Path {
        let _ = self.g;
        Path::trivial(v)
    }
}

impl Gen {
    fn a(&self, x: i64, y: i64) -> Path {
        self.c.a_run(x, y)
    }
    fn b(&self, x: i64, y: i64) -> Path {
        self.c.b_run(x, y)
    }
    fn gamma(&self) -> Path {
        self.c.gamma()
    }
    fn delta(&self) -> Path {
        self.c.delta()
    }
    fn gd(&self, k: usize) -> Path {
        power(&cat(&[self.gamma(), self.delta()]), k)
    }
    fn dg(&self, k: usize) -> Path {
        power(&cat(&[self.delta(), self.gamma()]), k)
    }
    fn eta(&self, i: i64, k: usize) -> Path {
        power(&self.c.eta(i), k)
    }
    fn theta(&self, j: i64, k: usize) -> Path {
        power(&self.c.theta(j), k)
    }
    fn av(&self, x: i64) -> usize {
        self.c.av(x)
    }
    fn bv(&self, x: i64) -> usize {
        self.c.bv(x)
    }

    fn bullet(&self, left: usize, right: usize, cycle: Cycle, label: String) -> Bullet<'_> {
        Bullet { g: self, s: RawSummand { left, right, cycle, label, terms: Vec::new() } }
    }

    fn label(&self, l: usize, r: usize) -> String {
        format!("e{}⊗e{}", l + 1, r + 1)
    }

    fn stage0(&self) -> Vec<RawSummand> {
        (0..(self.p + self.q - 1) as usize)
            .map(|v| RawSummand { left: v, right: v, cycle: Cycle::Alpha, label: self.label(v, v), terms: vec![] })
            .collect()
    }

    /// d^(2n-1) for 1 <= n < p.
    fn odd(&self, n: i64) -> Vec<RawSummand> {
        let (p, q, r) = (self.p, self.q, self.r);
        let r1 = r - 1;
        let mut out = Vec::new();
        let mk = |l: usize, rr: usize, c: Cycle| self.bullet(l, rr, c, self.label(l, rr));

        for i in 2..=p - n {
            let mut b = mk(self.av(i), self.av(i + n), Cycle::Alpha);
            b.add(1, b.e(self.av(i)), self.a(i + n - 1, i + n - 1));
            b.add(-1, self.a(i, i), b.e(self.av(i + n)));
            out.push(b.s);
        }
        for i in p - n + 2..=p {
            let s = sgn(i + p + 1);
            let e = sgn((p - i) * (n - 1));
            let mut b = mk(self.av(i), self.av(i + n - p), Cycle::Alpha);
            b.add(s, b.e(self.av(i)), self.eta(i + n - p, r));
            b.add(s * e, self.a(i, p), self.a(1, n - p + i - 1));
            b.add(-s, self.eta(i, r), b.e(self.av(i + n - p)));
            for m in 1..=p - i {
                b.add(
                    -s * sgn(n) * e * sgn(m * (n - 1)),
                    self.a(i, p - m),
                    cat(&[self.a(n - m + 1, p), self.delta(), self.gd(r1), self.a(1, n - p + i - 1)]),
                );
            }
            for m in p - i + 2..=n - 1 {
                b.add(
                    s * sgn(n) * e * sgn(m * (n - 1)),
                    cat(&[self.a(i, p), self.dg(r1), self.delta(), self.a(1, p - m)]),
                    self.a(n - m + 1, n - p + i - 1),
                );
            }
            out.push(b.s);
        }
        {
            let i0 = p - n + 1;
            let mut b = mk(self.av(i0), 0, Cycle::Alpha);
            b.add(1, b.e(self.av(i0)), self.a(p, p));
            for m in 1..=n - 1 {
                b.add(
                    sgn(n) * sgn(m * (n - 1)),
                    self.a(i0, p - m),
                    cat(&[self.a(n - m + 1, p), self.delta(), self.gd(r1)]),
                );
            }
            b.add(-1, self.a(i0, p), b.e(0));
            out.push(b.s);
        }
        {
            let s = sgn(n - 1);
            let mut b = mk(0, self.av(n + 1), Cycle::Alpha);
            b.add(s, b.e(0), self.a(1, n));
            for m in 1..=n - 1 {
                b.add(
                    s * sgn(n) * sgn(m * (n - 1)),
                    cat(&[self.delta(), self.gd(r1), self.a(1, p - m)]),
                    self.a(n - m + 1, n),
                );
            }
            b.add(s * sgn(n), self.a(1, 1), b.e(self.av(n + 1)));
            out.push(b.s);
        }
        for j in 2..=q - n {
            let mut b = mk(self.bv(j - 1), self.bv(j + n - 1), Cycle::Beta);
            b.add(-1, b.e(self.bv(j - 1)), self.b(j + n - 1, j + n - 1));
            b.add(1, self.b(j, j), b.e(self.bv(j + n - 1)));
            out.push(b.s);
        }
        for j in q - n + 2..=q {
            let s = sgn(j + q);
            let e = sgn((q - j) * (n - 1));
            let mut b = mk(self.bv(j - 1), self.bv(j + n - q - 1), Cycle::Beta);
            b.add(s, b.e(self.bv(j - 1)), self.theta(j + n - q, r));
            b.add(s * e, self.b(j, q), self.b(1, n + j - q - 1));
            b.add(-s, self.theta(j, r), b.e(self.bv(j + n - q - 1)));
            for m in 1..=q - j {
                b.add(
                    -s * sgn(n) * e * sgn(m * (n - 1)),
                    self.b(j, q - m),
                    cat(&[self.b(n - m + 1, q), self.gd(r1), self.gamma(), self.b(1, n - q + j - 1)]),
                );
            }
            for m in q - j + 2..=n - 1 {
                b.add(
                    s * sgn(n) * e * sgn(m * (n - 1)),
                    cat(&[self.b(j, q), self.gamma(), self.dg(r1), self.b(1, q - m)]),
                    self.b(n - m + 1, n - q + j - 1),
                );
            }
            out.push(b.s);
        }
        {
            let j0 = q - n + 1;
            let mut b = mk(self.bv(q - n), 0, Cycle::Beta);
            b.add(-1, b.e(self.bv(q - n)), self.b(q, q));
            for m in 1..=n - 1 {
                b.add(
                    -sgn(n) * sgn(m * (n - 1)),
                    self.b(j0, q - m),
                    cat(&[self.b(n - m + 1, q), self.gd(r1), self.gamma()]),
                );
            }
            b.add(1, self.b(j0, q), b.e(0));
            out.push(b.s);
        }
        {
            let s = sgn(n);
            let mut b = mk(0, self.bv(n), Cycle::Beta);
            b.add(s, b.e(0), self.b(1, n));
            for m in 1..=n - 1 {
                b.add(
                    s * sgn(n) * sgn(m * (n - 1)),
                    cat(&[self.gd(r1), self.gamma(), self.b(1, q - m)]),
                    self.b(n - m + 1, n),
                );
            }
            b.add(s * sgn(n), self.b(1, 1), b.e(self.bv(n)));
            out.push(b.s);
        }
        out
    }

    /// d^(2n) for 1 <= n < p.
    fn even(&self, n: i64) -> Vec<RawSummand> {
        let (p, q, r) = (self.p, self.q, self.r);
        let mut out = Vec::new();
        let mk = |l: usize, rr: usize, c: Cycle| self.bullet(l, rr, c, self.label(l, rr));

        for i in 2..=p - n {
            let mut b = mk(self.av(i), self.av(i + n), Cycle::Alpha);
            for k in 0..=r {
                b.add(1, self.eta(i, k), self.eta(i + n, r - k));
            }
            for k in 0..r {
                let tail = self.eta(i + n, r - k - 1);
                for m in 0..=p - i - n {
                    b.add(
                        1,
                        cat(&[self.eta(i, k), self.a(i, i + m)]),
                        cat(&[self.a(i + m + n + 1, p), self.delta(), self.a(1, i + n - 1), tail.clone()]),
                    );
                }
                for m in 0..=i - 2 {
                    b.add(
                        1,
                        cat(&[self.eta(i, k), self.a(i, p), self.delta(), self.a(1, m)]),
                        cat(&[self.a(m + n + 1, i + n - 1), tail.clone()]),
                    );
                }
                for j in 0..=q - n {
                    b.add_on(
                        Cycle::Beta,
                        sgn(n),
                        cat(&[self.eta(i, k), self.a(i, p), self.b(1, j)]),
                        cat(&[self.b(j + n + 1, q), self.a(1, i + n - 1), tail.clone()]),
                    );
                }
            }
            out.push(b.s);
        }
        for i in p + 1 - n..=p {
            let mut b = mk(self.av(i), self.av(i + n + 1 - p), Cycle::Alpha);
            b.add(1, b.e(self.av(i)), self.a(i + n - p, i + n - p));
            b.add(-sgn(n), self.a(i, i), b.e(self.av(i + n + 1 - p)));
            out.push(b.s);
        }
        {
            let mut b = mk(0, 0, Cycle::Alpha);
            for k in 0..r {
                let (kk, rest) = (k, r - k - 1);
                for i in 0..=p - n {
                    b.add(
                        1,
                        cat(&[self.delta(), self.gd(kk), self.a(1, i)]),
                        cat(&[self.a(i + n + 1, p), self.dg(rest)]),
                    );
                    b.add(
                        sgn(n),
                        cat(&[self.gd(kk), self.a(1, i)]),
                        cat(&[self.a(i + n + 1, p), self.dg(rest), self.delta()]),
                    );
                }
                for j in 0..=q - n {
                    b.add_on(
                        Cycle::Beta,
                        1,
                        cat(&[self.gamma(), self.dg(kk), self.b(1, j)]),
                        cat(&[self.b(j + n + 1, q), self.gd(rest)]),
                    );
                    b.add_on(
                        Cycle::Beta,
                        sgn(n),
                        cat(&[self.dg(kk), self.b(1, j)]),
                        cat(&[self.b(j + n + 1, q), self.gd(rest), self.gamma()]),
                    );
                }
            }
            out.push(b.s);
        }
        for j in q + 1 - n..=q {
            let mut b = mk(self.bv(j - 1), self.bv(j + n - q), Cycle::Beta);
            b.add(1, b.e(self.bv(j - 1)), self.b(j + n - q, j + n - q));
            b.add(-sgn(n), self.b(j, j), b.e(self.bv(j + n - q)));
            out.push(b.s);
        }
        for j in 2..=q - n {
            let mut b = mk(self.bv(j - 1), self.bv(j + n - 1), Cycle::Beta);
            for k in 0..=r {
                b.add(1, self.theta(j, k), self.theta(j + n, r - k));
            }
            for k in 0..r {
                let tail = self.theta(j + n, r - k - 1);
                for m in 0..=q - j - n {
                    b.add(
                        1,
                        cat(&[self.theta(j, k), self.b(j, j + m)]),
                        cat(&[self.b(j + m + n + 1, q), self.gamma(), self.b(1, j + n - 1), tail.clone()]),
                    );
                }
                for m in 0..=j - 2 {
                    b.add(
                        1,
                        cat(&[self.theta(j, k), self.b(j, q), self.gamma(), self.b(1, m)]),
                        cat(&[self.b(m + n + 1, j + n - 1), tail.clone()]),
                    );
                }
                for i in 0..=p - n {
                    b.add_on(
                        Cycle::Alpha,
                        sgn(n),
                        cat(&[self.theta(j, k), self.b(j, q), self.a(1, i)]),
                        cat(&[self.a(i + n + 1, p), self.b(1, j + n - 1), tail.clone()]),
                    );
                }
            }
            out.push(b.s);
        }
        out
    }

    /// d^(2p-1).
    fn top_odd(&self) -> Vec<RawSummand> {
        let (p, q, r) = (self.p, self.q, self.r);
        let r1 = r - 1;
        let mut out = Vec::new();
        let mk = |l: usize, rr: usize, c: Cycle| self.bullet(l, rr, c, self.label(l, rr));

        for i in 2..=p {
            let s = sgn(i);
            let e = sgn((p - i) * (p - 1));
            let mut b = mk(self.av(i), self.av(i), Cycle::Alpha);
            b.add(s, b.e(self.av(i)), self.eta(i, r));
            b.add(s * e, self.a(i, p), self.a(1, i - 1));
            b.add(-s, self.eta(i, r), b.e(self.av(i)));
            for m in 1..=p - i {
                b.add(
                    -s * sgn(p) * e * sgn(m * (p - 1)),
                    self.a(i, p - m),
                    cat(&[self.a(p - m + 1, p), self.delta(), self.gd(r1), self.a(1, i - 1)]),
                );
            }
            for m in p - i + 2..=p - 1 {
                b.add(
                    s * sgn(p) * e * sgn(m * (p - 1)),
                    cat(&[self.a(i, p), self.dg(r1), self.delta(), self.a(1, p - m)]),
                    self.a(p - m + 1, i - 1),
                );
            }
            out.push(b.s);
        }
        {
            let mut b = mk(0, 0, Cycle::Alpha);
            b.add(1, b.e(0), self.gamma());
            for m in 1..=p - 1 {
                b.add(-sgn(m * (p - 1)), self.a(1, p - m), cat(&[self.a(p - m + 1, p), self.delta(), self.gd(r1)]));
            }
            for m in 1..=p - 1 {
                b.add(
                    sgn(p) * sgn(m * (p - 1)),
                    cat(&[self.delta(), self.gd(r1), self.a(1, p - m)]),
                    self.a(p - m + 1, p),
                );
            }
            b.add(sgn(p), self.gamma(), b.e(0));
            out.push(b.s);
        }
        for j in 2..=q - p {
            let mut b = mk(self.bv(j - 1), self.bv(j + p - 1), Cycle::Beta);
            b.add(-1, b.e(self.bv(j - 1)), self.b(p + j - 1, p + j - 1));
            b.add(1, self.b(j, j), b.e(self.bv(j + p - 1)));
            out.push(b.s);
        }
        for j in q - p + 2..=q {
            let s = sgn(j + q);
            let e = sgn((q - j) * (p - 1));
            let mut b = mk(self.bv(j - 1), self.bv(j + p - q - 1), Cycle::Beta);
            b.add(s, b.e(self.bv(j - 1)), self.theta(p + j - q, r));
            b.add(s * e, self.b(j, q), self.b(1, p + j - q - 1));
            b.add(-s, self.theta(j, r), b.e(self.bv(j + p - q - 1)));
            for m in 1..=q - j {
                b.add(
                    -s * sgn(p) * e * sgn(m * (p - 1)),
                    self.b(j, q - m),
                    cat(&[self.b(p - m + 1, q), self.gd(r1), self.gamma(), self.b(1, p - q + j - 1)]),
                );
            }
            for m in q - j + 2..=p - 1 {
                b.add(
                    s * sgn(p) * e * sgn(m * (p - 1)),
                    cat(&[self.b(j, q), self.gamma(), self.dg(r1), self.b(1, q - m)]),
                    self.b(p - m + 1, p - q + j - 1),
                );
            }
            out.push(b.s);
        }
        if p < q {
            let j0 = q - p + 1;
            let mut b = mk(self.bv(q - p), 0, Cycle::Beta);
            b.add(-1, b.e(self.bv(q - p)), self.b(q, q));
            for m in 1..=p - 1 {
                b.add(
                    -sgn(p) * sgn(m * (p - 1)),
                    self.b(j0, q - m),
                    cat(&[self.b(p - m + 1, q), self.gd(r1), self.gamma()]),
                );
            }
            b.add(1, self.b(j0, q), b.e(0));
            out.push(b.s);

            let s = sgn(p);
            let mut b = mk(0, self.bv(p), Cycle::Beta);
            b.add(s, b.e(0), self.b(1, p));
            for m in 1..=p - 1 {
                b.add(
                    s * sgn(p) * sgn(m * (p - 1)),
                    cat(&[self.gd(r1), self.gamma(), self.b(1, q - m)]),
                    self.b(p - m + 1, p),
                );
            }
            b.add(s * sgn(p), self.b(1, 1), b.e(self.bv(p)));
            out.push(b.s);
        } else {
            // p = q: the two listed β formulas at this vertex pair both leave P^(2p-2).
            // The α formula with α and β swapped, times (-1)^p, closes the complex.
            let f = sgn(p);
            let mut b = mk(0, 0, Cycle::Beta);
            b.add(f, b.e(0), self.delta());
            for m in 1..=q - 1 {
                b.add(-f * sgn(m * (p - 1)), self.b(1, q - m), cat(&[self.b(q - m + 1, q), self.gamma(), self.dg(r1)]));
            }
            for m in 1..=q - 1 {
                b.add(
                    f * sgn(p) * sgn(m * (p - 1)),
                    cat(&[self.gamma(), self.dg(r1), self.b(1, q - m)]),
                    self.b(q - m + 1, q),
                );
            }
            b.add(f * sgn(p), self.delta(), b.e(0));
            out.push(b.s);
        }
        out
    }

    /// d^(2p).
    fn top_even(&self) -> Vec<RawSummand> {
        let (p, q, r) = (self.p, self.q, self.r);
        let mut out = Vec::new();
        let mk = |l: usize, rr: usize, c: Cycle| self.bullet(l, rr, c, self.label(l, rr));

        for i in 1..=p {
            let mut b = mk(self.av(i), self.av(i + 1), Cycle::Alpha);
            b.add(1, b.e(self.av(i)), self.a(i, i));
            b.add(-sgn(p), self.a(i, i), b.e(self.av(i + 1)));
            out.push(b.s);
        }
        {
            let mut b = mk(0, 0, Cycle::Alpha);
            for k in 0..r {
                let rest = r - k - 1;
                b.add(sgn(p), cat(&[self.delta(), self.gd(k)]), self.dg(rest));
                b.add(1, self.gd(k), cat(&[self.dg(rest), self.delta()]));
                for j in 0..=q - p {
                    b.add_on(
                        Cycle::Beta,
                        -1,
                        cat(&[self.gamma(), self.dg(k), self.b(1, j)]),
                        cat(&[self.b(j + p + 1, q), self.gd(rest)]),
                    );
                    b.add_on(
                        Cycle::Beta,
                        -sgn(p),
                        cat(&[self.dg(k), self.b(1, j)]),
                        cat(&[self.b(j + p + 1, q), self.gd(rest), self.gamma()]),
                    );
                }
            }
            out.push(b.s);
        }
        for j in q + 1 - p..=q {
            let mut b = mk(self.bv(j - 1), self.bv(j + p - q), Cycle::Beta);
            b.add(1, b.e(self.bv(j - 1)), self.b(j + p - q, j + p - q));
            b.add(-sgn(p), self.b(j, j), b.e(self.bv(j + p - q)));
            out.push(b.s);
        }
        for j in 2..=q - p {
            let mut b = mk(self.bv(j - 1), self.bv(j + p - 1), Cycle::Beta);
            for k in 0..=r {
                b.add(1, self.theta(j, k), self.theta(j + p, r - k));
            }
            for k in 0..r {
                let tail = self.theta(j + p, r - k - 1);
                for m in 0..=q - j - p {
                    b.add(
                        1,
                        cat(&[self.theta(j, k), self.b(j, j + m)]),
                        cat(&[self.b(j + m + p + 1, q), self.gamma(), self.b(1, j + p - 1), tail.clone()]),
                    );
                }
                for m in 0..=j - 2 {
                    b.add(
                        1,
                        cat(&[self.theta(j, k), self.b(j, q), self.gamma(), self.b(1, m)]),
                        cat(&[self.b(m + p + 1, j + p - 1), tail.clone()]),
                    );
                }
                b.add(-1, cat(&[self.theta(j, k), self.b(j, q)]), cat(&[self.b(1, j + p - 1), tail.clone()]));
            }
            out.push(b.s);
        }
        out
    }
}

/// Summands of P^n with the raw image of each generator, 0 <= n <= 2p.
pub fn raw_stage(p: usize, q: usize, r: usize, n: usize) -> Vec<RawSummand> {
    assert!(p >= 2 && p <= q && r >= 1 && n <= 2 * p);
    let g = Gen { c: CycleQuiver::new(p, q), p: p as i64, q: q as i64, r };
    let pi = p as i64;
    let ni = n as i64;
    if n == 0 {
        g.stage0()
    } else if n == 2 * p - 1 {
        g.top_odd()
    } else if n == 2 * p {
        g.top_even()
    } else if n % 2 == 1 {
        g.odd((ni + 1) / 2)
    } else {
        debug_assert!(ni / 2 < pi);
        g.even(ni / 2)
    }
}
