//! Acceptance grid. One line per criterion; exits nonzero if any fails.
//!
//! Stated values are written out here, independently of the library's own
//! closed forms, so a wrong formula on either side shows up as a mismatch.

use std::process::ExitCode;

use num_bigint::BigInt;

use ssb::classify::{
    derived_equivalent, derived_normal_form, is_listed_normal_form, stably_equivalent_morita, verify_explicit_iso,
    Auditor,
};
use ssb::engine::FiniteAlgebra;
use ssb::families::FamilySpec;
use ssb::hochschild::{hh_dim, hh_table, stages, verify_resolution};
use ssb::invariants::{cartan_determinant, cartan_invariants, centre, commutator_subspace, kulshammer_report};
use ssb::kernel::Field;
use ssb::oracle;
use ssb::SsbError;

use FamilySpec::{Gamma, Lambda};

struct Criterion {
    checks: usize,
    failures: Vec<String>,
}

impl Criterion {
    fn new() -> Self {
        Criterion { checks: 0, failures: Vec::new() }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: impl std::fmt::Display, got: T, want: T) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn fail(&mut self, what: String) {
        self.checks += 1;
        self.failures.push(what);
    }
}

fn build(x: FamilySpec, ch: u64) -> FiniteAlgebra {
    x.build(Field::new(ch).unwrap()).unwrap_or_else(|e| panic!("{x} char {ch}: {e}"))
}

fn gammas(pmax: u32, qmax: u32, rmax: u32) -> Vec<(u32, u32, u32)> {
    let mut v = Vec::new();
    for p in 1..=pmax {
        for q in p..=qmax {
            for r in 1..=rmax {
                v.push((p, q, r));
            }
        }
    }
    v
}

/// Λ(p,q;s,t) with p <= q; the swap (s,t) <-> (t,s) only identifies algebras when p = q.
fn lambdas(max: u32) -> Vec<(u32, u32, u32, u32)> {
    let mut v = Vec::new();
    for p in 1..=max {
        for q in p..=max {
            for s in 1..=max {
                for t in 1..=max {
                    let ok = (Lambda { p, q, s, t }).canonical().is_ok();
                    if ok && (p < q || s <= t) {
                        v.push((p, q, s, t));
                    }
                }
            }
        }
    }
    v
}

fn divides(ch: u64, n: u64) -> bool {
    ch != 0 && n % ch == 0
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn small(v: Vec<BigInt>) -> Vec<u64> {
    v.into_iter().map(|x| u64::try_from(x).unwrap()).collect()
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new();
    for ch in [0, 2, 3, 5] {
        for (p, q, s, t) in lambdas(4) {
            let a = build(Lambda { p, q, s, t }, ch);
            c.eq(format!("Z(Λ({p},{q};{s},{t})) char {ch}"), centre(&a).dim() as u32, p + q + s + t - 2);
        }
        for (p, q, r) in gammas(4, 4, 4) {
            let want = if p > 1 {
                p + q + r - 1
            } else if q > 1 {
                q + r + 1
            } else {
                r + 3
            };
            let a = build(Gamma { p, q, r }, ch);
            c.eq(format!("Z(Γ({p},{q};{r})) char {ch}"), centre(&a).dim() as u32, want);
        }
    }
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new();
    for ch in [0, 2, 3, 5] {
        for (p, q, s, t) in lambdas(4) {
            let (s6, t6) = (s as u64, t as u64);
            let bump = divides(ch, gcd(s6, t6)) as u64;
            let want = if q == 1 { s6 + t6 + bump } else { s6 + t6 - 1 + bump };
            let a = build(Lambda { p, q, s, t }, ch);
            c.eq(format!("HH^1(Λ({p},{q};{s},{t})) char {ch}"), hh_dim(&a, 1).unwrap() as u64, want);
        }
        for (p, q, r) in gammas(4, 4, 4) {
            let r6 = r as u64;
            let want = match (p, q, ch == 2) {
                (1, 1, true) => 2 * r6 + 6,
                (1, 1, false) => 2 * r6 + 2,
                (1, _, true) => r6 + 4,
                (1, _, false) => r6 + 2,
                _ => r6 + 1,
            };
            let a = build(Gamma { p, q, r }, ch);
            c.eq(format!("HH^1(Γ({p},{q};{r})) char {ch}"), hh_dim(&a, 1).unwrap() as u64, want);
        }
    }
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new();
    for ch in [0, 2, 3] {
        for (p, q, r) in gammas(4, 4, 3).into_iter().filter(|g| g.0 >= 2) {
            let x = Gamma { p, q, r };
            let a = build(x, ch);
            let top = 2 * p as usize;
            match stages(&a, top) {
                Ok(_) => c.checks += 1,
                Err(e) => c.fail(format!("d∘d for {x} char {ch}: {e}")),
            }
            match verify_resolution(&a, top) {
                Ok(rep) => {
                    c.eq(format!("resolution of {x} char {ch} exact, minimal"), (rep.exact, rep.minimal), (true, true))
                }
                Err(e) => c.fail(format!("resolution of {x} char {ch}: {e}")),
            }
            let dims = hh_table(&a, top - 2).unwrap().dims;
            let (p6, q6, r6) = (p as u64, q as u64, r as u64);
            for n in 2..p6 {
                let want = if n % 2 == 1 {
                    if divides(ch, 2 * r6) {
                        r6 + 1
                    } else {
                        r6
                    }
                } else if ch == 2 {
                    r6 + 1
                } else {
                    r6
                };
                let deg = (2 * n - 2) as usize;
                c.eq(format!("HH^{deg}({x}) char {ch}"), dims[&deg] as u64, want);
            }
            if p6 < q6 {
                let want = if ch == 2 {
                    r6 + 2
                } else if p6 % 2 == 0 {
                    r6 + 1
                } else if divides(ch, 2 * r6) {
                    r6
                } else {
                    r6 - 1
                };
                let deg = top - 2;
                c.eq(format!("HH^{deg}({x}) char {ch}"), dims[&deg] as u64, want);
            }
        }
    }
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new();
    let mut parities = [false; 2];
    for (p, q, r) in gammas(4, 4, 4) {
        let a = build(Gamma { p, q, r }, 0);
        let u = (p + q - 2) as usize;
        let r6 = r as u64;
        let even = (r as usize * u) % 2 == 0;
        parities[even as usize] = true;
        let mut want = if even { vec![1; u] } else { vec![1; u - 1] };
        if even {
            want.push(4 * r6);
        } else {
            want.extend([2, 2 * r6]);
        }
        c.eq(format!("Cartan invariants of Γ({p},{q};{r})"), small(cartan_invariants(&a)), want);
        c.eq(format!("Cartan determinant of Γ({p},{q};{r})"), cartan_determinant(&a), BigInt::from(4 * r6));
    }
    for (p, q, s, t) in lambdas(4) {
        let a = build(Lambda { p, q, s, t }, 0);
        let u = (p + q - 2) as u64;
        let d = (s + t) as u64 + u * (s * t) as u64;
        let mut want = vec![1; u as usize];
        want.push(d);
        c.eq(format!("Cartan invariants of Λ({p},{q};{s},{t})"), small(cartan_invariants(&a)), want);
        c.eq(format!("Cartan determinant of Λ({p},{q};{s},{t})"), cartan_determinant(&a), BigInt::from(d));
    }
    c.eq("both parities of r(p+q-2) exercised", parities, [true, true]);
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new();
    let g = build(Gamma { p: 2, q: 2, r: 3 }, 2);
    c.eq("dim κ(Γ(2,2;3))", commutator_subspace(&g).dim(), 3 * 15 - 1);
    for (x, want) in [
        (Gamma { p: 2, q: 2, r: 3 }, 1),
        (Lambda { p: 1, q: 3, s: 2, t: 2 }, 1),
        (Lambda { p: 1, q: 3, s: 2, t: 4 }, 2),
    ] {
        let rep = kulshammer_report(&build(x, 2), 1).unwrap();
        // layer 0 is the top of the local quotient Z/T_1^⊥, layer 1 is rad/rad²
        let got = rep.quotient_radical_layers.get(1).copied().unwrap_or(0);
        c.eq(format!("rad/rad² of Z({x})/T_1^⊥, char 2"), got, want);
    }
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new();
    for ch in [0, 3, 5, 7] {
        match verify_explicit_iso(Field::new(ch).unwrap()) {
            Ok(rep) => c.eq(format!("α ↦ α+εβ is an isomorphism in char {ch}"), rep.isomorphism, true),
            Err(e) => c.fail(format!("char {ch}: {e}")),
        }
    }
    let refused = matches!(verify_explicit_iso(Field::new(2).unwrap()), Err(SsbError::CharUnsupported(2)));
    c.eq("char 2 refused", refused, true);
    let g = hh_dim(&build(Gamma { p: 1, q: 1, r: 1 }, 2), 1).unwrap();
    let l = hh_dim(&build(Lambda { p: 1, q: 1, s: 2, t: 2 }, 2), 1).unwrap();
    c.eq("HH^1 of Γ(1,1;1) and Λ(1,1;2,2) in char 2", (g, l), (8, 5));
    c
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::new();
    let mut grid: Vec<FamilySpec> = gammas(3, 3, 3).into_iter().map(|(p, q, r)| Gamma { p, q, r }).collect();
    grid.extend(lambdas(3).into_iter().map(|(p, q, s, t)| Lambda { p, q, s, t }));
    let n = grid.len();
    let mut auditor = Auditor::new();
    for ch in [0, 2, 3] {
        let mut eq = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                let d = derived_equivalent(grid[i], grid[j], ch).unwrap();
                let s = stably_equivalent_morita(grid[i], grid[j], ch).unwrap();
                eq[i][j] = d.is_equivalent();
                if d.is_equivalent() && !s.is_equivalent() {
                    c.fail(format!("{} ~ {} derived but not stably, char {ch}", grid[i], grid[j]));
                }
                if i <= j {
                    for v in [d, s] {
                        if !v.is_equivalent() && v.separator().is_some() {
                            let rep = auditor.audit(&v).unwrap();
                            c.eq(format!("audit of {v}"), rep.passed(), true);
                        }
                    }
                }
            }
        }
        for i in 0..n {
            c.eq(format!("{} reflexive char {ch}", grid[i]), eq[i][i], true);
            for j in 0..n {
                c.eq(format!("symmetry {} {} char {ch}", grid[i], grid[j]), eq[i][j], eq[j][i]);
                if eq[i][j] {
                    for k in 0..n {
                        if eq[j][k] && !eq[i][k] {
                            c.fail(format!("transitivity {} {} {} char {ch}", grid[i], grid[j], grid[k]));
                        }
                    }
                }
            }
        }
        for &x in &grid {
            let nf = derived_normal_form(x, ch).unwrap();
            c.eq(format!("normal form of {x} idempotent, char {ch}"), derived_normal_form(nf, ch).unwrap(), nf);
            c.eq(format!("normal form {nf} listed, char {ch}"), is_listed_normal_form(nf, ch), true);
        }
    }
    c
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::new();
    let mut grid: Vec<FamilySpec> = gammas(4, 4, 4).into_iter().map(|(p, q, r)| Gamma { p, q, r }).collect();
    grid.extend(lambdas(4).into_iter().map(|(p, q, s, t)| Lambda { p, q, s, t }));
    for ch in [0, 2, 3] {
        for &x in &grid {
            let a = build(x, ch);
            if a.dim() > 60 {
                continue;
            }
            let pres = a.presentation();
            c.eq(format!("dim {x} char {ch} vs brute basis"), a.dim(), oracle::brute_basis(pres).unwrap().dimension);
            c.eq(
                format!("HH^1({x}) char {ch} vs derivations"),
                hh_dim(&a, 1).unwrap(),
                oracle::hh1_derivations(pres).unwrap(),
            );
        }
        for x in [Gamma { p: 3, q: 3, r: 1 }, Gamma { p: 3, q: 4, r: 1 }] {
            let a = build(x, ch);
            c.eq(
                format!("HH^2({x}) char {ch} vs reduced bar"),
                hh_dim(&a, 2).unwrap(),
                oracle::hh2_reduced_bar(a.presentation()).unwrap(),
            );
        }
    }
    c
}

fn criterion_9() -> Criterion {
    let mut c = Criterion::new();
    for (p, q, s, t) in lambdas(4) {
        let a = build(Lambda { p, q, s, t }, 0);
        c.eq(format!("dim Λ({p},{q};{s},{t})"), a.dim() as u32, t * p * p + s * q * q + p + q - 2);
    }
    for (p, q, r) in gammas(4, 4, 4) {
        let x = Gamma { p, q, r };
        let a = build(x, 0);
        let want = ((p + q) * (p + q) * r + p + q - 2) as usize;
        c.eq(format!("dim {x}"), a.dim(), want);
        if let Ok(b) = oracle::brute_basis(a.presentation()) {
            c.eq(format!("dim {x} by brute basis"), b.dimension, want);
        }
    }
    c
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Criterion); 9] = [
        ("centre dimensions", criterion_1),
        ("HH^1", criterion_2),
        ("higher HH of Γ, d∘d = 0, resolution", criterion_3),
        ("Cartan invariants and determinants", criterion_4),
        ("Külshammer quotients, char 2", criterion_5),
        ("explicit isomorphism Γ(1,1;1) ≅ Λ(1,1;2,2)", criterion_6),
        ("classifier coherence", criterion_7),
        ("engine against oracles", criterion_8),
        ("dimension formulas", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let c = run();
        let status = if c.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} criterion {}: {name} ({} checks, {} failed)", i + 1, c.checks, c.failures.len());
        for f in c.failures.iter().take(8) {
            println!("    {f}");
        }
        if c.failures.len() > 8 {
            println!("    ... {} more", c.failures.len() - 8);
        }
        if !c.failures.is_empty() {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of 9 criteria failed");
        ExitCode::FAILURE
    }
}
