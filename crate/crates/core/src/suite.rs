//! Grid checks of the published closed forms, run by `ssb verify paper-suite`.
//!
//! Every comparison is against the formula as printed. Where a printed formula
//! disagrees with the computation the mismatch is reported, never adjusted.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    derived_equivalent, derived_normal_form, is_listed_normal_form, stably_equivalent_morita, verify_explicit_iso,
    Auditor,
};
use crate::engine::FiniteAlgebra;
use crate::families::FamilySpec;
use crate::hochschild::{hh_dim, hh_table, stages, verify_resolution};
use crate::invariants::{cartan_determinant, cartan_invariants, centre, commutator_subspace, kulshammer_report};
use crate::kernel::Field;
use crate::oracle;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Upper bound on p, q, r, s, t.
    pub max: u32,
    /// Characteristics; `None` uses each criterion's own list.
    pub chars: Option<Vec<u64>>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max: 4, chars: None }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}. {} ({} checks, {} failed)", self.id, self.title, self.checked, self.failures.len())
    }
}

/// Apply `f` to every item in parallel, keeping order.
fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.par_iter().map(f).collect()
}

fn divides(ch: u64, n: u64) -> bool {
    ch != 0 && n % ch == 0
}

/// Γ(p,q;r) with p <= q <= max, r <= rmax.
fn gammas(max: u32, rmax: u32) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for p in 1..=max {
        for q in p..=max {
            for r in 1..=rmax {
                out.push(FamilySpec::Gamma { p, q, r });
            }
        }
    }
    out
}

/// Valid Λ(p,q;s,t) with p <= q <= max, s, t <= max.
fn lambdas(max: u32) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for p in 1..=max {
        for q in p..=max {
            for s in 1..=max {
                for t in 1..=max {
                    let x = FamilySpec::Lambda { p, q, s, t };
                    if x.canonical().is_ok() && (p < q || s <= t) {
                        out.push(x);
                    }
                }
            }
        }
    }
    out
}

fn chars(cfg: &SuiteConfig, default: &[u64]) -> Vec<u64> {
    cfg.chars.clone().unwrap_or_else(|| default.to_vec())
}

fn build(x: FamilySpec, ch: u64) -> Result<FiniteAlgebra, String> {
    Field::new(ch).and_then(|f| x.build(f)).map_err(|e| format!("{x} char {ch}: {e}"))
}

/// Run `check` over (spec, char) pairs; each check returns the mismatches it found.
fn grid(
    id: u32,
    title: &'static str,
    points: Vec<(FamilySpec, u64)>,
    check: impl Fn(FamilySpec, u64, &FiniteAlgebra) -> Vec<String> + Sync,
) -> CriterionResult {
    let results = par_map(&points, |&(x, ch)| match build(x, ch) {
        Ok(a) => check(x, ch, &a),
        Err(e) => vec![e],
    });
    CriterionResult { id, title, checked: points.len(), failures: results.into_iter().flatten().collect() }
}

fn mismatch<T: PartialEq + fmt::Debug>(what: impl fmt::Display, got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("{what}: computed {got:?}, stated {want:?}"))
}

fn stated_centre(x: FamilySpec) -> u64 {
    match x {
        FamilySpec::Gamma { p, q, r } => {
            let (p, q, r) = (p as u64, q as u64, r as u64);
            if p > 1 {
                p + q + r - 1
            } else if q > 1 {
                q + r + 1
            } else {
                r + 3
            }
        }
        FamilySpec::Lambda { p, q, s, t } => (p + q + s + t - 2) as u64,
        FamilySpec::Nakayama { .. } => unreachable!("not on the grid"),
    }
}

fn stated_hh1(x: FamilySpec, ch: u64) -> u64 {
    match x {
        FamilySpec::Gamma { p, q, r } => {
            let r = r as u64;
            match (p, q) {
                (1, 1) if ch == 2 => 2 * r + 6,
                (1, 1) => 2 * r + 2,
                (1, _) if ch == 2 => r + 4,
                (1, _) => r + 2,
                _ => r + 1,
            }
        }
        FamilySpec::Lambda { q, s, t, .. } => {
            let (s, t) = (s as u64, t as u64);
            let hit = divides(ch, num_integer::gcd(s, t)) as u64;
            if q == 1 {
                s + t + hit
            } else {
                s + t - 1 + hit
            }
        }
        FamilySpec::Nakayama { .. } => unreachable!("not on the grid"),
    }
}

/// Stated dim HH^{2n-2}(Γ(p,q;r)) for 2 <= n < p, and HH^{2p-2} when n = p < q.
fn stated_higher_hh(p: u64, q: u64, r: u64, n: u64, ch: u64) -> Option<u64> {
    if n < p {
        Some(match (n % 2 == 1, divides(ch, 2 * r), ch == 2) {
            (true, false, _) => r,
            (true, true, _) => r + 1,
            (false, _, false) => r,
            (false, _, true) => r + 1,
        })
    } else if n == p && p < q {
        Some(if ch == 2 {
            r + 2
        } else if p % 2 == 0 {
            r + 1
        } else if divides(ch, 2 * r) {
            r
        } else {
            r - 1
        })
    } else {
        None
    }
}

fn stated_cartan(x: FamilySpec) -> (Vec<u64>, u64) {
    match x {
        FamilySpec::Gamma { p, q, r } => {
            let (u, r) = ((p + q - 2) as usize, r as u64);
            let inv = if u == 0 {
                vec![4 * r]
            } else if (r * u as u64) % 2 == 0 {
                let mut v = vec![1; u];
                v.push(4 * r);
                v
            } else {
                let mut v = vec![1; u - 1];
                v.extend([2, 2 * r]);
                v
            };
            (inv, 4 * r)
        }
        FamilySpec::Lambda { p, q, s, t } => {
            let u = (p + q - 2) as u64;
            let d = (s + t) as u64 + u * (s * t) as u64;
            let mut v = vec![1; u as usize];
            v.push(d);
            (v, d)
        }
        FamilySpec::Nakayama { .. } => unreachable!("not on the grid"),
    }
}

fn stated_dim(x: FamilySpec) -> u64 {
    match x {
        FamilySpec::Gamma { p, q, r } => ((p + q) * (p + q) * r + p + q - 2) as u64,
        FamilySpec::Lambda { p, q, s, t } => (t * p * p + s * q * q + p + q - 2) as u64,
        FamilySpec::Nakayama { n, m } => (n * (n * m + 1)) as u64,
    }
}

fn to_u64(v: &[BigInt]) -> Vec<u64> {
    v.iter().map(|x| u64::try_from(x).unwrap_or(u64::MAX)).collect()
}

fn points(specs: &[FamilySpec], chars: &[u64]) -> Vec<(FamilySpec, u64)> {
    specs.iter().flat_map(|&x| chars.iter().map(move |&c| (x, c))).collect()
}

fn criterion_1(cfg: &SuiteConfig) -> CriterionResult {
    let mut specs = lambdas(cfg.max);
    specs.extend(gammas(cfg.max, cfg.max));
    grid(1, "centre dimensions", points(&specs, &chars(cfg, &[0, 2, 3, 5])), |x, ch, a| {
        mismatch(format!("dim Z({x}) char {ch}"), centre(a).dim() as u64, stated_centre(x)).into_iter().collect()
    })
}

fn criterion_2(cfg: &SuiteConfig) -> CriterionResult {
    let mut specs = lambdas(cfg.max);
    specs.extend(gammas(cfg.max, cfg.max));
    grid(2, "HH^1", points(&specs, &chars(cfg, &[0, 2, 3, 5])), |x, ch, a| match hh_dim(a, 1) {
        Ok(d) => mismatch(format!("HH^1({x}) char {ch}"), d as u64, stated_hh1(x, ch)).into_iter().collect(),
        Err(e) => vec![format!("HH^1({x}) char {ch}: {e}")],
    })
}

fn criterion_3(cfg: &SuiteConfig) -> CriterionResult {
    let specs: Vec<FamilySpec> = gammas(cfg.max.min(4), cfg.max.min(3))
        .into_iter()
        .filter(|x| matches!(x, FamilySpec::Gamma { p, .. } if *p >= 2))
        .collect();
    grid(3, "higher HH of Γ and the resolution", points(&specs, &chars(cfg, &[0, 2, 3])), |x, ch, a| {
        let FamilySpec::Gamma { p, q, r } = x else { unreachable!() };
        let (p, q, r) = (p as u64, q as u64, r as u64);
        let mut out = Vec::new();
        if let Err(e) = stages(a, 2 * p as usize) {
            out.push(format!("{x} char {ch}: {e}"));
            return out;
        }
        match verify_resolution(a, 2 * p as usize) {
            Ok(rep) if rep.exact && rep.minimal => {}
            Ok(rep) => out.push(format!("{x} char {ch}: resolution exact={} minimal={}", rep.exact, rep.minimal)),
            Err(e) => out.push(format!("{x} char {ch}: {e}")),
        }
        match hh_table(a, 2 * p as usize - 2) {
            Ok(t) => {
                for n in 2..=p {
                    if let Some(want) = stated_higher_hh(p, q, r, n, ch) {
                        let got = t.dims[&(2 * n as usize - 2)] as u64;
                        out.extend(mismatch(format!("HH^{}({x}) char {ch}", 2 * n - 2), got, want));
                    }
                }
            }
            Err(e) => out.push(format!("{x} char {ch}: {e}")),
        }
        out
    })
}

fn criterion_4(cfg: &SuiteConfig) -> CriterionResult {
    let mut specs = lambdas(cfg.max);
    specs.extend(gammas(cfg.max, cfg.max));
    grid(4, "Cartan invariants and determinant", points(&specs, &chars(cfg, &[0])), |x, _, a| {
        let (inv, det) = stated_cartan(x);
        let mut out: Vec<String> =
            mismatch(format!("Cartan invariants of {x}"), to_u64(&cartan_invariants(a)), inv).into_iter().collect();
        out.extend(mismatch(format!("Cartan determinant of {x}"), to_u64(&[cartan_determinant(a)])[0], det));
        out
    })
}

fn criterion_5(_: &SuiteConfig) -> CriterionResult {
    let mut failures = Vec::new();
    let cases: [(FamilySpec, Option<usize>, usize); 3] = [
        (FamilySpec::Gamma { p: 2, q: 2, r: 3 }, Some(44), 1),
        (FamilySpec::Lambda { p: 1, q: 3, s: 2, t: 2 }, None, 1),
        (FamilySpec::Lambda { p: 1, q: 3, s: 2, t: 4 }, None, 2),
    ];
    for (x, kappa, radical) in cases {
        let a = match build(x, 2) {
            Ok(a) => a,
            Err(e) => {
                failures.push(e);
                continue;
            }
        };
        if let Some(k) = kappa {
            failures.extend(mismatch(format!("dim κ({x})"), commutator_subspace(&a).dim(), k));
        }
        match kulshammer_report(&a, 1) {
            Ok(rep) => {
                let got = rep.quotient_radical_layers.get(1).copied().unwrap_or(0);
                failures.extend(mismatch(format!("rad/rad^2 of Z/T_1^perp for {x}"), got, radical));
            }
            Err(e) => failures.push(format!("{x}: {e}")),
        }
    }
    CriterionResult { id: 5, title: "Külshammer quotients in characteristic 2", checked: 4, failures }
}

fn criterion_6(_: &SuiteConfig) -> CriterionResult {
    let mut failures = Vec::new();
    for ch in [0, 3, 5, 7] {
        match Field::new(ch).and_then(verify_explicit_iso) {
            Ok(rep) if rep.isomorphism => {}
            Ok(rep) => failures.push(format!("char {ch}: map is not an isomorphism: {rep:?}")),
            Err(e) => failures.push(format!("char {ch}: {e}")),
        }
    }
    if Field::new(2).and_then(verify_explicit_iso).is_ok() {
        failures.push("char 2: the check did not refuse".into());
    }
    let g = build(FamilySpec::Gamma { p: 1, q: 1, r: 1 }, 2).and_then(|a| hh_dim(&a, 1).map_err(|e| e.to_string()));
    let l =
        build(FamilySpec::Lambda { p: 1, q: 1, s: 2, t: 2 }, 2).and_then(|a| hh_dim(&a, 1).map_err(|e| e.to_string()));
    match (g, l) {
        (Ok(g), Ok(l)) => failures.extend(mismatch("HH^1 of Γ(1,1;1), Λ(1,1;2,2) in char 2", (g, l), (8, 5))),
        (g, l) => failures.push(format!("HH^1 in char 2: {g:?} {l:?}")),
    }
    CriterionResult { id: 6, title: "explicit isomorphism Γ(1,1;1) ≅ Λ(1,1;2,2)", checked: 6, failures }
}

fn criterion_7(cfg: &SuiteConfig) -> CriterionResult {
    let m = cfg.max.min(3);
    let mut specs: Vec<FamilySpec> = lambdas(m).into_iter().map(|x| x.canonical().unwrap()).collect();
    specs.extend(gammas(m, m));
    specs.sort();
    specs.dedup();
    let chs = chars(cfg, &[0, 2, 3]);
    let mut failures = Vec::new();
    let mut checked = 0;
    for &ch in &chs {
        let verdicts: Vec<Vec<_>> = par_map(&specs, |&x| {
            specs.iter().map(|&y| (derived_equivalent(x, y, ch), stably_equivalent_morita(x, y, ch))).collect()
        });
        let mut eq = vec![vec![false; specs.len()]; specs.len()];
        for (i, row) in verdicts.iter().enumerate() {
            for (j, (d, s)) in row.iter().enumerate() {
                checked += 1;
                match (d, s) {
                    (Ok(d), Ok(s)) => {
                        eq[i][j] = d.is_equivalent();
                        if d.is_equivalent() && !s.is_equivalent() {
                            failures.push(format!("{} ~ {} derived but not stably, char {ch}", specs[i], specs[j]));
                        }
                    }
                    (d, s) => failures.push(format!("{} vs {} char {ch}: {d:?} {s:?}", specs[i], specs[j])),
                }
            }
        }
        let n = specs.len();
        for i in 0..n {
            if !eq[i][i] {
                failures.push(format!("{} not equivalent to itself, char {ch}", specs[i]));
            }
            for j in 0..n {
                if eq[i][j] != eq[j][i] {
                    failures.push(format!("asymmetric verdict {} / {}, char {ch}", specs[i], specs[j]));
                }
                if eq[i][j] {
                    for k in 0..n {
                        if eq[j][k] && !eq[i][k] {
                            failures.push(format!("not transitive: {} {} {}, char {ch}", specs[i], specs[j], specs[k]));
                        }
                    }
                }
            }
        }
        for &x in &specs {
            match derived_normal_form(x, ch) {
                Ok(nf) => {
                    if derived_normal_form(nf, ch).ok() != Some(nf) || !is_listed_normal_form(nf, ch) {
                        failures.push(format!("normal form of {x} in char {ch}: {nf}"));
                    }
                }
                Err(e) => failures.push(format!("{x}: {e}")),
            }
        }
        let audits = par_map(&specs, |&x| {
            let mut auditor = Auditor::new();
            let mut out = Vec::new();
            for &y in &specs {
                for v in [derived_equivalent(x, y, ch), stably_equivalent_morita(x, y, ch)].into_iter().flatten() {
                    if v.is_equivalent() || v.separator().is_none() {
                        continue;
                    }
                    match auditor.audit(&v) {
                        Ok(rep) if rep.passed() => {}
                        Ok(rep) => out.push(format!("audit failed for {v}: {:?}", rep.lines)),
                        Err(e) => out.push(format!("audit error for {v}: {e}")),
                    }
                }
            }
            out
        });
        failures.extend(audits.into_iter().flatten());
    }
    CriterionResult { id: 7, title: "classifier coherence and audits", checked, failures }
}

fn criterion_8(cfg: &SuiteConfig) -> CriterionResult {
    let mut specs = lambdas(cfg.max);
    specs.extend(gammas(cfg.max, cfg.max));
    let mut res = grid(8, "engine against the oracles", points(&specs, &chars(cfg, &[0, 2, 3])), |x, ch, a| {
        if a.dim() > oracle::HH1_LIMIT {
            return Vec::new();
        }
        let pres = a.presentation();
        let mut out = Vec::new();
        match oracle::brute_basis(pres) {
            Ok(b) => out.extend(mismatch(format!("dim {x} char {ch} (oracle)"), a.dim(), b.dimension)),
            Err(e) => out.push(format!("{x} char {ch}: {e}")),
        }
        match (hh_dim(a, 1), oracle::hh1_derivations(pres)) {
            (Ok(h), Ok(o)) => out.extend(mismatch(format!("HH^1({x}) char {ch} (oracle)"), h, o)),
            (h, o) => out.push(format!("HH^1({x}) char {ch}: {h:?} {o:?}")),
        }
        out
    });
    let hh2: Vec<(FamilySpec, u64)> = points(
        &[FamilySpec::Gamma { p: 3, q: 3, r: 1 }, FamilySpec::Gamma { p: 3, q: 4, r: 1 }],
        &chars(cfg, &[0, 2, 3]),
    );
    let extra = par_map(&hh2, |&(x, ch)| -> Vec<String> {
        let a = match build(x, ch) {
            Ok(a) => a,
            Err(e) => return vec![e],
        };
        match (hh_dim(&a, 2), oracle::hh2_reduced_bar(a.presentation())) {
            (Ok(h), Ok(o)) => mismatch(format!("HH^2({x}) char {ch} (bar oracle)"), h, o).into_iter().collect(),
            (h, o) => vec![format!("HH^2({x}) char {ch}: {h:?} {o:?}")],
        }
    });
    res.checked += hh2.len();
    res.failures.extend(extra.into_iter().flatten());
    res
}

fn criterion_9(cfg: &SuiteConfig) -> CriterionResult {
    let mut specs = lambdas(cfg.max);
    specs.extend(gammas(cfg.max, cfg.max));
    grid(9, "dimension formulas", points(&specs, &[0]), |x, _, a| {
        mismatch(format!("dim {x}"), a.dim() as u64, stated_dim(x)).into_iter().collect()
    })
}

pub const CRITERIA: [u32; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 9];

pub fn run_criterion(id: u32, cfg: &SuiteConfig) -> Option<CriterionResult> {
    Some(match id {
        1 => criterion_1(cfg),
        2 => criterion_2(cfg),
        3 => criterion_3(cfg),
        4 => criterion_4(cfg),
        5 => criterion_5(cfg),
        6 => criterion_6(cfg),
        7 => criterion_7(cfg),
        8 => criterion_8(cfg),
        9 => criterion_9(cfg),
        _ => return None,
    })
}

pub fn run(cfg: &SuiteConfig) -> Vec<CriterionResult> {
    CRITERIA.iter().filter_map(|&id| run_criterion(id, cfg)).collect()
}
