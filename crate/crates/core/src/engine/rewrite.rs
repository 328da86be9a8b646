//! Leading-term rewriting on arrow words with overlap completion.
//!
//! Words are compared length first, then lexicographically by arrow index.
//! For equal-length binomials this orients the lexicographically larger side
//! towards the smaller one.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Result, SsbError};
use crate::kernel::{Field, Scalar};

pub type Word = Vec<u32>;
/// Linear combination of words, leading term first after reduction.
pub type Poly = Vec<(Scalar, Word)>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Key(Word);

impl Ord for Key {
    fn cmp(&self, o: &Key) -> Ordering {
        deglex(&self.0, &o.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, o: &Key) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

pub fn deglex(a: &[u32], b: &[u32]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug)]
pub struct Rule {
    pub lead: Word,
    pub tail: Poly,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    field: Field,
    rules: Vec<Option<Rule>>,
    index: HashMap<Word, usize>,
    lengths: BTreeMap<usize, usize>,
}

const MAX_RULES: usize = 200_000;

impl RewriteSystem {
    fn empty(field: Field) -> RewriteSystem {
        RewriteSystem { field, rules: Vec::new(), index: HashMap::new(), lengths: BTreeMap::new() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter().flatten()
    }

    pub fn num_rules(&self) -> usize {
        self.index.len()
    }

    /// All positions `(pos, rule)` where a leading word occurs in `w`.
    pub fn occurrences(&self, w: &[u32]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for pos in 0..w.len() {
            for &l in self.lengths.keys() {
                if pos + l > w.len() {
                    break;
                }
                if let Some(&r) = self.index.get(&w[pos..pos + l]) {
                    out.push((pos, r));
                }
            }
        }
        out
    }

    fn first_occurrence(&self, w: &[u32]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            for &l in self.lengths.keys() {
                if pos + l > w.len() {
                    break;
                }
                if let Some(&r) = self.index.get(&w[pos..pos + l]) {
                    return Some((pos, r));
                }
            }
        }
        None
    }

    /// Does some leading word end exactly at the end of `w`?
    pub fn has_lead_suffix(&self, w: &[u32]) -> bool {
        self.lengths.keys().any(|&l| l <= w.len() && self.index.contains_key(&w[w.len() - l..]))
    }

    pub fn is_irreducible(&self, w: &[u32]) -> bool {
        self.first_occurrence(w).is_none()
    }

    /// Full reduction, largest term first.
    pub fn reduce(&self, p: &[(Scalar, Word)]) -> Poly {
        self.reduce_by(p, &mut |occ: &[(usize, usize)]| occ.first().copied())
    }

    /// Full reduction where `pick` chooses which occurrence to rewrite.
    pub fn reduce_by(
        &self,
        p: &[(Scalar, Word)],
        pick: &mut dyn FnMut(&[(usize, usize)]) -> Option<(usize, usize)>,
    ) -> Poly {
        let mut work: BTreeMap<Key, Scalar> = BTreeMap::new();
        for (c, w) in p {
            add_term(&mut work, w.clone(), c.clone());
        }
        let mut out = Vec::new();
        while let Some((Key(w), c)) = work.pop_last() {
            let occ = self.occurrences(&w);
            match pick(&occ) {
                None => out.push((c, w)),
                Some((pos, r)) => {
                    let rule = self.rules[r].as_ref().unwrap();
                    let l = rule.lead.len();
                    for (d, t) in &rule.tail {
                        let mut nw = Vec::with_capacity(w.len() - l + t.len());
                        nw.extend_from_slice(&w[..pos]);
                        nw.extend_from_slice(t);
                        nw.extend_from_slice(&w[pos + l..]);
                        add_term(&mut work, nw, &c * d);
                    }
                }
            }
        }
        out
    }

    fn add_rule(&mut self, rule: Rule) -> usize {
        let id = self.rules.len();
        *self.lengths.entry(rule.lead.len()).or_insert(0) += 1;
        self.index.insert(rule.lead.clone(), id);
        self.rules.push(Some(rule));
        id
    }

    fn remove_rule(&mut self, id: usize) -> Rule {
        let rule = self.rules[id].take().unwrap();
        self.index.remove(&rule.lead);
        let n = self.lengths.get_mut(&rule.lead.len()).unwrap();
        *n -= 1;
        if *n == 0 {
            self.lengths.remove(&rule.lead.len());
        }
        rule
    }

    /// Complete a set of relations into a confluent system.
    pub fn complete(field: Field, relations: Vec<Poly>, max_len: usize) -> Result<RewriteSystem> {
        let mut sys = RewriteSystem::empty(field);
        let mut pending: VecDeque<Poly> = relations.into();
        while let Some(p) = pending.pop_front() {
            let r = sys.reduce(&p);
            if r.is_empty() {
                continue;
            }
            let (c, lead) = r[0].clone();
            if lead.len() > max_len {
                return Err(SsbError::NotFiniteDimensional(max_len));
            }
            if lead.is_empty() {
                return Err(SsbError::NonAdmissible("ideal contains a trivial path".into()));
            }
            let inv = c.inv().unwrap();
            let tail: Poly = r[1..].iter().map(|(d, w)| (-&(d * &inv), w.clone())).collect();
            // rules whose lead contains the new lead become reducible
            let stale: Vec<usize> = sys.index.iter().filter(|(w, _)| contains(w, &lead)).map(|(_, &id)| id).collect();
            for id in stale {
                let old = sys.remove_rule(id);
                pending.push_back(rule_poly(&old, field));
            }
            let id = sys.add_rule(Rule { lead, tail });
            if sys.num_rules() > MAX_RULES {
                return Err(SsbError::NonConfluent("completion did not terminate".into()));
            }
            let ids: Vec<usize> = sys.index.values().copied().collect();
            for other in ids {
                for s in sys.overlaps(id, other) {
                    pending.push_back(s);
                }
                if other != id {
                    for s in sys.overlaps(other, id) {
                        pending.push_back(s);
                    }
                }
            }
        }
        Ok(sys)
    }

    /// S-polynomials from a suffix of rule `a`'s lead overlapping a prefix of rule `b`'s lead.
    fn overlaps(&self, a: usize, b: usize) -> Vec<Poly> {
        let ra = self.rules[a].as_ref().unwrap();
        let rb = self.rules[b].as_ref().unwrap();
        let (la, lb) = (&ra.lead, &rb.lead);
        let mut out = Vec::new();
        for k in 1..la.len().min(lb.len()) {
            if la[la.len() - k..] != lb[..k] {
                continue;
            }
            let mut s = Vec::new();
            for (c, t) in &ra.tail {
                let mut w = t.clone();
                w.extend_from_slice(&lb[k..]);
                s.push((c.clone(), w));
            }
            for (c, t) in &rb.tail {
                let mut w = la[..la.len() - k].to_vec();
                w.extend_from_slice(t);
                s.push((-c, w));
            }
            out.push(s);
        }
        out
    }
}

fn add_term(work: &mut BTreeMap<Key, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let k = Key(w);
    match work.get_mut(&k) {
        Some(v) => {
            *v = &*v + &c;
            if v.is_zero() {
                work.remove(&k);
            }
        }
        None => {
            work.insert(k, c);
        }
    }
}

fn contains(hay: &[u32], needle: &[u32]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

fn rule_poly(r: &Rule, field: Field) -> Poly {
    let mut p = vec![(field.one(), r.lead.clone())];
    for (c, w) in &r.tail {
        p.push((-c, w.clone()));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: Field, terms: &[(i64, &[u32])]) -> Poly {
        terms.iter().map(|(c, w)| (f.from_i64(*c), w.to_vec())).collect()
    }

    #[test]
    fn commutative_square_zero() {
        // one vertex, loops x=0, y=1: x^2, y^2, xy - yx
        let f = Field::rationals();
        let rels = vec![poly(f, &[(1, &[0, 0])]), poly(f, &[(1, &[1, 1])]), poly(f, &[(1, &[0, 1]), (-1, &[1, 0])])];
        let sys = RewriteSystem::complete(f, rels, 20).unwrap();
        let r = sys.reduce(&poly(f, &[(1, &[1, 0])]));
        assert_eq!(r, poly(f, &[(1, &[0, 1])]));
        assert!(sys.reduce(&poly(f, &[(1, &[1, 0, 1])])).is_empty());
    }

    #[test]
    fn completion_adds_overlap_consequence() {
        // x^2 - y^3, xy, yx: completion must kill x^3
        let f = Field::new(3).unwrap();
        let rels = vec![poly(f, &[(1, &[0, 0]), (-1, &[1, 1, 1])]), poly(f, &[(1, &[0, 1])]), poly(f, &[(1, &[1, 0])])];
        let sys = RewriteSystem::complete(f, rels, 20).unwrap();
        assert!(sys.reduce(&poly(f, &[(1, &[0, 0, 0])])).is_empty());
        assert!(!sys.reduce(&poly(f, &[(1, &[1, 1, 1])])).is_empty());
    }
}
