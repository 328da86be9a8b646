//! External results the classifier relies on but does not re-prove.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CitedFact {
    pub key: &'static str,
    pub citation: &'static str,
    pub statement: &'static str,
}

pub const FACTS: &[CitedFact] = &[
    CitedFact {
        key: "H",
        citation: "Holm [H]",
        statement: "Γ(2,2;3) = D(3A)_1^3 and Λ(2,2;2,2) = D(3A)_2^{2,2} are not derived equivalent",
    },
    CitedFact {
        key: "MH",
        citation: "[MH], Theorem 9.7",
        statement: "generalised Brauer tree algebras up to derived equivalence depend only on the number of edges \
                    and the multiset of multiplicities; distinct normal forms are not derived equivalent",
    },
    CitedFact {
        key: "GR",
        citation: "[GR]",
        statement: "an algebra stably equivalent to a symmetric Nakayama algebra is a Brauer tree algebra; \
                    Nakayama algebras represent the stable classes of Brauer tree algebras",
    },
    CitedFact {
        key: "Po",
        citation: "Pogorzały [Po]",
        statement: "the number of simple modules of an indecomposable selfinjective special biserial algebra \
                    is invariant under stable equivalence",
    },
    CitedFact {
        key: "LZZ",
        citation: "Liu-Zhou-Zimmermann [LZZ], Corollary 1.2",
        statement: "dim Z(A) is invariant under stable equivalence of Morita type between indecomposable \
                    symmetric special biserial algebras; the stable centre is a stable invariant",
    },
    CitedFact {
        key: "KLZ",
        citation: "[KLZ]",
        statement: "T_1(A)^⊥ / Z^pr(A) is invariant under stable equivalence of Morita type for symmetric algebras",
    },
    CitedFact {
        key: "Xi",
        citation: "Xi [Xi], Theorem 4.2 and Proposition 5.1",
        statement: "dim HH^n for n >= 1 and |det C| are invariant under stable equivalence of Morita type",
    },
    CitedFact {
        key: "R",
        citation: "Rickard [R]",
        statement: "derived equivalent selfinjective algebras are stably equivalent of Morita type",
    },
    CitedFact {
        key: "KV",
        citation: "Keller-Vossieck [KV]",
        statement: "derived equivalence of selfinjective algebras induces a stable equivalence",
    },
    CitedFact {
        key: "Z",
        citation: "[Z]",
        statement: "the generalised Reynolds ideals T_n(A)^⊥ are derived invariant",
    },
];

pub fn fact(key: &str) -> CitedFact {
    *FACTS.iter().find(|f| f.key == key).unwrap_or_else(|| panic!("unknown cited fact {key}"))
}
