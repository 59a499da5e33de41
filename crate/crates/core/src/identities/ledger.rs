//! Corrections applied to misprinted formulas before checking them.
//!
//! Each entry describes one misprint and the form that is actually
//! verified. A report that checks a corrected form names the entry in
//! `correction_applied` and, when the literal form is meaningful, records
//! whether the literal form held as well.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Correction {
    pub id: &'static str,
    /// Identity ids the correction applies to; empty for prose-only fixes.
    pub identities: &'static [&'static str],
    pub literal: &'static str,
    pub corrected: &'static str,
}

pub const BINOMIAL_INDEX_K: &str = "binomial-index-k";
pub const GAUSS_EXPONENT: &str = "gauss-exponent-n-minus-k";
pub const CLASSICAL_FACTORIAL: &str = "classical-factorial";
pub const PROSE_ZERO: &str = "prose-zero";
pub const BE9_INDEX: &str = "be9-lhs-index";
pub const SP2A_WEIGHT: &str = "sp2a-binomial-weight";
pub const C1B_POWER: &str = "c1b-spurious-m-power";
pub const CHEON_EXTRA_TERM: &str = "cheon-extra-term-qnumber";
pub const BERNSTEIN_NORMALISATION: &str = "bernstein-normalisation";

pub const TYPO_LEDGER: &[Correction] = &[
    Correction {
        id: BINOMIAL_INDEX_K,
        identities: &["sp1-b", "c1-b"],
        literal: "outer sum over k carries the coefficient [n j]_q with j unbound",
        corrected: "[n k]_q",
    },
    Correction {
        id: GAUSS_EXPONENT,
        identities: &["be7-b", "be8-b"],
        literal: "exponent written with a struck-through (n-k)",
        corrected: "q^((n-k)(n-k-1)/2), as in the bivariate addition formulas",
    },
    Correction {
        id: CLASSICAL_FACTORIAL,
        identities: &[
            "c2-a",
            "c2-b",
            "cle-a",
            "cle-b",
            "cl1-b",
            "cl1-e",
            "bb1-classical",
        ],
        literal: "classical generating functions divide by [n]_q!",
        corrected: "classical generating functions divide by n!",
    },
    Correction {
        id: PROSE_ZERO,
        identities: &[],
        literal: "\"zeo\"",
        corrected: "\"zero\"",
    },
    Correction {
        id: BE9_INDEX,
        identities: &["be9"],
        literal: "left side B_{n-1}^(alpha-1)(0,y)",
        corrected: "left side B_n^(alpha-1)(0,y)",
    },
    Correction {
        id: SP2A_WEIGHT,
        identities: &["sp2-a"],
        literal: "term weight 1 / (m^(n-1) [k+1]_q)",
        corrected: "term weight [n k]_q m^(k+1-n) / [k+1]_q",
    },
    Correction {
        id: C1B_POWER,
        identities: &["c1-b"],
        literal: "bracket starts with m^k B_k(0,y)",
        corrected: "bracket starts with B_k(0,y)",
    },
    Correction {
        id: CHEON_EXTRA_TERM,
        identities: &["cw2", "cw3"],
        literal: "extra term (B_1 + 1/2) E_{n-1}",
        corrected: "extra term [n]_q (B_1 + 1/2) E_{n-1}",
    },
    Correction {
        id: BERNSTEIN_NORMALISATION,
        identities: &["bb1", "bb1-classical"],
        literal: "left side b_{n,k}(q;x) = x^k (1-x)_q^(n-k)",
        corrected: "left side [n k]_q b_{n,k}(q;x) (normalised basis)",
    },
];

pub fn lookup(id: &str) -> Option<&'static Correction> {
    TYPO_LEDGER.iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        for (i, a) in TYPO_LEDGER.iter().enumerate() {
            for b in &TYPO_LEDGER[i + 1..] {
                assert_ne!(a.id, b.id);
            }
        }
        assert!(lookup(SP2A_WEIGHT).is_some());
        assert!(lookup("nope").is_none());
    }
}
