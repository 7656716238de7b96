//! Dimension claims, each under a frozen id.

use e8kit_core::e7::{self, Commuting, Involution};
use e8kit_core::e8::fixed::e8_fixed_subalgebra;
use e8kit_core::f4;
use serde::{Deserialize, Serialize};

use crate::report::Check;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub id: String,
    pub locus: String,
    pub expected: u64,
    pub computed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ledger {
    pub entries: Vec<LedgerEntry>,
}

impl Ledger {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("ledger serializes");
        s.push('\n');
        s
    }

    pub fn get(&self, id: &str) -> Option<&LedgerEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn checks(&self) -> Vec<Check> {
        self.entries.iter().map(|e| Check::compare(e.id.clone(), e.expected, e.computed)).collect()
    }
}

const S: Involution = Involution::Sigma;
const SP: Involution = Involution::SigmaPrime;

type Claim = (&'static str, &'static str, u64, fn() -> usize);

/// Ids are stable; new claims are appended, never renamed.
const CLAIMS: &[Claim] = &[
    ("lemma-2.1-dim28", "Lemma 2.1, (f4^C)^{σ,σ′} isomorphic to spin(8,C)", 28, || f4::f4_commutant_basis().dim()),
    ("lemma-3.1-dim9", "Lemma 3.1, \"2 + 3 × 2 + 1 = 9\"", 9, || e7::e7_fixed_subalgebra(&[S, SP], true, &[]).dim()),
    ("prop-3.3-dim69", "Prop 3.3, dim (e7^C)^σ = 69", 69, || e7::e7_fixed_subalgebra(&[S], false, &[]).dim()),
    ("prop-3.3-dim66", "Prop 3.3, dim (e7^C)^{κ,μ} = 66", 66, || {
        e7::e7_fixed_subalgebra(&[], false, &[Commuting::Kappa, Commuting::Mu]).dim()
    }),
    ("lemma-3.4-dim34", "Lemma 3.4, \"30 + 2 × 2 = 34\"", 34, || {
        e7::e7_fixed_subalgebra(&[SP], false, &[Commuting::Kappa, Commuting::Mu]).dim()
    }),
    ("lemma-4.1-dim18", "Lemma 4.1, \"9 + 8 + 1 = 18\"", 18, || e8_fixed_subalgebra(&[S, SP], true, true).dim()),
    ("prop-5.1-dim28", "Prop 5.1, dim (e8^C)^{σ,σ′,so(8,C)} = 28", 28, || e8_fixed_subalgebra(&[S, SP], true, false).dim()),
    ("lemma-6.1-dim56", "Lemma 6.1, \"37 + 8 × 2 + 3=56\"", 56, || e8_fixed_subalgebra(&[S, SP], false, false).dim()),
];

pub fn ledger_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.0).collect()
}

/// Every entry is computed by exact elimination.
pub fn compute_ledger() -> Ledger {
    let entries = CLAIMS
        .iter()
        .map(|(id, locus, expected, f)| LedgerEntry {
            id: id.to_string(),
            locus: locus.to_string(),
            expected: *expected,
            computed: f() as u64,
        })
        .collect();
    Ledger { entries }
}
