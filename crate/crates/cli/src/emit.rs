//! Structure-constant export for named subalgebras.

use e8kit_core::e7::{self, Involution};
use e8kit_core::e8::fixed::{compact_form_basis, compact_to_complex, complex_to_compact, e8_fixed_subalgebra, COMPACT_AMBIENT};
use e8kit_core::e8::{self, DIM};
use e8kit_core::f4;
use e8kit_core::lie::{LieAlgebra, StructureConstants};
use e8kit_core::linalg::matrix::{to_dense, to_sparse, SparseVec};
use e8kit_core::linalg::{Scalar, Subspace};
use e8kit_core::structure::{ideals_commute, split_commuting_ideals};
use e8kit_core::{Error, Result};
use serde::{Deserialize, Serialize};

pub const SELECTORS: &[&str] = &["e7", "e8", "fixed-56", "spin8-centralizer", "f4-commutant", "compact-e8"];

/// A subalgebra as a list of basis vectors in an ambient coordinate space,
/// with structure constants relative to that list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Emitted {
    pub selector: String,
    /// Name of the ambient coordinate space the basis vectors live in.
    pub ambient: String,
    pub ambient_dim: usize,
    pub basis: Vec<SparseVec>,
    /// Sizes of consecutive basis blocks that are ideals (one block if no
    /// splitting is implied).
    pub blocks: Vec<usize>,
    pub structure_constants: StructureConstants,
}

impl Emitted {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("emitted table serializes");
        s.push('\n');
        s
    }

    pub fn algebra(&self) -> Result<LieAlgebra> {
        LieAlgebra::from_structure_constants(&self.structure_constants)
    }
}

pub fn needs_e8(selector: &str) -> bool {
    matches!(selector, "e8" | "fixed-56" | "spin8-centralizer" | "compact-e8")
}

fn unit_basis(n: usize) -> Vec<SparseVec> {
    (0..n).map(|i| vec![(i, Scalar::ONE)]).collect()
}

fn of_subspace(selector: &str, ambient: &str, g: &LieAlgebra, s: &Subspace) -> Result<Emitted> {
    let sub = g.subalgebra(s)?;
    Ok(Emitted {
        selector: selector.into(),
        ambient: ambient.into(),
        ambient_dim: g.dim(),
        basis: s.basis().to_vec(),
        blocks: vec![s.dim()],
        structure_constants: sub.structure_constants(),
    })
}

/// Direct sum of ideals, ordered ideal by ideal. Fails unless all
/// cross-brackets vanish.
fn of_ideals(selector: &str, g: &LieAlgebra, ideals: &[Subspace]) -> Result<Emitted> {
    if !ideals_commute(g, ideals) {
        return Err(Error::Inconsistent("ideals do not commute".into()));
    }
    let n: usize = ideals.iter().map(Subspace::dim).sum();
    let mut table = vec![vec![Vec::new(); n]; n];
    let mut off = 0;
    for s in ideals {
        let sub = g.subalgebra(s)?;
        for i in 0..s.dim() {
            for j in 0..s.dim() {
                table[off + i][off + j] = sub.bracket_basis(i, j).iter().map(|(k, c)| (off + k, c.clone())).collect();
            }
        }
        off += s.dim();
    }
    Ok(Emitted {
        selector: selector.into(),
        ambient: "e8".into(),
        ambient_dim: g.dim(),
        basis: ideals.iter().flat_map(|s| s.basis().to_vec()).collect(),
        blocks: ideals.iter().map(Subspace::dim).collect(),
        structure_constants: LieAlgebra::from_table(n, table).structure_constants(),
    })
}

fn f4_commutant() -> Emitted {
    let space = f4::f4_commutant_basis();
    let ops = f4::f4_commutant_operators();
    let g = LieAlgebra::from_bracket(ops.len(), |i, j| {
        to_sparse(&space.coordinates(&f4::flatten(&ops[i].commutator(&ops[j]))).expect("commutant is closed"))
    });
    Emitted {
        selector: "f4-commutant".into(),
        ambient: "jordan-operators".into(),
        ambient_dim: f4::OP_DIM,
        basis: space.basis().to_vec(),
        blocks: vec![space.dim()],
        structure_constants: g.structure_constants(),
    }
}

/// Real structure constants of the compact form in the real coordinates
/// `[re | im]` of 𝔢₈^C.
fn compact_e8() -> Emitted {
    let g = e8::algebra();
    let basis = compact_form_basis();
    let cs: Vec<SparseVec> = basis.basis().iter().map(|v| compact_to_complex(v)).collect();
    let real = LieAlgebra::from_bracket(basis.dim(), |i, j| {
        let v = complex_to_compact(&g.bracket_sparse(&cs[i], &cs[j]));
        to_sparse(&basis.coordinates(&to_dense(&v, COMPACT_AMBIENT)).expect("compact form is closed"))
    });
    Emitted {
        selector: "compact-e8".into(),
        ambient: "e8-real".into(),
        ambient_dim: COMPACT_AMBIENT,
        basis: basis.basis().to_vec(),
        blocks: vec![basis.dim()],
        structure_constants: real.structure_constants(),
    }
}

/// `None` for an unknown selector.
pub fn emit(selector: &str) -> Option<Result<Emitted>> {
    let s = [Involution::Sigma, Involution::SigmaPrime];
    Some(match selector {
        "e7" => Ok(Emitted {
            selector: "e7".into(),
            ambient: "e7".into(),
            ambient_dim: e7::DIM,
            basis: unit_basis(e7::DIM),
            blocks: vec![e7::DIM],
            structure_constants: e7::algebra().structure_constants(),
        }),
        "e8" => Ok(Emitted {
            selector: "e8".into(),
            ambient: "e8".into(),
            ambient_dim: DIM,
            basis: unit_basis(DIM),
            blocks: vec![DIM],
            structure_constants: e8::algebra().structure_constants(),
        }),
        "fixed-56" => {
            let g = e8::algebra();
            let h = e8_fixed_subalgebra(&s, false, false);
            split_commuting_ideals(g, &h).and_then(|ideals| of_ideals(selector, g, &ideals))
        }
        "spin8-centralizer" => of_subspace(selector, "e8", e8::algebra(), &e8_fixed_subalgebra(&s, true, false)),
        "f4-commutant" => Ok(f4_commutant()),
        "compact-e8" => Ok(compact_e8()),
        _ => return None,
    })
}
