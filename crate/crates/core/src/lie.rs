//! Lie algebras given by exact structure constants over a fixed basis.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::matrix::{to_dense, to_sparse, Accumulator, SparseVec};
use crate::linalg::{kernel, trace_form, Matrix, Scalar, Subspace};

/// Sparse `(i, j, k, c_ij^k)` with `i < j`; the serialized form of a
/// [`LieAlgebra`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstants {
    pub dim: usize,
    pub entries: Vec<(usize, usize, usize, Scalar)>,
}

/// `[bᵢ, bⱼ] = Σₖ c_ij^k bₖ`, stored for all ordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    table: Vec<Vec<SparseVec>>,
}

impl LieAlgebra {
    /// Build from a bracket on basis indices; only `i < j` is evaluated.
    pub fn from_bracket(dim: usize, f: impl Fn(usize, usize) -> SparseVec + Sync) -> Self {
        let pairs: Vec<(usize, usize)> = (0..dim).flat_map(|i| (i + 1..dim).map(move |j| (i, j))).collect();
        let vals: Vec<SparseVec> = pairs.par_iter().map(|&(i, j)| f(i, j)).collect();
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for ((i, j), v) in pairs.into_iter().zip(vals) {
            table[j][i] = v.iter().map(|(k, x)| (*k, -x)).collect();
            table[i][j] = v;
        }
        LieAlgebra { dim, table }
    }

    pub fn from_table(dim: usize, table: Vec<Vec<SparseVec>>) -> Self {
        assert_eq!(table.len(), dim);
        LieAlgebra { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<SparseVec>] {
        &self.table
    }

    /// Nonzero `c_ij^k` for `i < j`.
    pub fn structure_constants(&self) -> StructureConstants {
        let mut entries = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for (k, c) in &self.table[i][j] {
                    entries.push((i, j, *k, c.clone()));
                }
            }
        }
        StructureConstants { dim: self.dim, entries }
    }

    /// Inverse of [`structure_constants`](Self::structure_constants); rejects
    /// out-of-range indices, `i >= j` and repeated entries.
    pub fn from_structure_constants(sc: &StructureConstants) -> Result<Self> {
        let n = sc.dim;
        let mut table = vec![vec![Vec::new(); n]; n];
        for (i, j, k, c) in &sc.entries {
            let (i, j, k) = (*i, *j, *k);
            if i >= j || j >= n || k >= n {
                return Err(Error::InvalidInput(format!("bad structure constant index ({i}, {j}, {k})")));
            }
            if table[i][j].iter().any(|(kk, _): &(usize, Scalar)| *kk == k) {
                return Err(Error::InvalidInput(format!("repeated structure constant ({i}, {j}, {k})")));
            }
            table[i][j].push((k, c.clone()));
            table[j][i].push((k, -c));
        }
        for row in table.iter_mut() {
            for v in row.iter_mut() {
                v.sort_by_key(|e| e.0);
                v.retain(|e| !e.1.is_zero());
            }
        }
        Ok(LieAlgebra { dim: n, table })
    }

    pub fn bracket_sparse(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = Accumulator::new(self.dim);
        for (i, a) in x {
            for (j, b) in y {
                let t = &self.table[*i][*j];
                if t.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in t {
                    acc.add_scaled(*k, &ab, c);
                }
            }
        }
        acc.drain()
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        to_dense(&self.bracket_sparse(&to_sparse(x), &to_sparse(y)), self.dim)
    }

    /// ad(x) with columns indexed by the argument: ad(x)eⱼ = [x, eⱼ].
    pub fn ad_sparse(&self, x: &[(usize, Scalar)]) -> Matrix {
        let mut t = Vec::new();
        for (i, a) in x {
            for j in 0..self.dim {
                for (k, c) in &self.table[*i][j] {
                    t.push((*k, j, a * c));
                }
            }
        }
        Matrix::from_triplets(self.dim, self.dim, t)
    }

    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        self.ad_sparse(&to_sparse(x))
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad_sparse(&[(i, Scalar::ONE)])
    }

    pub fn killing(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        trace_form(&self.ad(x), &self.ad(y)).expect("square ad matrices")
    }

    /// Gram matrix of the Killing form on the basis.
    pub fn killing_matrix(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).into_par_iter().map(|i| self.ad_basis(i)).collect();
        let adts: Vec<Matrix> = ads.par_iter().map(Matrix::transpose).collect();
        let rows: Vec<Vec<(usize, usize, Scalar)>> = (0..self.dim)
            .into_par_iter()
            .map(|i| {
                let mut out = Vec::new();
                for j in i..self.dim {
                    let mut s = Scalar::ZERO;
                    for r in 0..self.dim {
                        s += &crate::linalg::matrix::sparse_dot(ads[i].row(r), adts[j].row(r));
                    }
                    if !s.is_zero() {
                        out.push((i, j, s.clone()));
                        if i != j {
                            out.push((j, i, s));
                        }
                    }
                }
                out
            })
            .collect();
        Matrix::from_triplets(self.dim, self.dim, rows.into_iter().flatten())
    }

    /// Jacobi sum for a basis-or-general triple.
    pub fn jacobi(&self, a: &[(usize, Scalar)], b: &[(usize, Scalar)], c: &[(usize, Scalar)]) -> SparseVec {
        let t1 = self.bracket_sparse(&self.bracket_sparse(a, b), c);
        let t2 = self.bracket_sparse(&self.bracket_sparse(b, c), a);
        let t3 = self.bracket_sparse(&self.bracket_sparse(c, a), b);
        let mut acc = Accumulator::new(self.dim);
        for (k, v) in t1.iter().chain(&t2).chain(&t3) {
            acc.add(*k, v);
        }
        acc.drain()
    }

    /// First basis triple violating Jacobi, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let triples: Vec<(usize, usize, usize)> =
            (0..self.dim).flat_map(|i| (i + 1..self.dim).flat_map(move |j| (j + 1..self.dim).map(move |k| (i, j, k)))).collect();
        triples.into_par_iter().find_first(|&(i, j, k)| {
            !self.jacobi(&[(i, Scalar::ONE)], &[(j, Scalar::ONE)], &[(k, Scalar::ONE)]).is_empty()
        })
    }

    /// The subalgebra spanned by `s`, in the canonical basis of `s`.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        assert_eq!(s.ambient(), self.dim);
        let basis = s.basis();
        let n = s.dim();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.bracket_sparse(&basis[i], &basis[j]);
                if !s.contains_sparse(&v) {
                    return Err(Error::NotClosed(i, j));
                }
            }
        }
        Ok(LieAlgebra::from_bracket(n, |i, j| {
            let v = to_dense(&self.bracket_sparse(&basis[i], &basis[j]), self.dim);
            to_sparse(&s.coordinates(&v).expect("closure checked"))
        }))
    }

    /// `{x ∈ span : [x, y] = 0 for all y in ys}` within the subspace `within`.
    pub fn centralizer_in(&self, within: &Subspace, ys: &[SparseVec]) -> Subspace {
        let basis = within.basis();
        // columns: images [bᵢ, y] stacked over y
        let mut rows_t: Vec<(usize, usize, Scalar)> = Vec::new();
        for (yi, y) in ys.iter().enumerate() {
            for (i, b) in basis.iter().enumerate() {
                for (k, v) in self.bracket_sparse(b, y) {
                    rows_t.push((yi * self.dim + k, i, v));
                }
            }
        }
        let m = Matrix::from_triplets(ys.len() * self.dim, basis.len(), rows_t);
        let coeffs = kernel(&m);
        let vecs: Vec<Vec<Scalar>> = coeffs.basis_dense().iter().map(|c| within.combine(c)).collect();
        Subspace::span(self.dim, &vecs)
    }

    pub fn center(&self) -> Subspace {
        let all = Subspace::full(self.dim);
        let gens: Vec<SparseVec> = (0..self.dim).map(|i| vec![(i, Scalar::ONE)]).collect();
        self.centralizer_in(&all, &gens)
    }

    pub fn derived(&self) -> Subspace {
        let mut e = crate::linalg::Echelon::new(self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                e.insert(&self.table[i][j]);
            }
        }
        e.into_subspace()
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().flatten().all(Vec::is_empty)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// sl(2) with basis (h, e, f): [h,e] = 2e, [h,f] = −2f, [e,f] = h.
    pub(crate) fn sl2() -> LieAlgebra {
        LieAlgebra::from_bracket(3, |i, j| match (i, j) {
            (0, 1) => vec![(1, Scalar::int(2))],
            (0, 2) => vec![(2, Scalar::int(-2))],
            (1, 2) => vec![(0, Scalar::ONE)],
            _ => unreachable!(),
        })
    }

    #[test]
    fn structure_constants_round_trip() {
        let g = sl2();
        let sc = g.structure_constants();
        assert_eq!(sc.entries.len(), 3);
        let json = serde_json::to_string(&sc).unwrap();
        let back: StructureConstants = serde_json::from_str(&json).unwrap();
        assert_eq!(LieAlgebra::from_structure_constants(&back).unwrap(), g);
        let bad = StructureConstants { dim: 3, entries: vec![(1, 0, 2, Scalar::ONE)] };
        assert!(LieAlgebra::from_structure_constants(&bad).is_err());
    }

    #[test]
    fn sl2_killing_and_jacobi() {
        let g = sl2();
        assert!(g.jacobi_violation().is_none());
        let k = g.killing_matrix();
        assert_eq!(k.get(0, 0), Scalar::int(8));
        assert_eq!(k.get(1, 2), Scalar::int(4));
        assert_eq!(k.get(1, 1), Scalar::ZERO);
        assert_eq!(g.center().dim(), 0);
        assert_eq!(g.derived().dim(), 3);
    }

    #[test]
    fn subalgebra_closure() {
        let g = sl2();
        let borel = Subspace::span(3, &[vec![Scalar::ONE, Scalar::ZERO, Scalar::ZERO], vec![Scalar::ZERO, Scalar::ONE, Scalar::ZERO]]);
        let b = g.subalgebra(&borel).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(b.derived().dim(), 1);
        let bad = Subspace::span(3, &[vec![Scalar::ZERO, Scalar::ONE, Scalar::ZERO], vec![Scalar::ZERO, Scalar::ZERO, Scalar::ONE]]);
        assert!(matches!(g.subalgebra(&bad), Err(Error::NotClosed(..))));
    }
}
