//! Incremental row reduction and canonical subspaces.
//!
//! [`Echelon`] keeps a semi-echelon basis (distinct leading columns, leading
//! entry 1) that rows can be streamed into; [`Subspace`] is the fully reduced
//! canonical form, so two equal subspaces compare equal structurally.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::{sparse_axpy, to_dense, to_sparse, Accumulator, Matrix, SparseVec};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Streaming semi-echelon basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon { cols, rows: Vec::new(), pivot_row: vec![None; cols] }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows until its leading column is free.
    /// Returns the residual (empty iff `v` lies in the span).
    pub fn reduce(&self, v: &[(usize, Scalar)]) -> SparseVec {
        if v.is_empty() {
            return Vec::new();
        }
        let mut acc = vec![Scalar::ZERO; self.cols];
        let mut seen = vec![false; self.cols];
        let mut heap = BinaryHeap::with_capacity(v.len());
        for (j, x) in v {
            debug_assert!(*j < self.cols);
            acc[*j] = x.clone();
            seen[*j] = true;
            heap.push(Reverse(*j));
        }
        while let Some(Reverse(c)) = heap.pop() {
            if acc[c].is_zero() {
                continue;
            }
            match self.pivot_row[c] {
                Some(p) => {
                    let f = std::mem::take(&mut acc[c]);
                    for (j, x) in &self.rows[p][1..] {
                        acc[*j] -= &(&f * x);
                        if !seen[*j] {
                            seen[*j] = true;
                            heap.push(Reverse(*j));
                        }
                    }
                }
                None => {
                    let mut out: SparseVec = vec![(c, std::mem::take(&mut acc[c]))];
                    for Reverse(j) in heap.drain() {
                        if !acc[j].is_zero() {
                            out.push((j, std::mem::take(&mut acc[j])));
                        }
                    }
                    out[1..].sort_unstable_by_key(|e| e.0);
                    return out;
                }
            }
        }
        Vec::new()
    }

    /// Insert a row; returns `true` if it increased the rank.
    pub fn insert(&mut self, v: &[(usize, Scalar)]) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let lead = r[0].1.recip();
        for e in &mut r {
            e.1 = &e.1 * &lead;
        }
        self.pivot_row[r[0].0] = Some(self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.cols);
        self.insert(&to_sparse(v))
    }

    pub fn contains(&self, v: &[(usize, Scalar)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Back-substitute into the canonical reduced row echelon form.
    pub fn into_subspace(self) -> Subspace {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&i| self.rows[i][0].0);
        let mut reduced: Vec<Option<SparseVec>> = vec![None; self.rows.len()];
        let mut acc = Accumulator::new(self.cols);
        for &i in order.iter().rev() {
            let row = &self.rows[i];
            let mut needs = false;
            for (j, x) in row {
                acc.add(*j, x);
                if j != &row[0].0 && self.pivot_row[*j].is_some() {
                    needs = true;
                }
            }
            if !needs {
                reduced[i] = Some(acc.drain());
                continue;
            }
            for (j, x) in &row[1..] {
                if let Some(p) = self.pivot_row[*j] {
                    let other = reduced[p].as_ref().expect("rows reduced in pivot order");
                    let neg = -x;
                    for (k, y) in other {
                        acc.add_scaled(*k, &neg, y);
                    }
                }
            }
            reduced[i] = Some(acc.drain());
        }
        let basis: Vec<SparseVec> = order.iter().map(|&i| reduced[i].take().unwrap()).collect();
        let pivots = basis.iter().map(|r| r[0].0).collect();
        Subspace { ambient: self.cols, basis, pivots }
    }
}

/// A subspace of `ambient`-dimensional coordinate space, in canonical RREF.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| vec![(i, Scalar::ONE)]).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span_sparse<'a>(ambient: usize, vecs: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vecs {
            e.insert(v);
        }
        e.into_subspace()
    }

    pub fn span(ambient: usize, vecs: &[Vec<Scalar>]) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vecs {
            e.insert_dense(v);
        }
        e.into_subspace()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn basis_dense(&self) -> Vec<Vec<Scalar>> {
        self.basis.iter().map(|r| to_dense(r, self.ambient)).collect()
    }

    /// Rows = basis vectors.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_sparse_rows(self.ambient, self.basis.clone())
    }

    fn echelon(&self) -> Echelon {
        let mut pivot_row = vec![None; self.ambient];
        for (i, &p) in self.pivots.iter().enumerate() {
            pivot_row[p] = Some(i);
        }
        Echelon { cols: self.ambient, rows: self.basis.clone(), pivot_row }
    }

    pub fn contains_sparse(&self, v: &[(usize, Scalar)]) -> bool {
        let mut r: SparseVec = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if let Ok(k) = r.binary_search_by_key(&p, |e| e.0) {
                let f = -&r[k].1;
                r = sparse_axpy(&r, &f, row);
            }
        }
        r.is_empty()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.contains_sparse(&to_sparse(v))
    }

    /// Coordinates with respect to the canonical basis, if `v` is a member.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vec![Scalar::ZERO; self.ambient];
        for (ci, row) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (j, x) in row {
                recon[*j] += &(ci * x);
            }
        }
        (recon == v).then_some(c)
    }

    /// The vector with the given coordinates.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Scalar::ZERO; self.ambient];
        for (ci, row) in coords.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (j, x) in row {
                out[*j] += &(ci * x);
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains_sparse(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut e = self.echelon();
        for v in &other.basis {
            e.insert(v);
        }
        Ok(e.into_subspace())
    }

    /// `{w : Σ wᵢvᵢ = 0 for all v}` (bilinear, no conjugation).
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.to_matrix())
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let eqs = self.annihilator().to_matrix().vstack(&other.annihilator().to_matrix())?;
        Ok(kernel(&eqs))
    }

    /// Image of the subspace under the linear map `f` on coordinates.
    pub fn map(&self, target_dim: usize, f: impl Fn(&[Scalar]) -> Vec<Scalar>) -> Subspace {
        let imgs: Vec<Vec<Scalar>> = self.basis_dense().iter().map(|v| f(v)).collect();
        Subspace::span(target_dim, &imgs)
    }
}

/// Rank and canonical row space.
pub fn rref(m: &Matrix) -> (usize, Subspace) {
    let mut e = Echelon::new(m.cols());
    for r in m.row_data() {
        e.insert(r);
    }
    let s = e.into_subspace();
    (s.dim(), s)
}

/// Null space of a row space given in RREF, ambient `cols`.
pub fn kernel_of_rref(rs: &Subspace) -> Subspace {
    let n = rs.ambient();
    let mut is_pivot = vec![false; n];
    for &p in rs.pivots() {
        is_pivot[p] = true;
    }
    // basis vector for free column f: e_f − Σ_i R[i][f] e_{pivot_i}
    let mut cols: Vec<SparseVec> = vec![Vec::new(); n];
    for (row, &p) in rs.basis().iter().zip(rs.pivots()) {
        for (j, x) in &row[1..] {
            cols[*j].push((p, -x));
        }
    }
    let mut e = Echelon::new(n);
    for f in (0..n).filter(|&f| !is_pivot[f]) {
        let mut v = std::mem::take(&mut cols[f]);
        v.push((f, Scalar::ONE));
        v.sort_unstable_by_key(|x| x.0);
        e.insert(&v);
    }
    e.into_subspace()
}

pub fn kernel(m: &Matrix) -> Subspace {
    kernel_of_rref(&rref(m).1)
}

/// Solve `m x = b`. Returns a particular solution (free variables zero) and
/// the null space, or `None` if inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<(Vec<Scalar>, Subspace)> {
    assert_eq!(b.len(), m.rows());
    let n = m.cols();
    let mut e = Echelon::new(n + 1);
    for (r, bi) in m.row_data().iter().zip(b) {
        let mut v = r.clone();
        if !bi.is_zero() {
            v.push((n, bi.clone()));
        }
        e.insert(&v);
    }
    let s = e.into_subspace();
    if s.pivots().last() == Some(&n) {
        return None;
    }
    let mut x = vec![Scalar::ZERO; n];
    let mut rows = Vec::with_capacity(s.dim());
    for (row, &p) in s.basis().iter().zip(s.pivots()) {
        if let Some((_, v)) = row.iter().find(|e| e.0 == n) {
            x[p] = v.clone();
        }
        rows.push(row.iter().filter(|e| e.0 < n).cloned().collect::<SparseVec>());
    }
    let rs = Subspace { ambient: n, pivots: s.pivots().to_vec(), basis: rows };
    Some((x, kernel_of_rref(&rs)))
}

#[derive(Serialize, Deserialize)]
struct SubspaceJson {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubspaceJson { ambient: self.ambient, basis: self.basis_dense() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subspace {
    /// Re-reduces the given basis, so any spanning set is accepted.
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SubspaceJson::deserialize(d)?;
        if j.basis.iter().any(|v| v.len() != j.ambient) {
            return Err(serde::de::Error::custom("basis vector length differs from ambient"));
        }
        Ok(Subspace::span(j.ambient, &j.basis))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::Rational;
    use nalgebra::DMatrix;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize, rank: usize) -> Matrix {
        // product of r×k and k×c random matrices has rank ≤ k
        let gen = |rng: &mut ChaCha8Rng, a: usize, b: usize| {
            let rows: Vec<Vec<Scalar>> = (0..a)
                .map(|_| (0..b).map(|_| Scalar::frac(rng.gen_range(-5..6), rng.gen_range(1..4))).collect())
                .collect();
            Matrix::from_dense(rows).unwrap()
        };
        &gen(rng, r, rank) * &gen(rng, rank, c)
    }

    fn float_rank(m: &Matrix) -> usize {
        let d = DMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).re.to_f64());
        let sv = d.svd(false, false).singular_values;
        let max = sv.iter().cloned().fold(0.0, f64::max);
        sv.iter().filter(|&&s| s > 1e-8 * max.max(1.0)).count()
    }

    #[test]
    fn identity_and_zero() {
        let (r, s) = rref(&Matrix::identity(5));
        assert_eq!(r, 5);
        assert_eq!(s, Subspace::full(5));
        let (r, s) = rref(&Matrix::zeros(3, 4));
        assert_eq!(r, 0);
        assert_eq!(s.dim(), 0);
        assert_eq!(kernel(&Matrix::identity(6)).dim(), 0);
        assert_eq!(kernel(&Matrix::zeros(7, 7)), Subspace::full(7));
    }

    #[test]
    fn rank_matches_float_svd() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for k in [3, 9, 17, 20] {
            let m = random_matrix(&mut rng, 20, 30, k);
            assert_eq!(rref(&m).0, float_rank(&m));
        }
    }

    #[test]
    fn transverse_planes() {
        let e = |i: usize| to_dense(&[(i, Scalar::ONE)], 4);
        let a = Subspace::span(4, &[e(1), e(2)]);
        let b = Subspace::span(4, &[e(2), e(3)]);
        assert_eq!(a.intersect(&b).unwrap(), Subspace::span(4, &[e(2)]));
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert!(a.intersect(&Subspace::zero(5)).is_err());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Matrix::from_dense(vec![
            vec![Scalar::int(1), Scalar::int(2)],
            vec![Scalar::int(2), Scalar::int(4)],
        ])
        .unwrap();
        let (x, ns) = solve(&m, &[Scalar::int(3), Scalar::int(6)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![Scalar::int(3), Scalar::int(6)]);
        assert_eq!(ns.dim(), 1);
        assert!(solve(&m, &[Scalar::int(1), Scalar::int(1)]).is_none());
    }

    #[test]
    fn complex_entries() {
        let i = Scalar::i();
        let m = Matrix::from_dense(vec![vec![Scalar::ONE, i.clone()], vec![i.clone(), Scalar::int(-1)]]).unwrap();
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        let v = &k.basis_dense()[0];
        assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
    }

    #[test]
    fn json_round_trip() {
        let s = Subspace::span(3, &[vec![Scalar::ONE, Scalar::frac(1, 2), Scalar::ZERO]]);
        let t: Subspace = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(s, t);
        let _ = Rational::ONE;
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn rank_nullity_and_canonicality(seed in any::<u64>(), r in 1usize..9, c in 1usize..9, k in 0usize..6) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = if k == 0 { Matrix::zeros(r, c) } else { random_matrix(&mut rng, r, c, k) };
            let (rank, rs) = rref(&m);
            let ker = kernel(&m);
            prop_assert_eq!(rank + ker.dim(), c);
            for v in ker.basis_dense() {
                prop_assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
            }
            // reversed generator order gives the identical representation
            let mut rows = m.to_dense();
            rows.reverse();
            prop_assert_eq!(Subspace::span(c, &rows), rs.clone());
            // dim(a)+dim(b) = dim(a∩b)+dim(a+b)
            let other = random_matrix(&mut rng, 3, c, 2);
            let b = rref(&other).1;
            let lhs = rs.dim() + b.dim();
            let rhs = rs.intersect(&b).unwrap().dim() + rs.sum(&b).unwrap().dim();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
