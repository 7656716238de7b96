//! Sparse exact matrices over [`Scalar`].
//!
//! Rows are stored as sorted `(column, value)` lists without explicit zeros.
//! All the operators in this crate (Jordan multiplications, ad-matrices of
//! 𝔢₈ elements, involutions) are very sparse, so this is the only layout.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::float::FloatMatrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

/// Sparse accumulator: a dense value array plus the list of touched slots.
pub(crate) struct Accumulator {
    vals: Vec<Scalar>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Accumulator {
    pub fn new(n: usize) -> Self {
        Accumulator { vals: vec![Scalar::ZERO; n], touched: Vec::new(), mark: vec![false; n] }
    }

    #[inline]
    pub fn add(&mut self, i: usize, v: &Scalar) {
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i);
        }
        self.vals[i] += v;
    }

    #[inline]
    pub fn add_scaled(&mut self, i: usize, a: &Scalar, b: &Scalar) {
        let p = a * b;
        self.add(i, &p);
    }

    /// Extract the nonzero entries in column order and reset.
    pub fn drain(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.mark[i] = false;
            let v = std::mem::take(&mut self.vals[i]);
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

/// `a + c·b` for sparse vectors.
pub fn sparse_axpy(a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_dot(a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> Scalar {
    let mut acc = Scalar::ZERO;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &(&a[i].1 * &b[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

pub fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn to_dense(v: &[(usize, Scalar)], n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::ZERO; n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Scalar::ONE)
    }

    pub fn scalar(n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for i in 0..n {
                m.data[i].push((i, c.clone()));
            }
        }
        m
    }

    pub fn from_dense(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::DimensionMismatch(format!("ragged rows, expected width {c}")));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.iter().map(|x| to_sparse(x)).collect() })
    }

    /// Build from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(rows: usize, cols: usize, entries: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut data: Vec<SparseVec> = vec![Vec::new(); rows];
        for (i, j, v) in entries {
            assert!(i < rows && j < cols, "triplet ({i},{j}) outside {rows}x{cols}");
            data[i].push((j, v));
        }
        for row in &mut data {
            row.sort_by_key(|e| e.0);
            let mut merged: SparseVec = Vec::with_capacity(row.len());
            for (j, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((k, w)) if *k == j => *w += &v,
                    _ => merged.push((j, v)),
                }
            }
            merged.retain(|e| !e.1.is_zero());
            *row = merged;
        }
        Matrix { rows, cols, data }
    }

    pub fn from_sparse_rows(cols: usize, data: Vec<SparseVec>) -> Self {
        debug_assert!(data.iter().all(|r| r.windows(2).all(|w| w[0].0 < w[1].0)));
        debug_assert!(data.iter().all(|r| r.iter().all(|e| e.0 < cols && !e.1.is_zero())));
        Matrix { rows: data.len(), cols, data }
    }

    /// Matrix whose columns are the given dense vectors.
    pub fn from_columns(rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut t = Vec::new();
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, v) in c.iter().enumerate() {
                if !v.is_zero() {
                    t.push((i, j, v.clone()));
                }
            }
        }
        Self::from_triplets(rows, cols.len(), t)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Scalar)] {
        &self.data[i]
    }

    pub fn row_data(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Scalar::ZERO,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().flatten().all(|e| e.1.is_real())
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.data.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.data.iter().map(|r| to_dense(r, self.cols)).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data: Vec<SparseVec> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, v) in r {
                data[*j].push((i, v.clone()));
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        Ok(self.lin_comb(&Scalar::ONE, other))
    }

    /// `self + c·other` (shapes must agree).
    pub fn lin_comb(&self, c: &Scalar, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| sparse_axpy(a, c, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        let data = self.data.iter().map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut acc = Accumulator::new(other.cols);
        let data = self
            .data
            .iter()
            .map(|r| {
                for (k, a) in r {
                    for (j, b) in &other.data[*k] {
                        acc.add_scaled(*j, a, b);
                    }
                }
                acc.drain()
            })
            .collect();
        Ok(Matrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.data
            .iter()
            .map(|r| {
                let mut s = Scalar::ZERO;
                for (j, a) in r {
                    if !v[*j].is_zero() {
                        s += &(a * &v[*j]);
                    }
                }
                s
            })
            .collect()
    }

    pub fn mul_sparse_vec(&self, v: &[(usize, Scalar)]) -> SparseVec {
        assert!(v.iter().all(|e| e.0 < self.cols));
        let mut acc = Accumulator::new(self.rows);
        // column access through the transpose would be faster for repeated
        // use; callers that need that hold a transposed copy.
        for (i, r) in self.data.iter().enumerate() {
            let s = sparse_dot(r, v);
            if !s.is_zero() {
                acc.add(i, &s);
            }
        }
        acc.drain()
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        let ab = self.try_mul(other).expect("commutator of incompatible matrices");
        let ba = other.try_mul(self).expect("commutator of incompatible matrices");
        ab.lin_comb(&Scalar::int(-1), &ba)
    }

    pub fn trace(&self) -> Scalar {
        let mut s = Scalar::ZERO;
        for i in 0..self.rows.min(self.cols) {
            s += &self.get(i, i);
        }
        s
    }

    pub fn map_entries(&self, f: impl Fn(&Scalar) -> Scalar) -> Matrix {
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|(j, v)| (*j, f(v))).filter(|e| !e.1.is_zero()).collect())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Matrix {
        self.map_entries(Scalar::conj)
    }

    pub fn pow(&self, n: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..n {
            acc = acc.try_mul(self).unwrap();
        }
        acc
    }

    /// Stack rows of `self` on top of rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!("vstack {} vs {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: data.len(), cols: self.cols, data })
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("det of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.to_dense();
        let mut det = Scalar::ONE;
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Scalar::ZERO);
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            det = &det * &a[k][k];
            let inv = a[k][k].recip();
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] * &inv;
                for j in k..n {
                    let d = &f * &a[k][j];
                    a[i][j] -= &d;
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss–Jordan elimination on `[A | I]`.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a: Vec<SparseVec> = self.data.clone();
        let mut b: Vec<SparseVec> = (0..n).map(|i| vec![(i, Scalar::ONE)]).collect();
        for k in 0..n {
            let p = (k..n)
                .filter(|&i| a[i].first().is_some_and(|e| e.0 == k))
                .min_by_key(|&i| a[i].len())
                .ok_or_else(|| Error::InvalidInput("matrix is singular".into()))?;
            a.swap(p, k);
            b.swap(p, k);
            let inv = a[k][0].1.recip();
            a[k] = a[k].iter().map(|(j, v)| (*j, v * &inv)).collect();
            b[k] = b[k].iter().map(|(j, v)| (*j, v * &inv)).collect();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let f = a[i].iter().find(|e| e.0 == k).map(|e| -&e.1);
                if let Some(f) = f {
                    a[i] = sparse_axpy(&a[i], &f, &a[k]);
                    b[i] = sparse_axpy(&b[i], &f, &b[k]);
                }
            }
        }
        Ok(Matrix { rows: n, cols: n, data: b })
    }

    pub fn to_float(&self) -> FloatMatrix {
        let mut m = FloatMatrix::zeros(self.rows, self.cols);
        for (i, j, v) in self.triplets() {
            m.0[(i, j)] = v.to_complex();
        }
        m
    }
}

impl std::ops::Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix shape mismatch")
    }
}

impl std::ops::Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.lin_comb(&Scalar::ONE, rhs)
    }
}

impl std::ops::Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.lin_comb(&Scalar::int(-1), rhs)
    }
}

impl std::ops::Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&Scalar::int(-1))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} ({} nonzeros)", self.rows, self.cols, self.nnz())?;
        for (i, j, v) in self.triplets().take(64) {
            writeln!(f, "  ({i},{j}) = {v}")?;
        }
        Ok(())
    }
}

impl Serialize for Matrix {
    /// Row-major nested arrays of scalar strings.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in &self.data {
            seq.serialize_element(&to_dense(r, self.cols))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Scalar>>::deserialize(d)?;
        Matrix::from_dense(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::Rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(rng: &mut ChaCha8Rng, r: usize, c: usize) -> Matrix {
        let rows = (0..r)
            .map(|_| {
                (0..c)
                    .map(|_| {
                        if rng.gen_bool(0.5) {
                            Scalar::ZERO
                        } else {
                            Scalar::new(Rational::new(rng.gen_range(-9..10), rng.gen_range(1..5)), Rational::new(rng.gen_range(-3..4), 2))
                        }
                    })
                    .collect()
            })
            .collect();
        Matrix::from_dense(rows).unwrap()
    }

    #[test]
    fn product_matches_dense_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = random(&mut rng, 5, 7);
        let b = random(&mut rng, 7, 4);
        let p = &a * &b;
        let (da, db) = (a.to_dense(), b.to_dense());
        for i in 0..5 {
            for j in 0..4 {
                let mut s = Scalar::ZERO;
                for k in 0..7 {
                    s += &(&da[i][k] * &db[k][j]);
                }
                assert_eq!(p.get(i, j), s);
            }
        }
    }

    #[test]
    fn determinant() {
        let m = Matrix::from_dense(vec![
            vec![Scalar::int(0), Scalar::int(2), Scalar::int(1)],
            vec![Scalar::int(1), Scalar::int(1), Scalar::int(0)],
            vec![Scalar::int(3), Scalar::int(0), Scalar::i()],
        ])
        .unwrap();
        // cofactor expansion along the first row
        let want = &(&Scalar::int(-2) * &(&Scalar::i() - &Scalar::ZERO)) + &(&Scalar::int(0) - &Scalar::int(3));
        assert_eq!(m.det().unwrap(), want);
        assert_eq!(Matrix::identity(8).scale(&Scalar::int(-1)).det().unwrap(), Scalar::ONE);
    }

    #[test]
    fn inverse_of_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut inverted = 0;
        for _ in 0..20 {
            let a = random(&mut rng, 5, 5);
            match a.inverse() {
                Ok(b) => {
                    assert_eq!(&a * &b, Matrix::identity(5));
                    assert_eq!(&b * &a, Matrix::identity(5));
                    inverted += 1;
                }
                Err(_) => assert!(a.det().unwrap().is_zero()),
            }
        }
        assert!(inverted > 10);
        let singular = Matrix::from_dense(vec![vec![Scalar::ONE, Scalar::int(2)], vec![Scalar::int(2), Scalar::int(4)]]).unwrap();
        assert!(singular.inverse().is_err());
        assert!(Matrix::zeros(2, 3).inverse().is_err());
    }

    #[test]
    fn shape_errors() {
        let a = Matrix::zeros(2, 3);
        assert!(a.try_mul(&a).is_err());
        assert!(a.try_add(&Matrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn triplets_sum_duplicates_and_drop_zeros() {
        let m = Matrix::from_triplets(2, 2, [(0, 1, Scalar::int(2)), (0, 1, Scalar::int(-2)), (1, 0, Scalar::int(1))]);
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 0), Scalar::int(1));
    }

    #[test]
    fn float_mirror_of_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let a = random(&mut rng, 6, 6);
            let b = random(&mut rng, 6, 6);
            let exact = (&a * &b).to_float();
            let float = FloatMatrix(&a.to_float().0 * &b.to_float().0);
            assert!(exact.max_abs_diff(&float) < 1e-8);
        }
    }

    #[test]
    fn json_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random(&mut rng, 3, 4);
        let s = serde_json::to_string(&a).unwrap();
        let b: Matrix = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }
}
