//! Trace forms and exact inertia of real symmetric matrices.

use super::matrix::{sparse_dot, Matrix};
use super::rational::Rational;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// `tr(a·b)` without forming the product.
pub fn trace_form(a: &Matrix, b: &Matrix) -> Result<Scalar> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "trace form of {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let bt = b.transpose();
    let mut s = Scalar::ZERO;
    for i in 0..a.rows() {
        s += &sparse_dot(a.row(i), bt.row(i));
    }
    Ok(s)
}

/// Inertia `(n_pos, n_neg, n_zero)` by symmetric congruence elimination.
pub fn signature(sym: &Matrix) -> Result<(usize, usize, usize)> {
    if !sym.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} is not square", sym.rows(), sym.cols())));
    }
    if !sym.is_real() {
        return Err(Error::InvalidInput("signature needs real entries".into()));
    }
    if sym.transpose() != *sym {
        return Err(Error::InvalidInput("signature needs a symmetric matrix".into()));
    }
    let n = sym.rows();
    let mut a: Vec<Vec<Rational>> = sym.to_dense().into_iter().map(|r| r.into_iter().map(|x| x.re).collect()).collect();
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        // bring a nonzero diagonal entry to position k
        let diag = (k..n).find(|&i| !a[i][i].is_zero());
        match diag {
            Some(i) => sym_swap(&mut a, k, i),
            None => {
                let Some((i, j)) = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
                else {
                    break;
                };
                // e_i ← e_i + e_j makes the (i,i) entry 2·a_ij
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[i][c] += &v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][i] += &v;
                }
                sym_swap(&mut a, k, i);
            }
        }
        let p = a[k][k].clone();
        if p.signum() > 0 {
            pos += 1;
        } else {
            neg += 1;
        }
        let pinv = p.recip();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &pinv;
            for j in k + 1..n {
                if !a[k][j].is_zero() {
                    let d = &f * &a[k][j];
                    a[i][j] -= &d;
                }
            }
            a[i][k] = Rational::ZERO;
        }
        for j in k + 1..n {
            a[k][j] = Rational::ZERO;
        }
        k += 1;
    }
    Ok((pos, neg, n - pos - neg))
}

fn sym_swap(a: &mut [Vec<Rational>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn diag(v: &[i64]) -> Matrix {
        Matrix::from_triplets(v.len(), v.len(), v.iter().enumerate().map(|(i, &x)| (i, i, Scalar::int(x))))
    }

    #[test]
    fn small_cases() {
        assert_eq!(signature(&diag(&[1, -1, 0])).unwrap(), (1, 1, 1));
        assert_eq!(signature(&Matrix::scalar(5, &Scalar::int(-1))).unwrap(), (0, 5, 0));
        let hyp = Matrix::from_dense(vec![vec![Scalar::ZERO, Scalar::ONE], vec![Scalar::ONE, Scalar::ZERO]]).unwrap();
        assert_eq!(signature(&hyp).unwrap(), (1, 1, 0));
        let i248 = Matrix::identity(248);
        assert_eq!(trace_form(&i248, &i248).unwrap(), Scalar::int(248));
    }

    #[test]
    fn rejects_bad_input() {
        let m = Matrix::from_dense(vec![vec![Scalar::ZERO, Scalar::ONE], vec![Scalar::ZERO, Scalar::ZERO]]).unwrap();
        assert!(signature(&m).is_err());
        assert!(signature(&Matrix::scalar(2, &Scalar::i())).is_err());
        assert!(trace_form(&Matrix::identity(2), &Matrix::identity(3)).is_err());
    }

    #[test]
    fn inertia_matches_float_eigenvalues() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let n = rng.gen_range(1..9);
            let k = rng.gen_range(1..=n);
            // Bᵀ D B with B: k×n, D = ±1 diagonal
            let b: Vec<Vec<i64>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(-3..4)).collect()).collect();
            let d: Vec<i64> = (0..k).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
            let mut t = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let v: i64 = (0..k).map(|l| b[l][i] * d[l] * b[l][j]).sum();
                    t.push((i, j, Scalar::int(v)));
                }
            }
            let m = Matrix::from_triplets(n, n, t);
            let f = DMatrix::from_fn(n, n, |i, j| m.get(i, j).re.to_f64());
            let ev = f.symmetric_eigenvalues();
            let scale = ev.iter().fold(1.0f64, |a, &x| a.max(x.abs()));
            let p = ev.iter().filter(|&&x| x > 1e-9 * scale).count();
            let q = ev.iter().filter(|&&x| x < -1e-9 * scale).count();
            assert_eq!(signature(&m).unwrap(), (p, q, n - p - q));
        }
    }

    #[test]
    fn trace_form_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..50 {
            let gen = |rng: &mut ChaCha8Rng| {
                Matrix::from_triplets(6, 6, (0..12).map(|_| (rng.gen_range(0..6), rng.gen_range(0..6), Scalar::frac(rng.gen_range(-4..5), rng.gen_range(1..4)))).collect::<Vec<_>>())
            };
            let a = gen(&mut rng);
            let b = gen(&mut rng);
            assert_eq!(trace_form(&a, &b).unwrap(), trace_form(&b, &a).unwrap());
            assert_eq!(trace_form(&a, &b).unwrap(), (&a * &b).trace());
        }
    }
}
