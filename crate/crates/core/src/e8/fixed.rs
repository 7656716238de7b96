//! Fixed-point subalgebras of 𝔢₈^C and the compact real form.

use super::{algebra, killing_matrix, lambda_tilde_matrix, r_d_generators, sigma_matrix, sigma_prime_matrix, E8Element, DIM};
use crate::e7::Involution;
use crate::error::{Error, Result};
use crate::linalg::matrix::SparseVec;
use crate::linalg::{kernel, signature, Matrix, Scalar, Subspace};

fn involution_matrix(s: Involution) -> &'static Matrix {
    match s {
        Involution::Sigma => sigma_matrix(),
        Involution::SigmaPrime => sigma_prime_matrix(),
    }
}

/// Solutions of σR = R / σ′R = R for the requested involutions, [R_D, R] = 0
/// for the 28 generators if `centralize_so8`, and [R, 1₋] = 0 if
/// `stabilize_1minus`.
pub fn e8_fixed_subalgebra(involutions: &[Involution], centralize_so8: bool, stabilize_1minus: bool) -> Subspace {
    let g = algebra();
    let mut eqs = Matrix::zeros(0, DIM);
    for &s in involutions {
        eqs = eqs.vstack(&(involution_matrix(s) - &Matrix::identity(DIM))).unwrap();
    }
    let mut gens: Vec<E8Element> = Vec::new();
    if centralize_so8 {
        gens.extend(r_d_generators());
    }
    if stabilize_1minus {
        gens.push(E8Element::one_lower());
    }
    for x in &gens {
        eqs = eqs.vstack(&g.ad(&x.coords())).unwrap();
    }
    kernel(&eqs)
}

/// Centralizer of span{1̃, 1⁻, 1₋}.
pub fn grading_triple_centralizer() -> Subspace {
    let g = algebra();
    let mut eqs = Matrix::zeros(0, DIM);
    for x in [E8Element::one_tilde(), E8Element::one_upper(), E8Element::one_lower()] {
        eqs = eqs.vstack(&g.ad(&x.coords())).unwrap();
    }
    kernel(&eqs)
}

/// The Φ-slot as a subspace of the 248 coordinates.
pub fn phi_slot() -> Subspace {
    Subspace::span_sparse(DIM, &(0..super::P_OFF).map(|i| vec![(i, Scalar::ONE)]).collect::<Vec<_>>())
}

pub const COMPACT_AMBIENT: usize = 2 * DIM;

/// Real 248-dim fixed space of τλ̃ inside the real coordinates
/// `[re (248) | im (248)]`: {x : λ̃x = x} ⊕ i·{y : λ̃y = −y} for real x, y.
///
/// λ̃ has real entries, so τλ̃(x + iy) = λ̃x − iλ̃y.
pub fn compact_form_basis() -> Subspace {
    let l = lambda_tilde_matrix();
    let plus = kernel(&(l - &Matrix::identity(DIM)));
    let minus = kernel(&(l + &Matrix::identity(DIM)));
    let mut vecs: Vec<SparseVec> = Vec::new();
    for v in plus.basis() {
        vecs.push(v.iter().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (*i, c.clone())).collect());
    }
    for v in minus.basis() {
        vecs.push(v.iter().map(|(i, c)| (DIM + i, c.clone())).collect());
    }
    Subspace::span_sparse(COMPACT_AMBIENT, &vecs)
}

/// Complex 248-coordinates of a vector in the real ambient.
pub fn compact_to_complex(v: &[(usize, Scalar)]) -> SparseVec {
    let mut out = vec![Scalar::ZERO; DIM];
    for (i, c) in v {
        if *i < DIM {
            out[*i] += c;
        } else {
            out[i - DIM] += &(c * &Scalar::i());
        }
    }
    crate::linalg::matrix::to_sparse(&out)
}

/// Real coordinates of a complex 248-vector.
pub fn complex_to_compact(v: &[(usize, Scalar)]) -> SparseVec {
    let mut out: SparseVec = Vec::new();
    for (i, c) in v {
        if !c.re.is_zero() {
            out.push((*i, Scalar::real(c.re.clone())));
        }
    }
    for (i, c) in v {
        if !c.im.is_zero() {
            out.push((DIM + i, Scalar::real(c.im.clone())));
        }
    }
    out
}

/// Gram matrix of B₈ on the compact basis. Entries are real because B₈ is
/// real on the real form.
pub fn compact_killing_gram(basis: &Subspace) -> Result<Matrix> {
    let k = killing_matrix();
    let cs: Vec<SparseVec> = basis.basis().iter().map(|v| compact_to_complex(v)).collect();
    let kc: Vec<SparseVec> = cs.iter().map(|v| k.mul_sparse_vec(v)).collect();
    let n = cs.len();
    let mut rows = vec![vec![Scalar::ZERO; n]; n];
    for i in 0..n {
        for j in 0..n {
            rows[i][j] = crate::linalg::matrix::sparse_dot(&cs[i], &kc[j]);
            if !rows[i][j].is_real() {
                return Err(Error::Inconsistent(format!("Killing form not real on compact basis ({i}, {j})")));
            }
        }
    }
    Matrix::from_dense(rows)
}

pub fn compact_killing_signature() -> Result<(usize, usize, usize)> {
    signature(&compact_killing_gram(&compact_form_basis())?)
}

/// Every bracket of compact basis elements lies in the compact form.
pub fn compact_form_is_closed(basis: &Subspace) -> bool {
    let g = algebra();
    let cs: Vec<SparseVec> = basis.basis().iter().map(|v| compact_to_complex(v)).collect();
    use rayon::prelude::*;
    (0..cs.len()).into_par_iter().all(|i| {
        (i + 1..cs.len()).all(|j| basis.contains_sparse(&complex_to_compact(&g.bracket_sparse(&cs[i], &cs[j]))))
    })
}

/// `basis ∩ h` where `h` is a complex subspace, computed in real coordinates
/// (h is spanned over C, so both h and i·h are added).
pub fn compact_part(h: &Subspace) -> Result<Subspace> {
    let mut vecs: Vec<SparseVec> = Vec::new();
    for v in h.basis() {
        vecs.push(complex_to_compact(v));
        let iv: SparseVec = v.iter().map(|(i, c)| (*i, c * &Scalar::i())).collect();
        vecs.push(complex_to_compact(&iv));
    }
    Subspace::span_sparse(COMPACT_AMBIENT, &vecs).intersect(&compact_form_basis())
}
