//! Derivations of 𝔍^C (𝔣₄^C), the 78-dimensional 𝔢₆^C, the σ,σ′-commutant
//! 𝔰𝔬(8,C) ⊂ 𝔣₄^C and the triality relation that parametrizes it.
//!
//! Operators on 𝔍^C are flattened to 729 coordinates, index `a·27 + b`
//! holding the matrix entry (a, b).

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jordan::{self, JordanElement, JordanOperator, DIM};
use crate::linalg::matrix::{to_sparse, Accumulator, SparseVec};
use crate::linalg::{kernel, solve, Matrix, Scalar, Subspace};
use crate::octonion::Octonion;

pub const OP_DIM: usize = DIM * DIM;

pub fn flatten(op: &JordanOperator) -> Vec<Scalar> {
    let mut v = vec![Scalar::ZERO; OP_DIM];
    for (i, j, x) in op.triplets() {
        v[i * DIM + j] = x.clone();
    }
    v
}

pub fn unflatten(v: &[Scalar]) -> JordanOperator {
    assert_eq!(v.len(), OP_DIM);
    Matrix::from_triplets(
        DIM,
        DIM,
        v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k / DIM, k % DIM, x.clone())).collect::<Vec<_>>(),
    )
}

pub fn unflatten_sparse(v: &[(usize, Scalar)]) -> JordanOperator {
    Matrix::from_triplets(DIM, DIM, v.iter().map(|(k, x)| (k / DIM, k % DIM, x.clone())).collect::<Vec<_>>())
}

/// Rows of the linear system δ(eᵢ∘eⱼ) = δeᵢ∘eⱼ + eᵢ∘δeⱼ, pairs i ≤ j.
fn derivation_rows() -> Vec<SparseVec> {
    let prod = &jordan::tables().prod;
    let mut rows = Vec::with_capacity(DIM * (DIM + 1) / 2 * DIM);
    let mut acc = Accumulator::new(OP_DIM);
    for i in 0..DIM {
        for j in i..DIM {
            // component c of each side, collected per c
            let mut per_c: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); DIM];
            for (b, v) in &prod[i][j] {
                for (c, pc) in per_c.iter_mut().enumerate() {
                    pc.push((c * DIM + b, v.clone()));
                }
            }
            for a in 0..DIM {
                for (c, v) in &prod[a][j] {
                    per_c[*c].push((a * DIM + i, -v));
                }
                for (c, v) in &prod[i][a] {
                    per_c[*c].push((a * DIM + j, -v));
                }
            }
            for pc in per_c {
                for (k, v) in &pc {
                    acc.add(*k, v);
                }
                let r = acc.drain();
                if !r.is_empty() {
                    rows.push(r);
                }
            }
        }
    }
    rows
}

/// Derivation algebra 𝔣₄^C as a subspace of the 729 operator coordinates.
pub fn solve_f4_derivations() -> &'static Subspace {
    static S: OnceLock<Subspace> = OnceLock::new();
    S.get_or_init(|| {
        let rows = derivation_rows();
        kernel(&Matrix::from_sparse_rows(OP_DIM, rows))
    })
}

pub fn f4_basis_operators() -> &'static [JordanOperator] {
    static B: OnceLock<Vec<JordanOperator>> = OnceLock::new();
    B.get_or_init(|| solve_f4_derivations().basis().iter().map(|v| unflatten_sparse(v)).collect())
}

pub fn is_derivation(op: &JordanOperator) -> bool {
    let basis: Vec<JordanElement> = (0..DIM).map(JordanElement::basis).collect();
    for i in 0..DIM {
        for j in i..DIM {
            let lhs = basis[i].mul(&basis[j]).apply(op);
            let rhs = &basis[i].apply(op).mul(&basis[j]) + &basis[i].mul(&basis[j].apply(op));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The 26 traceless diagonal/off-diagonal elements T (E₁−E₃, E₂−E₃, Fₖ(eᵢ)).
pub fn traceless_basis() -> Vec<JordanElement> {
    let mut out = vec![&JordanElement::e(1) - &JordanElement::e(3), &JordanElement::e(2) - &JordanElement::e(3)];
    for k in 1..=3 {
        for c in 0..8 {
            out.push(JordanElement::f(k, Octonion::unit(c)));
        }
    }
    out
}

/// 𝔢₆^C = 𝔣₄^C ⊕ {T̃ : tr T = 0}.
pub fn e6_basis() -> &'static Subspace {
    static S: OnceLock<Subspace> = OnceLock::new();
    S.get_or_init(|| {
        let mut vecs: Vec<SparseVec> = solve_f4_derivations().basis().to_vec();
        for t in traceless_basis() {
            vecs.push(to_sparse(&flatten(&t.tilde())));
        }
        Subspace::span_sparse(OP_DIM, &vecs)
    })
}

pub fn e6_basis_operators() -> &'static [JordanOperator] {
    static B: OnceLock<Vec<JordanOperator>> = OnceLock::new();
    B.get_or_init(|| e6_basis().basis().iter().map(|v| unflatten_sparse(v)).collect())
}

/// Coordinates of φ in the canonical 𝔢₆ basis, if φ ∈ 𝔢₆.
pub fn e6_coordinates(phi: &JordanOperator) -> Option<Vec<Scalar>> {
    let basis = e6_basis();
    let mut c = Vec::with_capacity(basis.dim());
    for &p in basis.pivots() {
        c.push(phi.get(p / DIM, p % DIM));
    }
    let mut recon = Matrix::zeros(DIM, DIM);
    for (ci, b) in c.iter().zip(e6_basis_operators()) {
        if !ci.is_zero() {
            recon = recon.lin_comb(ci, b);
        }
    }
    (recon == *phi).then_some(c)
}

/// Infinitesimal invariance of the cubic form: (φX, X×X) = 0.
pub fn preserves_det(phi: &JordanOperator, x: &JordanElement) -> bool {
    x.apply(phi).inner(&x.cross(x)).is_zero()
}

/// Operators commuting with both σ and σ′, in flattened coordinates.
fn sigma_commutant() -> Subspace {
    let (s, sp) = (jordan::sigma_operator(), jordan::sigma_prime_operator());
    let sign = |m: &Matrix, i: usize| m.get(i, i);
    let vecs: Vec<SparseVec> = (0..OP_DIM)
        .filter(|&k| {
            let (a, b) = (k / DIM, k % DIM);
            sign(s, a) == sign(s, b) && sign(sp, a) == sign(sp, b)
        })
        .map(|k| vec![(k, Scalar::ONE)])
        .collect();
    Subspace::span_sparse(OP_DIM, &vecs)
}

/// (𝔣₄^C)^{σ,σ′}.
pub fn f4_commutant_basis() -> &'static Subspace {
    static S: OnceLock<Subspace> = OnceLock::new();
    S.get_or_init(|| solve_f4_derivations().intersect(&sigma_commutant()).expect("same ambient"))
}

pub fn f4_commutant_operators() -> &'static [JordanOperator] {
    static B: OnceLock<Vec<JordanOperator>> = OnceLock::new();
    B.get_or_init(|| f4_commutant_basis().basis().iter().map(|v| unflatten_sparse(v)).collect())
}

/// Skew-symmetric 8×8 basis E_pq = e_p e_qᵀ − e_q e_pᵀ, p < q.
pub fn skew_basis() -> Vec<Matrix> {
    let mut out = Vec::with_capacity(28);
    for p in 0..8 {
        for q in p + 1..8 {
            out.push(Matrix::from_triplets(8, 8, [(p, q, Scalar::ONE), (q, p, Scalar::int(-1))]));
        }
    }
    out
}

pub fn is_skew(m: &Matrix) -> bool {
    m.rows() == 8 && m.cols() == 8 && (m + &m.transpose()).is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialityTriple {
    pub d1: Matrix,
    pub d2: Matrix,
    pub d3: Matrix,
}

impl TrialityTriple {
    /// D₁(x)y + xD₂(y) = conj(D₃(conj(xy))) on all 64 basis pairs.
    pub fn violation(&self) -> Option<(usize, usize)> {
        for i in 0..8 {
            for j in 0..8 {
                let (x, y) = (Octonion::unit(i), Octonion::unit(j));
                let lhs = &x.transform(&self.d1).mul(&y) + &x.mul(&y.transform(&self.d2));
                let rhs = x.mul(&y).conj().transform(&self.d3).conj();
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// The action on 𝔍^C: zero diagonal, Dₖ on slot xₖ.
    pub fn jordan_operator(&self) -> JordanOperator {
        block_operator(&Matrix::zeros(3, 3), [&self.d1, &self.d2, &self.d3])
    }
}

/// Block-diagonal operator with `diag` on ξ and `blocks[k]` on x_{k+1}.
pub fn block_operator(diag: &Matrix, blocks: [&Matrix; 3]) -> JordanOperator {
    let mut t: Vec<(usize, usize, Scalar)> = diag.triplets().map(|(i, j, v)| (i, j, v.clone())).collect();
    for (k, b) in blocks.iter().enumerate() {
        let off = 3 + 8 * k;
        t.extend(b.triplets().map(|(i, j, v)| (off + i, off + j, v.clone())));
    }
    Matrix::from_triplets(DIM, DIM, t)
}

/// The unique (D₂, D₃) completing a skew D₁ to a triality triple.
pub fn triality_completion(d1: &Matrix) -> Result<TrialityTriple> {
    if !is_skew(d1) {
        return Err(Error::InvalidInput("D1 must be an 8x8 skew-symmetric matrix".into()));
    }
    let skew = skew_basis();
    // unknowns: 28 coefficients of D₂ then 28 of D₃; equations: (i, j, component)
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(56);
    for e in &skew {
        let mut col = Vec::with_capacity(512);
        for i in 0..8 {
            for j in 0..8 {
                col.extend(Octonion::unit(i).mul(&Octonion::unit(j).transform(e)).0.iter().cloned());
            }
        }
        cols.push(col);
    }
    for e in &skew {
        let mut col = Vec::with_capacity(512);
        for i in 0..8 {
            for j in 0..8 {
                let v = Octonion::unit(i).mul(&Octonion::unit(j)).conj().transform(e).conj();
                col.extend(v.0.iter().map(|s| -s));
            }
        }
        cols.push(col);
    }
    let mut rhs = Vec::with_capacity(512);
    for i in 0..8 {
        for j in 0..8 {
            let v = Octonion::unit(i).transform(d1).mul(&Octonion::unit(j));
            rhs.extend(v.0.iter().map(|s| -s));
        }
    }
    let m = Matrix::from_columns(512, &cols);
    let (x, null) = solve(&m, &rhs).ok_or_else(|| Error::Inconsistent("triality system has no solution".into()))?;
    if null.dim() != 0 {
        return Err(Error::Inconsistent(format!("triality completion not unique ({}-dim freedom)", null.dim())));
    }
    let combine = |coeffs: &[Scalar]| {
        let mut d = Matrix::zeros(8, 8);
        for (c, e) in coeffs.iter().zip(&skew) {
            if !c.is_zero() {
                d = d.lin_comb(c, e);
            }
        }
        d
    };
    let triple = TrialityTriple { d1: d1.clone(), d2: combine(&x[..28]), d3: combine(&x[28..]) };
    debug_assert!(triple.violation().is_none());
    Ok(triple)
}

fn is_special_orthogonal(a: &Matrix) -> Result<bool> {
    Ok(a.rows() == 8 && a.cols() == 8 && (&a.transpose() * a) == Matrix::identity(8) && a.det()?.is_one())
}

/// φ(α₁, α₂, α₃): identity on the diagonal, αₖ on slot xₖ.
pub fn spin8_group_element(a1: &Matrix, a2: &Matrix, a3: &Matrix) -> Result<JordanOperator> {
    for (k, a) in [a1, a2, a3].iter().enumerate() {
        if !is_special_orthogonal(a)? {
            return Err(Error::InvalidInput(format!("alpha{} is not in SO(8)", k + 1)));
        }
    }
    for i in 0..8 {
        for j in 0..8 {
            let (x, y) = (Octonion::unit(i), Octonion::unit(j));
            let lhs = x.transform(a1).mul(&y.transform(a2));
            let rhs = x.mul(&y).conj().transform(a3).conj();
            if lhs != rhs {
                return Err(Error::InvalidInput(format!("compatibility fails on basis pair (e{i}, e{j})")));
            }
        }
    }
    Ok(block_operator(&Matrix::identity(3), [a1, a2, a3]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{FloatMatrix, Rational};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_element(rng: &mut ChaCha8Rng) -> JordanElement {
        JordanElement::from_coords(
            &(0..DIM).map(|_| Scalar::new(Rational::new(rng.gen_range(-4..5), rng.gen_range(1..3)), Rational::from_int(rng.gen_range(-1..2)))).collect::<Vec<_>>(),
        )
    }

    fn random_skew(rng: &mut ChaCha8Rng) -> Matrix {
        let mut d = Matrix::zeros(8, 8);
        for e in skew_basis() {
            d = d.lin_comb(&Scalar::frac(rng.gen_range(-3..4), rng.gen_range(1..3)), &e);
        }
        d
    }

    #[test]
    fn derivation_dimensions() {
        let d = solve_f4_derivations();
        assert_eq!(d.dim(), 52);
        let e = JordanElement::unit();
        for op in f4_basis_operators() {
            assert!(e.apply(op).is_zero());
            assert!(is_derivation(op));
        }
        assert_eq!(e6_basis().dim(), 78);
        assert_eq!(f4_commutant_basis().dim(), 28);
    }

    #[test]
    fn e6_elements_preserve_det() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let ops = e6_basis_operators();
        for _ in 0..10 {
            let x = random_element(&mut rng);
            let k = rng.gen_range(0..ops.len());
            assert!(preserves_det(&ops[k], &x));
        }
        let t = (&JordanElement::e(1) - &JordanElement::unit().scale(&Scalar::frac(1, 3))).tilde();
        assert!(e6_coordinates(&t).is_some());
        for _ in 0..20 {
            assert!(preserves_det(&t, &random_element(&mut rng)));
        }
        // E itself is not traceless, so Ẽ (the identity) is not in 𝔢₆
        assert!(e6_coordinates(&Matrix::identity(DIM)).is_none());
    }

    #[test]
    fn e6_is_closed_and_graded() {
        let ops = e6_basis_operators();
        let f4 = solve_f4_derivations();
        let tl: Vec<JordanOperator> = traceless_basis().iter().map(JordanElement::tilde).collect();
        let tl_space = Subspace::span(OP_DIM, &tl.iter().map(flatten).collect::<Vec<_>>());
        for i in (0..ops.len()).step_by(5) {
            for j in (i + 1..ops.len()).step_by(3) {
                assert!(e6_coordinates(&ops[i].commutator(&ops[j])).is_some());
            }
        }
        for d in f4_basis_operators().iter().step_by(4) {
            for t in tl.iter().step_by(3) {
                assert!(tl_space.contains(&flatten(&d.commutator(t))));
            }
        }
        for a in tl.iter().step_by(2) {
            for b in tl.iter().step_by(5) {
                assert!(f4.contains(&flatten(&a.commutator(b))));
            }
        }
    }

    #[test]
    fn commutant_shape_and_closure() {
        let ops = f4_commutant_operators();
        let space = f4_commutant_basis();
        for op in ops {
            for i in 1..=3 {
                assert!(JordanElement::e(i).apply(op).is_zero());
            }
            // preserves each off-diagonal slot
            for k in 1..=3 {
                for c in 0..8 {
                    let img = JordanElement::f(k, Octonion::unit(c)).apply(op);
                    assert!(img.x.iter().enumerate().all(|(m, o)| m + 1 == k || o.is_zero()));
                }
            }
        }
        for a in ops {
            for b in ops {
                assert!(space.contains(&flatten(&a.commutator(b))));
            }
        }
    }

    #[test]
    fn triality_completion_basics() {
        let z = triality_completion(&Matrix::zeros(8, 8)).unwrap();
        assert!(z.d2.is_zero() && z.d3.is_zero());
        let space = f4_commutant_basis();
        for e in skew_basis() {
            let t = triality_completion(&e).unwrap();
            assert!(t.violation().is_none());
            assert!(is_skew(&t.d2) && is_skew(&t.d3));
            assert!(space.contains(&flatten(&t.jordan_operator())));
        }
        assert!(triality_completion(&Matrix::identity(8)).is_err());
    }

    #[test]
    fn triality_completion_is_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..5 {
            let (d, e) = (random_skew(&mut rng), random_skew(&mut rng));
            let (a, b) = (Scalar::frac(rng.gen_range(-5..6), 3), Scalar::frac(rng.gen_range(-5..6), 2));
            let lhs = triality_completion(&d.scale(&a).lin_comb(&b, &e)).unwrap();
            let (td, te) = (triality_completion(&d).unwrap(), triality_completion(&e).unwrap());
            assert_eq!(lhs.d2, td.d2.scale(&a).lin_comb(&b, &te.d2));
            assert_eq!(lhs.d3, td.d3.scale(&a).lin_comb(&b, &te.d3));
        }
    }

    #[test]
    fn spin8_elements() {
        let id = Matrix::identity(8);
        assert_eq!(spin8_group_element(&id, &id, &id).unwrap(), Matrix::identity(DIM));
        let m = id.scale(&Scalar::int(-1));
        let op = spin8_group_element(&m, &m, &id).unwrap();
        assert_eq!(&op, jordan::sigma_prime_operator());
        assert!(spin8_group_element(&m, &id, &id).is_err());
        // a coordinate permutation is orthogonal but breaks compatibility
        let mut t = Vec::new();
        for i in 0..8 {
            t.push((i, (i + 1) % 8, Scalar::ONE));
        }
        let p = Matrix::from_triplets(8, 8, t);
        assert!(spin8_group_element(&p, &id, &id).is_err());
    }

    #[test]
    fn exp_of_triality_triple_is_compatible() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let t = triality_completion(&random_skew(&mut rng)).unwrap();
        let s = num_complex::Complex::new(0.05, 0.0);
        let exps: Vec<FloatMatrix> = [&t.d1, &t.d2, &t.d3].iter().map(|d| d.to_float().scale(s).exp().unwrap()).collect();
        let table = crate::octonion::mult_table();
        let fmul = |x: &[crate::linalg::C64], y: &[crate::linalg::C64]| {
            let mut out = vec![crate::linalg::C64::new(0.0, 0.0); 8];
            for i in 0..8 {
                for j in 0..8 {
                    let (sg, k) = table[i][j];
                    out[k] += x[i] * y[j] * sg as f64;
                }
            }
            out
        };
        let fconj = |x: &mut Vec<crate::linalg::C64>| x.iter_mut().skip(1).for_each(|z| *z = -*z);
        for i in 0..8 {
            for j in 0..8 {
                let unit = |k: usize| (0..8).map(|m| crate::linalg::C64::new(if m == k { 1.0 } else { 0.0 }, 0.0)).collect::<Vec<_>>();
                let lhs = fmul(&exps[0].mul_vec(&unit(i)), &exps[1].mul_vec(&unit(j)));
                let mut xy = fmul(&unit(i), &unit(j));
                fconj(&mut xy);
                let mut rhs = exps[2].mul_vec(&xy);
                fconj(&mut rhs);
                for k in 0..8 {
                    assert!((lhs[k] - rhs[k]).norm() < 1e-9);
                }
            }
        }
        let exp_op = t.jordan_operator().to_float().scale(s).exp().unwrap();
        let group = FloatMatrix(crate::linalg::FloatMatrix::identity(DIM).0.clone());
        let mut want = group;
        for (k, e) in exps.iter().enumerate() {
            for a in 0..8 {
                for b in 0..8 {
                    want.0[(3 + 8 * k + a, 3 + 8 * k + b)] = e.0[(a, b)];
                }
            }
        }
        assert!(exp_op.max_abs_diff(&want) < 1e-9);
    }
}
