//! 𝔢₇^C = {Φ(φ, A, B, ν)} acting on 𝔓^C, the elements κ, μ, the SL(2)
//! embeddings φₖ(A), and the fixed subalgebras of σ, σ′, κ, μ.
//!
//! Coordinates (133): `[φ in the canonical 𝔢₆ basis (78), A(27), B(27), ν]`.
//!
//! Action:
//! `Φ(X, Y, ξ, η) = (φX − ⅓νX + 2B×Y + ηA, 2A×X − φᵗY + ⅓νY + ξB, (A,Y) + νξ, (B,X) − νη)`.

use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f4;
use crate::freudenthal::{self, freudenthal_cross, PElement};
use crate::jordan::{self, adjoint, vee, JordanElement, JordanOperator};
use crate::lie::LieAlgebra;
use crate::linalg::matrix::{to_sparse, Accumulator, SparseVec};
use crate::linalg::{kernel, Matrix, Scalar, Subspace};

pub const DIM: usize = 133;
pub const E6_DIM: usize = 78;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct E7Element {
    pub phi: JordanOperator,
    pub a: JordanElement,
    pub b: JordanElement,
    pub nu: Scalar,
}

impl E7Element {
    /// Checked constructor: φ must lie in 𝔢₆.
    pub fn new(phi: JordanOperator, a: JordanElement, b: JordanElement, nu: Scalar) -> Result<Self> {
        if phi.rows() != jordan::DIM || phi.cols() != jordan::DIM || f4::e6_coordinates(&phi).is_none() {
            return Err(Error::InvalidInput("phi is not in e6".into()));
        }
        Ok(E7Element { phi, a, b, nu })
    }

    /// For values that are in 𝔢₆ by construction (cross products, brackets).
    pub fn from_parts_unchecked(phi: JordanOperator, a: JordanElement, b: JordanElement, nu: Scalar) -> Self {
        E7Element { phi, a, b, nu }
    }

    pub fn zero() -> Self {
        E7Element { phi: Matrix::zeros(jordan::DIM, jordan::DIM), a: JordanElement::zero(), b: JordanElement::zero(), nu: Scalar::ZERO }
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero() && self.a.is_zero() && self.b.is_zero() && self.nu.is_zero()
    }

    pub fn basis(i: usize) -> Self {
        let mut v = vec![Scalar::ZERO; DIM];
        v[i] = Scalar::ONE;
        Self::from_coords(&v)
    }

    pub fn coords(&self) -> Vec<Scalar> {
        self.try_coords().expect("phi is not in e6")
    }

    pub fn try_coords(&self) -> Option<Vec<Scalar>> {
        let mut v = f4::e6_coordinates(&self.phi)?;
        v.extend(self.a.coords());
        v.extend(self.b.coords());
        v.push(self.nu.clone());
        Some(v)
    }

    pub fn from_coords(v: &[Scalar]) -> Self {
        assert_eq!(v.len(), DIM);
        let mut phi = Matrix::zeros(jordan::DIM, jordan::DIM);
        for (c, op) in v[..E6_DIM].iter().zip(f4::e6_basis_operators()) {
            if !c.is_zero() {
                phi = phi.lin_comb(c, op);
            }
        }
        E7Element {
            phi,
            a: JordanElement::from_coords(&v[E6_DIM..E6_DIM + 27]),
            b: JordanElement::from_coords(&v[E6_DIM + 27..E6_DIM + 54]),
            nu: v[DIM - 1].clone(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        E7Element { phi: self.phi.scale(c), a: self.a.scale(c), b: self.b.scale(c), nu: &self.nu * c }
    }

    pub fn apply(&self, p: &PElement) -> PElement {
        e7_apply(self, p)
    }

    /// The 56×56 matrix of the action.
    pub fn operator(&self) -> Matrix {
        Matrix::from_columns(freudenthal::DIM, &(0..freudenthal::DIM).map(|i| self.apply(&PElement::basis(i)).coords()).collect::<Vec<_>>())
    }

    pub fn bracket(&self, other: &E7Element) -> E7Element {
        e7_bracket(self, other)
    }

    /// α Φ α⁻¹ for α ∈ {σ, σ′} (both act on 𝔍^C and are their own inverses).
    pub fn conj_by_jordan_involution(&self, s: &Matrix) -> E7Element {
        E7Element {
            phi: &(s * &self.phi) * s,
            a: self.a.apply(s),
            b: self.b.apply(s),
            nu: self.nu.clone(),
        }
    }

    pub fn sigma(&self) -> E7Element {
        self.conj_by_jordan_involution(jordan::sigma_operator())
    }

    pub fn sigma_prime(&self) -> E7Element {
        self.conj_by_jordan_involution(jordan::sigma_prime_operator())
    }

    /// λΦλ⁻¹ = Φ(−φᵗ, −B, −A, −ν).
    pub fn lambda_conj(&self) -> E7Element {
        E7Element { phi: -&adjoint(&self.phi), a: -&self.b, b: -&self.a, nu: -&self.nu }
    }

    /// Complex conjugation of all coordinates.
    pub fn tau(&self) -> E7Element {
        E7Element { phi: self.phi.conj(), a: conj_j(&self.a), b: conj_j(&self.b), nu: self.nu.conj() }
    }
}

fn conj_j(x: &JordanElement) -> JordanElement {
    JordanElement::from_coords(&x.coords().iter().map(Scalar::conj).collect::<Vec<_>>())
}

impl Add for &E7Element {
    type Output = E7Element;
    fn add(self, o: &E7Element) -> E7Element {
        E7Element { phi: &self.phi + &o.phi, a: &self.a + &o.a, b: &self.b + &o.b, nu: &self.nu + &o.nu }
    }
}

impl Sub for &E7Element {
    type Output = E7Element;
    fn sub(self, o: &E7Element) -> E7Element {
        E7Element { phi: &self.phi - &o.phi, a: &self.a - &o.a, b: &self.b - &o.b, nu: &self.nu - &o.nu }
    }
}

impl Neg for &E7Element {
    type Output = E7Element;
    fn neg(self) -> E7Element {
        self.scale(&Scalar::int(-1))
    }
}

pub fn e7_apply(f: &E7Element, p: &PElement) -> PElement {
    let third = &f.nu * &Scalar::frac(1, 3);
    let two = Scalar::int(2);
    let x = &(&(&p.x.apply(&f.phi) - &p.x.scale(&third)) + &f.b.cross(&p.y).scale(&two)) + &f.a.scale(&p.eta);
    let phit = adjoint(&f.phi);
    let y = &(&(&f.a.cross(&p.x).scale(&two) - &p.y.apply(&phit)) + &p.y.scale(&third)) + &f.b.scale(&p.xi);
    let xi = &f.a.inner(&p.y) + &(&f.nu * &p.xi);
    let eta = &f.b.inner(&p.x) - &(&f.nu * &p.eta);
    PElement { x, y, xi, eta }
}

/// Closed-form bracket:
/// φ = [φ₁,φ₂] + 2A₁∨B₂ − 2A₂∨B₁,
/// A = (φ₁ + ⅔ν₁)A₂ − (φ₂ + ⅔ν₂)A₁,
/// B = −(φ₁ᵗ + ⅔ν₁)B₂ + (φ₂ᵗ + ⅔ν₂)B₁,
/// ν = (A₁,B₂) − (A₂,B₁).
pub fn e7_bracket(f1: &E7Element, f2: &E7Element) -> E7Element {
    let two = Scalar::int(2);
    let tt = Scalar::frac(2, 3);
    let phi = &(&f1.phi.commutator(&f2.phi) + &vee(&f1.a, &f2.b).scale(&two)) - &vee(&f2.a, &f1.b).scale(&two);
    let a = &(&f2.a.apply(&f1.phi) + &f2.a.scale(&(&tt * &f1.nu))) - &(&f1.a.apply(&f2.phi) + &f1.a.scale(&(&tt * &f2.nu)));
    let b = &(&f1.b.apply(&adjoint(&f2.phi)) + &f1.b.scale(&(&tt * &f2.nu))) - &(&f2.b.apply(&adjoint(&f1.phi)) + &f2.b.scale(&(&tt * &f1.nu)));
    let nu = &f1.a.inner(&f2.b) - &f2.a.inner(&f1.b);
    E7Element { phi, a, b, nu }
}

/// Read Φ back from a 56×56 operator; fails if the operator is not of Φ form.
pub fn decompose(op: &Matrix) -> Result<E7Element> {
    let img_xi = PElement::basis(54).apply(op);
    let img_eta = PElement::basis(55).apply(op);
    let b = img_xi.y.clone();
    let nu = img_xi.xi.clone();
    let a = img_eta.x.clone();
    let third = &nu * &Scalar::frac(1, 3);
    let mut t = Vec::new();
    for i in 0..27 {
        for j in 0..27 {
            let v = op.get(i, j);
            if !v.is_zero() {
                t.push((i, j, v));
            }
        }
        t.push((i, i, third.clone()));
    }
    let phi = Matrix::from_triplets(27, 27, t);
    let f = E7Element { phi, a, b, nu };
    if f4::e6_coordinates(&f.phi).is_none() {
        return Err(Error::Inconsistent("operator block is not in e6".into()));
    }
    if f.operator() != *op {
        return Err(Error::Inconsistent("operator is not of the form Phi(phi, A, B, nu)".into()));
    }
    Ok(f)
}

/// [Φ₁, Φ₂] through the operator commutator and [`decompose`].
pub fn e7_bracket_via_operators(f1: &E7Element, f2: &E7Element) -> Result<E7Element> {
    decompose(&f1.operator().commutator(&f2.operator()))
}

/// κ = Φ(−2E₁∨E₁, 0, 0, −1).
pub fn kappa() -> E7Element {
    let e1 = JordanElement::e(1);
    E7Element::from_parts_unchecked(vee(&e1, &e1).scale(&Scalar::int(-2)), JordanElement::zero(), JordanElement::zero(), Scalar::int(-1))
}

/// μ = Φ(0, E₁, E₁, 0).
pub fn mu() -> E7Element {
    E7Element::from_parts_unchecked(Matrix::zeros(27, 27), JordanElement::e(1), JordanElement::e(1), Scalar::ZERO)
}

/// Φ_D = (D, 0, 0, 0) for the canonical basis of (𝔣₄^C)^{σ,σ′}.
pub fn phi_d_generators() -> Vec<E7Element> {
    f4::f4_commutant_operators()
        .iter()
        .map(|d| E7Element::from_parts_unchecked(d.clone(), JordanElement::zero(), JordanElement::zero(), Scalar::ZERO))
        .collect()
}

pub fn basis_elements() -> &'static [E7Element] {
    static B: OnceLock<Vec<E7Element>> = OnceLock::new();
    B.get_or_init(|| (0..DIM).map(E7Element::basis).collect())
}

pub fn basis_operators() -> &'static [Matrix] {
    static B: OnceLock<Vec<Matrix>> = OnceLock::new();
    B.get_or_init(|| {
        use rayon::prelude::*;
        basis_elements().par_iter().map(E7Element::operator).collect()
    })
}

/// Structure constants of 𝔢₇ in the 133 coordinates.
pub fn algebra() -> &'static LieAlgebra {
    static G: OnceLock<LieAlgebra> = OnceLock::new();
    G.get_or_init(|| {
        let b = basis_elements();
        LieAlgebra::from_bracket(DIM, |i, j| to_sparse(&b[i].bracket(&b[j]).coords()))
    })
}

/// Operator of the element with the given 133 coordinates.
pub fn operator_of_coords(v: &[(usize, Scalar)]) -> Matrix {
    let ops = basis_operators();
    let mut acc = Matrix::zeros(freudenthal::DIM, freudenthal::DIM);
    for (i, c) in v {
        acc = acc.lin_comb(c, &ops[*i]);
    }
    acc
}

/// `cross_table()[i][j]` = coordinates of Pᵢ × Pⱼ for basis vectors of 𝔓^C.
pub fn cross_table() -> &'static Vec<Vec<SparseVec>> {
    static T: OnceLock<Vec<Vec<SparseVec>>> = OnceLock::new();
    T.get_or_init(|| {
        use rayon::prelude::*;
        let n = freudenthal::DIM;
        let basis: Vec<PElement> = (0..n).map(PElement::basis).collect();
        let upper: Vec<Vec<SparseVec>> = (0..n)
            .into_par_iter()
            .map(|i| (i..n).map(|j| to_sparse(&freudenthal_cross(&basis[i], &basis[j]).coords())).collect())
            .collect();
        (0..n).map(|i| (0..n).map(|j| if i <= j { upper[i][j - i].clone() } else { upper[j][i - j].clone() }).collect()).collect()
    })
}

/// Coordinates of P × Q through the bilinear table.
pub fn cross_coords(p: &[(usize, Scalar)], q: &[(usize, Scalar)]) -> SparseVec {
    let t = cross_table();
    let mut acc = Accumulator::new(DIM);
    for (i, a) in p {
        for (j, b) in q {
            let ab = a * b;
            for (k, c) in &t[*i][*j] {
                acc.add_scaled(*k, &ab, c);
            }
        }
    }
    acc.drain()
}

/// α(P × Q)α⁻¹ = αP × αQ on all basis pairs, checked as α(P×Q) = (αP×αQ)α.
pub fn e7_operator_is_group_element(alpha: &Matrix) -> bool {
    use rayon::prelude::*;
    let n = freudenthal::DIM;
    if alpha.rows() != n || alpha.cols() != n {
        return false;
    }
    let cols: Vec<SparseVec> = (0..n).map(|j| to_sparse(&alpha.column(j))).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    pairs.par_iter().all(|&(i, j)| {
        let lhs = alpha * &operator_of_coords(&cross_table()[i][j]);
        let rhs = &operator_of_coords(&cross_coords(&cols[i], &cols[j])) * alpha;
        lhs == rhs
    })
}

/// φₖ(A), k ∈ {1,2,3}, A ∈ SL(2).
pub fn phi_k(a: &Matrix, k: usize) -> Result<Matrix> {
    if !(1..=3).contains(&k) {
        return Err(Error::InvalidInput(format!("k must be 1, 2 or 3, got {k}")));
    }
    if a.rows() != 2 || a.cols() != 2 || !a.det()?.is_one() {
        return Err(Error::InvalidInput("A must be a 2x2 matrix with det 1".into()));
    }
    let idx_xi = |m: usize| (m - 1) % 3; // ξ_m
    let idx_eta = |m: usize| 27 + (m - 1) % 3; // η_m
    let (s_xi, s_eta) = (54, 55);
    let kk = |d: usize| (k - 1 + d) % 3 + 1;
    let mut t: Vec<(usize, usize, Scalar)> = Vec::new();
    let mut touched = [false; 56];
    let mut pair = |p: usize, q: usize, m: &Matrix, t: &mut Vec<(usize, usize, Scalar)>| {
        for (r, out) in [p, q].iter().enumerate() {
            for (c, inp) in [p, q].iter().enumerate() {
                let v = m.get(r, c);
                if !v.is_zero() {
                    t.push((*out, *inp, v));
                }
            }
        }
        touched[p] = true;
        touched[q] = true;
    };
    pair(idx_xi(kk(0)), s_eta, a, &mut t);
    pair(s_xi, idx_eta(kk(0)), a, &mut t);
    pair(idx_eta(kk(1)), idx_xi(kk(2)), a, &mut t);
    pair(idx_eta(kk(2)), idx_xi(kk(1)), a, &mut t);
    // ᵗA⁻¹ = [[d, −c], [−b, a]] for det A = 1
    let inv_t = Matrix::from_dense(vec![vec![a.get(1, 1), -&a.get(1, 0)], vec![-&a.get(0, 1), a.get(0, 0)]])?;
    for c in 0..8 {
        pair(jordan::oct_index(k, c), 27 + jordan::oct_index(k, c), &inv_t, &mut t);
    }
    for (i, done) in touched.iter().enumerate() {
        if !done {
            t.push((i, i, Scalar::ONE));
        }
    }
    Ok(Matrix::from_triplets(freudenthal::DIM, freudenthal::DIM, t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Involution {
    Sigma,
    SigmaPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Commuting {
    Kappa,
    Mu,
}

/// Matrix (133×133) of Φ ↦ αΦα⁻¹ for an involution α.
pub fn involution_matrix(s: Involution) -> Matrix {
    let cols: Vec<Vec<Scalar>> = basis_elements()
        .iter()
        .map(|b| match s {
            Involution::Sigma => b.sigma().coords(),
            Involution::SigmaPrime => b.sigma_prime().coords(),
        })
        .collect();
    Matrix::from_columns(DIM, &cols)
}

/// Exact fixed subalgebra of 𝔢₇ under the requested conditions.
pub fn e7_fixed_subalgebra(involutions: &[Involution], centralize_so8: bool, extras: &[Commuting]) -> Subspace {
    let g = algebra();
    let mut eqs = Matrix::zeros(0, DIM);
    for &s in involutions {
        let m = &involution_matrix(s) - &Matrix::identity(DIM);
        eqs = eqs.vstack(&m).unwrap();
    }
    let mut gens: Vec<Vec<Scalar>> = Vec::new();
    if centralize_so8 {
        gens.extend(phi_d_generators().iter().map(E7Element::coords));
    }
    for &e in extras {
        gens.push(match e {
            Commuting::Kappa => kappa().coords(),
            Commuting::Mu => mu().coords(),
        });
    }
    for v in &gens {
        eqs = eqs.vstack(&g.ad(v)).unwrap();
    }
    kernel(&eqs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_scalar(rng: &mut ChaCha8Rng) -> Scalar {
        Scalar::new(Rational::new(rng.gen_range(-3..4), rng.gen_range(1..3)), Rational::from_int(rng.gen_range(-1..2)))
    }

    fn random_e7(rng: &mut ChaCha8Rng, terms: usize) -> E7Element {
        let mut v = vec![Scalar::ZERO; DIM];
        for _ in 0..terms {
            v[rng.gen_range(0..DIM)] = rand_scalar(rng);
        }
        E7Element::from_coords(&v)
    }

    fn random_p(rng: &mut ChaCha8Rng) -> PElement {
        PElement::from_coords(&(0..56).map(|_| rand_scalar(rng)).collect::<Vec<_>>())
    }

    #[test]
    fn simple_actions() {
        let nu = E7Element::from_parts_unchecked(Matrix::zeros(27, 27), JordanElement::zero(), JordanElement::zero(), Scalar::int(5));
        assert_eq!(nu.apply(&PElement::basis(54)), PElement::basis(54).scale(&Scalar::int(5)));
        assert_eq!(kappa().apply(&PElement::basis(54)), PElement::basis(54).scale(&Scalar::int(-1)));
        let want = PElement::new(JordanElement::zero(), JordanElement::e(1), Scalar::ZERO, Scalar::ZERO);
        assert_eq!(mu().apply(&PElement::basis(54)), want);
    }

    #[test]
    fn closed_form_bracket_matches_operator_commutator() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..6 {
            let (f, g) = (random_e7(&mut rng, 12), random_e7(&mut rng, 12));
            assert_eq!(e7_bracket_via_operators(&f, &g).unwrap(), e7_bracket(&f, &g));
        }
        assert_eq!(e7_bracket_via_operators(&kappa(), &mu()).unwrap(), e7_bracket(&kappa(), &mu()));
        assert!(e7_bracket(&kappa(), &kappa()).is_zero());
    }

    #[test]
    fn decompose_rejects_non_e7_operator() {
        assert!(decompose(&Matrix::identity(56)).is_err());
    }

    #[test]
    fn jacobi_on_random_basis_triples() {
        let g = algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let (i, j, k) = (rng.gen_range(0..DIM), rng.gen_range(0..DIM), rng.gen_range(0..DIM));
            assert!(g.jacobi(&[(i, Scalar::ONE)], &[(j, Scalar::ONE)], &[(k, Scalar::ONE)]).is_empty());
        }
    }

    #[test]
    fn pairing_is_invariant_and_cross_is_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..4 {
            let f = random_e7(&mut rng, 15);
            let (p, q) = (random_p(&mut rng), random_p(&mut rng));
            let s = &freudenthal::skew_pairing(&f.apply(&p), &q) + &freudenthal::skew_pairing(&p, &f.apply(&q));
            assert!(s.is_zero());
            let lhs = f.bracket(&freudenthal_cross(&p, &q));
            let rhs = &freudenthal_cross(&f.apply(&p), &q) + &freudenthal_cross(&p, &f.apply(&q));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn lambda_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let l = freudenthal::lambda_operator();
        let linv = l.scale(&Scalar::int(-1));
        for _ in 0..5 {
            let f = random_e7(&mut rng, 20);
            assert_eq!(&(&l * &f.operator()) * &linv, f.lambda_conj().operator());
        }
    }

    #[test]
    fn group_elements() {
        assert!(e7_operator_is_group_element(&Matrix::identity(56)));
        assert!(e7_operator_is_group_element(&freudenthal::lambda_operator()));
        assert!(e7_operator_is_group_element(&freudenthal::sigma_operator()));
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let t: Vec<_> = (0..56).map(|i| (i, i, Scalar::int(rng.gen_range(2..5)))).collect();
        assert!(!e7_operator_is_group_element(&Matrix::from_triplets(56, 56, t)));
    }

    #[test]
    fn phi_k_generator_identities() {
        let e = Matrix::identity(2);
        let m = e.scale(&Scalar::int(-1));
        let p = |a: &Matrix, k| phi_k(a, k).unwrap();
        for k in 1..=3 {
            assert_eq!(p(&e, k), Matrix::identity(56));
        }
        let s = &(&p(&e, 1) * &p(&m, 2)) * &p(&m, 3);
        assert_eq!(s, freudenthal::sigma_operator());
        let sp = &(&p(&m, 1) * &p(&m, 2)) * &p(&e, 3);
        assert_eq!(sp, freudenthal::sigma_prime_operator());
        let bad = Matrix::scalar(2, &Scalar::int(2));
        assert!(phi_k(&bad, 1).is_err());
    }
}
