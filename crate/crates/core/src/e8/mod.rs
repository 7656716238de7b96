//! 𝔢₈^C = 𝔢₇^C ⊕ 𝔓^C ⊕ 𝔓^C ⊕ C ⊕ C ⊕ C with its bracket, ad, Killing form,
//! the involutions σ, σ′, λ̃ and the complex conjugation τ.
//!
//! Coordinates (248): `[Φ (133), P (56), Q (56), r, s, t]`.

pub mod fixed;
pub mod orbits;
pub mod wvariety;

use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::e7::{self, E7Element};
use crate::error::{Error, Result};
use crate::freudenthal::{freudenthal_cross, skew_pairing, PElement};
use crate::lie::LieAlgebra;
use crate::linalg::matrix::{to_sparse, SparseVec};
use crate::linalg::{trace_form, Matrix, Rational, Scalar};

pub const DIM: usize = 248;
pub const PHI: usize = 0;
pub const P_OFF: usize = 133;
pub const Q_OFF: usize = 189;
pub const R_IDX: usize = 245;
pub const S_IDX: usize = 246;
pub const T_IDX: usize = 247;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct E8Element {
    pub phi: E7Element,
    pub p: PElement,
    pub q: PElement,
    pub r: Scalar,
    pub s: Scalar,
    pub t: Scalar,
}

impl Default for E8Element {
    fn default() -> Self {
        E8Element::zero()
    }
}

impl E8Element {
    pub fn zero() -> Self {
        E8Element {
            phi: E7Element::zero(),
            p: PElement::zero(),
            q: PElement::zero(),
            r: Scalar::ZERO,
            s: Scalar::ZERO,
            t: Scalar::ZERO,
        }
    }

    /// (Φ, 0, 0, 0, 0, 0).
    pub fn from_phi(phi: E7Element) -> Self {
        E8Element { phi, ..Self::zero() }
    }

    /// P⁻ = (0, P, 0, 0, 0, 0).
    pub fn p_upper(p: PElement) -> Self {
        E8Element { p, ..Self::zero() }
    }

    /// Q₋ = (0, 0, Q, 0, 0, 0).
    pub fn q_lower(q: PElement) -> Self {
        E8Element { q, ..Self::zero() }
    }

    /// r̃ = (0, 0, 0, r, 0, 0).
    pub fn r_tilde(r: Scalar) -> Self {
        E8Element { r, ..Self::zero() }
    }

    /// s⁻ = (0, 0, 0, 0, s, 0).
    pub fn s_upper(s: Scalar) -> Self {
        E8Element { s, ..Self::zero() }
    }

    /// t₋ = (0, 0, 0, 0, 0, t).
    pub fn t_lower(t: Scalar) -> Self {
        E8Element { t, ..Self::zero() }
    }

    /// 1̃.
    pub fn one_tilde() -> Self {
        Self::r_tilde(Scalar::ONE)
    }

    /// 1⁻.
    pub fn one_upper() -> Self {
        Self::s_upper(Scalar::ONE)
    }

    /// 1₋.
    pub fn one_lower() -> Self {
        Self::t_lower(Scalar::ONE)
    }

    pub fn basis(i: usize) -> Self {
        let mut v = vec![Scalar::ZERO; DIM];
        v[i] = Scalar::ONE;
        Self::from_coords(&v)
    }

    pub fn coords(&self) -> Vec<Scalar> {
        let mut v = self.phi.coords();
        v.extend(self.p.coords());
        v.extend(self.q.coords());
        v.extend([self.r.clone(), self.s.clone(), self.t.clone()]);
        v
    }

    pub fn sparse(&self) -> SparseVec {
        to_sparse(&self.coords())
    }

    pub fn from_coords(v: &[Scalar]) -> Self {
        assert_eq!(v.len(), DIM);
        E8Element {
            phi: E7Element::from_coords(&v[..P_OFF]),
            p: PElement::from_coords(&v[P_OFF..Q_OFF]),
            q: PElement::from_coords(&v[Q_OFF..R_IDX]),
            r: v[R_IDX].clone(),
            s: v[S_IDX].clone(),
            t: v[T_IDX].clone(),
        }
    }

    pub fn from_sparse(v: &[(usize, Scalar)]) -> Self {
        let mut d = vec![Scalar::ZERO; DIM];
        for (i, c) in v {
            d[*i] = c.clone();
        }
        Self::from_coords(&d)
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero() && self.p.is_zero() && self.q.is_zero() && self.r.is_zero() && self.s.is_zero() && self.t.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        E8Element {
            phi: self.phi.scale(c),
            p: self.p.scale(c),
            q: self.q.scale(c),
            r: &self.r * c,
            s: &self.s * c,
            t: &self.t * c,
        }
    }

    pub fn bracket(&self, other: &E8Element) -> E8Element {
        e8_bracket(self, other)
    }

    pub fn tau(&self) -> E8Element {
        tau(self)
    }

    pub fn lambda_tilde(&self) -> E8Element {
        lambda_tilde(self)
    }

    pub fn sigma(&self) -> E8Element {
        E8Element { phi: self.phi.sigma(), p: self.p.sigma(), q: self.q.sigma(), ..self.clone() }
    }

    pub fn sigma_prime(&self) -> E8Element {
        E8Element { phi: self.phi.sigma_prime(), p: self.p.sigma_prime(), q: self.q.sigma_prime(), ..self.clone() }
    }

    pub fn apply(&self, op: &Matrix) -> E8Element {
        E8Element::from_sparse(&op.mul_sparse_vec(&self.sparse()))
    }
}

impl Add for &E8Element {
    type Output = E8Element;
    fn add(self, o: &E8Element) -> E8Element {
        E8Element {
            phi: &self.phi + &o.phi,
            p: &self.p + &o.p,
            q: &self.q + &o.q,
            r: &self.r + &o.r,
            s: &self.s + &o.s,
            t: &self.t + &o.t,
        }
    }
}

impl Sub for &E8Element {
    type Output = E8Element;
    fn sub(self, o: &E8Element) -> E8Element {
        self + &(-o)
    }
}

impl Neg for &E8Element {
    type Output = E8Element;
    fn neg(self) -> E8Element {
        self.scale(&Scalar::int(-1))
    }
}

/// The bracket
///
/// ```text
/// Φ = [Φ₁,Φ₂] + P₁×Q₂ − P₂×Q₁
/// P = Φ₁P₂ − Φ₂P₁ + r₁P₂ − r₂P₁ + s₁Q₂ − s₂Q₁
/// Q = Φ₁Q₂ − Φ₂Q₁ − r₁Q₂ + r₂Q₁ + t₁P₂ − t₂P₁
/// r = −⅛{P₁,Q₂} + ⅛{P₂,Q₁} + s₁t₂ − s₂t₁
/// s = ¼{P₁,P₂} + 2r₁s₂ − 2r₂s₁
/// t = −¼{Q₁,Q₂} − 2r₁t₂ + 2r₂t₁
/// ```
pub fn e8_bracket(a: &E8Element, b: &E8Element) -> E8Element {
    let phi = &(&a.phi.bracket(&b.phi) + &freudenthal_cross(&a.p, &b.q)) - &freudenthal_cross(&b.p, &a.q);
    let p = [
        (Scalar::ONE, a.phi.apply(&b.p)),
        (Scalar::int(-1), b.phi.apply(&a.p)),
        (a.r.clone(), b.p.clone()),
        (-&b.r, a.p.clone()),
        (a.s.clone(), b.q.clone()),
        (-&b.s, a.q.clone()),
    ];
    let q = [
        (Scalar::ONE, a.phi.apply(&b.q)),
        (Scalar::int(-1), b.phi.apply(&a.q)),
        (-&a.r, b.q.clone()),
        (b.r.clone(), a.q.clone()),
        (a.t.clone(), b.p.clone()),
        (-&b.t, a.p.clone()),
    ];
    let comb = |terms: &[(Scalar, PElement)]| {
        terms.iter().filter(|(c, _)| !c.is_zero()).fold(PElement::zero(), |acc, (c, v)| &acc + &v.scale(c))
    };
    let eighth = Scalar::frac(1, 8);
    let quarter = Scalar::frac(1, 4);
    let two = Scalar::int(2);
    let r = &(&(&eighth * &(&skew_pairing(&b.p, &a.q) - &skew_pairing(&a.p, &b.q))) + &(&a.s * &b.t)) - &(&b.s * &a.t);
    let s = &(&(&quarter * &skew_pairing(&a.p, &b.p)) + &(&two * &(&a.r * &b.s))) - &(&two * &(&b.r * &a.s));
    let t = &(&(-&(&quarter * &skew_pairing(&a.q, &b.q))) - &(&two * &(&a.r * &b.t))) + &(&two * &(&b.r * &a.t));
    E8Element { phi, p: comb(&p), q: comb(&q), r, s, t }
}

/// τ: complex conjugation of every coordinate.
pub fn tau(x: &E8Element) -> E8Element {
    E8Element { phi: x.phi.tau(), p: x.p.tau(), q: x.q.tau(), r: x.r.conj(), s: x.s.conj(), t: x.t.conj() }
}

/// λ̃(Φ, P, Q, r, s, t) = (λΦλ⁻¹, λQ, −λP, −r, −t, −s).
pub fn lambda_tilde(x: &E8Element) -> E8Element {
    E8Element { phi: x.phi.lambda_conj(), p: x.q.lambda(), q: -&x.p.lambda(), r: -&x.r, s: -&x.t, t: -&x.s }
}

pub fn basis_elements() -> &'static [E8Element] {
    static B: OnceLock<Vec<E8Element>> = OnceLock::new();
    B.get_or_init(|| (0..DIM).map(E8Element::basis).collect())
}

static ALGEBRA: OnceLock<LieAlgebra> = OnceLock::new();

/// Structure constants of 𝔢₈ in the 248 coordinates, built from [`e8_bracket`].
pub fn algebra() -> &'static LieAlgebra {
    ALGEBRA.get_or_init(build_algebra)
}

pub fn build_algebra() -> LieAlgebra {
    let b = basis_elements();
    LieAlgebra::from_bracket(DIM, |i, j| b[i].bracket(&b[j]).sparse())
}

/// Install a previously built (e.g. cached) table. Returns false if a table
/// was already in place or the candidate has the wrong dimension.
pub fn install_algebra(g: LieAlgebra) -> bool {
    g.dim() == DIM && ALGEBRA.set(g).is_ok()
}

/// Θ(R) = ad(R).
pub fn theta(x: &E8Element) -> Matrix {
    algebra().ad_sparse(&x.sparse())
}

pub fn killing_matrix() -> &'static Matrix {
    static K: OnceLock<Matrix> = OnceLock::new();
    K.get_or_init(|| algebra().killing_matrix())
}

/// B₈(R₁, R₂) = tr(ad R₁ ad R₂).
pub fn killing_b8(a: &E8Element, b: &E8Element) -> Scalar {
    trace_form(&theta(a), &theta(b)).expect("ad matrices are square")
}

/// B₈ through the cached Gram matrix.
pub fn killing_b8_fast(a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> Scalar {
    let k = killing_matrix();
    let mut s = Scalar::ZERO;
    for (i, x) in a {
        s += &(x * &crate::linalg::matrix::sparse_dot(k.row(*i), b));
    }
    s
}

pub fn e7_killing_matrix() -> &'static Matrix {
    static K: OnceLock<Matrix> = OnceLock::new();
    K.get_or_init(|| e7::algebra().killing_matrix())
}

/// B₇(Φ₁, Φ₂) = tr(ad Φ₁ ad Φ₂) on 𝔢₇.
pub fn killing_b7(a: &E7Element, b: &E7Element) -> Scalar {
    let (x, y) = (to_sparse(&a.coords()), to_sparse(&b.coords()));
    let k = e7_killing_matrix();
    let mut s = Scalar::ZERO;
    for (i, c) in &x {
        s += &(c * &crate::linalg::matrix::sparse_dot(k.row(*i), &y));
    }
    s
}

fn matrix_of(f: impl Fn(&E8Element) -> E8Element + Sync) -> Matrix {
    use rayon::prelude::*;
    let cols: Vec<Vec<Scalar>> = basis_elements().par_iter().map(|b| f(b).coords()).collect();
    Matrix::from_columns(DIM, &cols)
}

pub fn sigma_matrix() -> &'static Matrix {
    static M: OnceLock<Matrix> = OnceLock::new();
    M.get_or_init(|| matrix_of(E8Element::sigma))
}

pub fn sigma_prime_matrix() -> &'static Matrix {
    static M: OnceLock<Matrix> = OnceLock::new();
    M.get_or_init(|| matrix_of(E8Element::sigma_prime))
}

pub fn lambda_tilde_matrix() -> &'static Matrix {
    static M: OnceLock<Matrix> = OnceLock::new();
    M.get_or_init(|| matrix_of(lambda_tilde))
}

/// R_D = (Φ_D, 0, 0, 0, 0, 0) for the 28 basis elements of (𝔣₄^C)^{σ,σ′}.
pub fn r_d_generators() -> Vec<E8Element> {
    e7::phi_d_generators().into_iter().map(E8Element::from_phi).collect()
}

/// How an [`E8GroupOperator`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    ExpNilpotent,
    ExtendedE7,
    Sigma,
    SigmaPrime,
    LambdaTilde,
    FloatExp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E8GroupOperator {
    pub matrix: Matrix,
    pub provenance: Provenance,
}

impl E8GroupOperator {
    pub fn sigma() -> Self {
        E8GroupOperator { matrix: sigma_matrix().clone(), provenance: Provenance::Sigma }
    }

    pub fn sigma_prime() -> Self {
        E8GroupOperator { matrix: sigma_prime_matrix().clone(), provenance: Provenance::SigmaPrime }
    }

    pub fn lambda_tilde() -> Self {
        E8GroupOperator { matrix: lambda_tilde_matrix().clone(), provenance: Provenance::LambdaTilde }
    }

    /// α̃(Φ, P, Q, r, s, t) = (αΦα⁻¹, αP, αQ, r, s, t) for α ∈ E₇^C acting on 𝔓^C.
    pub fn extend_e7(alpha: &Matrix) -> Result<Self> {
        use rayon::prelude::*;
        if !e7::e7_operator_is_group_element(alpha) {
            return Err(Error::InvalidInput("operator is not in E7".into()));
        }
        let inv = alpha.inverse()?;
        let phis: Vec<Result<E7Element>> =
            e7::basis_operators().par_iter().map(|op| e7::decompose(&(&(alpha * op) * &inv))).collect();
        let mut t = Vec::new();
        for (j, phi) in phis.into_iter().enumerate() {
            for (i, c) in to_sparse(&phi?.coords()) {
                t.push((i, j, c));
            }
        }
        for off in [P_OFF, Q_OFF] {
            for (i, j, c) in alpha.triplets() {
                t.push((off + i, off + j, c.clone()));
            }
        }
        for k in [R_IDX, S_IDX, T_IDX] {
            t.push((k, k, Scalar::ONE));
        }
        Ok(E8GroupOperator { matrix: Matrix::from_triplets(DIM, DIM, t), provenance: Provenance::ExtendedE7 })
    }

    pub fn apply(&self, x: &E8Element) -> E8Element {
        x.apply(&self.matrix)
    }

    /// α[R, R′] = [αR, αR′] on the given coordinate pairs.
    pub fn preserves_bracket_on(&self, pairs: &[(SparseVec, SparseVec)]) -> bool {
        use rayon::prelude::*;
        let g = algebra();
        pairs.par_iter().all(|(a, b)| {
            let lhs = self.matrix.mul_sparse_vec(&g.bracket_sparse(a, b));
            let rhs = g.bracket_sparse(&self.matrix.mul_sparse_vec(a), &self.matrix.mul_sparse_vec(b));
            lhs == rhs
        })
    }

    /// Randomized exact battery: `n` seeded random sparse pairs plus all
    /// pairs among the probe set.
    pub fn is_automorphism(&self, seed: u64, n: usize) -> bool {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut pairs: Vec<(SparseVec, SparseVec)> =
            (0..n).map(|_| (random_sparse(&mut rng, 6), random_sparse(&mut rng, 6))).collect();
        let probes = probe_set();
        for i in 0..probes.len() {
            for j in i + 1..probes.len() {
                pairs.push((probes[i].clone(), probes[j].clone()));
            }
        }
        self.preserves_bracket_on(&pairs)
    }
}

/// Small random Gaussian rational.
pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    let re = Rational::new(rng.gen_range(-5..6), rng.gen_range(1..5));
    let im = if rng.gen_bool(0.3) { Rational::new(rng.gen_range(-3..4), rng.gen_range(1..3)) } else { Rational::ZERO };
    Scalar::new(re, im)
}

/// Random element with `terms` nonzero coordinates (fewer on collisions).
pub fn random_sparse<R: Rng>(rng: &mut R, terms: usize) -> SparseVec {
    let mut v: Vec<(usize, Scalar)> = (0..terms).map(|_| (rng.gen_range(0..DIM), random_scalar(rng))).collect();
    v.sort_by_key(|e| e.0);
    v.dedup_by_key(|e| e.0);
    v.retain(|e| !e.1.is_zero());
    v
}

/// Fixed probe set of 30 elements touching every block of the coordinates.
pub fn probe_set() -> Vec<SparseVec> {
    use crate::jordan::JordanElement;
    let mut out: Vec<E8Element> = vec![E8Element::one_tilde(), E8Element::one_upper(), E8Element::one_lower()];
    out.push(E8Element::from_phi(e7::kappa()));
    out.push(E8Element::from_phi(e7::mu()));
    for i in [0, 40, 77, 78, 100, 105, 120, 132] {
        out.push(E8Element::from_phi(E7Element::basis(i)));
    }
    let e = |i| JordanElement::e(i);
    let pj = |x: JordanElement, y: JordanElement, xi: i64, eta: i64| PElement::new(x, y, Scalar::int(xi), Scalar::int(eta));
    out.push(E8Element::p_upper(pj(e(1), JordanElement::zero(), 0, 0)));
    out.push(E8Element::p_upper(pj(JordanElement::zero(), e(2), 0, 0)));
    out.push(E8Element::p_upper(pj(JordanElement::zero(), JordanElement::zero(), 1, 0)));
    out.push(E8Element::p_upper(pj(JordanElement::zero(), JordanElement::zero(), 0, 1)));
    out.push(E8Element::q_lower(pj(e(3), JordanElement::zero(), 0, 0)));
    out.push(E8Element::q_lower(pj(JordanElement::zero(), e(1), 0, 0)));
    out.push(E8Element::q_lower(pj(JordanElement::zero(), JordanElement::zero(), 1, 1)));
    for i in [3, 20, 40, 50] {
        out.push(E8Element::basis(P_OFF + i));
        out.push(E8Element::basis(Q_OFF + i));
    }
    let mixed = &(&E8Element::one_tilde() + &E8Element::basis(P_OFF + 11)) + &E8Element::basis(Q_OFF + 30).scale(&Scalar::frac(1, 3));
    out.push(mixed);
    out.push(&E8Element::basis(P_OFF + 55) - &E8Element::basis(Q_OFF + 54));
    assert_eq!(out.len(), 30);
    out.iter().map(E8Element::sparse).collect()
}

/// Jacobi sum for coordinate vectors.
pub fn jacobi(a: &[(usize, Scalar)], b: &[(usize, Scalar)], c: &[(usize, Scalar)]) -> SparseVec {
    algebra().jacobi(a, b, c)
}

/// Indices (i < j < k) of probe triples violating Jacobi, in order.
pub fn jacobi_probe_failures() -> Vec<(usize, usize, usize)> {
    use rayon::prelude::*;
    let p = probe_set();
    let n = p.len();
    let triples: Vec<(usize, usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k)))).collect();
    triples.into_par_iter().filter(|&(i, j, k)| !jacobi(&p[i], &p[j], &p[k]).is_empty()).collect()
}

/// Indices of seeded random triples violating Jacobi, in order.
pub fn jacobi_random_failures(seed: u64, count: usize, terms: usize) -> Vec<usize> {
    use rand::SeedableRng;
    use rayon::prelude::*;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[SparseVec; 3]> = (0..count)
        .map(|_| [random_sparse(&mut rng, terms), random_sparse(&mut rng, terms), random_sparse(&mut rng, terms)])
        .collect();
    triples.par_iter().enumerate().filter(|(_, t)| !jacobi(&t[0], &t[1], &t[2]).is_empty()).map(|(i, _)| i).collect()
}

/// Sparse triplets of Θ(R), for serialization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdOperator {
    pub dim: usize,
    pub entries: Vec<(usize, usize, Scalar)>,
}

impl AdOperator {
    pub fn of(x: &E8Element) -> Self {
        Self::from_matrix(&theta(x))
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        AdOperator { dim: m.rows(), entries: m.triplets().map(|(i, j, v)| (i, j, v.clone())).collect() }
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_triplets(self.dim, self.dim, self.entries.iter().cloned())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_element(rng: &mut ChaCha8Rng, terms: usize) -> E8Element {
        E8Element::from_sparse(&random_sparse(rng, terms))
    }

    #[test]
    fn grading_brackets() {
        let (t, u, l) = (E8Element::one_tilde(), E8Element::one_upper(), E8Element::one_lower());
        assert_eq!(t.bracket(&l), l.scale(&Scalar::int(-2)));
        assert_eq!(u.bracket(&l), t);
        assert_eq!(t.bracket(&u), u.scale(&Scalar::int(2)));
    }

    #[test]
    fn table_matches_closed_form() {
        let g = algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let (a, b) = (random_element(&mut rng, 10), random_element(&mut rng, 10));
            assert_eq!(g.bracket_sparse(&a.sparse(), &b.sparse()), a.bracket(&b).sparse());
        }
    }

    #[test]
    fn phi_slot_reproduces_e7_bracket() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..5 {
            let a = E7Element::from_coords(&(0..133).map(|_| random_scalar(&mut rng)).collect::<Vec<_>>());
            let b = E7Element::from_coords(&(0..133).map(|_| random_scalar(&mut rng)).collect::<Vec<_>>());
            let br = E8Element::from_phi(a.clone()).bracket(&E8Element::from_phi(b.clone()));
            assert_eq!(br, E8Element::from_phi(a.bracket(&b)));
        }
    }

    #[test]
    fn lambda_tilde_is_an_involutive_automorphism() {
        let l = lambda_tilde_matrix();
        assert_eq!(l * l, Matrix::identity(DIM));
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..10 {
            let (a, b) = (random_element(&mut rng, 12), random_element(&mut rng, 12));
            assert_eq!(lambda_tilde(&a.bracket(&b)), lambda_tilde(&a).bracket(&lambda_tilde(&b)));
        }
        assert_eq!(tau(&lambda_tilde(&E8Element::one_upper())), -&E8Element::one_lower());
    }

    #[test]
    fn sigma_commutes_with_lambda_tilde_and_tau() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        for _ in 0..10 {
            let a = random_element(&mut rng, 20);
            assert_eq!(a.sigma().lambda_tilde(), a.lambda_tilde().sigma());
            assert_eq!(a.sigma_prime().lambda_tilde(), a.lambda_tilde().sigma_prime());
            assert_eq!(a.sigma().tau(), a.tau().sigma());
        }
    }

    #[test]
    fn ad_operator_round_trip() {
        let x = E8Element::one_tilde();
        let a = AdOperator::of(&x);
        let json = serde_json::to_string(&a).unwrap();
        let back: AdOperator = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_matrix(), theta(&x));
    }
}
