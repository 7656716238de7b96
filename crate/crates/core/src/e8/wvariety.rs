//! R × R and the conditions cutting out 𝔚^C = {R | R × R = 0, R ≠ 0}.
//!
//! Expanding (R×R)R₁ = [R,[R,R₁]] + (1/30)B₈(R,R₁)R against
//! R₁ ∈ {1₋, 1⁻, 1̃, Q₁₋, P₁⁻, Φ₁} gives, component by component:
//!
//! ```text
//! R₁ = 1₋  : Φ = (1),  Q = −(4), t = −¼(6)
//! R₁ = 1⁻  : Φ = (2),  P = −(5), s = −¼(6)
//! R₁ = 1̃   : Φ = 2(3), P = −(4), Q = (5), r = −¼(6)
//! R₁ = Q₁₋ : Φ = ½(7),  Q = −⅛(9)
//! R₁ = P₁⁻ : Φ = −½(8), P = ⅛(10)
//! R₁ = Φ₁  : Φ = (11)/18, P = (12)/18, Q = (13)/18
//! ```
//!
//! with the conditions
//!
//! ```text
//! (1)  2sΦ − P×P
//! (2)  2tΦ + Q×Q
//! (3)  2rΦ + P×Q
//! (4)  ΦP − 3rP − 3sQ
//! (5)  ΦQ + 3rQ − 3tP
//! (6)  {P,Q} − 16(st + r²)
//! (7)  2(ΦP×Q₁ + 2P×ΦQ₁ − rP×Q₁ − sQ×Q₁) − {P,Q₁}Φ
//! (8)  2(ΦQ×P₁ + 2Q×ΦP₁ + rQ×P₁ − tP×P₁) − {Q,P₁}Φ
//! (9)  8((P×Q₁)Q − stQ₁ − r²Q₁ − Φ²Q₁ + 2rΦQ₁) + 5{P,Q₁}Q − 2{Q,Q₁}P
//! (10) 8((Q×P₁)P + stP₁ + r²P₁ + Φ²P₁ + 2rΦP₁) + 5{Q,P₁}P − 2{P,P₁}Q
//! (11) 18((ad Φ)²Φ₁ + Q×Φ₁P − P×Φ₁Q) + B₇(Φ,Φ₁)Φ
//! (12) 18(Φ₁ΦP − 2ΦΦ₁P − rΦ₁P − sΦ₁Q) + B₇(Φ,Φ₁)P
//! (13) 18(Φ₁ΦQ − 2ΦΦ₁Q + rΦ₁Q − tΦ₁P) + B₇(Φ,Φ₁)Q
//! ```
//!
//! (7)–(10) are quantified over P₁, Q₁ ∈ 𝔓^C and (11)–(13) over Φ₁ ∈ 𝔢₇^C;
//! they are checked on the full coordinate bases.

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{algebra, killing_matrix, r_d_generators, E8Element, DIM};
use crate::e7::{self, E7Element};
use crate::freudenthal::{self, freudenthal_cross, skew_pairing, PElement};
use crate::linalg::matrix::{sparse_dot, SparseVec};
use crate::linalg::{Matrix, Scalar};

fn sc(n: i64) -> Scalar {
    Scalar::int(n)
}

/// The linear map R × R as a 248×248 matrix: (ad R)² + (1/30) R ⊗ B₈(R, ·).
pub fn r_cross_matrix(x: &E8Element) -> Matrix {
    let v = x.sparse();
    let ad = algebra().ad_sparse(&v);
    let sq = &ad * &ad;
    let k = killing_matrix();
    // B₈(R, e_j) = Σᵢ Rᵢ K_ij; K is symmetric so this is row j of K dotted with R.
    let b: Vec<Scalar> = (0..DIM).map(|j| sparse_dot(k.row(j), &v)).collect();
    let thirtieth = Scalar::frac(1, 30);
    let mut t: Vec<(usize, usize, Scalar)> = sq.triplets().map(|(i, j, c)| (i, j, c.clone())).collect();
    for (i, ri) in &v {
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                t.push((*i, j, &(ri * bj) * &thirtieth));
            }
        }
    }
    Matrix::from_triplets(DIM, DIM, t)
}

/// (R × R)R₁ = [R, [R, R₁]] + (1/30)B₈(R, R₁)R.
pub fn r_cross(x: &E8Element, r1: &E8Element) -> E8Element {
    let g = algebra();
    let (v, w) = (x.sparse(), r1.sparse());
    let inner = g.bracket_sparse(&v, &g.bracket_sparse(&v, &w));
    let b = super::killing_b8_fast(&v, &w);
    let out = crate::linalg::matrix::sparse_axpy(&inner, &(&b * &Scalar::frac(1, 30)), &v);
    E8Element::from_sparse(&out)
}

/// Is R × R the zero map?
pub fn is_in_w(x: &E8Element) -> bool {
    !x.is_zero() && r_cross_matrix(x).is_zero()
}

fn e7_zero(v: &E7Element) -> bool {
    v.is_zero()
}

pub fn condition_1(x: &E8Element) -> E7Element {
    &x.phi.scale(&(&sc(2) * &x.s)) - &freudenthal_cross(&x.p, &x.p)
}

pub fn condition_2(x: &E8Element) -> E7Element {
    &x.phi.scale(&(&sc(2) * &x.t)) + &freudenthal_cross(&x.q, &x.q)
}

pub fn condition_3(x: &E8Element) -> E7Element {
    &x.phi.scale(&(&sc(2) * &x.r)) + &freudenthal_cross(&x.p, &x.q)
}

pub fn condition_4(x: &E8Element) -> PElement {
    let three = sc(3);
    &(&x.phi.apply(&x.p) - &x.p.scale(&(&three * &x.r))) - &x.q.scale(&(&three * &x.s))
}

pub fn condition_5(x: &E8Element) -> PElement {
    let three = sc(3);
    &(&x.phi.apply(&x.q) + &x.q.scale(&(&three * &x.r))) - &x.p.scale(&(&three * &x.t))
}

pub fn condition_6(x: &E8Element) -> Scalar {
    &skew_pairing(&x.p, &x.q) - &(&sc(16) * &(&(&x.s * &x.t) + &(&x.r * &x.r)))
}

pub fn condition_7(x: &E8Element, q1: &PElement) -> E7Element {
    let (phi, p, q, r, s) = (&x.phi, &x.p, &x.q, &x.r, &x.s);
    let inner = &(&(&freudenthal_cross(&phi.apply(p), q1) + &freudenthal_cross(p, &phi.apply(q1)).scale(&sc(2)))
        - &freudenthal_cross(p, q1).scale(r))
        - &freudenthal_cross(q, q1).scale(s);
    &inner.scale(&sc(2)) - &phi.scale(&skew_pairing(p, q1))
}

pub fn condition_8(x: &E8Element, p1: &PElement) -> E7Element {
    let (phi, p, q, r, t) = (&x.phi, &x.p, &x.q, &x.r, &x.t);
    let inner = &(&(&freudenthal_cross(&phi.apply(q), p1) + &freudenthal_cross(q, &phi.apply(p1)).scale(&sc(2)))
        + &freudenthal_cross(q, p1).scale(r))
        - &freudenthal_cross(p, p1).scale(t);
    &inner.scale(&sc(2)) - &phi.scale(&skew_pairing(q, p1))
}

pub fn condition_9(x: &E8Element, q1: &PElement) -> PElement {
    let (phi, p, q, r, s, t) = (&x.phi, &x.p, &x.q, &x.r, &x.s, &x.t);
    let st_r2 = &(s * t) + &(r * r);
    let phi_q1 = phi.apply(q1);
    let inner = &(&(&freudenthal_cross(p, q1).apply(q) - &q1.scale(&st_r2)) - &phi.apply(&phi_q1))
        + &phi_q1.scale(&(&sc(2) * r));
    &(&inner.scale(&sc(8)) + &q.scale(&(&sc(5) * &skew_pairing(p, q1)))) - &p.scale(&(&sc(2) * &skew_pairing(q, q1)))
}

pub fn condition_10(x: &E8Element, p1: &PElement) -> PElement {
    let (phi, p, q, r, s, t) = (&x.phi, &x.p, &x.q, &x.r, &x.s, &x.t);
    let st_r2 = &(s * t) + &(r * r);
    let phi_p1 = phi.apply(p1);
    let inner = &(&(&freudenthal_cross(q, p1).apply(p) + &p1.scale(&st_r2)) + &phi.apply(&phi_p1))
        + &phi_p1.scale(&(&sc(2) * r));
    &(&inner.scale(&sc(8)) + &p.scale(&(&sc(5) * &skew_pairing(q, p1)))) - &q.scale(&(&sc(2) * &skew_pairing(p, p1)))
}

pub fn condition_11(x: &E8Element, phi1: &E7Element) -> E7Element {
    let (phi, p, q) = (&x.phi, &x.p, &x.q);
    let ad2 = phi.bracket(&phi.bracket(phi1));
    let inner = &(&ad2 + &freudenthal_cross(q, &phi1.apply(p))) - &freudenthal_cross(p, &phi1.apply(q));
    &inner.scale(&sc(18)) + &phi.scale(&super::killing_b7(phi, phi1))
}

pub fn condition_12(x: &E8Element, phi1: &E7Element) -> PElement {
    let (phi, p, q, r, s) = (&x.phi, &x.p, &x.q, &x.r, &x.s);
    let phi1_p = phi1.apply(p);
    let inner = &(&(&phi1.apply(&phi.apply(p)) - &phi.apply(&phi1_p).scale(&sc(2))) - &phi1_p.scale(r))
        - &phi1.apply(q).scale(s);
    &inner.scale(&sc(18)) + &p.scale(&super::killing_b7(phi, phi1))
}

pub fn condition_13(x: &E8Element, phi1: &E7Element) -> PElement {
    let (phi, p, q, r, t) = (&x.phi, &x.p, &x.q, &x.r, &x.t);
    let phi1_q = phi1.apply(q);
    let inner = &(&(&phi1.apply(&phi.apply(q)) - &phi.apply(&phi1_q).scale(&sc(2))) + &phi1_q.scale(r))
        - &phi1.apply(p).scale(t);
    &inner.scale(&sc(18)) + &q.scale(&super::killing_b7(phi, phi1))
}

/// Outcome of one condition: holds, or the first basis witness where it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionResult {
    pub holds: bool,
    pub residual: Option<String>,
}

impl ConditionResult {
    fn pass() -> Self {
        ConditionResult { holds: true, residual: None }
    }

    fn fail(msg: String) -> Self {
        ConditionResult { holds: false, residual: Some(msg) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WConditionReport {
    pub conditions: Vec<ConditionResult>,
    /// R × R = 0 checked against all 248 basis vectors.
    pub direct: ConditionResult,
    pub nonzero: bool,
    pub sigma_fixed: bool,
    pub sigma_prime_fixed: bool,
    pub centralizes_so8: bool,
}

impl WConditionReport {
    pub fn holds(&self, k: usize) -> bool {
        self.conditions[k - 1].holds
    }

    pub fn all_conditions_hold(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    /// 1-based indices of the failing conditions.
    pub fn failing(&self) -> Vec<usize> {
        (1..=13).filter(|&k| !self.holds(k)).collect()
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.nonzero && self.sigma_fixed && self.sigma_prime_fixed && self.centralizes_so8
    }
}

impl Serialize for WConditionReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        for (k, c) in self.conditions.iter().enumerate() {
            m.serialize_entry(&format!("condition_{}", k + 1), &c.holds)?;
        }
        m.serialize_entry("direct", &self.direct.holds)?;
        let residual: Vec<(String, &String)> = self
            .conditions
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.residual.as_ref().map(|r| (format!("condition_{}", k + 1), r)))
            .chain(self.direct.residual.as_ref().map(|r| ("direct".to_string(), r)))
            .collect();
        let residual: serde_json::Map<String, serde_json::Value> =
            residual.into_iter().map(|(k, v)| (k, serde_json::Value::String(v.clone()))).collect();
        m.serialize_entry("residual", &residual)?;
        m.serialize_entry(
            "hypotheses",
            &serde_json::json!({
                "nonzero": self.nonzero,
                "sigma_fixed": self.sigma_fixed,
                "sigma_prime_fixed": self.sigma_prime_fixed,
                "centralizes_so8": self.centralizes_so8,
            }),
        )?;
        m.end()
    }
}

fn unquantified<T>(v: T, zero: impl Fn(&T) -> bool, show: impl Fn(&T) -> String) -> ConditionResult {
    if zero(&v) {
        ConditionResult::pass()
    } else {
        ConditionResult::fail(show(&v))
    }
}

fn first_failure<T: Send>(n: usize, label: &str, f: impl Fn(usize) -> T + Sync, zero: impl Fn(&T) -> bool + Sync) -> ConditionResult {
    match (0..n).into_par_iter().find_first(|&i| !zero(&f(i))) {
        None => ConditionResult::pass(),
        Some(i) => ConditionResult::fail(format!("nonzero for {label} = basis vector {i}")),
    }
}

fn nnz_e7(v: &E7Element) -> String {
    format!("{} nonzero coordinates", v.coords().iter().filter(|c| !c.is_zero()).count())
}

fn nnz_p(v: &PElement) -> String {
    format!("{} nonzero coordinates", v.coords().iter().filter(|c| !c.is_zero()).count())
}

/// Evaluate conditions (1)–(13), the direct test R × R = 0 and the
/// hypotheses (σR = R, σ′R = R, [R_D, R] = 0, R ≠ 0).
pub fn w_condition_check(x: &E8Element) -> WConditionReport {
    let p_basis: Vec<PElement> = (0..freudenthal::DIM).map(PElement::basis).collect();
    let phi_basis = e7::basis_elements();
    let p_zero = |v: &PElement| v.is_zero();
    let mut conditions = vec![
        unquantified(condition_1(x), e7_zero, nnz_e7),
        unquantified(condition_2(x), e7_zero, nnz_e7),
        unquantified(condition_3(x), e7_zero, nnz_e7),
        unquantified(condition_4(x), p_zero, nnz_p),
        unquantified(condition_5(x), p_zero, nnz_p),
        unquantified(condition_6(x), |v| v.is_zero(), |v| format!("value {v}")),
    ];
    conditions.push(first_failure(56, "Q1", |i| condition_7(x, &p_basis[i]), e7_zero));
    conditions.push(first_failure(56, "P1", |i| condition_8(x, &p_basis[i]), e7_zero));
    conditions.push(first_failure(56, "Q1", |i| condition_9(x, &p_basis[i]), p_zero));
    conditions.push(first_failure(56, "P1", |i| condition_10(x, &p_basis[i]), p_zero));
    conditions.push(first_failure(e7::DIM, "Phi1", |i| condition_11(x, &phi_basis[i]), e7_zero));
    conditions.push(first_failure(e7::DIM, "Phi1", |i| condition_12(x, &phi_basis[i]), p_zero));
    conditions.push(first_failure(e7::DIM, "Phi1", |i| condition_13(x, &phi_basis[i]), p_zero));

    let m = r_cross_matrix(x);
    let direct = match (0..DIM).find(|&j| !m.column(j).iter().all(Scalar::is_zero)) {
        None => ConditionResult::pass(),
        Some(j) => ConditionResult::fail(format!("(R x R) applied to basis vector {j} is nonzero")),
    };
    let g = algebra();
    let v: SparseVec = x.sparse();
    WConditionReport {
        conditions,
        direct,
        nonzero: !x.is_zero(),
        sigma_fixed: x.sigma() == *x,
        sigma_prime_fixed: x.sigma_prime() == *x,
        centralizes_so8: r_d_generators().iter().all(|d| g.bracket_sparse(&d.sparse(), &v).is_empty()),
    }
}
