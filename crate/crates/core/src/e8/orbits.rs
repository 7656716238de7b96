//! Exponentials of nilpotent ad-operators and the orbit formulas through 1₋.

use super::{theta, E8Element, E8GroupOperator, Provenance, DIM};
use crate::error::{Error, Result};
use crate::freudenthal::{skew_pairing, PElement};
use crate::linalg::{FloatMatrix, Matrix, Rational, Scalar, C64};

/// Upper bound for the nilpotency index of ad on 𝔢₈ (largest Jordan block
/// of a principal nilpotent is 2·29 + 1).
pub const MAX_AD_NILPOTENCY: usize = 59;

/// exp(Θ(R)) = Σ Θⁿ/n! for nilpotent Θ(R), exactly.
pub fn exp_nilpotent_ad(x: &E8Element) -> Result<E8GroupOperator> {
    exp_nilpotent(&theta(x)).map(|m| E8GroupOperator { matrix: m, provenance: Provenance::ExpNilpotent })
}

pub fn exp_nilpotent(a: &Matrix) -> Result<Matrix> {
    let n = a.rows();
    let mut sum = Matrix::identity(n);
    let mut term = Matrix::identity(n);
    for k in 1..=MAX_AD_NILPOTENCY {
        term = (&term * a).scale(&Scalar::real(Rational::new(1, k as i64)));
        if term.is_zero() {
            return Ok(sum);
        }
        sum = &sum + &term;
    }
    Err(Error::NotNilpotent(MAX_AD_NILPOTENCY))
}

/// δ = exp(Θ((t/2)₋)) exp(Θ(Q₋)).
pub fn delta_operator(q: &PElement, t: &Scalar) -> Result<Matrix> {
    let a = exp_nilpotent_ad(&E8Element::t_lower(t * &Scalar::frac(1, 2)))?;
    let b = exp_nilpotent_ad(&E8Element::q_lower(q.clone()))?;
    Ok(&a.matrix * &b.matrix)
}

/// Closed form of δ1⁻:
/// (½Q×Q, −Q, −(t/2)Q − ⅙(Q×Q)Q, −t/2, 1, −t²/4 + (1/96){Q,(Q×Q)Q}).
pub fn delta_one_upper(q: &PElement, t: &Scalar) -> E8Element {
    let qq = crate::freudenthal::freudenthal_cross(q, q);
    let qqq = qq.apply(q);
    let half_t = t * &Scalar::frac(1, 2);
    E8Element {
        phi: qq.scale(&Scalar::frac(1, 2)),
        p: -q,
        q: &q.scale(&-&half_t) - &qqq.scale(&Scalar::frac(1, 6)),
        r: -&half_t,
        s: Scalar::ONE,
        t: &(t * t).scale(&Rational::new(-1, 4)) + &(&skew_pairing(q, &qqq) * &Scalar::frac(1, 96)),
    }
}

/// Closed form of δ1̃ = (0, 0, Q, 1, 0, t).
pub fn delta_one_tilde(q: &PElement, t: &Scalar) -> E8Element {
    E8Element { q: q.clone(), r: Scalar::ONE, t: t.clone(), ..E8Element::zero() }
}

/// Θ = Θ(0, P₁, 0, r₁, s₁, 0).
pub fn orbit_theta(p1: &PElement, r1: &Scalar, s1: &Scalar) -> E8Element {
    E8Element { p: p1.clone(), r: r1.clone(), s: s1.clone(), ..E8Element::zero() }
}

/// Θⁿ1₋ by iterated exact brackets.
pub fn theta_power_orbit(p1: &PElement, r1: &Scalar, s1: &Scalar, n: usize) -> E8Element {
    let th = orbit_theta(p1, r1, s1);
    let mut v = E8Element::one_lower();
    for _ in 0..n {
        v = th.bracket(&v);
    }
    v
}

fn pow_i(x: i64, e: i64) -> Rational {
    Rational::from_int(x).pow(e as i32)
}

/// `c·r^e` for the closed form; a zero coefficient kills the term even when
/// e < 0. `None` if r = 0 meets a negative exponent with c ≠ 0.
fn coeff_term(c: Rational, r: &Scalar, e: i64) -> Option<Scalar> {
    if c.is_zero() {
        return Some(Scalar::ZERO);
    }
    if e >= 0 {
        return Some(r.pow(e as u32).scale(&c));
    }
    if r.is_zero() {
        return None;
    }
    Some(r.recip().pow((-e) as u32).scale(&c))
}

/// Closed form of Θⁿ1₋ in n, for n ≥ 1:
///
/// ```text
/// Φ = ((−2)ⁿ⁻¹ + (−1)ⁿ) r₁ⁿ⁻² P₁×P₁
/// P = ((−2)ⁿ⁻¹ − (1 + (−1)ⁿ⁻¹)/2) r₁ⁿ⁻² s₁P₁ + ((1 − (−2)ⁿ)/6 + (−1)ⁿ/2) r₁ⁿ⁻³ (P₁×P₁)P₁
/// Q = ((−2)ⁿ + (−1)ⁿ⁻¹) r₁ⁿ⁻¹ P₁
/// r = (−2)ⁿ⁻¹ r₁ⁿ⁻¹ s₁
/// s = −((−2)ⁿ⁻² + 2ⁿ⁻²) r₁ⁿ⁻² s₁² + c_q(n) r₁ⁿ⁻⁴ {P₁,(P₁×P₁)P₁}
/// t = (−2)ⁿ r₁ⁿ
/// ```
///
/// where `c_q` is [`q_term_coefficient`].
pub fn theta_power_closed_form(p1: &PElement, r1: &Scalar, s1: &Scalar, n: usize) -> Option<E8Element> {
    if n == 0 {
        return Some(E8Element::one_lower());
    }
    let n = n as i64;
    let sgn = |k: i64| if k.rem_euclid(2) == 0 { 1 } else { -1 };
    let m2 = |k: i64| pow_i(-2, k);
    let two = |k: i64| pow_i(2, k);
    let half = Rational::new(1, 2);
    let pp = crate::freudenthal::freudenthal_cross(p1, p1);
    let ppp = pp.apply(p1);
    let q_inv = skew_pairing(p1, &ppp);

    let c_phi = &m2(n - 1) + &Rational::from_int(sgn(n));
    let c_p1 = &m2(n - 1) - &(&Rational::from_int(1 + sgn(n - 1)) * &half);
    let c_p2 = &(&(&Rational::ONE - &m2(n)) * &Rational::new(1, 6)) + &(&Rational::from_int(sgn(n)) * &half);
    let c_q = &m2(n) + &Rational::from_int(sgn(n - 1));
    let c_r = m2(n - 1);
    let c_s1 = -(&m2(n - 2) + &two(n - 2));

    let phi = pp.scale(&coeff_term(c_phi, r1, n - 2)?);
    let p = &p1.scale(&(&coeff_term(c_p1, r1, n - 2)? * s1)) + &ppp.scale(&coeff_term(c_p2, r1, n - 3)?);
    let q = p1.scale(&coeff_term(c_q, r1, n - 1)?);
    let r = &coeff_term(c_r, r1, n - 1)? * s1;
    let s = &(&coeff_term(c_s1, r1, n - 2)? * &(s1 * s1)) + &(&coeff_term(q_term_coefficient(n as usize), r1, n - 4)? * &q_inv);
    let t = coeff_term(m2(n), r1, n)?;
    Some(E8Element { phi: E8Element::from_phi(phi).phi, p, q, r, s, t })
}

/// Coefficient of r₁ⁿ⁻⁴{P₁,(P₁×P₁)P₁} in the s-slot of Θⁿ1₋:
/// (2ⁿ⁻² + (−2)ⁿ⁻² − 1 − (−1)ⁿ)/24. It vanishes for n < 4, so the negative
/// power of r₁ never appears.
pub fn q_term_coefficient(n: usize) -> Rational {
    let n = n as i64;
    let sgn = if n % 2 == 0 { 1 } else { -1 };
    let v = &(&pow_i(2, n - 2) + &pow_i(-2, n - 2)) - &Rational::from_int(1 + sgn);
    &v * &Rational::new(1, 24)
}

/// The coefficient as displayed in the source formula,
/// (2ⁿ⁻² + (−2)ⁿ⁻² − (−1)ⁿ⁻¹)/24. It disagrees with the iterated brackets
/// for every n and is kept only so the discrepancy can be reported.
pub fn printed_q_term_coefficient(n: usize) -> Rational {
    let n = n as i64;
    let sgn = if (n - 1) % 2 == 0 { 1 } else { -1 };
    let v = &(&pow_i(2, n - 2) + &pow_i(-2, n - 2)) - &Rational::from_int(sgn);
    &v * &Rational::new(1, 24)
}

/// Σ Θⁿ1₋/n! in double precision, summed until the term norm drops below
/// `1e-12` relative to the partial sum.
pub fn exp_orbit_series_float(p1: &PElement, r1: &Scalar, s1: &Scalar) -> Result<Vec<C64>> {
    let a = theta(&orbit_theta(p1, r1, s1)).to_float();
    exp_series_on(&a, &E8Element::one_lower().coords().iter().map(Scalar::to_complex).collect::<Vec<_>>())
}

/// exp(A)v by the Taylor series, for moderate ‖A‖.
pub fn exp_series_on(a: &FloatMatrix, v: &[C64]) -> Result<Vec<C64>> {
    let mut sum = v.to_vec();
    let mut term = v.to_vec();
    for k in 1..400 {
        term = a.mul_vec(&term).into_iter().map(|x| x / k as f64).collect();
        for (s, t) in sum.iter_mut().zip(&term) {
            *s += t;
        }
        let tn = term.iter().map(|x| x.norm()).fold(0.0, f64::max);
        let sn = sum.iter().map(|x| x.norm()).fold(1e-300, f64::max);
        if tn <= 1e-12 * sn {
            return Ok(sum);
        }
    }
    Err(Error::Inconsistent("exponential series did not converge".into()))
}

/// Σⱼ cⱼ e^{aⱼr} / r^k, evaluated through its Taylor expansion near r = 0
/// (the limit convention at r = 0).
pub fn exp_ratio(terms: &[(f64, f64)], k: i32, r: C64) -> C64 {
    if r.norm() > 0.05 {
        let num: C64 = terms.iter().map(|&(c, a)| c * (r * a).exp()).sum();
        return num / r.powi(k);
    }
    let mut out = C64::new(0.0, 0.0);
    let mut fact = 1.0;
    for m in 0..(k + 25) {
        if m > 0 {
            fact *= m as f64;
        }
        let c: f64 = terms.iter().map(|&(c, a)| c * a.powi(m)).sum::<f64>() / fact;
        if m < k {
            continue;
        }
        out += c * r.powi(m - k);
    }
    out
}

/// Float coordinates of the displayed closed form of exp(Θ)1₋.
pub fn exp_orbit_closed_form_float(p1: &PElement, r1: &Scalar, s1: &Scalar) -> Vec<C64> {
    let r = r1.to_complex();
    let s = s1.to_complex();
    let pp = crate::freudenthal::freudenthal_cross(p1, p1);
    let ppp = pp.apply(p1);
    let q_inv = skew_pairing(p1, &ppp).to_complex();
    let f = |v: &[Scalar]| v.iter().map(Scalar::to_complex).collect::<Vec<_>>();
    let p1f = f(&p1.coords());
    let ppf = f(&pp.coords());
    let pppf = f(&ppp.coords());

    let c_phi = -0.5 * exp_ratio(&[(1.0, -2.0), (-2.0, -1.0), (1.0, 0.0)], 2, r);
    let c_p1 = 0.5 * s * exp_ratio(&[(-1.0, -2.0), (-1.0, 1.0), (1.0, -1.0), (1.0, 0.0)], 2, r);
    let c_p2 = exp_ratio(&[(-1.0, -2.0), (1.0, 1.0), (3.0, -1.0), (-3.0, 0.0)], 3, r) / 6.0;
    let c_q = exp_ratio(&[(1.0, -2.0), (-1.0, -1.0)], 1, r);
    let c_r = 0.5 * s * exp_ratio(&[(1.0, 0.0), (-1.0, -2.0)], 1, r);
    let c_s1 = -0.25 * s * s * exp_ratio(&[(1.0, -2.0), (1.0, 2.0), (-2.0, 0.0)], 2, r);
    let c_s2 = exp_ratio(&[(1.0, 2.0), (1.0, -2.0), (-4.0, 1.0), (-4.0, -1.0), (6.0, 0.0)], 4, r) / 96.0;
    let c_t = (-2.0 * r).exp();

    let mut out = vec![C64::new(0.0, 0.0); DIM];
    for (i, v) in ppf.iter().enumerate() {
        out[i] = c_phi * v;
    }
    for i in 0..56 {
        out[super::P_OFF + i] = c_p1 * p1f[i] + c_p2 * pppf[i];
        out[super::Q_OFF + i] = c_q * p1f[i];
    }
    out[super::R_IDX] = c_r;
    out[super::S_IDX] = c_s1 + c_s2 * q_inv;
    out[super::T_IDX] = c_t;
    out
}

/// λ′ = exp(Θ(0,0,0,0,π/2,−π/2)), exactly, as exp(Θ1⁻)exp(−Θ1₋)exp(Θ1⁻).
pub fn lambda_prime() -> Result<Matrix> {
    let e = exp_nilpotent_ad(&E8Element::one_upper())?.matrix;
    let f = exp_nilpotent_ad(&E8Element::t_lower(Scalar::int(-1)))?.matrix;
    Ok(&(&e * &f) * &e)
}

/// λ′ through the float exponential of the displayed generator.
pub fn lambda_prime_float() -> Result<FloatMatrix> {
    let h = std::f64::consts::FRAC_PI_2;
    let gen = E8Element::s_upper(Scalar::ONE);
    let a = theta(&gen).to_float().scale(C64::new(h, 0.0));
    let b = theta(&E8Element::one_lower()).to_float().scale(C64::new(-h, 0.0));
    FloatMatrix(&a.0 + &b.0).exp()
}

/// Diagonal probe basis of (𝔓^C)_d: X = Eᵢ, Y = Eᵢ, ξ, η.
pub fn diagonal_probe_basis() -> Vec<PElement> {
    [0usize, 1, 2, 27, 28, 29, 54, 55].iter().map(|&i| PElement::basis(i)).collect()
}

/// Which of the six transitivity cases an element falls in.
pub fn orbit_case(x: &E8Element) -> Option<usize> {
    if !x.t.is_zero() {
        Some(1)
    } else if !x.s.is_zero() {
        Some(2)
    } else if !x.r.is_zero() {
        Some(3)
    } else if !x.q.is_zero() {
        Some(4)
    } else if !x.p.is_zero() {
        Some(5)
    } else if !x.phi.is_zero() {
        Some(6)
    } else {
        None
    }
}

/// One reduction step for cases (2)–(6), moving R to a lower case number.
/// Returns the group operator used and the image. Case (1) is the end point.
pub fn reduction_step(x: &E8Element) -> Result<(Matrix, E8Element)> {
    let v = x.sparse();
    let apply = |m: Matrix| {
        let y = E8Element::from_sparse(&m.mul_sparse_vec(&v));
        (m, y)
    };
    match orbit_case(x) {
        Some(2) => Ok(apply(lambda_prime()?)),
        Some(3) => Ok(apply(exp_nilpotent_ad(&E8Element::p_upper(x.q.clone()))?.matrix)),
        Some(4) => {
            let p1 = diagonal_probe_basis()
                .into_iter()
                .find(|p1| !skew_pairing(p1, &x.q).is_zero())
                .ok_or_else(|| Error::Inconsistent("no diagonal P1 with {P1, Q} != 0".into()))?;
            Ok(apply(exp_nilpotent_ad(&E8Element::p_upper(p1))?.matrix))
        }
        Some(5) => {
            let q1 = diagonal_probe_basis()
                .into_iter()
                .find(|q1| !skew_pairing(&x.p, q1).is_zero())
                .ok_or_else(|| Error::Inconsistent("no diagonal Q1 with {P, Q1} != 0".into()))?;
            Ok(apply(exp_nilpotent_ad(&E8Element::q_lower(q1))?.matrix))
        }
        Some(6) => {
            let p1 = diagonal_probe_basis()
                .into_iter()
                .find(|p1| !x.phi.apply(p1).is_zero())
                .ok_or_else(|| Error::Inconsistent("no diagonal P1 with Phi P1 != 0".into()))?;
            Ok(apply(exp_nilpotent_ad(&E8Element::p_upper(p1))?.matrix))
        }
        Some(1) => Err(Error::InvalidInput("case (1) is the end point of the reduction".into())),
        _ => Err(Error::InvalidInput("zero element".into())),
    }
}

fn small_gaussian<R: rand::Rng>(rng: &mut R) -> Scalar {
    Scalar::new(Rational::from_int(rng.gen_range(-2..3)), Rational::from_int(rng.gen_range(-1..2)))
}

/// `count` seeded points exp(Θ(P⁻))exp(Θ(Q₋))exp(Θ(s⁻))1₋ of the orbit of 1₋,
/// with diagonal P, Q and scalar s drawn from small Gaussian integers.
pub fn seeded_orbit_images(seed: u64, count: usize) -> Result<Vec<E8Element>> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let diag = |rng: &mut rand_chacha::ChaCha8Rng| {
        let mut c = vec![Scalar::ZERO; crate::freudenthal::DIM];
        for i in [0usize, 1, 2, 27, 28, 29, 54, 55] {
            c[i] = small_gaussian(rng);
        }
        PElement::from_coords(&c)
    };
    (0..count)
        .map(|_| {
            let p = E8Element::p_upper(diag(&mut rng));
            let q = E8Element::q_lower(diag(&mut rng));
            let s = E8Element::s_upper(small_gaussian(&mut rng));
            let mut x = E8Element::one_lower();
            for g in [s, q, p] {
                x = exp_nilpotent_ad(&g)?.apply(&x);
            }
            Ok(x)
        })
        .collect()
}
