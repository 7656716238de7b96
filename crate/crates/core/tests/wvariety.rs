//! The condition list is checked against the direct expansion of (R×R)R₁ on
//! random, unconstrained R: each condition must reappear as the stated
//! multiple of one component.

use e8kit_core::e7::{self, E7Element};
use e8kit_core::e8::wvariety::*;
use e8kit_core::e8::{random_scalar, E8Element, DIM};
use e8kit_core::freudenthal::PElement;
use e8kit_core::linalg::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_general(rng: &mut ChaCha8Rng) -> E8Element {
    let mut v = vec![Scalar::ZERO; DIM];
    for _ in 0..30 {
        v[rng.gen_range(0..DIM)] = random_scalar(rng);
    }
    for i in [245, 246, 247] {
        v[i] = random_scalar(rng);
    }
    E8Element::from_coords(&v)
}

fn random_p(rng: &mut ChaCha8Rng) -> PElement {
    PElement::from_coords(&(0..56).map(|_| if rng.gen_bool(0.3) { random_scalar(rng) } else { Scalar::ZERO }).collect::<Vec<_>>())
}

fn random_phi(rng: &mut ChaCha8Rng) -> E7Element {
    E7Element::from_coords(&(0..e7::DIM).map(|_| if rng.gen_bool(0.15) { random_scalar(rng) } else { Scalar::ZERO }).collect::<Vec<_>>())
}

fn s(n: i64, d: i64) -> Scalar {
    Scalar::frac(n, d)
}

#[test]
fn unquantified_conditions_are_components_of_the_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..3 {
        let x = random_general(&mut rng);
        let c6 = condition_6(&x);

        let y = r_cross(&x, &E8Element::one_lower());
        assert_eq!(y.phi, condition_1(&x));
        assert_eq!(y.q, condition_4(&x).scale(&s(-1, 1)));
        assert_eq!(y.t, &c6 * &s(-1, 4));
        assert!(y.p.is_zero() && y.r.is_zero() && y.s.is_zero());

        let y = r_cross(&x, &E8Element::one_upper());
        assert_eq!(y.phi, condition_2(&x));
        assert_eq!(y.p, condition_5(&x).scale(&s(-1, 1)));
        assert_eq!(y.s, &c6 * &s(-1, 4));
        assert!(y.q.is_zero() && y.r.is_zero() && y.t.is_zero());

        let y = r_cross(&x, &E8Element::one_tilde());
        assert_eq!(y.phi, condition_3(&x).scale(&s(2, 1)));
        assert_eq!(y.p, condition_4(&x).scale(&s(-1, 1)));
        assert_eq!(y.q, condition_5(&x));
        assert_eq!(y.r, &c6 * &s(-1, 4));
        assert!(y.s.is_zero() && y.t.is_zero());
    }
}

#[test]
fn quantified_conditions_are_components_of_the_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..3 {
        let x = random_general(&mut rng);
        let (p1, q1, phi1) = (random_p(&mut rng), random_p(&mut rng), random_phi(&mut rng));

        let y = r_cross(&x, &E8Element::q_lower(q1.clone()));
        assert_eq!(y.phi, condition_7(&x, &q1).scale(&s(1, 2)));
        assert_eq!(y.q, condition_9(&x, &q1).scale(&s(-1, 8)));

        let y = r_cross(&x, &E8Element::p_upper(p1.clone()));
        assert_eq!(y.phi, condition_8(&x, &p1).scale(&s(-1, 2)));
        assert_eq!(y.p, condition_10(&x, &p1).scale(&s(1, 8)));

        let y = r_cross(&x, &E8Element::from_phi(phi1.clone()));
        assert_eq!(y.phi, condition_11(&x, &phi1).scale(&s(1, 18)));
        assert_eq!(y.p, condition_12(&x, &phi1).scale(&s(1, 18)));
        assert_eq!(y.q, condition_13(&x, &phi1).scale(&s(1, 18)));
    }
}

#[test]
fn one_upper_plus_one_lower_fails_condition_6() {
    let x = &E8Element::one_upper() + &E8Element::one_lower();
    assert_eq!(condition_6(&x), Scalar::int(-16));
    let r = w_condition_check(&x);
    assert!(!r.direct.holds);
    assert!(r.hypotheses_hold());
    assert!((1..=5).all(|k| r.holds(k)));
    assert!(!r.holds(6));
    // (9) and (10) carry the same st term and fail alongside (6)
    assert_eq!(r.failing(), vec![6, 9, 10]);
}
