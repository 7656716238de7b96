use e8kit_core::e7::Involution;
use e8kit_core::e8::fixed::*;
use e8kit_core::e8::{r_d_generators, E8Element, DIM, P_OFF, Q_OFF, R_IDX, S_IDX, T_IDX};
use e8kit_core::linalg::{Scalar, Subspace};

const DIAG: [usize; 8] = [0, 1, 2, 27, 28, 29, 54, 55];

fn support(h: &Subspace) -> Vec<usize> {
    let mut s: Vec<usize> = h.basis().iter().flat_map(|v| v.iter().map(|(i, _)| *i)).collect();
    s.sort();
    s.dedup();
    s
}

#[test]
fn one_lower_stabilizer_has_dimension_18() {
    let h = e8_fixed_subalgebra(&[Involution::Sigma, Involution::SigmaPrime], true, true);
    assert_eq!(h.dim(), 18);
    let sup = support(&h);
    // P = 0 and r = s = 0; Q lives on the diagonal slots; t is free
    assert!(sup.iter().all(|&i| i < P_OFF || (Q_OFF..R_IDX).contains(&i) || i == T_IDX));
    assert!(sup.iter().filter(|&&i| (Q_OFF..R_IDX).contains(&i)).all(|&i| DIAG.contains(&(i - Q_OFF))));
    let phi = h.intersect(&phi_slot()).unwrap();
    assert_eq!(phi.dim(), 9);
    assert!(h.contains_sparse(&E8Element::one_lower().sparse()));
    let q_dim = (0..8).filter(|&k| h.contains_sparse(&E8Element::basis(Q_OFF + DIAG[k]).sparse())).count();
    assert_eq!(q_dim, 8);
    assert!(!sup.contains(&R_IDX) && !sup.contains(&S_IDX));
}

#[test]
fn so8_centralizer_has_dimension_28() {
    let h = e8_fixed_subalgebra(&[Involution::Sigma, Involution::SigmaPrime], true, false);
    assert_eq!(h.dim(), 28);
}

#[test]
fn sigma_sigma_prime_fixed_has_dimension_56() {
    let h = e8_fixed_subalgebra(&[Involution::Sigma, Involution::SigmaPrime], false, false);
    assert_eq!(h.dim(), 56);
    // 37 from Φ, 8 + 8 diagonal P and Q, r, s, t
    assert_eq!(h.intersect(&phi_slot()).unwrap().dim(), 37);
    for k in DIAG {
        assert!(h.contains_sparse(&E8Element::basis(P_OFF + k).sparse()));
        assert!(h.contains_sparse(&E8Element::basis(Q_OFF + k).sparse()));
    }
    for i in [R_IDX, S_IDX, T_IDX] {
        assert!(h.contains_sparse(&E8Element::basis(i).sparse()));
    }
    for g in r_d_generators() {
        assert!(h.contains_sparse(&g.sparse()));
    }
}

#[test]
fn grading_triple_centralizer_is_the_phi_slot() {
    let c = grading_triple_centralizer();
    assert_eq!(c.dim(), 133);
    assert_eq!(c, phi_slot());
}

#[test]
fn compact_form_is_negative_definite() {
    let b = compact_form_basis();
    assert_eq!(b.dim(), DIM);
    assert!(compact_form_is_closed(&b));
    assert_eq!(compact_killing_signature().unwrap(), (0, DIM, 0));
}

#[test]
fn real_coordinates_round_trip() {
    let v = vec![(3usize, Scalar::new(1.into(), (-2).into())), (200, Scalar::i())];
    assert_eq!(compact_to_complex(&complex_to_compact(&v)), v);
}
