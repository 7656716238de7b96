use e8kit_core::f4::{self, flatten, triality_completion};
use e8kit_core::jordan::{self, JordanElement};
use e8kit_core::linalg::{Matrix, Rational, Scalar, Subspace};
use e8kit_core::octonion::Octonion;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn scalar(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::new(Rational::new(rng.gen_range(-4..5), rng.gen_range(1..4)), Rational::from_int(rng.gen_range(-1..2)))
}

fn random_skew(rng: &mut ChaCha8Rng) -> Matrix {
    let mut t = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            let c = scalar(rng);
            t.push((i, j, c.clone()));
            t.push((j, i, -&c));
        }
    }
    Matrix::from_triplets(8, 8, t)
}

fn random_jordan(rng: &mut ChaCha8Rng) -> JordanElement {
    JordanElement::from_coords(&(0..jordan::DIM).map(|_| scalar(rng)).collect::<Vec<_>>())
}

#[test]
fn completed_triples_are_jordan_derivations() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for _ in 0..3 {
        let t = triality_completion(&random_skew(&mut rng)).unwrap();
        assert!(t.violation().is_none());
        let d = t.jordan_operator();
        for _ in 0..4 {
            let (x, y) = (random_jordan(&mut rng), random_jordan(&mut rng));
            let lhs = x.mul(&y).apply(&d);
            let rhs = &x.apply(&d).mul(&y) + &x.mul(&y.apply(&d));
            assert_eq!(lhs, rhs);
        }
        // commutes with σ and σ′
        assert_eq!(&d * jordan::sigma_operator(), jordan::sigma_operator() * &d);
        assert_eq!(&d * jordan::sigma_prime_operator(), jordan::sigma_prime_operator() * &d);
    }
}

#[test]
fn triality_identity_on_random_octonions() {
    // D₁(x)y + xD₂(y) = conj(D₃(conj(xy))) for arbitrary, not only basis, x and y
    let mut rng = ChaCha8Rng::seed_from_u64(52);
    let t = triality_completion(&random_skew(&mut rng)).unwrap();
    for _ in 0..10 {
        let x = Octonion(std::array::from_fn(|_| scalar(&mut rng)));
        let y = Octonion(std::array::from_fn(|_| scalar(&mut rng)));
        let lhs = &x.transform(&t.d1).mul(&y) + &x.mul(&y.transform(&t.d2));
        let rhs = x.mul(&y).conj().transform(&t.d3).conj();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn completions_span_the_f4_commutant() {
    let ops: Vec<Vec<Scalar>> = f4::skew_basis().iter().map(|e| flatten(&triality_completion(e).unwrap().jordan_operator())).collect();
    let span = Subspace::span(f4::OP_DIM, &ops);
    assert_eq!(span.dim(), 28);
    assert_eq!(&span, f4::f4_commutant_basis());
}

#[test]
fn f4_and_e6_dimensions() {
    assert_eq!(f4::solve_f4_derivations().dim(), 52);
    assert_eq!(f4::e6_basis().dim(), 78);
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let x = random_jordan(&mut rng);
    for op in f4::f4_basis_operators().iter().step_by(7) {
        assert!(f4::is_derivation(op));
        assert!(f4::preserves_det(op, &x));
    }
}
