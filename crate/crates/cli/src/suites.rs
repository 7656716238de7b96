//! Named check batteries.

use e8kit_core::e7::{self, Commuting, E7Element, Involution};
use e8kit_core::e8::fixed::{
    compact_form_basis, compact_form_is_closed, compact_killing_gram, compact_part, e8_fixed_subalgebra,
};
use e8kit_core::e8::orbits::{
    delta_one_tilde, delta_one_upper, delta_operator, exp_orbit_closed_form_float,
    exp_orbit_series_float, lambda_prime, seeded_orbit_images, printed_q_term_coefficient, q_term_coefficient, theta_power_closed_form,
    theta_power_orbit,
};
use e8kit_core::e8::wvariety::{condition_1, condition_4, condition_6, r_cross, w_condition_check};
use e8kit_core::e8::{self, killing_b8, r_d_generators, random_scalar, random_sparse, E8Element, DIM};
use e8kit_core::f4;
use e8kit_core::freudenthal::{self, freudenthal_cross, skew_pairing, PElement};
use e8kit_core::jordan::{self, JordanElement};
use e8kit_core::linalg::{signature, Matrix, Rational, Scalar, Subspace, C64};
use e8kit_core::octonion::Octonion;
use e8kit_core::structure::{classify_semisimple, classify_simple_type_seeded, ideals_commute, split_commuting_ideals_seeded};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::ledger::compute_ledger;
use crate::report::{Check, Recorder, SuiteReport};

pub const SUITES: &[&str] = &[
    "axioms",
    "jacobi",
    "ledger",
    "triality",
    "kappa-mu",
    "phi-generators",
    "w-variety",
    "orbits",
    "compact",
    "decomposition",
    "all",
];

/// Number of seeded random triples in the Jacobi suite.
pub const RANDOM_TRIPLES: usize = 500;
/// Nonzero coordinates per random Jacobi argument.
pub const RANDOM_TERMS: usize = 10;

pub fn needs_e8(name: &str) -> bool {
    !matches!(name, "triality" | "kappa-mu" | "phi-generators")
}

/// Run a suite; `None` for an unknown name.
pub fn run_suite(name: &str, seed: u64, timings: bool) -> Option<SuiteReport> {
    let checks = match name {
        "all" => SUITES[..SUITES.len() - 1].iter().flat_map(|s| suite_checks(s, seed, timings).unwrap()).collect(),
        _ => suite_checks(name, seed, timings)?,
    };
    Some(SuiteReport::new(name, seed, checks))
}

fn suite_checks(name: &str, seed: u64, timings: bool) -> Option<Vec<Check>> {
    let mut r = Recorder::new(name, timings);
    match name {
        "axioms" => axioms(&mut r, seed),
        "jacobi" => jacobi(&mut r, seed),
        "ledger" => r.run_many(|| compute_ledger().checks()),
        "triality" => triality(&mut r, seed),
        "kappa-mu" => kappa_mu(&mut r),
        "phi-generators" => phi_generators(&mut r, seed),
        "w-variety" => w_variety(&mut r, seed),
        "orbits" => orbits(&mut r, seed),
        "compact" => compact(&mut r),
        "decomposition" => decomposition(&mut r, seed),
        _ => return None,
    }
    Some(r.checks)
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn small_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::new(Rational::new(rng.gen_range(-4..5), rng.gen_range(1..4)), Rational::from_int(rng.gen_range(-1..2)))
}

fn random_octonion(rng: &mut ChaCha8Rng) -> Octonion {
    Octonion(std::array::from_fn(|_| small_scalar(rng)))
}

fn random_jordan(rng: &mut ChaCha8Rng) -> JordanElement {
    JordanElement::from_coords(&(0..jordan::DIM).map(|_| small_scalar(rng)).collect::<Vec<_>>())
}

fn random_p(rng: &mut ChaCha8Rng) -> PElement {
    PElement::from_coords(&(0..freudenthal::DIM).map(|_| small_scalar(rng)).collect::<Vec<_>>())
}

fn random_e7(rng: &mut ChaCha8Rng, terms: usize) -> E7Element {
    let mut c = vec![Scalar::ZERO; e7::DIM];
    for _ in 0..terms {
        c[rng.gen_range(0..e7::DIM)] = small_scalar(rng);
    }
    E7Element::from_coords(&c)
}

const DIAG: [usize; 8] = [0, 1, 2, 27, 28, 29, 54, 55];

fn random_diagonal(rng: &mut ChaCha8Rng) -> PElement {
    let mut c = vec![Scalar::ZERO; freudenthal::DIM];
    for i in DIAG {
        c[i] = random_scalar(rng);
    }
    PElement::from_coords(&c)
}

fn random_sl2(rng: &mut ChaCha8Rng) -> Matrix {
    let a = loop {
        let a = small_scalar(rng);
        if !a.is_zero() {
            break a;
        }
    };
    let (b, c) = (small_scalar(rng), small_scalar(rng));
    let d = &(&Scalar::ONE + &(&b * &c)) * &a.recip();
    Matrix::from_dense(vec![vec![a, b], vec![c, d]]).expect("2x2")
}

/// Number of `i < n` for which `f(i)` fails.
fn count(n: usize, mut f: impl FnMut(usize) -> bool) -> usize {
    (0..n).filter(|&i| !f(i)).count()
}

fn axioms(r: &mut Recorder, seed: u64) {
    let mut g = rng(seed, 1);
    let oct: Vec<(Octonion, Octonion)> = (0..20).map(|_| (random_octonion(&mut g), random_octonion(&mut g))).collect();
    r.run(|| {
        let bad = oct.iter().filter(|(x, y)| x.mul(y).norm() != &x.norm() * &y.norm()).count();
        Check::compare("octonion-composition-failures", 0, bad)
    });
    r.run(|| {
        let bad = oct
            .iter()
            .filter(|(x, y)| x.mul(x).mul(y) != x.mul(&x.mul(y)) || y.mul(x).mul(x) != y.mul(&x.mul(x)))
            .count();
        Check::compare("octonion-alternative-failures", 0, bad)
    });
    r.run(|| {
        let bad = oct.iter().filter(|(x, y)| x.mul(y).conj() != y.conj().mul(&x.conj())).count();
        Check::compare("octonion-conjugation-failures", 0, bad)
    });
    let jor: Vec<[JordanElement; 3]> = (0..10).map(|_| std::array::from_fn(|_| random_jordan(&mut g))).collect();
    r.run(|| {
        let bad = jor
            .iter()
            .filter(|[x, y, _]| {
                let xx = x.mul(x);
                x.mul(y) != y.mul(x) || x.mul(y).mul(&xx) != x.mul(&y.mul(&xx))
            })
            .count();
        Check::compare("jordan-identity-failures", 0, bad)
    });
    r.run(|| {
        let bad = jor
            .iter()
            .filter(|[x, w, z]| {
                !z.apply(&jordan::vee(x, w)).inner(&z.cross(&z)).is_zero()
            })
            .count();
        Check::compare("jordan-vee-preserves-det-failures", 0, bad)
    });
    r.run(|| Check::compare("f4-dim", 52, f4::solve_f4_derivations().dim()));
    r.run(|| Check::compare("e6-dim", 78, f4::e6_basis().dim()));
    r.run(|| {
        let bad = count(5, |_| {
            let (a, b) = (random_e7(&mut g, 12), random_e7(&mut g, 12));
            e7::e7_bracket_via_operators(&a, &b).map(|c| c == a.bracket(&b)).unwrap_or(false)
        });
        Check::compare("e7-bracket-matches-operator-commutator-failures", 0, bad)
    });
    r.run(|| {
        let bad = count(4, |_| {
            let f = random_e7(&mut g, 15);
            let (p, q) = (random_p(&mut g), random_p(&mut g));
            let inv = (&skew_pairing(&f.apply(&p), &q) + &skew_pairing(&p, &f.apply(&q))).is_zero();
            let lhs = f.bracket(&freudenthal_cross(&p, &q));
            let rhs = &freudenthal_cross(&f.apply(&p), &q) + &freudenthal_cross(&p, &f.apply(&q));
            inv && lhs == rhs && freudenthal_cross(&p, &q) == freudenthal_cross(&q, &p)
        });
        Check::compare("freudenthal-cross-equivariance-failures", 0, bad)
    });
    r.run(|| Check::compare("b8-one-lower-one-upper", Scalar::int(60).to_string(), killing_b8(&E8Element::one_lower(), &E8Element::one_upper()).to_string()));
    r.run(|| {
        let k = e8::killing_matrix();
        let row: Vec<(usize, String)> = k.row(e8::T_IDX).iter().map(|(j, c)| (*j, c.to_string())).collect();
        Check::compare("b8-row-of-one-lower", json!([[e8::S_IDX, Scalar::int(60).to_string()]]), json!(row))
    });
}

fn jacobi(r: &mut Recorder, seed: u64) {
    r.run(|| Check::compare("probe-set-size", 30, e8::probe_set().len()));
    r.run(|| {
        let f = e8::jacobi_probe_failures();
        Check::compare("probe-triple-failures", json!([]), json!(f))
    });
    r.run(|| {
        let f = e8::jacobi_random_failures(seed, RANDOM_TRIPLES, RANDOM_TERMS);
        Check::compare("random-triple-failures", json!([]), json!(f))
    });
    r.run(|| {
        let g = e7::algebra();
        let mut rg = rng(seed, 3);
        let bad = count(200, |_| {
            let t: Vec<usize> = (0..3).map(|_| rg.gen_range(0..e7::DIM)).collect();
            g.jacobi(&[(t[0], Scalar::ONE)], &[(t[1], Scalar::ONE)], &[(t[2], Scalar::ONE)]).is_empty()
        });
        Check::compare("e7-basis-triple-failures", 0, bad)
    });
}

fn triality(r: &mut Recorder, seed: u64) {
    r.run(|| Check::compare("commutant-dim", 28, f4::f4_commutant_basis().dim()));
    r.run(|| {
        let space = f4::f4_commutant_basis();
        let bad = f4::skew_basis()
            .iter()
            .filter(|d| match f4::triality_completion(d) {
                Ok(t) => t.violation().is_some() || !space.contains(&f4::flatten(&t.jordan_operator())),
                Err(_) => true,
            })
            .count();
        Check::compare("skew-basis-completion-failures", 0, bad)
    });
    r.run(|| {
        let mut g = rng(seed, 4);
        let basis = f4::skew_basis();
        let bad = count(3, |_| {
            let mut d = Matrix::zeros(8, 8);
            for b in &basis {
                d = d.lin_comb(&small_scalar(&mut g), b);
            }
            match f4::triality_completion(&d) {
                Ok(t) => t.violation().is_none() && f4::is_derivation(&t.jordan_operator()),
                Err(_) => false,
            }
        });
        Check::compare("random-completion-failures", 0, bad)
    });
    r.run(|| Check::truth("identity-completion-rejected", f4::triality_completion(&Matrix::identity(8)).is_err()));
    r.run(|| {
        let id = Matrix::identity(8);
        let m = id.scale(&Scalar::int(-1));
        let ok = f4::spin8_group_element(&m, &m, &id).map(|op| &op == jordan::sigma_prime_operator()).unwrap_or(false);
        Check::truth("spin8-minus-minus-plus-is-sigma-prime", ok)
    });
    r.run(|| {
        let rd: Vec<Vec<Scalar>> = e7::phi_d_generators().iter().map(E7Element::coords).collect();
        Check::compare("phi-d-image-dim", 28, Subspace::span(e7::DIM, &rd).dim())
    });
}

fn kappa_mu(r: &mut Recorder) {
    r.run(|| Check::compare("sigma-fixed-dim", 69, e7::e7_fixed_subalgebra(&[Involution::Sigma], false, &[]).dim()));
    r.run(|| {
        Check::compare("kappa-mu-centralizer-dim", 66, e7::e7_fixed_subalgebra(&[], false, &[Commuting::Kappa, Commuting::Mu]).dim())
    });
    r.run(|| {
        let d = e7::e7_fixed_subalgebra(&[Involution::SigmaPrime], false, &[Commuting::Kappa, Commuting::Mu]).dim();
        Check::compare("kappa-mu-sigma-prime-dim", 34, d)
    });
    r.run(|| {
        let km = e7::e7_fixed_subalgebra(&[], false, &[Commuting::Kappa, Commuting::Mu]);
        Check::truth("kappa-mu-centralizer-inside-sigma-fixed", km.is_subspace_of(&e7::e7_fixed_subalgebra(&[Involution::Sigma], false, &[])))
    });
    r.run(|| {
        let s = freudenthal::sigma_operator();
        let k = e7::kappa().operator();
        Check::truth("kappa-commutes-with-sigma", &s * &k == &k * &s)
    });
    r.run(|| {
        let k = e7::kappa().operator().to_float();
        let e = k.scale(C64::new(0.0, std::f64::consts::PI)).exp();
        let minus_sigma = freudenthal::sigma_operator().scale(&Scalar::int(-1)).to_float();
        let ok = e.map(|e| e.max_abs_diff(&minus_sigma) < 1e-9).unwrap_or(false);
        Check::truth("exp-pi-i-kappa-is-minus-sigma-within-1e-9", ok)
    });
}

fn phi_generators(r: &mut Recorder, seed: u64) {
    let e = Matrix::identity(2);
    let m = e.scale(&Scalar::int(-1));
    let p = |a: &Matrix, k| e7::phi_k(a, k).expect("det 1");
    let s = freudenthal::sigma_operator();
    let sp = freudenthal::sigma_prime_operator();
    r.run(|| Check::truth("sigma-is-phi1(E)phi2(-E)phi3(-E)", &(&p(&e, 1) * &p(&m, 2)) * &p(&m, 3) == s));
    r.run(|| Check::truth("sigma-prime-is-phi1(-E)phi2(-E)phi3(E)", &(&p(&m, 1) * &p(&m, 2)) * &p(&e, 3) == sp));
    r.run(|| {
        Check::truth("minus-one-is-phi1(-E)phi2(-E)phi3(-E)", &(&p(&m, 1) * &p(&m, 2)) * &p(&m, 3) == Matrix::scalar(56, &Scalar::int(-1)))
    });
    let mut g = rng(seed, 5);
    let (a, b) = (random_sl2(&mut g), random_sl2(&mut g));
    r.run(|| {
        let ok = (1..=3).all(|k| &p(&a, k) * &p(&b, k) == p(&(&a * &b), k));
        Check::truth("phi-k-homomorphism", ok)
    });
    r.run(|| {
        let ok = (1..=3).all(|i| (1..=3).all(|j| i == j || &p(&a, i) * &p(&b, j) == &p(&b, j) * &p(&a, i)));
        Check::truth("images-pairwise-commute", ok)
    });
    r.run(|| {
        let ds: Vec<Matrix> = e7::phi_d_generators().iter().map(E7Element::operator).collect();
        let ok = (1..=3).all(|k| {
            let x = p(&a, k);
            &x * &s == &s * &x && &x * &sp == &sp * &x && ds.iter().all(|d| &x * d == d * &x)
        });
        Check::truth("images-commute-with-sigma-sigma-prime-so8", ok)
    });
    r.run(|| {
        let ok = (1..=3).all(|k| e7::e7_operator_is_group_element(&p(&a, k)));
        Check::truth("cross-equivariance", ok)
    });
}

fn w_variety(r: &mut Recorder, seed: u64) {
    r.run(|| {
        let rep = w_condition_check(&E8Element::one_lower());
        Check::truth("one-lower-in-w", rep.nonzero && rep.direct.holds && rep.all_conditions_hold())
    });
    r.run(|| {
        let passed = seeded_orbit_images(seed, 20)
            .map(|xs| {
                xs.iter()
                    .filter(|x| {
                        let rep = w_condition_check(x);
                        rep.direct.holds && rep.all_conditions_hold()
                    })
                    .count()
            })
            .unwrap_or(0);
        Check::compare("exp-orbit-of-one-lower-in-w", 20, passed)
    });
    r.run(|| {
        let x = &E8Element::one_upper() + &E8Element::one_lower();
        Check::compare("one-upper-plus-one-lower-condition-6", Scalar::int(-16).to_string(), condition_6(&x).to_string())
    });
    r.run(|| {
        let rep = w_condition_check(&(&E8Element::one_upper() + &E8Element::one_lower()));
        Check::compare("one-upper-plus-one-lower-failing", json!([6, 9, 10]), json!(rep.failing()))
    });
    r.run(|| {
        let mut g = rng(seed, 7);
        let bad = count(2, |_| {
            let x = E8Element::from_sparse(&random_sparse(&mut g, 20));
            let y = r_cross(&x, &E8Element::one_lower());
            y.phi == condition_1(&x) && y.q == condition_4(&x).scale(&Scalar::int(-1)) && y.t == &condition_6(&x) * &Scalar::frac(-1, 4)
        });
        Check::compare("expansion-against-one-lower-failures", 0, bad)
    });
}

fn orbits(r: &mut Recorder, seed: u64) {
    let mut g = rng(seed, 8);
    let apply = |m: &Matrix, x: &E8Element| E8Element::from_sparse(&m.mul_sparse_vec(&x.sparse()));
    r.run(|| {
        let bad = count(10, |_| {
            let q = random_diagonal(&mut g);
            let t = random_scalar(&mut g);
            let Ok(d) = delta_operator(&q, &t) else { return false };
            apply(&d, &E8Element::one_upper()) == delta_one_upper(&q, &t)
                && apply(&d, &E8Element::one_tilde()) == delta_one_tilde(&q, &t)
                && apply(&d, &E8Element::one_lower()) == E8Element::one_lower()
        });
        Check::compare("delta-column-failures", 0, bad)
    });
    r.run(|| {
        let mut bad = Vec::new();
        for case in 0..3 {
            let (p1, r1, s1) = (random_diagonal(&mut g), random_scalar(&mut g), random_scalar(&mut g));
            for n in 0..=6 {
                if theta_power_closed_form(&p1, &r1, &s1, n) != Some(theta_power_orbit(&p1, &r1, &s1, n)) {
                    bad.push((case, n));
                }
            }
        }
        Check::compare("theta-power-closed-form-failures", json!([]), json!(bad))
    });
    r.run(|| {
        let differs: Vec<bool> = (1..=6).map(|n| printed_q_term_coefficient(n) != q_term_coefficient(n)).collect();
        Check::compare("printed-q-term-coefficient-differs", json!(vec![true; 6]), json!(differs))
    });
    r.run(|| {
        let bad = count(4, |_| {
            let (p1, r1, s1) = (random_diagonal(&mut g).scale(&Scalar::frac(1, 4)), random_scalar(&mut g), random_scalar(&mut g));
            let Ok(a) = exp_orbit_series_float(&p1, &r1, &s1) else { return false };
            let b = exp_orbit_closed_form_float(&p1, &r1, &s1);
            a.iter().zip(&b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max) < 1e-9
        });
        Check::compare("float-exp-closed-form-failures-1e-9", 0, bad)
    });
    r.run(|| {
        let ok = lambda_prime()
            .map(|lp| {
                let x = E8Element::from_sparse(&random_sparse(&mut g, 12));
                let expect = E8Element { phi: x.phi.clone(), p: x.q.clone(), q: -&x.p, r: -&x.r, s: -&x.t, t: -&x.s };
                apply(&lp, &x) == expect
            })
            .unwrap_or(false);
        Check::truth("lambda-prime-action", ok)
    });
}

fn compact(r: &mut Recorder) {
    let basis = compact_form_basis();
    r.run(|| Check::compare("real-dim", DIM, basis.dim()));
    r.run(|| Check::truth("closed-under-bracket", compact_form_is_closed(&basis)));
    r.run(|| {
        let sig = compact_killing_gram(&basis).and_then(|k| signature(&k)).map(|s| json!([s.0, s.1, s.2]));
        Check::compare("killing-signature", json!([0, DIM, 0]), sig.unwrap_or_else(|e| json!(e.to_string())))
    });
    let h = e8_fixed_subalgebra(&[Involution::Sigma, Involution::SigmaPrime], false, false);
    r.run(|| Check::compare("sigma-sigma-prime-fixed-real-dim", 56, compact_part(&h).map(|c| c.dim()).unwrap_or(0)));
    r.run(|| {
        let got = split_commuting_ideals_seeded(e8::algebra(), &h, 0)
            .and_then(|ideals| {
                ideals
                    .iter()
                    .map(|i| {
                        let c = compact_part(i)?;
                        let s = signature(&compact_killing_gram(&c)?)?;
                        Ok(json!([c.dim(), [s.0, s.1, s.2]]))
                    })
                    .collect::<e8kit_core::Result<Vec<_>>>()
            })
            .map(|v| json!(v))
            .unwrap_or_else(|e| json!(e.to_string()));
        Check::compare("compact-ideals-dim-and-signature", json!([[28, [0, 28, 0]], [28, [0, 28, 0]]]), got)
    });
}

fn decomposition(r: &mut Recorder, seed: u64) {
    let g = e8::algebra();
    let h = e8_fixed_subalgebra(&[Involution::Sigma, Involution::SigmaPrime], false, false);
    let ideals = match split_commuting_ideals_seeded(g, &h, seed) {
        Ok(i) => i,
        Err(e) => {
            r.run(|| Check::compare("split", "ok", e.to_string()));
            return;
        }
    };
    r.run(|| Check::compare("ideal-dims", json!([28, 28]), json!(ideals.iter().map(Subspace::dim).collect::<Vec<_>>())));
    r.run(|| Check::truth("cross-brackets-zero", ideals_commute(g, &ideals)));
    r.run(|| {
        let types: Vec<_> = ideals
            .iter()
            .map(|i| {
                classify_simple_type_seeded(g, i, seed)
                    .map(|t| json!([t.rank, t.root_count, t.label]))
                    .unwrap_or_else(|e| json!(e.to_string()))
            })
            .collect();
        Check::compare("ideal-types", json!([[4, 24, "D4"], [4, 24, "D4"]]), json!(types))
    });
    r.run(|| {
        let rd = Subspace::span_sparse(DIM, &r_d_generators().iter().map(E8Element::sparse).collect::<Vec<_>>());
        Check::truth("ideal-equals-phi-d-image", ideals.contains(&rd))
    });
    r.run(|| {
        let c = e8_fixed_subalgebra(&[Involution::Sigma, Involution::SigmaPrime], true, false);
        Check::truth("ideal-equals-so8-centralizer", ideals.contains(&c))
    });
    r.run(|| {
        let h9 = e7::e7_fixed_subalgebra(&[Involution::Sigma, Involution::SigmaPrime], true, &[]);
        let got = classify_semisimple(e7::algebra(), &h9, seed)
            .map(|d| json!([d.center_dim, d.factors.iter().map(|(_, t)| t.label.clone()).collect::<Vec<_>>()]))
            .unwrap_or_else(|e| json!(e.to_string()));
        Check::compare("e7-nine-dim-type", json!([0, ["A1", "A1", "A1"]]), got)
    });
}
