//! Complexified octonions 𝕮^C.
//!
//! Basis e₀ = 1, e₁..e₇ ordered by Cayley–Dickson doubling position with
//! `(a,b)(c,d) = (ac − d̄b, da + bc̄)`, applied ℂ → ℍ → 𝕆. So e₁, e₂, e₃ are
//! the Hamilton units i, j, k, and e₄..e₇ = (0,1), (0,i), (0,j), (0,k).
//!
//! Conjugation acts on the octonion units only; the Scalar coefficients are
//! never complex-conjugated, and the norm N(x) = Σ cᵢ² is bilinear.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::linalg::{Matrix, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Octonion(pub [Scalar; 8]);

type Quat = [Scalar; 4];

fn quat_mul(a: &Quat, b: &Quat) -> Quat {
    let m = |x: &Scalar, y: &Scalar| x * y;
    [
        &(&(&m(&a[0], &b[0]) - &m(&a[1], &b[1])) - &m(&a[2], &b[2])) - &m(&a[3], &b[3]),
        &(&(&m(&a[0], &b[1]) + &m(&a[1], &b[0])) + &m(&a[2], &b[3])) - &m(&a[3], &b[2]),
        &(&(&m(&a[0], &b[2]) - &m(&a[1], &b[3])) + &m(&a[2], &b[0])) + &m(&a[3], &b[1]),
        &(&(&m(&a[0], &b[3]) + &m(&a[1], &b[2])) - &m(&a[2], &b[1])) + &m(&a[3], &b[0]),
    ]
}

fn quat_conj(a: &Quat) -> Quat {
    [a[0].clone(), -&a[1], -&a[2], -&a[3]]
}

fn quat_add(a: &Quat, b: &Quat) -> Quat {
    std::array::from_fn(|i| &a[i] + &b[i])
}

fn quat_sub(a: &Quat, b: &Quat) -> Quat {
    std::array::from_fn(|i| &a[i] - &b[i])
}

/// One doubling step ℍ → 𝕆.
fn cayley_dickson_mul(x: &Octonion, y: &Octonion) -> Octonion {
    let split = |o: &Octonion| -> (Quat, Quat) {
        (std::array::from_fn(|i| o.0[i].clone()), std::array::from_fn(|i| o.0[i + 4].clone()))
    };
    let (a, b) = split(x);
    let (c, d) = split(y);
    let lo = quat_sub(&quat_mul(&a, &c), &quat_mul(&quat_conj(&d), &b));
    let hi = quat_add(&quat_mul(&d, &a), &quat_mul(&b, &quat_conj(&c)));
    Octonion(std::array::from_fn(|i| if i < 4 { lo[i].clone() } else { hi[i - 4].clone() }))
}

/// `e_i e_j = sign · e_k`.
pub fn mult_table() -> &'static [[(i8, usize); 8]; 8] {
    static TABLE: OnceLock<[[(i8, usize); 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[(0i8, 0usize); 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                let p = cayley_dickson_mul(&Octonion::unit(i), &Octonion::unit(j));
                let (k, v) = p.0.iter().enumerate().find(|(_, v)| !v.is_zero()).expect("basis product is nonzero");
                t[i][j] = (if v.is_one() { 1 } else { -1 }, k);
            }
        }
        t
    })
}

impl Octonion {
    pub fn zero() -> Self {
        Octonion::default()
    }

    pub fn one() -> Self {
        Octonion::unit(0)
    }

    pub fn unit(i: usize) -> Self {
        let mut c: [Scalar; 8] = Default::default();
        c[i] = Scalar::ONE;
        Octonion(c)
    }

    pub fn from_ints(v: [i64; 8]) -> Self {
        Octonion(v.map(Scalar::int))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &Octonion) -> Octonion {
        let t = mult_table();
        let mut out: [Scalar; 8] = Default::default();
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (s, k) = t[i][j];
                let p = a * b;
                if s > 0 {
                    out[k] += &p;
                } else {
                    out[k] -= &p;
                }
            }
        }
        Octonion(out)
    }

    /// x̄ = 2·re(x)·e₀ − x.
    pub fn conj(&self) -> Octonion {
        Octonion(std::array::from_fn(|i| if i == 0 { self.0[0].clone() } else { -&self.0[i] }))
    }

    pub fn re(&self) -> Scalar {
        self.0[0].clone()
    }

    /// N(x) = Σ cᵢ².
    pub fn norm(&self) -> Scalar {
        self.inner(self)
    }

    /// ⟨x, y⟩ = Σ xᵢyᵢ.
    pub fn inner(&self, other: &Octonion) -> Scalar {
        let mut s = Scalar::ZERO;
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                s += &(a * b);
            }
        }
        s
    }

    pub fn scale(&self, c: &Scalar) -> Octonion {
        Octonion(std::array::from_fn(|i| &self.0[i] * c))
    }

    /// Left multiplication `y ↦ x·y` as an 8×8 matrix.
    pub fn left_matrix(&self) -> Matrix {
        Matrix::from_columns(8, &(0..8).map(|j| self.mul(&Octonion::unit(j)).0.to_vec()).collect::<Vec<_>>())
    }

    /// Apply an 8×8 matrix to the coefficient vector.
    pub fn transform(&self, m: &Matrix) -> Octonion {
        let v = m.mul_vec(&self.0);
        Octonion(v.try_into().expect("8x8 matrix"))
    }
}

pub fn oct_mul(x: &Octonion, y: &Octonion) -> Octonion {
    x.mul(y)
}

pub fn oct_conj(x: &Octonion) -> Octonion {
    x.conj()
}

pub fn oct_norm(x: &Octonion) -> Scalar {
    x.norm()
}

pub fn oct_re(x: &Octonion) -> Scalar {
    x.re()
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, o: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, o: &Octonion) -> Octonion {
        Octonion(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, o: &Octonion) -> Octonion {
        Octonion::mul(self, o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;
    use proptest::prelude::*;

    /// Cayley–Dickson product on 2ⁿ-tuples, recursing down to the reals.
    fn cd(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = x.len();
        if n == 1 {
            return vec![&x[0] * &y[0]];
        }
        let h = n / 2;
        let (a, b) = x.split_at(h);
        let (c, d) = y.split_at(h);
        let conj = |v: &[Scalar]| -> Vec<Scalar> {
            v.iter().enumerate().map(|(i, s)| if i == 0 { s.clone() } else { -s }).collect()
        };
        let sub = |u: Vec<Scalar>, v: Vec<Scalar>| -> Vec<Scalar> { u.iter().zip(&v).map(|(p, q)| p - q).collect() };
        let add = |u: Vec<Scalar>, v: Vec<Scalar>| -> Vec<Scalar> { u.iter().zip(&v).map(|(p, q)| p + q).collect() };
        let mut lo = sub(cd(a, c), cd(&conj(d), b));
        let hi = add(cd(d, a), cd(b, &conj(c)));
        lo.extend(hi);
        lo
    }

    fn arb() -> impl Strategy<Value = Octonion> {
        proptest::array::uniform8((-6i64..7, 1i64..4, -2i64..3)).prop_map(|a| {
            Octonion(a.map(|(n, d, im)| Scalar::new(Rational::new(n, d), Rational::from_int(im))))
        })
    }

    #[test]
    fn table_matches_recursive_doubling() {
        for i in 0..8 {
            for j in 0..8 {
                let (x, y) = (Octonion::unit(i), Octonion::unit(j));
                assert_eq!(x.mul(&y).0.to_vec(), cd(&x.0, &y.0), "e{i} e{j}");
            }
        }
    }

    #[test]
    fn quaternion_units_are_hamilton() {
        let e = Octonion::unit;
        assert_eq!(e(1).mul(&e(2)), e(3));
        assert_eq!(e(2).mul(&e(3)), e(1));
        assert_eq!(e(3).mul(&e(1)), e(2));
    }

    #[test]
    fn basic_values() {
        for i in 0..8 {
            assert_eq!(Octonion::one().mul(&Octonion::unit(i)), Octonion::unit(i));
            assert_eq!(Octonion::unit(i).mul(&Octonion::one()), Octonion::unit(i));
        }
        assert_eq!(Octonion::unit(1).mul(&Octonion::unit(1)), -&Octonion::one());
        assert_eq!(oct_conj(&Octonion::one()), Octonion::one());
        assert_eq!(oct_norm(&Octonion::unit(3)), Scalar::ONE);
        assert_eq!(oct_re(&Octonion::from_ints([4, 1, 0, 0, 0, 0, 0, 2])), Scalar::int(4));
    }

    proptest! {
        #[test]
        fn composition(x in arb(), y in arb()) {
            prop_assert_eq!(x.mul(&y).norm(), &x.norm() * &y.norm());
            prop_assert_eq!(x.mul(&x.conj()), Octonion::one().scale(&x.norm()));
        }

        #[test]
        fn alternative(x in arb(), y in arb()) {
            prop_assert_eq!(x.mul(&x.mul(&y)), x.mul(&x).mul(&y));
            prop_assert_eq!(y.mul(&x).mul(&x), y.mul(&x.mul(&x)));
        }

        #[test]
        fn conj_identities(x in arb(), y in arb()) {
            let lhs = &x.conj().mul(&y) + &y.conj().mul(&x);
            prop_assert_eq!(lhs, Octonion::one().scale(&Scalar::int(2)).scale(&x.inner(&y)));
            prop_assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
            prop_assert_eq!(x.conj().conj(), x);
        }

        #[test]
        fn matches_oracle_on_random(x in arb(), y in arb()) {
            prop_assert_eq!(x.mul(&y).0.to_vec(), cd(&x.0, &y.0));
        }
    }
}
