//! The exceptional Jordan algebra 𝔍^C of 3×3 hermitian octonion matrices
//!
//! ```text
//!     ( ξ₁  x₃  x̄₂ )
//! X = ( x̄₃  ξ₂  x₁ )
//!     ( x₂  x̄₁  ξ₃ )
//! ```
//!
//! stored in 27 coordinates `[ξ₁, ξ₂, ξ₃, x₁(8), x₂(8), x₃(8)]`.
//! Operators on 𝔍^C are plain 27×27 [`Matrix`] values acting on these
//! coordinates.

use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::linalg::matrix::SparseVec;
use crate::linalg::{Matrix, Scalar};
use crate::octonion::Octonion;

pub const DIM: usize = 27;

pub type JordanOperator = Matrix;

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct JordanElement {
    pub xi: [Scalar; 3],
    pub x: [Octonion; 3],
}

/// Coordinate index of octonion component `c` of slot `x_k` (k = 1..3).
pub fn oct_index(k: usize, c: usize) -> usize {
    debug_assert!((1..=3).contains(&k) && c < 8);
    3 + 8 * (k - 1) + c
}

impl JordanElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// E = E₁ + E₂ + E₃.
    pub fn unit() -> Self {
        Self::diag(Scalar::ONE, Scalar::ONE, Scalar::ONE)
    }

    pub fn diag(a: Scalar, b: Scalar, c: Scalar) -> Self {
        JordanElement { xi: [a, b, c], x: Default::default() }
    }

    /// Eᵢ, i = 1..3.
    pub fn e(i: usize) -> Self {
        let mut x = Self::zero();
        x.xi[i - 1] = Scalar::ONE;
        x
    }

    /// Fᵢ(x): only slot xᵢ filled, i = 1..3.
    pub fn f(i: usize, o: Octonion) -> Self {
        let mut x = Self::zero();
        x.x[i - 1] = o;
        x
    }

    pub fn basis(i: usize) -> Self {
        let mut v = vec![Scalar::ZERO; DIM];
        v[i] = Scalar::ONE;
        Self::from_coords(&v)
    }

    pub fn coords(&self) -> Vec<Scalar> {
        let mut v = Vec::with_capacity(DIM);
        v.extend(self.xi.iter().cloned());
        for o in &self.x {
            v.extend(o.0.iter().cloned());
        }
        v
    }

    pub fn from_coords(v: &[Scalar]) -> Self {
        assert_eq!(v.len(), DIM);
        JordanElement {
            xi: std::array::from_fn(|i| v[i].clone()),
            x: std::array::from_fn(|k| Octonion(std::array::from_fn(|c| v[3 + 8 * k + c].clone()))),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().all(Scalar::is_zero) && self.x.iter().all(Octonion::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        self.x.iter().all(Octonion::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        JordanElement { xi: std::array::from_fn(|i| &self.xi[i] * c), x: std::array::from_fn(|k| self.x[k].scale(c)) }
    }

    /// X ∘ Y = ½(XY + YX).
    pub fn mul(&self, y: &JordanElement) -> JordanElement {
        let half = Scalar::frac(1, 2);
        let xi = std::array::from_fn(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            &(&(&self.xi[i] * &y.xi[i]) + &self.x[j].inner(&y.x[j])) + &self.x[k].inner(&y.x[k])
        });
        let x = std::array::from_fn(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let a = y.x[i].scale(&(&self.xi[j] + &self.xi[k]));
            let b = self.x[i].scale(&(&y.xi[j] + &y.xi[k]));
            let c = (&self.x[j].mul(&y.x[k]) + &y.x[j].mul(&self.x[k])).conj();
            (&(&a + &b) + &c).scale(&half)
        });
        JordanElement { xi, x }
    }

    pub fn trace(&self) -> Scalar {
        &(&self.xi[0] + &self.xi[1]) + &self.xi[2]
    }

    /// (X, Y) = tr(X ∘ Y).
    pub fn inner(&self, y: &JordanElement) -> Scalar {
        let mut s = Scalar::ZERO;
        for i in 0..3 {
            s += &(&self.xi[i] * &y.xi[i]);
            s += &self.x[i].inner(&y.x[i]).scale(&crate::linalg::Rational::from_int(2));
        }
        s
    }

    /// X × Y = ½(2X∘Y − tr(X)Y − tr(Y)X + (tr X tr Y − (X,Y))E).
    pub fn cross(&self, y: &JordanElement) -> JordanElement {
        let (tx, ty) = (self.trace(), y.trace());
        let mut z = &(&self.mul(y).scale(&Scalar::int(2)) - &y.scale(&tx)) - &self.scale(&ty);
        let c = &(&tx * &ty) - &self.inner(y);
        for i in 0..3 {
            z.xi[i] += &c;
        }
        z.scale(&Scalar::frac(1, 2))
    }

    /// det X = ⅓(X × X, X).
    pub fn det(&self) -> Scalar {
        &self.cross(self).inner(self) * &Scalar::frac(1, 3)
    }

    /// σ: negates x₂, x₃.
    pub fn sigma(&self) -> JordanElement {
        JordanElement { xi: self.xi.clone(), x: [self.x[0].clone(), -&self.x[1], -&self.x[2]] }
    }

    /// σ′: negates x₁, x₂.
    pub fn sigma_prime(&self) -> JordanElement {
        JordanElement { xi: self.xi.clone(), x: [-&self.x[0], -&self.x[1], self.x[2].clone()] }
    }

    pub fn apply(&self, op: &JordanOperator) -> JordanElement {
        JordanElement::from_coords(&op.mul_vec(&self.coords()))
    }

    /// X̃: Z ↦ X ∘ Z.
    pub fn tilde(&self) -> JordanOperator {
        let tables = tables();
        let mut t = Vec::new();
        for (i, c) in self.coords().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, col, v) in tables.left[i].triplets() {
                t.push((r, col, c * v));
            }
        }
        Matrix::from_triplets(DIM, DIM, t)
    }
}

pub fn jordan_mul(x: &JordanElement, y: &JordanElement) -> JordanElement {
    x.mul(y)
}

pub fn jordan_trace(x: &JordanElement) -> Scalar {
    x.trace()
}

pub fn jordan_inner(x: &JordanElement, y: &JordanElement) -> Scalar {
    x.inner(y)
}

pub fn jordan_cross(x: &JordanElement, y: &JordanElement) -> JordanElement {
    x.cross(y)
}

pub fn jordan_det(x: &JordanElement) -> Scalar {
    x.det()
}

pub fn apply_sigma(x: &JordanElement) -> JordanElement {
    x.sigma()
}

pub fn apply_sigma_prime(x: &JordanElement) -> JordanElement {
    x.sigma_prime()
}

impl Add for &JordanElement {
    type Output = JordanElement;
    fn add(self, o: &JordanElement) -> JordanElement {
        JordanElement { xi: std::array::from_fn(|i| &self.xi[i] + &o.xi[i]), x: std::array::from_fn(|k| &self.x[k] + &o.x[k]) }
    }
}

impl Sub for &JordanElement {
    type Output = JordanElement;
    fn sub(self, o: &JordanElement) -> JordanElement {
        JordanElement { xi: std::array::from_fn(|i| &self.xi[i] - &o.xi[i]), x: std::array::from_fn(|k| &self.x[k] - &o.x[k]) }
    }
}

impl Neg for &JordanElement {
    type Output = JordanElement;
    fn neg(self) -> JordanElement {
        self.scale(&Scalar::int(-1))
    }
}

/// Structure data computed once.
pub struct JordanTables {
    /// `left[i]` = ẽᵢ as a 27×27 matrix.
    pub left: Vec<Matrix>,
    /// `prod[i][j]` = eᵢ ∘ eⱼ as a sparse vector.
    pub prod: Vec<Vec<SparseVec>>,
    /// Gram matrix of (·,·): diag(1,1,1,2,...,2).
    pub gram: Vec<Scalar>,
    pub sigma: Matrix,
    pub sigma_prime: Matrix,
}

pub fn tables() -> &'static JordanTables {
    static T: OnceLock<JordanTables> = OnceLock::new();
    T.get_or_init(|| {
        let basis: Vec<JordanElement> = (0..DIM).map(JordanElement::basis).collect();
        let prod: Vec<Vec<SparseVec>> = basis
            .iter()
            .map(|a| basis.iter().map(|b| crate::linalg::matrix::to_sparse(&a.mul(b).coords())).collect())
            .collect();
        let left = (0..DIM)
            .map(|i| {
                let t = (0..DIM).flat_map(|j| prod[i][j].iter().map(move |(r, v)| (*r, j, v.clone())));
                Matrix::from_triplets(DIM, DIM, t.collect::<Vec<_>>())
            })
            .collect();
        let gram = (0..DIM).map(|i| if i < 3 { Scalar::ONE } else { Scalar::int(2) }).collect();
        let op = |f: fn(&JordanElement) -> JordanElement| {
            Matrix::from_columns(DIM, &basis.iter().map(|b| f(b).coords()).collect::<Vec<_>>())
        };
        JordanTables { left, prod, gram, sigma: op(JordanElement::sigma), sigma_prime: op(JordanElement::sigma_prime) }
    })
}

pub fn sigma_operator() -> &'static Matrix {
    &tables().sigma
}

pub fn sigma_prime_operator() -> &'static Matrix {
    &tables().sigma_prime
}

/// Adjoint with respect to (·,·): φᵗ = G⁻¹ φᵀ G.
pub fn adjoint(phi: &JordanOperator) -> JordanOperator {
    let g = &tables().gram;
    let t: Vec<_> = phi
        .triplets()
        .map(|(i, j, v)| (j, i, &(v * &g[i]) / &g[j]))
        .collect();
    Matrix::from_triplets(DIM, DIM, t)
}

/// X ∨ W = [X̃, W̃] + (X ∘ W − ⅓(X,W)E)~.
pub fn vee(x: &JordanElement, w: &JordanElement) -> JordanOperator {
    let mut t = x.mul(w);
    let c = &x.inner(w) * &Scalar::frac(1, 3);
    for i in 0..3 {
        t.xi[i] -= &c;
    }
    &x.tilde().commutator(&w.tilde()) + &t.tilde()
}
