//! The Freudenthal space 𝔓^C = 𝔍^C ⊕ 𝔍^C ⊕ C ⊕ C, its skew pairing and the
//! cross operation 𝔓^C × 𝔓^C → 𝔢₇^C.
//!
//! Coordinates (56): `[X(27), Y(27), ξ, η]`.

use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::e7::E7Element;
use crate::jordan::{self, JordanElement};
use crate::linalg::{Matrix, Scalar};

pub const DIM: usize = 56;

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct PElement {
    pub x: JordanElement,
    pub y: JordanElement,
    pub xi: Scalar,
    pub eta: Scalar,
}

impl PElement {
    pub fn new(x: JordanElement, y: JordanElement, xi: Scalar, eta: Scalar) -> Self {
        PElement { x, y, xi, eta }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut v = vec![Scalar::ZERO; DIM];
        v[i] = Scalar::ONE;
        Self::from_coords(&v)
    }

    pub fn coords(&self) -> Vec<Scalar> {
        let mut v = self.x.coords();
        v.extend(self.y.coords());
        v.push(self.xi.clone());
        v.push(self.eta.clone());
        v
    }

    pub fn from_coords(v: &[Scalar]) -> Self {
        assert_eq!(v.len(), DIM);
        PElement {
            x: JordanElement::from_coords(&v[..27]),
            y: JordanElement::from_coords(&v[27..54]),
            xi: v[54].clone(),
            eta: v[55].clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.xi.is_zero() && self.eta.is_zero()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        PElement { x: self.x.scale(c), y: self.y.scale(c), xi: &self.xi * c, eta: &self.eta * c }
    }

    pub fn apply(&self, op: &Matrix) -> PElement {
        PElement::from_coords(&op.mul_vec(&self.coords()))
    }

    /// λ(X, Y, ξ, η) = (Y, −X, η, −ξ).
    pub fn lambda(&self) -> PElement {
        PElement { x: self.y.clone(), y: -&self.x, xi: self.eta.clone(), eta: -&self.xi }
    }

    pub fn sigma(&self) -> PElement {
        PElement { x: self.x.sigma(), y: self.y.sigma(), xi: self.xi.clone(), eta: self.eta.clone() }
    }

    pub fn sigma_prime(&self) -> PElement {
        PElement { x: self.x.sigma_prime(), y: self.y.sigma_prime(), xi: self.xi.clone(), eta: self.eta.clone() }
    }

    /// Entrywise complex conjugation of the coordinates.
    pub fn tau(&self) -> PElement {
        PElement::from_coords(&self.coords().iter().map(Scalar::conj).collect::<Vec<_>>())
    }
}

impl Add for &PElement {
    type Output = PElement;
    fn add(self, o: &PElement) -> PElement {
        PElement { x: &self.x + &o.x, y: &self.y + &o.y, xi: &self.xi + &o.xi, eta: &self.eta + &o.eta }
    }
}

impl Sub for &PElement {
    type Output = PElement;
    fn sub(self, o: &PElement) -> PElement {
        PElement { x: &self.x - &o.x, y: &self.y - &o.y, xi: &self.xi - &o.xi, eta: &self.eta - &o.eta }
    }
}

impl Neg for &PElement {
    type Output = PElement;
    fn neg(self) -> PElement {
        self.scale(&Scalar::int(-1))
    }
}

/// {P, Q} = (X, W) − (Y, Z) + ξω − ηζ.
pub fn skew_pairing(p: &PElement, q: &PElement) -> Scalar {
    &(&(&p.x.inner(&q.y) - &p.y.inner(&q.x)) + &(&p.xi * &q.eta)) - &(&p.eta * &q.xi)
}

/// P × Q = Φ(φ, A, B, ν) with
/// φ = −½(X∨W + Z∨Y), A = −¼(2Y×W − ξZ − ζX), B = ¼(2X×Z − ηW − ωY),
/// ν = ⅛((X,W) + (Z,Y) − 3(ξω + ζη)).
pub fn freudenthal_cross(p: &PElement, q: &PElement) -> E7Element {
    let (x, y, xi, eta) = (&p.x, &p.y, &p.xi, &p.eta);
    let (z, w, zeta, omega) = (&q.x, &q.y, &q.xi, &q.eta);
    let two = Scalar::int(2);
    let phi = (&jordan::vee(x, w) + &jordan::vee(z, y)).scale(&Scalar::frac(-1, 2));
    let a = (&(&y.cross(w).scale(&two) - &z.scale(xi)) - &x.scale(zeta)).scale(&Scalar::frac(-1, 4));
    let b = (&(&x.cross(z).scale(&two) - &w.scale(eta)) - &y.scale(omega)).scale(&Scalar::frac(1, 4));
    let nu = &(&(&x.inner(w) + &z.inner(y)) - &(&Scalar::int(3) * &(&(xi * omega) + &(zeta * eta)))) * &Scalar::frac(1, 8);
    E7Element::from_parts_unchecked(phi, a, b, nu)
}

/// λ as a 56×56 operator.
pub fn lambda_operator() -> Matrix {
    Matrix::from_columns(DIM, &(0..DIM).map(|i| PElement::basis(i).lambda().coords()).collect::<Vec<_>>())
}

pub fn sigma_operator() -> Matrix {
    Matrix::from_columns(DIM, &(0..DIM).map(|i| PElement::basis(i).sigma().coords()).collect::<Vec<_>>())
}

pub fn sigma_prime_operator() -> Matrix {
    Matrix::from_columns(DIM, &(0..DIM).map(|i| PElement::basis(i).sigma_prime().coords()).collect::<Vec<_>>())
}
