//! Complex double-precision mirror of [`Matrix`](super::Matrix), used only
//! where a transcendental function (the matrix exponential) is needed.

use nalgebra::DMatrix;
use num_complex::Complex;

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

#[derive(Clone, Debug, PartialEq)]
pub struct FloatMatrix(pub DMatrix<C64>);

impl FloatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FloatMatrix(DMatrix::zeros(rows, cols))
    }

    pub fn identity(n: usize) -> Self {
        FloatMatrix(DMatrix::identity(n, n))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        FloatMatrix(DMatrix::from_fn(rows, cols, f))
    }

    pub fn rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn scale(&self, c: C64) -> Self {
        FloatMatrix(&self.0 * c)
    }

    pub fn mul(&self, other: &FloatMatrix) -> Self {
        FloatMatrix(&self.0 * &other.0)
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        let x = nalgebra::DVector::from_column_slice(v);
        (&self.0 * x).iter().copied().collect()
    }

    pub fn max_abs_diff(&self, other: &FloatMatrix) -> f64 {
        assert_eq!(self.0.shape(), other.0.shape());
        self.0.iter().zip(other.0.iter()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    /// Matrix exponential (Padé with scaling and squaring, via nalgebra).
    /// Accurate to about 1e-13 relative for the norms used in this crate.
    pub fn exp(&self) -> Result<FloatMatrix> {
        if self.rows() != self.cols() {
            return Err(Error::DimensionMismatch(format!("exp of {}x{}", self.rows(), self.cols())));
        }
        if self.0.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidInput("non-finite entry in matrix exponential".into()));
        }
        Ok(FloatMatrix(self.0.clone().exp()))
    }
}

/// `exp(m)` for a float matrix; see [`FloatMatrix::exp`].
pub fn mat_exp_float(m: &FloatMatrix) -> Result<FloatMatrix> {
    m.exp()
}
