use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{rational_sqrt, Q};
use num::One;
use std::sync::Arc;

/// Shared handle to an inner-product space.
pub type Space = Arc<InnerSpace>;

/// ℝⁿ with a positive-definite rational metric on vectors and an orientation.
#[derive(Debug, PartialEq, Eq)]
pub struct InnerSpace {
    n: usize,
    metric: Matrix,
    inverse: Matrix,
    orientation: i8,
    standard: bool,
}

impl InnerSpace {
    pub fn standard(n: usize) -> Space {
        Self::standard_oriented(n, 1)
    }

    pub fn standard_oriented(n: usize, orientation: i8) -> Space {
        assert!(n >= 1);
        assert!(orientation == 1 || orientation == -1);
        Arc::new(InnerSpace {
            n,
            metric: Matrix::identity(n),
            inverse: Matrix::identity(n),
            orientation,
            standard: true,
        })
    }

    pub fn new(metric: Matrix, orientation: i8) -> Result<Space> {
        if !metric.is_square() || metric.rows() == 0 {
            return Err(Error::Dimension("metric must be a non-empty square matrix".into()));
        }
        if orientation != 1 && orientation != -1 {
            return Err(Error::InvalidInput(format!("orientation must be ±1, got {orientation}")));
        }
        if !metric.is_symmetric() {
            return Err(Error::InvalidInput("metric is not symmetric".into()));
        }
        if !metric.is_positive_definite() {
            return Err(Error::InvalidInput("metric is not positive-definite".into()));
        }
        let n = metric.rows();
        let standard = metric == Matrix::identity(n);
        let inverse = metric.inverse().expect("positive-definite is invertible");
        Ok(Arc::new(InnerSpace { n, metric, inverse, orientation, standard }))
    }

    pub fn n(&self) -> usize {
        self.n
    }
    /// Gram matrix on vectors.
    pub fn metric(&self) -> &Matrix {
        &self.metric
    }
    /// Gram matrix on covectors.
    pub fn inverse_metric(&self) -> &Matrix {
        &self.inverse
    }
    pub fn orientation(&self) -> i8 {
        self.orientation
    }
    pub fn is_standard(&self) -> bool {
        self.standard
    }

    /// √det g, when rational.
    pub fn sqrt_det(&self) -> Result<Q> {
        if self.standard {
            return Ok(Q::one());
        }
        let d = self.metric.det();
        rational_sqrt(&d).ok_or_else(|| {
            Error::UnsupportedMetric(format!("det g = {d} is not the square of a rational"))
        })
    }

    pub fn same(a: &Space, b: &Space) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    pub fn inner(&self, x: &[Q], y: &[Q]) -> Q {
        if self.standard {
            crate::linalg::dot(x, y)
        } else {
            self.metric.bilinear(x, y)
        }
    }
}
