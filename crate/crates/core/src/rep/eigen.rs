use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::rational::Q;
use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

/// Least common multiple of all entry denominators.
pub(crate) fn denominator_lcm(m: &Matrix) -> BigInt {
    let mut l = BigInt::one();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            l = l.lcm(m[(i, j)].denom());
        }
    }
    l
}

/// Bound on |eigenvalue| via the max absolute row sum.
fn row_sum_bound(m: &Matrix) -> Q {
    (0..m.rows())
        .map(|i| (0..m.cols()).fold(Q::zero(), |s, j| s + m[(i, j)].abs()))
        .max()
        .unwrap_or_else(Q::zero)
}

/// Rational eigenvalues with eigenspaces; errors unless they span the whole space.
pub(crate) fn rational_eigenspaces(m: &Matrix) -> Result<Vec<(Q, Vec<Vector>)>> {
    let n = m.rows();
    let d = denominator_lcm(m);
    let mi = m.scale(&Q::from_integer(d.clone()));
    // rational eigenvalues of an integer matrix are integers
    let bound = row_sum_bound(&mi).ceil().to_integer().to_i64().ok_or_else(|| {
        Error::NotDiagonalizable("entries too large".into())
    })?;
    let mut out = Vec::new();
    let mut found = 0;
    for lam in -bound..=bound {
        let lq = Q::from_integer(lam.into());
        let ker = mi.sub(&Matrix::identity(n).scale(&lq)).nullspace();
        if !ker.is_empty() {
            found += ker.len();
            out.push((lq / Q::from_integer(d.clone()), ker));
            if found == n {
                break;
            }
        }
    }
    if found != n {
        return Err(Error::NotDiagonalizable(format!("rational eigenvectors span {found} of {n} dimensions")));
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}
