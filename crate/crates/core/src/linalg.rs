//! Dense exact linear algebra over the rationals.

use crate::rational::{q, CQ, Q};
use num::{One, Signed, Zero};
use std::ops::{Index, IndexMut};

pub type Vector = Vec<Q>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vector], len: usize) -> Self {
        let mut m = Matrix::zeros(len, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..len {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut m = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    if !o[(k, j)].is_zero() {
                        m[(i, j)] += a * &o[(k, j)];
                    }
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vector {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Q::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        s += &self[(i, j)] * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn commutator(&self, o: &Matrix) -> Matrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self[(i, j)].is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        m[(i * o.rows + k, j * o.cols + l)] = &self[(i, j)] * &o[(k, l)];
                    }
                }
            }
        }
        m
    }

    /// Entries in row-major order.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let v = &m[(r, j)] * &f;
                        m[(i, j)] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of {x : self * x = 0}.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of self * x = b, if one exists.
    pub fn solve(&self, b: &[Q]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Q::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> Q {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Q::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &piv;
                for j in c..n {
                    let v = &m[(c, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
        }
        det
    }

    /// Sylvester's criterion on leading principal minors.
    pub fn is_positive_definite(&self) -> bool {
        if !self.is_symmetric() {
            return false;
        }
        (1..=self.rows).all(|k| {
            let mut sub = Matrix::zeros(k, k);
            for i in 0..k {
                for j in 0..k {
                    sub[(i, j)] = self[(i, j)].clone();
                }
            }
            sub.det().is_positive()
        })
    }

    /// Bilinear form x^T M y.
    pub fn bilinear(&self, x: &[Q], y: &[Q]) -> Q {
        dot(x, &self.mul_vec(y))
    }
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
}

pub fn vec_add(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Q], s: &Q) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn is_zero_vec(a: &[Q]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Dimension of the span of the given vectors.
pub fn span_rank(vs: &[Vector]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    Matrix::from_rows(vs.to_vec()).rank()
}

/// Row-reduced basis of the span.
pub fn span_basis(vs: &[Vector]) -> Vec<Vector> {
    if vs.is_empty() {
        return Vec::new();
    }
    let (r, p) = Matrix::from_rows(vs.to_vec()).rref();
    (0..p.len()).map(|i| r.row(i)).collect()
}

/// Basis of the intersection of two subspaces given by spanning sets.
pub fn intersect(a: &[Vector], b: &[Vector], len: usize) -> Vec<Vector> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // x = A u = B w  <=>  [A | -B] (u, w) = 0
    let mut cols: Vec<Vector> = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(|x| -x.clone()).collect()));
    let m = Matrix::from_columns(&cols, len);
    let ns = m.nullspace();
    let out: Vec<Vector> = ns
        .iter()
        .map(|c| {
            let mut v = vec![Q::zero(); len];
            for (k, ak) in a.iter().enumerate() {
                if !c[k].is_zero() {
                    v = vec_add(&v, &vec_scale(ak, &c[k]));
                }
            }
            v
        })
        .collect();
    span_basis(&out)
}

/// Orthogonal complement of span(vs) in Q^len under the Gram matrix `gram`.
pub fn orthogonal_complement(vs: &[Vector], gram: &Matrix) -> Vec<Vector> {
    let len = gram.rows();
    if vs.is_empty() {
        return (0..len).map(|i| unit(len, i)).collect();
    }
    let rows: Vec<Vector> = vs.iter().map(|v| gram.transpose().mul_vec(v)).collect();
    Matrix::from_rows(rows).nullspace()
}

pub fn unit(len: usize, i: usize) -> Vector {
    let mut v = vec![Q::zero(); len];
    v[i] = Q::one();
    v
}

/// Complex matrix stored as a pair of rational matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMatrix {
    pub re: Matrix,
    pub im: Matrix,
}

impl CMatrix {
    pub fn new(re: Matrix, im: Matrix) -> Self {
        assert_eq!((re.rows(), re.cols()), (im.rows(), im.cols()));
        CMatrix { re, im }
    }

    pub fn real(re: Matrix) -> Self {
        let im = Matrix::zeros(re.rows(), re.cols());
        CMatrix { re, im }
    }

    pub fn zeros(n: usize) -> Self {
        CMatrix::real(Matrix::zeros(n, n))
    }

    /// Builds from integer (re, im) entry pairs.
    pub fn from_pairs(rows: &[Vec<(i64, i64)>]) -> Self {
        let re = rows.iter().map(|r| r.iter().map(|&(a, _)| a).collect()).collect::<Vec<Vec<i64>>>();
        let im = rows.iter().map(|r| r.iter().map(|&(_, b)| b).collect()).collect::<Vec<Vec<i64>>>();
        CMatrix::new(Matrix::from_i64(&re), Matrix::from_i64(&im))
    }

    pub fn size(&self) -> usize {
        self.re.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> CQ {
        CQ::new(self.re[(i, j)].clone(), self.im[(i, j)].clone())
    }

    pub fn mul(&self, o: &CMatrix) -> CMatrix {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        CMatrix { re, im }
    }

    pub fn add(&self, o: &CMatrix) -> CMatrix {
        CMatrix { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &CMatrix) -> CMatrix {
        CMatrix { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn scale(&self, s: &CQ) -> CMatrix {
        let re = self.re.scale(&s.re).sub(&self.im.scale(&s.im));
        let im = self.re.scale(&s.im).add(&self.im.scale(&s.re));
        CMatrix { re, im }
    }

    pub fn commutator(&self, o: &CMatrix) -> CMatrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> CQ {
        CQ::new(self.re.trace(), self.im.trace())
    }

    pub fn kron(&self, o: &CMatrix) -> CMatrix {
        let re = self.re.kron(&o.re).sub(&self.im.kron(&o.im));
        let im = self.re.kron(&o.im).add(&self.im.kron(&o.re));
        CMatrix { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Real coordinates: real parts then imaginary parts, row-major.
    pub fn flatten(&self) -> Vector {
        let mut v = self.re.flatten();
        v.extend(self.im.flatten());
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn det_and_inverse() {
        let m = Matrix::from_i64(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        assert_eq!(m.det(), q(18));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        let s = Matrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert!(s.inverse().is_none());
        assert_eq!(s.det(), q(0));
    }

    #[test]
    fn nullspace_and_solve() {
        let m = Matrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(is_zero_vec(&m.mul_vec(v)));
        }
        let x = m.solve(&[q(1), q(2)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![q(1), q(2)]);
        assert!(m.solve(&[q(1), q(3)]).is_none());
    }

    #[test]
    fn definiteness() {
        let g = Matrix::from_rows(vec![vec![q(2), qf(1, 2)], vec![qf(1, 2), q(1)]]);
        assert!(g.is_positive_definite());
        assert!(!Matrix::from_i64(&[vec![1, 2], vec![2, 1]]).is_positive_definite());
    }

    #[test]
    fn intersection() {
        let a = vec![unit(3, 0), unit(3, 1)];
        let b = vec![unit(3, 1), unit(3, 2)];
        assert_eq!(intersect(&a, &b, 3), vec![unit(3, 1)]);
    }
}
