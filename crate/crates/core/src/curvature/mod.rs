//! Algebraic curvature tensors and their orthogonal decompositions.

mod invariants;
mod singer_thorpe;
mod torsion;

pub use invariants::{quadratic_invariants, InvariantSpace, QuadraticInvariant};
pub use singer_thorpe::{commutes_with_star, lambda2_matrix, singer_thorpe_split, star_matrix, tensor_from_lambda2_matrix, SingerThorpe};
pub use torsion::{torsion_type_split, TorsionSplit};

use crate::error::{Error, Result};
use crate::exterior::{is_s2_lambda2, kulkarni_nomizu, multi_indices, Multivector, Space, SymTensor2, Tensor};
use crate::linalg::Matrix;
use crate::rational::{q, qf, Q};
use num::Zero;

/// Element of S²Λ²V, optionally known to satisfy the first Bianchi identity.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicCurvatureTensor {
    t: Tensor,
    bianchi_clean: bool,
}

impl AlgebraicCurvatureTensor {
    /// Checks the pair symmetries only.
    pub fn new(t: Tensor) -> Result<Self> {
        if !is_s2_lambda2(&t) {
            return Err(Error::InvalidInput("tensor lacks the S²Λ² symmetries".into()));
        }
        let clean = bianchi_map(&t).is_zero();
        Ok(AlgebraicCurvatureTensor { t, bianchi_clean: clean })
    }

    /// Checks the pair symmetries and the first Bianchi identity.
    pub fn new_bianchi(t: Tensor) -> Result<Self> {
        let r = Self::new(t)?;
        if !r.bianchi_clean {
            return Err(Error::InvalidInput("first Bianchi identity fails".into()));
        }
        Ok(r)
    }

    pub fn zero(space: &Space) -> Self {
        AlgebraicCurvatureTensor { t: Tensor::zeros(space, 4), bianchi_clean: true }
    }

    /// `(k/2) g⊘g`, constant sectional curvature k.
    pub fn constant(space: &Space, k: Q) -> Self {
        let g = SymTensor2::metric(space);
        let t = kulkarni_nomizu(&g, &g).expect("same space").scale(&(k * qf(1, 2)));
        AlgebraicCurvatureTensor { t, bianchi_clean: true }
    }

    pub fn tensor(&self) -> &Tensor {
        &self.t
    }
    pub fn space(&self) -> &Space {
        self.t.space()
    }
    pub fn n(&self) -> usize {
        self.t.n()
    }
    pub fn is_bianchi_clean(&self) -> bool {
        self.bianchi_clean
    }
}

/// `b(T)(x,y,z,w) = ⅓ (T(x,y,z,w) + T(y,z,x,w) + T(z,x,y,w))`.
pub fn bianchi_map(t: &Tensor) -> Tensor {
    let third = qf(1, 3);
    Tensor::from_fn(t.space(), 4, |i| {
        let (x, y, z, w) = (i[0], i[1], i[2], i[3]);
        (t.get(&[x, y, z, w]) + t.get(&[y, z, x, w]) + t.get(&[z, x, y, w])) * &third
    })
}

/// Splits an S²Λ² tensor into its curvature part (ker b) and its Λ⁴ part (image of b).
pub fn bianchi_project(t: &Tensor) -> Result<(AlgebraicCurvatureTensor, Multivector)> {
    if !is_s2_lambda2(t) {
        return Err(Error::InvalidInput("tensor lacks the S²Λ² symmetries".into()));
    }
    let b = bianchi_map(t);
    let curv = AlgebraicCurvatureTensor { t: t.sub(&b), bianchi_clean: true };
    let lam = if t.n() >= 4 { b.to_multivector() } else { Multivector::zero(t.space(), 0) };
    Ok((curv, lam))
}

/// `Ric(y,t) = g^{ik} R(e_i, y, e_k, t)`.
pub fn ricci(r: &AlgebraicCurvatureTensor) -> SymTensor2 {
    let n = r.n();
    let t = r.tensor().raise(0);
    let mut m = Matrix::zeros(n, n);
    for y in 0..n {
        for w in 0..n {
            let mut s = Q::zero();
            for i in 0..n {
                s += t.get(&[i, y, i, w]);
            }
            m[(y, w)] = s;
        }
    }
    SymTensor2::new(r.space(), m).expect("Ricci of an S²Λ² tensor is symmetric")
}

pub fn scalar_curvature(r: &AlgebraicCurvatureTensor) -> Q {
    ricci(r).trace()
}

/// Trace pairing on S²Λ² viewed as symmetric endomorphisms of Λ².
pub fn s2l2_inner(a: &Tensor, b: &Tensor) -> Q {
    a.metric_dot(b) * qf(1, 4)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureDecomposition {
    pub scalar_part: Tensor,
    pub z_part: Tensor,
    pub weyl_part: Tensor,
    pub scalar: Q,
    pub traceless_ricci: SymTensor2,
}

impl CurvatureDecomposition {
    pub fn reassemble(&self) -> Tensor {
        self.scalar_part.add(&self.z_part).add(&self.weyl_part)
    }
    pub fn parts(&self) -> [&Tensor; 3] {
        [&self.scalar_part, &self.z_part, &self.weyl_part]
    }
}

/// `R = s/(2n(n−1)) g⊘g + 1/(n−2) (Ric − (s/n) g)⊘g + W`.
pub fn decompose(r: &AlgebraicCurvatureTensor) -> Result<CurvatureDecomposition> {
    let n = r.n();
    if n < 2 {
        return Err(Error::Dimension("curvature decomposition needs n ≥ 2".into()));
    }
    if !r.is_bianchi_clean() {
        return Err(Error::InvalidInput("first Bianchi identity fails".into()));
    }
    let g = SymTensor2::metric(r.space());
    let ric = ricci(r);
    let s = ric.trace();
    let nq = q(n as i64);
    let traceless = ric.sub(&g.scale(&(&s / &nq)));
    let gg = kulkarni_nomizu(&g, &g)?;
    let scalar_part = gg.scale(&(&s / (q(2) * &nq * (&nq - q(1)))));
    let z_part = if n == 2 {
        Tensor::zeros(r.space(), 4)
    } else {
        kulkarni_nomizu(&traceless, &g)?.scale(&(q(1) / (&nq - q(2))))
    };
    let weyl_part = if n <= 3 {
        Tensor::zeros(r.space(), 4)
    } else {
        r.tensor().sub(&scalar_part).sub(&z_part)
    };
    Ok(CurvatureDecomposition { scalar_part, z_part, weyl_part, scalar: s, traceless_ricci: traceless })
}

/// Rebuilds a 3-dimensional curvature tensor from its Ricci tensor.
pub fn curvature_from_ricci_3d(ric: &SymTensor2) -> Result<AlgebraicCurvatureTensor> {
    if ric.space().n() != 3 {
        return Err(Error::Dimension("Ricci determines R only for n = 3".into()));
    }
    let g = SymTensor2::metric(ric.space());
    let s = ric.trace();
    let traceless = ric.sub(&g.scale(&(&s / q(3))));
    let t = kulkarni_nomizu(&g, &g)?.scale(&(&s / q(12))).add(&kulkarni_nomizu(&traceless, &g)?);
    AlgebraicCurvatureTensor::new_bianchi(t)
}

/// `R(X,Y,X,Y) / (|X|²|Y|² − g(X,Y)²)`.
pub fn sectional_curvature(r: &AlgebraicCurvatureTensor, x: &[Q], y: &[Q]) -> Result<Q> {
    let sp = r.space();
    if x.len() != sp.n() || y.len() != sp.n() {
        return Err(Error::Dimension(format!("vectors must have length {}", sp.n())));
    }
    let area = sp.inner(x, x) * sp.inner(y, y) - num::pow(sp.inner(x, y), 2);
    if area.is_zero() {
        return Err(Error::DegeneratePlane);
    }
    let v = r.tensor().eval(&[x.to_vec(), y.to_vec(), x.to_vec(), y.to_vec()]);
    Ok(v / area)
}

/// `Ric = λ g` for some λ.
pub fn is_einstein(r: &AlgebraicCurvatureTensor) -> bool {
    let ric = ricci(r);
    let g = SymTensor2::metric(r.space());
    let lambda = ric.trace() / q(r.n() as i64);
    ric.sub(&g.scale(&lambda)).is_zero()
}

/// Dense tensor from sparse 1-based entries, filling the S²Λ² orbit of each.
pub fn tensor_from_entries(space: &Space, entries: &[([usize; 4], Q)]) -> Result<Tensor> {
    let n = space.n();
    let mut t = Tensor::zeros(space, 4);
    let mut seen = vec![false; n.pow(4)];
    for (idx, c) in entries {
        if idx.iter().any(|&i| i == 0 || i > n) {
            return Err(Error::InvalidInput(format!("index out of range in {idx:?}")));
        }
        let [a, b, c0, d] = idx.map(|i| i - 1);
        let orbit = [
            ([a, b, c0, d], 1),
            ([b, a, c0, d], -1),
            ([a, b, d, c0], -1),
            ([b, a, d, c0], 1),
            ([c0, d, a, b], 1),
            ([d, c0, a, b], -1),
            ([c0, d, b, a], -1),
            ([d, c0, b, a], 1),
        ];
        for (i, s) in orbit {
            let off = i.iter().fold(0, |acc, &x| acc * n + x);
            let v = c * q(s);
            if seen[off] && *t.get(&i) != v {
                return Err(Error::InvalidInput(format!("entry {idx:?} conflicts with an earlier entry")));
            }
            seen[off] = true;
            t.set(&i, v);
        }
    }
    if !is_s2_lambda2(&t) {
        return Err(Error::InvalidInput("entries violate antisymmetry (e.g. a repeated index pair with nonzero value)".into()));
    }
    Ok(t)
}

/// Sparse 1-based entries with i<j, k<l, (i,j) ≤ (k,l).
pub fn tensor_entries(t: &Tensor) -> Vec<([usize; 4], Q)> {
    multi_indices(t.n(), 4)
        .filter(|i| i[0] < i[1] && i[2] < i[3] && (i[0], i[1]) <= (i[2], i[3]))
        .filter_map(|i| {
            let c = t.get(&i);
            (!c.is_zero()).then(|| ([i[0] + 1, i[1] + 1, i[2] + 1, i[3] + 1], c.clone()))
        })
        .collect()
}

/// Weyl norm² in the trace pairing.
pub fn weyl_norm2(d: &CurvatureDecomposition) -> Q {
    s2l2_inner(&d.weyl_part, &d.weyl_part)
}
