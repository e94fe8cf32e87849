use super::lie::LieAlgebraPresentation;
use super::roots::orthogonalize;
use crate::error::{Error, Result};
use crate::linalg::{intersect, CMatrix, Matrix, Vector};
use crate::rational::qf;
use crate::special::{stabilizer_algebra, standard_g2_form, Ambient, G2Variant};

/// `H = diag(i, −i)`, `X`, `Y` with torus `H`.
pub fn su2() -> LieAlgebraPresentation {
    let h = CMatrix::from_pairs(&[vec![(0, 1), (0, 0)], vec![(0, 0), (0, -1)]]);
    let x = CMatrix::from_pairs(&[vec![(0, 0), (1, 0)], vec![(-1, 0), (0, 0)]]);
    let y = CMatrix::from_pairs(&[vec![(0, 0), (0, 1)], vec![(0, 1), (0, 0)]]);
    LieAlgebraPresentation::from_matrices(vec!["H".into(), "X".into(), "Y".into()], vec![h, x, y])
        .and_then(|l| l.with_torus(vec![crate::linalg::unit(3, 0)]))
        .expect("su(2) basis")
}

/// `E₁ … E₈` with torus `E₇, E₈`.
pub fn su3() -> LieAlgebraPresentation {
    let z = (0, 0);
    let mut mats = Vec::new();
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let mut skew = vec![vec![z; 3]; 3];
        skew[a][b] = (1, 0);
        skew[b][a] = (-1, 0);
        let mut herm = vec![vec![z; 3]; 3];
        herm[a][b] = (0, 1);
        herm[b][a] = (0, 1);
        mats.push(CMatrix::from_pairs(&skew));
        mats.push(CMatrix::from_pairs(&herm));
    }
    mats.push(CMatrix::from_pairs(&[vec![(0, 1), z, z], vec![z, (0, 1), z], vec![z, z, (0, -2)]]));
    mats.push(CMatrix::from_pairs(&[vec![(0, 1), z, z], vec![z, (0, -1), z], vec![z, z, z]]));
    let names = (1..=8).map(|i| format!("E{i}")).collect();
    let unit = |i| crate::linalg::unit(8, i);
    LieAlgebraPresentation::from_matrices(names, mats)
        .and_then(|l| l.with_torus(vec![unit(6), unit(7)]))
        .expect("su(3) basis")
}

/// Perfect matchings of the given indices into pairs.
fn matchings(idx: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if idx.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 1..idx.len() {
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
        for mut m in matchings(&rest) {
            m.insert(0, (idx[0], idx[k]));
            out.push(m);
        }
    }
    out
}

fn plane(n: usize, a: usize, b: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m[(a, b)] = crate::rational::q(1);
    m[(b, a)] = crate::rational::q(-1);
    m
}

/// Two commuting elements of `basis` inside a sum of coordinate-plane rotations.
pub fn find_torus_in_so(basis: &[Matrix], rank: usize) -> Option<Vec<Matrix>> {
    let n = basis[0].rows();
    let flat: Vec<Vector> = basis.iter().map(|m| m.flatten()).collect();
    let half = Matrix::identity(n * n).scale(&qf(1, 2));
    for fixed in (0..n).rev() {
        let rest: Vec<usize> = (0..n).filter(|&i| i != fixed || n % 2 == 0).collect();
        if rest.len() % 2 == 1 {
            continue;
        }
        for m in matchings(&rest) {
            let planes: Vec<Vector> = m.iter().map(|&(a, b)| plane(n, a, b).flatten()).collect();
            let common = intersect(&planes, &flat, n * n);
            if common.len() == rank {
                let ortho = orthogonalize(&common, &half);
                return Some(ortho.iter().map(|v| Matrix::from_rows(v.chunks(n).map(|r| r.to_vec()).collect())).collect());
            }
        }
        if n % 2 == 0 {
            break;
        }
    }
    None
}

/// 𝔤₂ as the stabilizer of φ in 𝔰𝔬(7), with a torus found by search.
pub fn g2() -> Result<LieAlgebraPresentation> {
    let g = standard_g2_form(G2Variant::Frame);
    let basis = stabilizer_algebra(g.phi(), Ambient::So);
    let torus = find_torus_in_so(&basis, 2).ok_or_else(|| Error::Unsupported("no coordinate torus found".into()))?;
    let flat: Vec<Vector> = basis.iter().map(|m| m.flatten()).collect();
    let b = Matrix::from_columns(&flat, 49);
    let coords: Vec<Vector> = torus.iter().map(|t| b.solve(&t.flatten()).expect("torus lies in 𝔤₂")).collect();
    let names = (1..=basis.len()).map(|i| format!("G{i}")).collect();
    LieAlgebraPresentation::from_real_matrices(names, basis)?.with_torus(coords)
}

pub fn by_name(name: &str) -> Result<LieAlgebraPresentation> {
    match name {
        "su2" => Ok(su2()),
        "su3" => Ok(su3()),
        "g2" => g2(),
        _ => Err(Error::InvalidInput(format!("unknown Lie algebra `{name}` (expected su2, su3, g2)"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::rep::roots_from_torus;

    #[test]
    fn su2_structure_and_roots() {
        let l = su2();
        // [H,X] = 2Y
        assert_eq!(l.bracket(&crate::linalg::unit(3, 0), &crate::linalg::unit(3, 1)), vec![q(0), q(0), q(2)]);
        assert_eq!(l.killing_form()[(0, 0)], q(-8));
        let rs = roots_from_torus(&l).unwrap();
        assert_eq!(rs.roots, vec![vec![q(-2)], vec![q(2)]]);
        assert_eq!(rs.fundamental_weights, vec![vec![q(1)]]);
        assert_eq!(rs.weyl_group_order().unwrap(), 2);
    }

    #[test]
    fn su3_roots() {
        let l = su3();
        let tf = l.trace_form().unwrap();
        assert_eq!((tf[(6, 6)].clone(), tf[(7, 7)].clone(), tf[(6, 7)].clone()), (q(3), q(1), q(0)));
        let rs = roots_from_torus(&l).unwrap();
        let shown: Vec<String> = rs.roots.iter().map(|r| rs.display_string(r).unwrap()).collect();
        assert_eq!(shown.len(), 6);
        for s in ["(0, 2)", "(√3, -1)", "(√3, 1)", "(-√3, 1)"] {
            assert!(shown.contains(&s.to_string()), "{s} missing from {shown:?}");
        }
        let fw: Vec<String> = rs.fundamental_weights.iter().map(|w| rs.display_string(w).unwrap()).collect();
        assert_eq!(fw, vec!["(√3/3, 1)", "(2√3/3, 0)"]);
        assert_eq!(rs.weyl_group_order().unwrap(), 6);
        let c = rs.cartan_matrix();
        assert_eq!((c[(0, 1)].clone(), c[(1, 0)].clone()), (q(-1), q(-1)));
    }

    #[test]
    fn g2_roots() {
        let l = g2().unwrap();
        assert_eq!(l.dim(), 14);
        let rs = roots_from_torus(&l).unwrap();
        assert_eq!(rs.roots.len(), 12);
        let lens = rs.root_lengths();
        assert_eq!(lens.len(), 2);
        assert_eq!(&lens[1] / &lens[0], q(3));
        assert!(rs.is_integral());
        assert_eq!(rs.weyl_group_order().unwrap(), 12);
    }
}
