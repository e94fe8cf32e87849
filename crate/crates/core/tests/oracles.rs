//! Independent recomputations of derived values, checked against frozen expectations.

use holonomy::curvature::{bianchi_map, decompose, ricci, torsion_type_split, AlgebraicCurvatureTensor};
use holonomy::exterior::{basis_tuples, kulkarni_nomizu, permutation_sign, InnerSpace, Multivector, Space, SymTensor2, Tensor};
use holonomy::linalg::{Matrix, Vector};
use holonomy::rational::{q, qf, Q};
use holonomy::rep;
use holonomy::special::{
    is_closed_under_commutator, literal_4form, matrix_to_two_form, metric_from_g2_form, spin7_from_g2, standard_g2_form,
    G2Metric, G2Variant, COORDINATE_STAR_TERMS,
};
use std::collections::BTreeSet;

/// `(⋆α)_{Iᶜ} = sign(I, Iᶜ) α_I` on standard oriented ℝⁿ, read off from `e^I ∧ ⋆α = α_I vol`.
fn star_by_complement(a: &Multivector) -> Multivector {
    let n = a.n();
    let terms = a.terms().iter().map(|(idx, c)| {
        let comp: Vec<usize> = (1..=n).filter(|i| !idx.contains(i)).collect();
        let mut seq = idx.clone();
        seq.extend(&comp);
        (comp, c * q(permutation_sign(&seq)))
    });
    Multivector::from_terms(a.space(), n - a.degree(), terms).unwrap()
}

#[test]
fn star_phi_frozen() {
    let g = standard_g2_form(G2Variant::Frame);
    let flat = InnerSpace::standard(7);
    let frozen = Multivector::from_int_terms(
        &flat,
        4,
        &[(&[4, 5, 6, 7], 1), (&[2, 3, 6, 7], 1), (&[2, 3, 4, 5], 1), (&[1, 3, 5, 7], 1), (&[1, 3, 4, 6], -1), (&[1, 2, 4, 7], -1), (&[1, 2, 5, 6], -1)],
    );
    assert_eq!(star_by_complement(g.phi()), frozen);
    assert_eq!(*g.star_phi(), frozen);
    // defining identity over all basis pairs
    let vol = Multivector::volume(&flat).unwrap();
    for idx in basis_tuples(7, 3) {
        let b = Multivector::basis(&flat, &idx);
        assert_eq!(g.star_phi().wedge(&b).unwrap(), vol.scale(&g.phi().form_inner(&b).unwrap()));
    }
    // the other variant's star matches its literal
    let g6 = standard_g2_form(G2Variant::Coordinate);
    assert_eq!(star_by_complement(g6.phi()), literal_4form(&flat, &COORDINATE_STAR_TERMS));
}

fn s2l2_basis(space: &Space) -> Vec<Tensor> {
    let pairs = basis_tuples(space.n(), 2);
    let mut out = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        for r in &pairs[i..] {
            let mut t = Tensor::zeros(space, 4);
            let (a, b, c, d) = (p[0] - 1, p[1] - 1, r[0] - 1, r[1] - 1);
            for (x, s) in [([a, b, c, d], 1), ([b, a, c, d], -1), ([a, b, d, c], -1), ([b, a, d, c], 1)] {
                t.set(&x, q(s));
                let y = [x[2], x[3], x[0], x[1]];
                t.set(&y, q(s));
            }
            out.push(t);
        }
    }
    out
}

#[test]
fn bianchi_kernel_dimension() {
    let s = InnerSpace::standard(4);
    let basis = s2l2_basis(&s);
    assert_eq!(basis.len(), 21);
    let rank = Matrix::from_rows(basis.iter().map(|t| bianchi_map(t).data().to_vec()).collect()).rank();
    assert_eq!(21 - rank, 20);
}

/// `Ric_ij = Σ_k R_{kikj}` by direct summation.
fn brute_ricci(t: &Tensor) -> Matrix {
    let n = t.n();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = (0..n).map(|k| t.get(&[k, i, k, j]).clone()).sum();
        }
    }
    m
}

#[test]
fn constant_curvature_ricci_and_scalar() {
    let s3 = InnerSpace::standard(3);
    let g3 = SymTensor2::metric(&s3);
    let half_gg = kulkarni_nomizu(&g3, &g3).unwrap().scale(&qf(1, 2));
    assert_eq!(brute_ricci(&half_gg), Matrix::identity(3).scale(&q(2)));
    assert_eq!(*ricci(&AlgebraicCurvatureTensor::new(half_gg).unwrap()).matrix(), Matrix::identity(3).scale(&q(2)));

    let s4 = InnerSpace::standard(4);
    let g4 = SymTensor2::metric(&s4);
    let gg = kulkarni_nomizu(&g4, &g4).unwrap();
    assert_eq!(brute_ricci(&gg).trace(), q(24));
    let d = decompose(&AlgebraicCurvatureTensor::new(gg).unwrap()).unwrap();
    assert_eq!(d.scalar, q(24));
    assert!(d.weyl_part.is_zero() && d.traceless_ricci.is_zero());
}

#[test]
fn torsion_rank_scan() {
    let s = InnerSpace::standard(4);
    let mut rows: [Vec<Vec<Q>>; 3] = Default::default();
    for a in 0..4 {
        for b in 0..4 {
            for c in b + 1..4 {
                let w = Tensor::from_fn(&s, 3, |i| match (i[0] == a, (i[1], i[2])) {
                    (true, x) if x == (b, c) => q(1),
                    (true, x) if x == (c, b) => q(-1),
                    _ => q(0),
                });
                let split = torsion_type_split(&w).unwrap();
                for (k, t) in split.parts().iter().enumerate() {
                    rows[k].push(t.data().to_vec());
                }
            }
        }
    }
    let ranks: Vec<usize> = rows.into_iter().map(|r| Matrix::from_rows(r).rank()).collect();
    assert_eq!(ranks, [4, 4, 16]);
    assert_eq!(ranks.iter().sum::<usize>(), 24);
}

#[test]
fn scaled_phi_scales_metric() {
    let g = standard_g2_form(G2Variant::Frame);
    let scaled = g.phi().with_space(&InnerSpace::standard(7)).scale(&q(8));
    match metric_from_g2_form(&scaled).unwrap() {
        G2Metric::Definite { metric, orientation } => {
            assert_eq!(metric, Matrix::identity(7).scale(&q(4)));
            assert_eq!(orientation, 1);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn stabilizer_elements_lie_in_fourteen() {
    let g = standard_g2_form(G2Variant::Frame);
    let stab = g.stabilizer();
    assert_eq!(stab.len(), 14);
    assert!(is_closed_under_commutator(&stab));
    let mut r = holonomy::sample::rng(11);
    let mut m = Matrix::zeros(7, 7);
    for a in &stab {
        m = m.add(&a.scale(&holonomy::sample::small_q(&mut r)));
    }
    let (p7, p14) = g.two_form_split(&matrix_to_two_form(g.space(), &m)).unwrap();
    assert!(p7.is_zero());
    assert!(!p14.is_zero());
}

#[test]
fn spin7_form_self_dual_by_complement() {
    let s = spin7_from_g2(&standard_g2_form(G2Variant::Coordinate)).unwrap();
    assert_eq!(star_by_complement(s.phi()), *s.phi());
    assert_eq!(s.phi().hodge_star().unwrap(), *s.phi());
    assert_eq!(s.phi().terms().len(), 14);
}

#[test]
fn su2_killing_by_trace() {
    let l = rep::su2();
    let h = l.torus()[0].clone();
    let n = l.dim();
    let trace: Q = (0..n)
        .map(|k| {
            let e = l.basis_vector(k);
            l.bracket(&h, &l.bracket(&h, &e))[k].clone()
        })
        .sum();
    assert_eq!(trace, q(-8));
    assert_eq!(holonomy::rep::pair(&l.killing_form(), &h, &h), q(-8));
}

#[test]
fn g2_root_lengths() {
    let rs = rep::roots_from_torus(&rep::g2().unwrap()).unwrap();
    assert_eq!(rs.roots.len(), 12);
    let lens: BTreeSet<Q> = rs.roots.iter().map(|a| rs.inner(a, a)).collect();
    let lens: Vec<Q> = lens.into_iter().collect();
    assert_eq!(lens.len(), 2);
    assert_eq!(&lens[1] / &lens[0], q(3));
}

#[test]
fn su3_cartan_from_inner_products() {
    let rs = rep::roots_from_torus(&rep::su3()).unwrap();
    let (a, b) = (&rs.simple[0], &rs.simple[1]);
    assert_eq!(q(2) * rs.inner(a, b) / rs.inner(a, a), q(-1));
    let c = rs.cartan_matrix();
    assert_eq!((c[(0, 1)].clone(), c[(1, 0)].clone()), (q(-1), q(-1)));
}

#[test]
fn g2_weyl_group_by_closure() {
    let rs = rep::roots_from_torus(&rep::g2().unwrap()).unwrap();
    let r = rs.rank();
    let reflection = |alpha: &Vector| {
        let cols: Vec<Vector> = (0..r).map(|i| rs.reflect(alpha, &holonomy::linalg::unit(r, i))).collect();
        Matrix::from_columns(&cols, r)
    };
    let gens: Vec<Matrix> = rs.simple.iter().map(reflection).collect();
    let mut seen = vec![Matrix::identity(r)];
    let mut frontier = seen.clone();
    while let Some(m) = frontier.pop() {
        for s in &gens {
            let p = s.mul(&m);
            if !seen.contains(&p) {
                seen.push(p.clone());
                frontier.push(p);
            }
        }
    }
    assert_eq!(seen.len(), 12);
}

#[test]
fn commutants_are_scalars() {
    for n in 0..=6 {
        let r = rep::su2_irrep_matrices(n);
        assert_eq!(rep::commutant_dim(&[r.k.clone(), r.u.clone(), r.v.clone()]), 1, "V_{n}");
    }
    // a reducible module has a larger commutant
    let a = rep::su2_irrep_matrices(1);
    let t = |x: &Matrix| rep::tensor_action(x, x);
    assert_eq!(rep::commutant_dim(&[t(&a.k), t(&a.u), t(&a.v)]), 2);
}
