use holonomy::curvature::{
    bianchi_map, curvature_from_ricci_3d, decompose, ricci, s2l2_inner, AlgebraicCurvatureTensor,
};
use holonomy::exterior::{basis_tuples, is_s2_lambda2, kulkarni_nomizu, InnerSpace, Multivector};
use holonomy::invariant::{nearly_kahler_dga, Form, FormalDGA, LieCoframeModel, PolyForm};
use holonomy::linalg::Matrix;
use holonomy::rational::{q, Q, CQ};
use holonomy::rep::{self, pair, LieAlgebraPresentation};
use holonomy::sample;
use holonomy::special::{
    act, spin7_from_g2, standard_g2_form, two_form_to_matrix, G2Variant, OctonionAlgebra,
};
use num::Zero;
use proptest::prelude::*;

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn sign(k: usize) -> Q {
    if k % 2 == 0 {
        q(1)
    } else {
        q(-1)
    }
}

/// `(n, p, q, r)` with `p + q + r ≤ n`.
fn degrees() -> impl Strategy<Value = (usize, usize, usize, usize)> {
    (2usize..=6).prop_flat_map(|n| (Just(n), 0..=n)).prop_flat_map(|(n, p)| (Just(n), Just(p), 0..=n - p)).prop_flat_map(|(n, p, q)| (Just(n), Just(p), Just(q), 0..=n - p - q))
}

proptest! {
    #![proptest_config(cfg(24))]

    #[test]
    fn wedge_associative_and_graded((n, a, b, c) in degrees(), seed in any::<u64>()) {
        let s = InnerSpace::standard(n);
        let mut r = sample::rng(seed);
        let (x, y, z) = (sample::form(&mut r, &s, a), sample::form(&mut r, &s, b), sample::form(&mut r, &s, c));
        let left = x.wedge(&y).unwrap().wedge(&z).unwrap();
        prop_assert_eq!(left, x.wedge(&y.wedge(&z).unwrap()).unwrap());
        prop_assert_eq!(x.wedge(&y).unwrap(), y.wedge(&x).unwrap().scale(&sign(a * b)));
    }

    #[test]
    fn interior_is_antiderivation((n, a, b, _) in degrees(), seed in any::<u64>()) {
        prop_assume!(a >= 1 && b >= 1);
        let s = InnerSpace::standard(n);
        let mut r = sample::rng(seed);
        let (x, y, v) = (sample::form(&mut r, &s, a), sample::form(&mut r, &s, b), sample::vector(&mut r, n));
        let lhs = x.wedge(&y).unwrap().interior(&v).unwrap();
        let rhs = &x.interior(&v).unwrap().wedge(&y).unwrap() + &x.wedge(&y.interior(&v).unwrap()).unwrap().scale(&sign(a));
        prop_assert_eq!(lhs, rhs);
        // ι_v ι_v = 0
        prop_assert!(x.interior(&v).unwrap().interior(&v).map(|f| f.is_zero()).unwrap_or(true));
    }

    #[test]
    fn hodge_star_is_isometry(n in 1usize..=6, seed in any::<u64>(), p_frac in 0usize..=6) {
        let p = p_frac % (n + 1);
        let s = InnerSpace::standard(n);
        let mut r = sample::rng(seed);
        let (x, y) = (sample::form(&mut r, &s, p), sample::form(&mut r, &s, p));
        let (sx, sy) = (x.hodge_star().unwrap(), y.hodge_star().unwrap());
        prop_assert_eq!(sx.form_inner(&sy).unwrap(), x.form_inner(&y).unwrap());
        // ⋆β ∧ α = ⟨α, β⟩ vol
        prop_assert_eq!(sy.wedge(&x).unwrap(), Multivector::volume(&s).unwrap().scale(&x.form_inner(&y).unwrap()));
    }

    #[test]
    fn kulkarni_nomizu_symmetries(n in 2usize..=5, seed in any::<u64>()) {
        let s = InnerSpace::standard(n);
        let mut r = sample::rng(seed);
        let (h, k) = (sample::symmetric(&mut r, &s), sample::symmetric(&mut r, &s));
        let hk = kulkarni_nomizu(&h, &k).unwrap();
        prop_assert_eq!(&hk, &kulkarni_nomizu(&k, &h).unwrap());
        prop_assert!(is_s2_lambda2(&hk));
        prop_assert!(bianchi_map(&hk).is_zero());
    }

    #[test]
    fn bianchi_map_is_projection(n in 2usize..=5, seed in any::<u64>()) {
        let s = InnerSpace::standard(n);
        let t = sample::s2_lambda2(&mut sample::rng(seed), &s);
        let b = bianchi_map(&t);
        prop_assert_eq!(bianchi_map(&b), b);
    }
}

proptest! {
    #![proptest_config(cfg(12))]

    #[test]
    fn decomposition_is_orthogonal_and_idempotent(n in 3usize..=5, seed in any::<u64>()) {
        let s = InnerSpace::standard(n);
        let rc = sample::curvature(&mut sample::rng(seed), &s);
        let d = decompose(&rc).unwrap();
        prop_assert_eq!(&d.reassemble(), rc.tensor());
        let parts = d.parts();
        for i in 0..3 {
            for j in i + 1..3 {
                prop_assert!(s2l2_inner(parts[i], parts[j]).is_zero());
            }
            let again = decompose(&AlgebraicCurvatureTensor::new(parts[i].clone()).unwrap()).unwrap();
            for (j, p) in again.parts().iter().enumerate() {
                if i == j {
                    prop_assert_eq!(*p, parts[i]);
                } else {
                    prop_assert!(p.is_zero());
                }
            }
        }
        let w = AlgebraicCurvatureTensor::new(d.weyl_part.clone()).unwrap();
        prop_assert!(ricci(&w).is_zero());
    }

    #[test]
    fn decomposition_is_equivariant(seed in any::<u64>()) {
        let s = InnerSpace::standard(4);
        let mut r = sample::rng(seed);
        let rc = sample::curvature(&mut r, &s);
        let g = sample::orthogonal(&mut r, 4);
        let moved = AlgebraicCurvatureTensor::new(rc.tensor().pullback(&g)).unwrap();
        let (d0, d1) = (decompose(&rc).unwrap(), decompose(&moved).unwrap());
        prop_assert_eq!(d1.weyl_part, d0.weyl_part.pullback(&g));
        prop_assert_eq!(d1.scalar, d0.scalar);
    }

    #[test]
    fn ricci_determines_curvature_in_dimension_three(seed in any::<u64>()) {
        let s = InnerSpace::standard(3);
        let ric = sample::symmetric(&mut sample::rng(seed), &s);
        let rc = curvature_from_ricci_3d(&ric).unwrap();
        prop_assert_eq!(ricci(&rc), ric);
        prop_assert!(decompose(&rc).unwrap().weyl_part.is_zero());
    }

    #[test]
    fn g2_splits_reassemble_and_are_orthogonal(seed in any::<u64>(), variant in prop_oneof![Just(G2Variant::Frame), Just(G2Variant::Coordinate)]) {
        let g = standard_g2_form(variant);
        let mut r = sample::rng(seed);
        let a = sample::form(&mut r, g.space(), 2);
        let (a7, a14) = g.two_form_split(&a).unwrap();
        prop_assert_eq!(&(&a7 + &a14), &a);
        prop_assert!(a7.form_inner(&a14).unwrap().is_zero());
        prop_assert_eq!(g.two_form_split(&a7).unwrap().0, a7);

        let c = sample::form(&mut r, g.space(), 3);
        let (c1, c7, c27) = g.three_form_split(&c).unwrap();
        prop_assert_eq!(&(&(&c1 + &c7) + &c27), &c);
        prop_assert!(c1.form_inner(&c7).unwrap().is_zero());
        prop_assert!(c1.form_inner(&c27).unwrap().is_zero());
        prop_assert!(c7.form_inner(&c27).unwrap().is_zero());
        let (_, _, again) = g.three_form_split(&c27).unwrap();
        prop_assert_eq!(again, c27);
    }

    #[test]
    fn fourteen_part_lies_in_stabilizer(seed in any::<u64>()) {
        let g = standard_g2_form(G2Variant::Frame);
        let a = sample::form(&mut sample::rng(seed), g.space(), 2);
        let (_, a14) = g.two_form_split(&a).unwrap();
        let m = two_form_to_matrix(&a14);
        prop_assert!(act(&m, g.phi()).is_zero());
        prop_assert!(act(&m, g.star_phi()).is_zero());
    }

    #[test]
    fn stabilizer_annihilates_both_forms(seed in any::<u64>()) {
        let g = standard_g2_form(G2Variant::Coordinate);
        let mut r = sample::rng(seed);
        let mut m = Matrix::zeros(7, 7);
        for a in g.stabilizer() {
            m = m.add(&a.scale(&sample::small_q(&mut r)));
        }
        prop_assert!(act(&m, g.phi()).is_zero());
        prop_assert!(act(&m, g.star_phi()).is_zero());
    }

    #[test]
    fn cross_product_identities(seed in any::<u64>()) {
        let g = standard_g2_form(G2Variant::Frame);
        let mut r = sample::rng(seed);
        let (x, y) = (sample::vector(&mut r, 7), sample::vector(&mut r, 7));
        let ip = |u: &[Q], v: &[Q]| -> Q { u.iter().zip(v).map(|(a, b)| a * b).sum() };
        let xy = g.cross(&x, &y);
        prop_assert_eq!(ip(&xy, &xy), ip(&x, &x) * ip(&y, &y) - ip(&x, &y) * ip(&x, &y));
        prop_assert!(ip(&xy, &x).is_zero());
        let lhs = g.cross(&x, &xy);
        let rhs: Vec<Q> = (0..7).map(|i| -ip(&x, &x) * &y[i] + ip(&x, &y) * &x[i]).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn octonion_norm_is_multiplicative(seed in any::<u64>()) {
        let o = OctonionAlgebra::new(&standard_g2_form(G2Variant::Frame));
        let mut r = sample::rng(seed);
        let (z, w) = (sample::vector(&mut r, 8), sample::vector(&mut r, 8));
        prop_assert_eq!(o.norm2(&o.multiply(&z, &w)), o.norm2(&z) * o.norm2(&w));
        // alternativity
        prop_assert!(o.associator(&z, &z, &w).iter().all(|c| c.is_zero()));
    }
}

proptest! {
    #![proptest_config(cfg(6))]

    #[test]
    fn spin7_splits_reassemble(seed in any::<u64>(), degree in 2usize..=4) {
        let s = spin7_from_g2(&standard_g2_form(G2Variant::Frame)).unwrap();
        let x = sample::form(&mut sample::rng(seed), s.space(), degree);
        let parts = s.split(&x).unwrap();
        let mut sum = Multivector::zero(s.space(), degree);
        for (i, p) in parts.iter().enumerate() {
            sum = &sum + p;
            for o in &parts[i + 1..] {
                prop_assert!(p.form_inner(o).unwrap().is_zero());
            }
        }
        prop_assert_eq!(sum, x);
    }
}

fn algebras() -> Vec<(&'static str, LieAlgebraPresentation)> {
    vec![("su2", rep::su2()), ("su3", rep::su3()), ("g2", rep::g2().unwrap())]
}

#[test]
fn jacobi_and_definite_killing() {
    for (name, l) in algebras() {
        assert!(l.jacobi_holds(), "{name}");
        let neg = l.killing_form().scale(&q(-1));
        assert!(neg.is_positive_definite(), "{name}");
        assert!(l.is_ad_invariant(&l.killing_form()), "{name}");
    }
}

#[test]
fn root_systems_are_integral_and_reflection_stable() {
    for (name, l) in algebras() {
        let rs = rep::roots_from_torus(&l).unwrap();
        assert!(rs.is_integral(), "{name}");
        assert!(rs.reflections_permute_roots(), "{name}");
    }
}

#[test]
fn hodge_star_squares_to_sign() {
    for n in 1..=6 {
        let s = InnerSpace::standard(n);
        for p in 0..=n {
            for idx in basis_tuples(n, p) {
                let b = Multivector::basis(&s, &idx);
                assert_eq!(b.hodge_star().unwrap().hodge_star().unwrap(), b.scale(&sign(p * (n - p))), "n={n} {idx:?}");
            }
        }
    }
}

proptest! {
    #![proptest_config(cfg(16))]

    #[test]
    fn killing_form_is_ad_invariant_pointwise(seed in any::<u64>(), which in 0usize..3) {
        let (_, l) = algebras().swap_remove(which);
        let k = l.killing_form();
        let mut r = sample::rng(seed);
        let (x, y, z) = (sample::vector(&mut r, l.dim()), sample::vector(&mut r, l.dim()), sample::vector(&mut r, l.dim()));
        prop_assert!((pair(&k, &l.bracket(&x, &y), &z) + pair(&k, &y, &l.bracket(&x, &z))).is_zero());
    }

    #[test]
    fn polynomial_forms_have_d_squared_zero(n in 3usize..=5, a in 1usize..=3, b in 1usize..=3, seed in any::<u64>()) {
        prop_assume!(a <= n && b <= n);
        let s = InnerSpace::standard(n);
        let mut r = sample::rng(seed);
        let x = PolyForm::position_field(n);
        let f = PolyForm::constant(&sample::form(&mut r, &s, a)).interior(&x).unwrap();
        let g = PolyForm::constant(&sample::form(&mut r, &s, b)).interior(&x).unwrap();
        let fg = f.wedge(&g).unwrap();
        prop_assert!(fg.d().d().is_zero());
        // Leibniz
        let rhs = f.d().wedge(&g).unwrap().add(&f.wedge(&g.d()).unwrap().scale(&sign(a - 1))).unwrap();
        prop_assert_eq!(fg.d(), rhs);
    }

    #[test]
    fn dga_forms_have_d_squared_zero(seed in any::<u64>(), flag in any::<bool>()) {
        let dga = if flag { LieCoframeModel::su3_flag().unwrap().dga().clone() } else { nearly_kahler_dga().unwrap() };
        let f = random_dga_form(&dga, seed);
        prop_assert!(dga.d(&dga.d(&f).unwrap()).unwrap().is_zero());
    }
}

fn random_dga_form(dga: &FormalDGA, seed: u64) -> Form {
    let mut r = sample::rng(seed);
    let names: Vec<String> = dga.generators().iter().map(|g| g.name.clone()).collect();
    let mut f = Form::zero();
    for _ in 0..4 {
        let mut term = dga.constant(CQ::new(sample::small_q(&mut r), sample::small_q(&mut r)));
        for _ in 0..(rand::Rng::gen_range(&mut r, 1..=3)) {
            let g = dga.gen(&names[rand::Rng::gen_range(&mut r, 0..names.len())]).unwrap();
            term = dga.mul(&term, &g);
        }
        f = f.add(&term);
    }
    f
}
