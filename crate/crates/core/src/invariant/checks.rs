use super::dga::{DgaBuilder, Form, FormalDGA};
use super::flag::{LieCoframeModel, OMEGA, OMEGA_BAR};
use super::polyform::PolyForm;
use crate::error::{Error, Result};
use crate::exterior::{basis_tuples, InnerSpace, Multivector};
use crate::linalg::{Matrix, Vector};
use crate::rational::{q, qf, CQ, Q};
use crate::special::{
    literal_3form, metric_from_g2_form, spin7_from_g2, standard_g2_form, G2Metric, G2Variant,
    FRAME_TERMS,
};
use num::{Signed, Zero};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub items: Vec<CheckItem>,
}

impl VerificationReport {
    pub fn new(check: &str, items: Vec<CheckItem>) -> Self {
        let witness = items.iter().find(|i| !i.pass).map(|i| format!("{}: {}", i.name, i.detail));
        let status = if witness.is_none() { Status::Pass } else { Status::Fail };
        VerificationReport { check: check.into(), status, witness, items }
    }
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {:?}", self.check, self.status)?;
        for i in &self.items {
            writeln!(f, "  [{}] {} ({})", if i.pass { "ok" } else { "FAIL" }, i.name, i.detail)?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Items(Vec<CheckItem>);

impl Items {
    fn push(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.0.push(CheckItem { name: name.into(), pass, detail: detail.into() });
    }
    /// Passes when `residual` vanishes; the detail shows the residual otherwise.
    fn zero(&mut self, a: &FormalDGA, name: &str, residual: &Form) {
        let detail = if residual.is_zero() { "0".to_string() } else { a.display(residual) };
        self.push(name, residual.is_zero(), detail);
    }
    fn equal(&mut self, name: &str, got: &Multivector, want: &Multivector) {
        let pass = got == want;
        let detail = if pass { format!("{got}") } else { format!("got {got}, expected {want}") };
        self.push(name, pass, detail);
    }
}

/// Inverse stereographic projection from the south pole: `u ∈ ℚ^{N−1}` to a point of `S^{N−1} ⊂ ℝᴺ`.
pub fn inverse_stereographic(u: &[Q]) -> Vector {
    let s: Q = u.iter().map(|x| x * x).sum();
    let den = &s + q(1);
    let mut out = vec![(q(1) - &s) / &den];
    out.extend(u.iter().map(|x| q(2) * x / &den));
    out
}

/// Deterministic rational points on `S^{N−1} ⊂ ℝᴺ`: `(1, 0, …)`, then `e_N`, then images of small rational vectors.
pub fn rational_sphere_points(n: usize, count: usize) -> Vec<Vector> {
    assert!(n >= 2 && count >= 1);
    let mut pts = vec![inverse_stereographic(&vec![Q::zero(); n - 1])];
    if count > 1 {
        let mut u = vec![Q::zero(); n - 1];
        u[n - 2] = q(1);
        pts.push(inverse_stereographic(&u));
    }
    let mut rng = crate::sample::rng(0x5e7e);
    while pts.len() < count {
        let u = crate::sample::vector(&mut rng, n - 1);
        let p = inverse_stereographic(&u);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

/// `v_i = e_i − p_i p` for every `i` except the coordinate where `|p_i|` is largest.
fn tangent_frame(p: &[Q]) -> (usize, Vec<Vector>) {
    let j = (0..p.len()).max_by(|&a, &b| p[a].abs().cmp(&p[b].abs()).then(b.cmp(&a))).expect("nonempty");
    let frame = (0..p.len())
        .filter(|&i| i != j)
        .map(|i| (0..p.len()).map(|k| if k == i { q(1) } else { Q::zero() } - &p[i] * &p[k]).collect())
        .collect();
    (j, frame)
}

fn pick<T: Clone>(v: &[T], idx: &[usize]) -> Vec<T> {
    idx.iter().map(|&i| v[i - 1].clone()).collect()
}

fn gram(vs: &[Vector]) -> Matrix {
    let n = vs.len();
    let mut g = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            g[(a, b)] = vs[a].iter().zip(&vs[b]).map(|(x, y)| x * y).sum();
        }
    }
    g
}

/// Structure equations of the SU(3)-structure on the flag manifold SU(3)/T².
pub fn flag_nearly_kahler_check() -> Result<VerificationReport> {
    let m = LieCoframeModel::su3_flag()?;
    let a = m.dga();
    let mut it = Items::default();

    let mc = m.maurer_cartan_defects()?;
    it.push(
        "dk = -k^k on all nine entries (theta3 = -theta1 - theta2 eliminated)",
        mc.is_empty(),
        mc.first().map(|((i, j), f)| format!("entry ({i},{j}): {}", a.display(f))).unwrap_or_else(|| "0".into()),
    );
    for i in 1..=3 {
        let r = a.d(&a.gen(OMEGA[i - 1])?)?.sub(&m.cyclic_formula(i)?);
        it.zero(a, &format!("dw{i} = i(theta_j - theta_k)^w{i} - i wb_j^wb_k"), &r);
    }
    let dd = a.d_squared_defects()?;
    it.push("d^2 = 0 on every coframe element", dd.is_empty(), dd.first().map(|(n, _)| n.clone()).unwrap_or_else(|| "0".into()));
    let su3 = crate::rep::su3();
    it.push("su(3) Jacobi identity", su3.jacobi_holds(), format!("dim {}", su3.dim()));

    let om = m.kahler_form()?;
    let psi = m.volume_form()?;
    let d_om = a.d(&om)?;
    it.zero(a, "dOmega = 3 Re Psi", &d_om.sub(&a.re(&psi).scale_q(q(3))));
    it.zero(a, "dPsi = -2i Omega^Omega", &a.d(&psi)?.add(&a.mul(&om, &om).scale(&CQ::from_int(0, 2))));
    it.zero(a, "d(dOmega) = 0", &a.d(&d_om)?);
    it.zero(a, "Omega^Re Psi = 0", &a.mul(&om, &a.re(&psi)));
    it.zero(a, "Omega^Im Psi = 0", &a.mul(&om, &a.im(&psi)));
    it.zero(a, "Omega is real", &om.sub(&a.conj(&om)));
    Ok(VerificationReport::new("flag-nk", it.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeSource {
    FormalNk,
    FlagExplicit,
}

impl std::str::FromStr for ConeSource {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formal" | "formal_nk" | "formal-nk" => Ok(ConeSource::FormalNk),
            "explicit" | "flag_explicit" | "flag-explicit" => Ok(ConeSource::FlagExplicit),
            _ => Err(Error::InvalidInput(format!("unknown cone mode `{s}`"))),
        }
    }
}

fn nk_builder(with_plus_relation: bool) -> DgaBuilder {
    let b = DgaBuilder::new()
        .real("sigma", 2)
        .real("psi_plus", 3)
        .real("psi_minus", 3)
        .with_t()
        .base_dim(6)
        .rule("sigma", "3 psi_plus")
        .rule("psi_plus", "0")
        .rule("psi_minus", "-2 sigma^sigma")
        .relation(&["sigma", "psi_minus"], "0");
    if with_plus_relation {
        b.relation(&["sigma", "psi_plus"], "0")
    } else {
        b
    }
}

/// Formal nearly-Kähler algebra with generators `sigma`, `psi_plus`, `psi_minus` and `t`.
pub fn nearly_kahler_dga() -> Result<FormalDGA> {
    nk_builder(true).build()
}

const CONE_PHI: &str = "t^2 dt^sigma + t^3 psi_plus";
const CONE_PSI: &str = "(1/2) t^4 sigma^sigma - t^3 dt^psi_minus";

fn cone_forms_formal(a: &FormalDGA) -> Result<(Form, Form)> {
    Ok((a.parse(CONE_PHI)?, a.parse(CONE_PSI)?))
}

fn cone_forms_flag(m: &LieCoframeModel) -> Result<(Form, Form)> {
    let a = m.dga();
    let om = m.kahler_form()?;
    let psi = m.volume_form()?;
    let dt = a.gen("dt")?;
    let phi = a.mul(&a.t_power(2)?, &a.mul(&dt, &om)).add(&a.re(&psi).shift_t(3));
    let star = a.mul(&om, &om).shift_t(4).scale_q(qf(1, 2)).sub(&a.mul(&dt, &a.im(&psi)).shift_t(3));
    Ok((phi, star))
}

/// Algebra with `η¹ … η⁷` and powers of `t` as coefficients.
fn eta_algebra() -> Result<FormalDGA> {
    let mut b = DgaBuilder::new().t_coefficients();
    for i in 1..=7 {
        b = b.real(&format!("eta{i}"), 1);
    }
    b.build()
}

/// `dt ↦ η¹`, `ω¹ ↦ t⁻¹(η² + iη³)`, `ω² ↦ t⁻¹(η⁴ + iη⁵)`, `ω³ ↦ t⁻¹(η⁶ + iη⁷)`.
fn eta_images(m: &LieCoframeModel, eta: &FormalDGA) -> Result<Vec<Option<Form>>> {
    let a = m.dga();
    let mut images = vec![None; a.generators().len()];
    images[a.index("dt")?] = Some(eta.gen("eta1")?);
    for i in 0..3 {
        let re = eta.gen(&format!("eta{}", 2 * i + 2))?;
        let im = eta.gen(&format!("eta{}", 2 * i + 3))?.scale(&CQ::i());
        images[a.index(OMEGA[i])?] = Some(re.add(&im).shift_t(-1));
        images[a.index(OMEGA_BAR[i])?] = Some(re.sub(&im).shift_t(-1));
    }
    Ok(images)
}

/// Reads an η-form with no `t` and real coefficients as a multivector on standard ℝ⁷.
fn eta_to_multivector(eta: &FormalDGA, f: &Form, degree: usize) -> Result<Multivector> {
    let space = InnerSpace::standard(7);
    let mut terms = Vec::new();
    for (m, c) in f.terms() {
        if m.t != 0 || !c.im.is_zero() {
            return Err(Error::InvalidInput(format!("not a constant real form: {}", eta.display(f))));
        }
        terms.push((m.gens.iter().map(|g| g + 1).collect::<Vec<_>>(), c.re.clone()));
    }
    Multivector::from_terms(&space, degree, terms)
}

/// Closedness of the cone forms `φ = t²dt∧σ + t³ψ₊` and `ψ = ½t⁴σ∧σ − t³dt∧ψ₋`.
pub fn g2_cone_check(source: ConeSource) -> Result<VerificationReport> {
    let mut it = Items::default();
    match source {
        ConeSource::FormalNk => {
            let a = nearly_kahler_dga()?;
            let (phi, psi) = cone_forms_formal(&a)?;
            it.zero(&a, "dphi = 0", &a.d(&phi)?);
            it.zero(&a, "dpsi = 0", &a.d(&psi)?);
            it.zero(&a, "phi = (1/3) d(t^3 sigma)", &a.d(&a.parse("t^3 sigma")?)?.scale_q(qf(1, 3)).sub(&phi));
            it.zero(&a, "psi = -(1/4) d(t^4 psi_minus)", &a.d(&a.parse("t^4 psi_minus")?)?.scale_q(qf(-1, 4)).sub(&psi));
            it.zero(&a, "d(sigma^sigma) = 6 psi_plus^sigma before relations", &{
                let raw = nk_builder(false).build_unchecked()?;
                raw.d(&raw.parse("sigma^sigma")?)?.sub(&raw.parse("6 psi_plus^sigma")?)
            });
            let strict = nk_builder(false).build();
            it.push(
                "dropping sigma^psi_plus = 0 breaks d^2 = 0",
                matches!(strict, Err(Error::DifferentialSquare(ref g)) if g == "psi_minus"),
                format!("{:?}", strict.err()),
            );
            let raw = nk_builder(false).build_unchecked()?;
            let (_, psi_raw) = cone_forms_formal(&raw)?;
            let obstruction = raw.d(&psi_raw)?;
            let expected = raw.parse("3 t^4 sigma^psi_plus")?;
            it.push("obstruction without the relation is 3 t^4 sigma^psi_plus", obstruction == expected, raw.display(&obstruction));
            Ok(VerificationReport::new("g2-cone(formal)", it.0))
        }
        ConeSource::FlagExplicit => {
            let m = LieCoframeModel::su3_flag()?;
            let a = m.dga();
            let (phi, psi) = cone_forms_flag(&m)?;
            it.zero(a, "dphi = 0", &a.d(&phi)?);
            it.zero(a, "dpsi = 0", &a.d(&psi)?);
            let om = m.kahler_form()?;
            let im_psi = a.im(&m.volume_form()?);
            it.zero(a, "phi = (1/3) d(t^3 Omega)", &a.d(&om.shift_t(3))?.scale_q(qf(1, 3)).sub(&phi));
            it.zero(a, "psi = -(1/4) d(t^4 Im Psi)", &a.d(&im_psi.shift_t(4))?.scale_q(qf(-1, 4)).sub(&psi));

            let eta = eta_algebra()?;
            let images = eta_images(&m, &eta)?;
            let phi_eta = eta_to_multivector(&eta, &a.map_into(&phi, &eta, &images)?, 3)?;
            let flat = InnerSpace::standard(7);
            let pattern = literal_3form(&flat, &FRAME_TERMS);
            it.equal("phi in the eta coframe", &phi_eta, &pattern);
            let psi_eta = eta_to_multivector(&eta, &a.map_into(&psi, &eta, &images)?, 4)?;
            it.equal("psi in the eta coframe is *phi", &psi_eta, &pattern.hodge_star()?);

            specialization_items(&m, &mut it)?;
            Ok(VerificationReport::new("g2-cone(explicit)", it.0))
        }
    }
}

/// The formal rules and relations hold for `σ ↦ Ω`, `ψ₊ ↦ ReΨ`, `ψ₋ ↦ ImΨ`, and the formal cone forms map to the explicit ones.
fn specialization_items(m: &LieCoframeModel, it: &mut Items) -> Result<()> {
    let a = m.dga();
    let nk = nearly_kahler_dga()?;
    let psi = m.volume_form()?;
    let mut images = vec![None; nk.generators().len()];
    images[nk.index("sigma")?] = Some(m.kahler_form()?);
    images[nk.index("psi_plus")?] = Some(a.re(&psi));
    images[nk.index("psi_minus")?] = Some(a.im(&psi));
    images[nk.index("dt")?] = Some(a.gen("dt")?);
    for g in ["sigma", "psi_plus", "psi_minus"] {
        let rule = nk.rule(g)?.cloned().unwrap_or_default();
        let lhs = a.d(&nk.map_into(&nk.gen(g)?, a, &images)?)?;
        let rhs = nk.map_into(&rule, a, &images)?;
        it.zero(a, &format!("specialized rule d({g})"), &lhs.sub(&rhs));
    }
    for rel in [["sigma", "psi_plus"], ["sigma", "psi_minus"]] {
        let f = nk.monomial(0, &rel)?;
        it.zero(a, &format!("specialized relation {}^{} = 0", rel[0], rel[1]), &nk.map_into(&f, a, &images)?);
    }
    let (phi_f, psi_f) = cone_forms_formal(&nk)?;
    let (phi_x, psi_x) = cone_forms_flag(m)?;
    it.zero(a, "formal phi specializes to the explicit phi", &nk.map_into(&phi_f, a, &images)?.sub(&phi_x));
    it.zero(a, "formal psi specializes to the explicit psi", &nk.map_into(&psi_f, a, &images)?.sub(&psi_x));
    Ok(())
}

/// Number of rational points sampled on S⁶.
pub const S6_POINTS: usize = 60;
/// Number of rational points sampled on S⁷.
pub const S7_POINTS: usize = 24;

/// Nearly-Kähler identities on S⁶ ⊂ ℝ⁷ with `σ = ι*(N⌟φ)`, `ψ₊ + iψ₋` from `ι*φ` and `−ι*(N⌟⋆φ)`.
pub fn s6_nearly_kahler_check() -> Result<VerificationReport> {
    s6_check_with(S6_POINTS)
}

pub fn s6_check_with(points: usize) -> Result<VerificationReport> {
    let mut it = Items::default();
    let n_field = PolyForm::position_field(7);
    for variant in [G2Variant::Frame, G2Variant::Coordinate] {
        let g = standard_g2_form(variant);
        let phi = PolyForm::constant(g.phi());
        let star = PolyForm::constant(g.star_phi());
        let s1 = phi.interior(&n_field)?.d().sub(&phi.scale(&q(3)))?;
        it.push(&format!("d(N _| phi) = 3 phi [{variant:?}]"), s1.is_zero(), if s1.is_zero() { "0" } else { "nonzero residual" });
        let s2 = star.interior(&n_field)?.d().sub(&star.scale(&q(4)))?;
        it.push(&format!("d(N _| *phi) = 4 *phi [{variant:?}]"), s2.is_zero(), if s2.is_zero() { "0" } else { "nonzero residual" });
    }

    let g = standard_g2_form(G2Variant::Frame);
    let flat = InnerSpace::standard(7);
    let sigma_field = PolyForm::constant(g.phi()).interior(&n_field)?;
    let north: Vector = (0..7).map(|i| if i == 6 { q(1) } else { Q::zero() }).collect();
    let sigma_north = sigma_field.eval_at(&north);
    it.equal("sigma at d/dx7", &sigma_north, &Multivector::from_int_terms(&flat, 2, &[(&[1, 6], 1), (&[2, 5], -1), (&[3, 4], -1)]));
    let restricted = Multivector::from_terms(&flat, 4, g.star_phi().terms().iter().filter(|(i, _)| !i.contains(&7)).map(|(i, c)| (i.clone(), c.clone())))?;
    it.equal(
        "i* *phi at d/dx7",
        &restricted,
        &Multivector::from_int_terms(&flat, 4, &[(&[2, 3, 4, 5], 1), (&[1, 3, 4, 6], -1), (&[1, 2, 5, 6], -1)]),
    );
    it.equal("sigma^sigma at d/dx7", &sigma_north.wedge(&sigma_north)?, &restricted.scale(&q(2)));

    let pts = rational_sphere_points(7, points);
    let mut bad: Option<String> = None;
    let mut bad_relation: Option<String> = None;
    for p in &pts {
        let sigma = sigma_field.eval_at(p);
        let ss = sigma.wedge(&sigma)?;
        let sp = sigma.wedge(g.phi())?;
        let (_, frame) = tangent_frame(p);
        for idx in basis_tuples(6, 4) {
            let vs = pick(&frame, &idx);
            if q(4) * g.star_phi().eval(&vs) != q(2) * ss.eval(&vs) && bad.is_none() {
                bad = Some(format!("point {p:?}, frame {idx:?}"));
            }
        }
        for idx in basis_tuples(6, 5) {
            if !sp.eval(&pick(&frame, &idx)).is_zero() && bad_relation.is_none() {
                bad_relation = Some(format!("point {p:?}, frame {idx:?}"));
            }
        }
    }
    it.push(
        "4 i* *phi = 2 sigma^sigma on tangent 4-frames",
        bad.is_none(),
        bad.unwrap_or_else(|| format!("{} points x 15 frames", pts.len())),
    );
    it.push(
        "sigma ^ i*phi = 0 on tangent 5-frames",
        bad_relation.is_none(),
        bad_relation.unwrap_or_else(|| format!("{} points x 6 frames", pts.len())),
    );
    Ok(VerificationReport::new("s6-nk", it.0))
}

/// Nearly-parallel G2 structure on S⁷ ⊂ ℝ⁸ from `ψ = dx⁰∧φ₀ + ⋆φ₀`.
pub fn s7_nearly_parallel_check() -> Result<VerificationReport> {
    s7_check_with(S7_POINTS)
}

pub fn s7_check_with(points: usize) -> Result<VerificationReport> {
    let mut it = Items::default();
    let spin7 = spin7_from_g2(&standard_g2_form(G2Variant::Coordinate))?;
    let psi = spin7.phi().clone();
    let v8 = psi.space().clone();
    let vol = Multivector::volume(&v8)?;
    let top: Vec<usize> = (1..=8).collect();
    let square = psi.wedge(&psi)?;
    it.push("psi^psi = 14 dx^{01...7}", square == vol.scale(&q(14)), format!("coefficient {}", square.coeff(&top)));

    let n_field = PolyForm::position_field(8);
    let psi_p = PolyForm::constant(&psi);
    let n_psi = psi_p.interior(&n_field)?;
    let r1 = n_psi.d().sub(&psi_p.scale(&q(4)))?;
    it.push("d(N _| psi) = 4 psi", r1.is_zero(), if r1.is_zero() { "0" } else { "nonzero residual" });
    let n_vol = PolyForm::constant(&vol).interior(&n_field)?;
    let r2 = n_psi.wedge(&psi_p)?.sub(&n_vol.scale(&q(7)))?;
    it.push("(N _| psi)^psi = 7 N _| dx^{01...7}", r2.is_zero(), if r2.is_zero() { "0" } else { "nonzero residual" });

    let pts = rational_sphere_points(8, points);
    let mut failures: Vec<String> = Vec::new();
    for p in &pts {
        if let Err(e) = s7_point(&psi, p) {
            failures.push(format!("point {p:?}: {e}"));
        }
    }
    it.push(
        "i*psi = *phi for phi = i*(N _| psi), with the round metric and orientation (so dphi = 4 *phi)",
        failures.is_empty(),
        failures.first().cloned().unwrap_or_else(|| format!("{} points", pts.len())),
    );
    Ok(VerificationReport::new("s7-np", it.0))
}

/// Pulls `N⌟ψ` and `ψ` back to a tangent frame at `p` and compares `ι*ψ` with the Hodge star of `ι*(N⌟ψ)`.
fn s7_point(psi: &Multivector, p: &[Q]) -> std::result::Result<(), String> {
    let (_, frame) = tangent_frame(p);
    let v7 = InnerSpace::standard(7);
    let mut with_p = vec![p.to_vec()];
    let phi = Multivector::from_terms(
        &v7,
        3,
        basis_tuples(7, 3).into_iter().map(|idx| {
            with_p.truncate(1);
            with_p.extend(pick(&frame, &idx));
            let c = psi.eval(&with_p);
            (idx, c)
        }),
    )
    .map_err(|e| e.to_string())?;
    let pulled = Multivector::from_terms(&v7, 4, basis_tuples(7, 4).into_iter().map(|idx| (idx.clone(), psi.eval(&pick(&frame, &idx)))))
        .map_err(|e| e.to_string())?;
    let g = gram(&frame);
    let (metric, orientation) = match metric_from_g2_form(&phi).map_err(|e| e.to_string())? {
        G2Metric::Definite { metric, orientation } => (metric, orientation),
        other => return Err(format!("induced form is not definite: {other:?}")),
    };
    if metric != g {
        return Err("induced metric differs from the round metric".into());
    }
    let mut cols = vec![p.to_vec()];
    cols.extend(frame.iter().cloned());
    let sphere_orientation = Matrix::from_columns(&cols, 8).det();
    if sphere_orientation.is_positive() != (orientation > 0) {
        return Err("induced orientation differs from N _| vol".into());
    }
    let space = InnerSpace::new(metric, orientation).map_err(|e| e.to_string())?;
    let star = phi.with_space(&space).hodge_star().map_err(|e| e.to_string())?;
    if star != pulled.with_space(&space) {
        return Err("i*psi differs from *phi".into());
    }
    Ok(())
}

/// Spin(7) cone `Φ = t³dt∧ψ + t⁴⋆ψ` over formal `dψ = λ⋆ψ`.
pub fn spin7_cone_dga(lambda: Q) -> Result<FormalDGA> {
    let base = DgaBuilder::new().real("psi", 3).real("star_psi", 4).with_t().base_dim(7).rule("star_psi", "0").rule("psi", "0").build()?;
    let rule = base.gen("star_psi")?.scale_q(lambda);
    base.with_rule("psi", rule)
}

pub const SPIN7_CONE_LAMBDAS: [(i64, i64); 8] = [(4, 1), (0, 1), (1, 1), (3, 1), (5, 1), (-2, 1), (7, 2), (9, 1)];

pub fn spin7_cone_check() -> Result<VerificationReport> {
    let mut it = Items::default();
    let a = spin7_cone_dga(q(4))?;
    let phi = a.parse("t^3 dt^psi + t^4 star_psi")?;
    it.zero(&a, "dPhi = 0", &a.d(&phi)?);
    it.zero(&a, "Phi = (1/4) d(t^4 psi)", &a.d(&a.parse("t^4 psi")?)?.scale_q(qf(1, 4)).sub(&phi));

    let mut bad = Vec::new();
    for (n, d) in SPIN7_CONE_LAMBDAS {
        let lambda = qf(n, d);
        let a = spin7_cone_dga(lambda.clone())?;
        let phi = a.parse("t^3 dt^psi + t^4 star_psi")?;
        let d_phi = a.d(&phi)?;
        let expected = a.parse("t^3 dt^star_psi")?.scale_q(q(4) - &lambda);
        if d_phi != expected || d_phi.is_zero() != (lambda == q(4)) {
            bad.push(format!("lambda = {lambda}: {}", a.display(&d_phi)));
        }
    }
    it.push(
        "dPhi = (4 - lambda) t^3 dt^*psi, zero only at lambda = 4",
        bad.is_empty(),
        bad.first().cloned().unwrap_or_else(|| format!("{} values of lambda", SPIN7_CONE_LAMBDAS.len())),
    );
    let inconsistent = spin7_cone_dga(q(4)).and_then(|a| {
        let dt_star = a.parse("dt^star_psi")?;
        a.with_rule("star_psi", dt_star)
    });
    it.push(
        "inconsistent rule d(*psi) = dt^*psi is rejected",
        matches!(inconsistent, Err(Error::DifferentialSquare(_))),
        format!("{:?}", inconsistent.err()),
    );
    Ok(VerificationReport::new("spin7-cone", it.0))
}

/// Every structure-equation check, in a fixed order.
pub fn all_checks() -> Result<Vec<VerificationReport>> {
    Ok(vec![
        flag_nearly_kahler_check()?,
        g2_cone_check(ConeSource::FormalNk)?,
        g2_cone_check(ConeSource::FlagExplicit)?,
        s6_nearly_kahler_check()?,
        s7_nearly_parallel_check()?,
        spin7_cone_check()?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_points() {
        let pts = rational_sphere_points(7, 100);
        assert_eq!(pts[0][0], q(1));
        assert_eq!(pts[1][6], q(1));
        for p in &pts {
            assert_eq!(p.iter().map(|x| x * x).sum::<Q>(), q(1));
        }
        let x = inverse_stereographic(&[q(1), q(1), q(0)]);
        assert_eq!(x, vec![qf(-1, 3), qf(2, 3), qf(2, 3), q(0)]);
    }

    #[test]
    fn flag() {
        let r = flag_nearly_kahler_check().unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn cones() {
        for s in [ConeSource::FormalNk, ConeSource::FlagExplicit] {
            let r = g2_cone_check(s).unwrap();
            assert!(r.passed(), "{r}");
        }
        let r = spin7_cone_check().unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn spheres_few_points() {
        let r = s6_check_with(6).unwrap();
        assert!(r.passed(), "{r}");
        let r = s7_check_with(3).unwrap();
        assert!(r.passed(), "{r}");
    }
}
