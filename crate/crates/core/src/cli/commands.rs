use super::args::*;
use super::input::*;
use super::Outcome;
use crate::curvature::{decompose, is_einstein, ricci, sectional_curvature, weyl_norm2};
use crate::error::{Error, Result};
use crate::invariant::{self, ConeSource, VerificationReport};
use crate::rational::Q;
use crate::rep::{self, Plethysm};
use crate::special::{
    is_closed_under_commutator, octonion_label, spin7_from_g2, standard_g2_form, G2Structure, G2Variant, OctonionAlgebra,
};
use serde_json::{json, Value};
use std::path::PathBuf;

/// Environment variable naming the default directory for written artifacts.
pub const OUT_DIR_VAR: &str = "HOLONOMY_OUT_DIR";

fn g2(v: Variant) -> G2Structure {
    standard_g2_form(match v {
        Variant::Frame => G2Variant::Frame,
        Variant::Coordinate => G2Variant::Coordinate,
    })
}

fn labels(prefix: &str, ds: &[usize]) -> Value {
    Value::Array(ds.iter().map(|d| Value::String(format!("{prefix}{d}"))).collect())
}

pub(crate) fn run(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Curvature(c) => curvature(c),
        Command::G2(c) => g2_cmd(c),
        Command::Spin7(Spin7Cmd::Split { input, degree }) => {
            let s = spin7_from_g2(&g2(Variant::Coordinate))?;
            let w = parse_multivector(&read(input)?, s.space())?;
            check_degree(w.degree(), *degree)?;
            let dec = s.decomposition(*degree)?;
            let parts = dec.project(&w)?;
            Ok(Outcome::ok(split_json(dec.names(), &dec.dims(), &dec.dimension_row(), &parts)))
        }
        Command::Octonion(OctonionCmd::Table { variant }) => {
            let o = OctonionAlgebra::new(&g2(*variant));
            let table: Vec<Vec<String>> = o.table().iter().map(|row| row.iter().map(|v| octonion_label(v)).collect()).collect();
            Ok(Outcome::ok(json!({"basis": (0..8).map(|i| format!("e{i}")).collect::<Vec<_>>(), "table": table})))
        }
        Command::Rep(c) => rep_cmd(c),
        Command::Verify(c) => verify(c),
        Command::Diagram(DiagramCmd::Roots { algebra, svg }) => {
            let rs = rep::roots_from_torus(&rep::by_name(algebra)?)?;
            let doc = rep::root_diagram_svg(&rs)?;
            let path = match svg {
                Some(p) => p.clone(),
                None => match std::env::var_os(OUT_DIR_VAR) {
                    Some(dir) => {
                        let dir = PathBuf::from(dir);
                        std::fs::create_dir_all(&dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
                        dir.join(format!("{algebra}_roots.svg"))
                    }
                    None => return Err(Error::InvalidInput(format!("pass --svg <path> or set {OUT_DIR_VAR}"))),
                },
            };
            std::fs::write(&path, &doc).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            Ok(Outcome::ok(json!({"algebra": algebra, "path": path.display().to_string(), "bytes": doc.len()})))
        }
    }
}

fn check_degree(got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::Degree(format!("--degree {want} but the input has degree {got}")));
    }
    Ok(())
}

fn split_json(names: &[String], dims: &[usize], row: &str, parts: &[crate::exterior::Multivector]) -> Value {
    let ps: Vec<Value> = names
        .iter()
        .zip(dims)
        .zip(parts)
        .map(|((n, d), p)| json!({"module": n, "dim": d, "is_zero": p.is_zero(), "part": multivector_json(p)}))
        .collect();
    json!({"dimension_row": row, "parts": ps})
}

fn curvature(c: &CurvatureCmd) -> Result<Outcome> {
    match c {
        CurvatureCmd::Decompose { input } => {
            let r = parse_curvature(&read(input)?)?;
            let d = decompose(&r)?;
            Ok(Outcome::ok(json!({
                "n": r.n(),
                "scalar": q_json(&d.scalar),
                "ricci": matrix_json(ricci(&r).matrix()),
                "traceless_ricci": matrix_json(d.traceless_ricci.matrix()),
                "weyl_norm2": q_json(&weyl_norm2(&d)),
                "einstein": is_einstein(&r),
                "parts": {
                    "scalar": tensor_json(&d.scalar_part),
                    "traceless_ricci": tensor_json(&d.z_part),
                    "weyl": tensor_json(&d.weyl_part),
                },
            })))
        }
        CurvatureCmd::Sectional { input, x, y } => {
            let r = parse_curvature(&read(input)?)?;
            let (x, y) = (parse_vector(x)?, parse_vector(y)?);
            let k = sectional_curvature(&r, &x, &y)?;
            Ok(Outcome::ok(json!({"x": vector_json(&x), "y": vector_json(&y), "sectional": q_json(&k)})))
        }
    }
}

fn g2_cmd(c: &G2Cmd) -> Result<Outcome> {
    match c {
        G2Cmd::Split { input, degree, variant } => {
            let g = g2(*variant);
            let w = parse_multivector(&read(input)?, g.space())?;
            check_degree(w.degree(), *degree)?;
            let (dec, parts) = match degree {
                2 => {
                    let (a, b) = g.two_form_split(&w)?;
                    (g.two_form_decomposition(), vec![a, b])
                }
                3 => {
                    let (a, b, c) = g.three_form_split(&w)?;
                    (g.three_form_decomposition(), vec![a, b, c])
                }
                d => return Err(Error::Degree(format!("G2 splits are defined for degrees 2 and 3, not {d}"))),
            };
            Ok(Outcome::ok(split_json(dec.names(), &dec.dims(), &dec.dimension_row(), &parts)))
        }
        G2Cmd::Stabilizer { variant } => {
            let g = g2(*variant);
            let basis = g.stabilizer();
            let names = (0..basis.len()).map(|i| format!("A{i}")).collect();
            let l = rep::LieAlgebraPresentation::from_real_matrices(names, basis.clone())?;
            let k = l.killing_form();
            Ok(Outcome::ok(json!({
                "dim": basis.len(),
                "closed_under_commutator": is_closed_under_commutator(&basis),
                "killing_negative_definite": k.scale(&crate::rational::q(-1)).is_positive_definite(),
                "basis": basis.iter().map(matrix_json).collect::<Vec<_>>(),
            })))
        }
    }
}

fn rep_cmd(c: &RepCmd) -> Result<Outcome> {
    match c {
        RepCmd::Roots { algebra } => {
            let rs = rep::roots_from_torus(&rep::by_name(algebra)?)?;
            let disp = |vs: &[Vec<Q>]| vs.iter().map(|v| rs.display_string(v)).collect::<Result<Vec<_>>>();
            Ok(Outcome::ok(json!({
                "algebra": algebra,
                "rank": rs.rank(),
                "roots": disp(&rs.roots)?,
                "positive": disp(&rs.positive)?,
                "simple": disp(&rs.simple)?,
                "fundamental_weights": disp(&rs.fundamental_weights)?,
                "cartan_matrix": matrix_json(&rs.cartan_matrix()),
                "weyl_group_order": rs.weyl_group_order()?,
                "warnings": rs.warnings,
            })))
        }
        RepCmd::Cg { k, l } => Ok(Outcome::ok(labels("V", &rep::clebsch_gordan_su2(*k, *l)))),
        RepCmd::So3 { kind, m, n } => {
            let kind: Plethysm = kind.parse()?;
            Ok(Outcome::ok(labels("H", &rep::so3_plethysm(kind, *m, *n)?)))
        }
        RepCmd::Weights { k, l } => {
            let (weights, irreps) = rep::su2_tensor_weights(*k, *l)?;
            let ws: Vec<Value> = weights.iter().map(|(w, m)| json!({"weight": vector_json(w), "multiplicity": m})).collect();
            Ok(Outcome::ok(json!({"weights": ws, "irreducibles": labels("V", &irreps)})))
        }
    }
}

fn report_outcome(reports: Vec<VerificationReport>) -> Result<Outcome> {
    let failures = reports.iter().filter(|r| !r.passed()).count();
    let payload = if reports.len() == 1 {
        serde_json::to_value(&reports[0])
    } else {
        serde_json::to_value(json!({"failures": failures, "reports": reports}))
    }
    .map_err(|e| Error::Io(e.to_string()))?;
    Ok(if failures == 0 { Outcome::ok(payload) } else { Outcome::failed(payload) })
}

fn verify(c: &VerifyCmd) -> Result<Outcome> {
    let reports = match c {
        VerifyCmd::FlagNk => vec![invariant::flag_nearly_kahler_check()?],
        VerifyCmd::G2Cone { mode } => vec![invariant::g2_cone_check(mode.parse::<ConeSource>()?)?],
        VerifyCmd::S6Nk => vec![invariant::s6_nearly_kahler_check()?],
        VerifyCmd::S7Np => vec![invariant::s7_nearly_parallel_check()?],
        VerifyCmd::Spin7Cone => vec![invariant::spin7_cone_check()?],
        VerifyCmd::All => {
            let mut all = super::reports::algebraic_checks()?;
            all.extend(invariant::all_checks()?);
            all
        }
    };
    report_outcome(reports)
}
