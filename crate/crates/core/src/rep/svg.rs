use super::roots::RootSystem;
use crate::error::{Error, Result};
use std::fmt::Write;

const SIZE: f64 = 400.0;

fn fmt(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

/// Roots as arrows, the dominant chamber shaded, fundamental weights as dots.
pub fn root_diagram_svg(rs: &RootSystem) -> Result<String> {
    let r = rs.rank();
    if r > 2 {
        return Err(Error::Unsupported(format!("root diagrams need rank ≤ 2, got {r}")));
    }
    let pt = |v: &[crate::rational::Q]| -> Result<(f64, f64)> {
        let d = rs.display_f64(v)?;
        Ok((d[0], if r == 2 { d[1] } else { 0.0 }))
    };
    let roots: Vec<(f64, f64)> = rs.roots.iter().map(|a| pt(a)).collect::<Result<_>>()?;
    let weights: Vec<(f64, f64)> = rs.fundamental_weights.iter().map(|w| pt(w)).collect::<Result<_>>()?;
    let extent = roots.iter().chain(&weights).map(|(x, y)| x.abs().max(y.abs())).fold(1.0, f64::max);
    let scale = 0.4 * SIZE / extent;
    let c = SIZE / 2.0;
    let map = |(x, y): (f64, f64)| (c + scale * x, c - scale * y);

    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#, SIZE).unwrap();
    writeln!(s, r#"<defs><marker id="head" markerWidth="8" markerHeight="8" refX="6" refY="3" orient="auto"><path d="M0,0 L6,3 L0,6 z"/></marker></defs>"#).unwrap();
    writeln!(s, r##"<line x1="0" y1="{0}" x2="{1}" y2="{0}" stroke="#999" stroke-dasharray="4"/>"##, fmt(c), fmt(SIZE)).unwrap();
    if r == 2 {
        writeln!(s, r##"<line x1="{0}" y1="0" x2="{0}" y2="{1}" stroke="#999" stroke-dasharray="4"/>"##, fmt(c), fmt(SIZE)).unwrap();
        let far = |(x, y): (f64, f64)| {
            let len = (x * x + y * y).sqrt();
            map((x / len * extent * 1.2, y / len * extent * 1.2))
        };
        let (a, b) = (far(weights[0]), far(weights[1]));
        writeln!(
            s,
            r#"<polygon points="{},{} {},{} {},{}" fill="green" fill-opacity="0.15"/>"#,
            fmt(c),
            fmt(c),
            fmt(a.0),
            fmt(a.1),
            fmt(b.0),
            fmt(b.1)
        )
        .unwrap();
    } else {
        let (x, _) = map((extent * 1.2, 0.0));
        writeln!(s, r#"<line x1="{0}" y1="{0}" x2="{1}" y2="{0}" stroke="green" stroke-opacity="0.3" stroke-width="8"/>"#, fmt(c), fmt(x)).unwrap();
    }
    for p in &roots {
        let (x, y) = map(*p);
        writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="2" marker-end="url(#head)"/>"#, fmt(c), fmt(c), fmt(x), fmt(y)).unwrap();
    }
    for p in &weights {
        let (x, y) = map(*p);
        writeln!(s, r#"<circle cx="{}" cy="{}" r="4" fill="blue"/>"#, fmt(x), fmt(y)).unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}
