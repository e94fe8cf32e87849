//! Root data for su(2), su(3) and g2, with SVG root diagrams written to a temp directory.

use holonomy::rep::{by_name, root_diagram_svg, roots_from_torus};

fn main() -> holonomy::Result<()> {
    let dir = std::env::temp_dir().join("holonomy-roots");
    std::fs::create_dir_all(&dir).map_err(|e| holonomy::Error::Io(e.to_string()))?;
    for name in ["su2", "su3", "g2"] {
        let rs = roots_from_torus(&by_name(name)?)?;
        println!("{name}: {} roots, Weyl group order {}", rs.roots.len(), rs.weyl_group_order()?);
        for a in &rs.simple {
            println!("  simple {}", rs.display_string(a)?);
        }
        println!("  Cartan matrix row 1 {}", show(&rs.cartan_matrix().row(0)));
        let path = dir.join(format!("{name}_roots.svg"));
        std::fs::write(&path, root_diagram_svg(&rs)?).map_err(|e| holonomy::Error::Io(e.to_string()))?;
        println!("  wrote {}", path.display());
    }
    Ok(())
}

fn show(v: &[holonomy::rational::Q]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}
