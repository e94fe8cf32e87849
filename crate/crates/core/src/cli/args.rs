use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "holonomy", version, about = "Exact exterior algebra, special structures and structure-equation checks")]
pub struct Cli {
    /// Output document format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Add decimal approximations next to exact rationals.
    #[arg(long, global = true)]
    pub decimal: bool,
    /// Include a generation timestamp.
    #[arg(long, global = true)]
    pub timestamp: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Frame,
    Coordinate,
}

/// Where a JSON document comes from.
#[derive(clap::Args, Debug, Clone)]
pub struct Input {
    /// Path to a JSON file.
    pub file: Option<PathBuf>,
    /// Inline JSON instead of a file.
    #[arg(long)]
    pub json: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Curvature tensor decomposition and sectional curvature.
    #[command(subcommand)]
    Curvature(CurvatureCmd),
    /// G2 form splittings and stabilizer.
    #[command(subcommand)]
    G2(G2Cmd),
    /// Spin(7) form splittings.
    #[command(subcommand)]
    Spin7(Spin7Cmd),
    /// Octonion multiplication.
    #[command(subcommand)]
    Octonion(OctonionCmd),
    /// Root systems and su(2) / so(3) representations.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Exact structure-equation checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// SVG output.
    #[command(subcommand)]
    Diagram(DiagramCmd),
}

#[derive(Subcommand, Debug)]
pub enum CurvatureCmd {
    /// Scalar, traceless Ricci and Weyl parts of a curvature tensor.
    Decompose {
        #[command(flatten)]
        input: Input,
    },
    /// Sectional curvature of the plane spanned by X and Y.
    Sectional {
        #[command(flatten)]
        input: Input,
        /// Comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum G2Cmd {
    /// Split a 2- or 3-form into G2 modules.
    Split {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Variant::Frame)]
        variant: Variant,
    },
    /// Stabilizer of φ in so(7).
    Stabilizer {
        #[arg(long, value_enum, default_value_t = Variant::Frame)]
        variant: Variant,
    },
}

#[derive(Subcommand, Debug)]
pub enum Spin7Cmd {
    /// Split a 2-, 3- or 4-form on ℝ⁸ into Spin(7) modules.
    Split {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum OctonionCmd {
    /// Multiplication table of the basis e0..e7.
    Table {
        #[arg(long, value_enum, default_value_t = Variant::Frame)]
        variant: Variant,
    },
}

#[derive(Subcommand, Debug)]
pub enum RepCmd {
    /// Roots, simple roots, fundamental weights and Weyl group order.
    Roots { algebra: String },
    /// Clebsch–Gordan decomposition of V_k ⊗ V_l.
    Cg { k: usize, l: usize },
    /// Decomposition of H_m ⊗ H_n, S²H_m or Λ²H_m.
    So3 { kind: String, m: usize, n: Option<usize> },
    /// Torus weights of V_k ⊗ V_l and the irreducibles peeled from them.
    Weights { k: usize, l: usize },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Maurer–Cartan and nearly-Kähler identities on the flag SU(3)/T².
    FlagNk,
    /// Closedness of φ and ψ on the cone over a nearly-Kähler 6-manifold.
    G2Cone {
        /// `formal` (NK algebra) or `explicit` (flag coframe).
        #[arg(long, default_value = "formal")]
        mode: String,
    },
    /// Nearly-Kähler identities on S⁶ at sampled rational points.
    S6Nk,
    /// Nearly parallel G2 identity on S⁷ at sampled rational points.
    S7Np,
    /// Closedness of Φ on the cone over a nearly parallel G2 7-manifold.
    Spin7Cone,
    /// Every structure check, aggregated.
    All,
}

#[derive(Subcommand, Debug)]
pub enum DiagramCmd {
    /// Root diagram of a rank-2 algebra as SVG.
    Roots {
        algebra: String,
        /// Output path; defaults to `<algebra>_roots.svg` in $HOLONOMY_OUT_DIR.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}
