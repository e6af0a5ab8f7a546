//! Command implementations behind the `frieze` binary. Each command returns
//! its complete output so the binary only has to print or save it.

pub mod json;
pub mod svg;

use std::collections::BTreeMap;
use std::str::FromStr;

use clap::ValueEnum;
use frieze_core::affine3::{
    crystallographic_check_of, determinant_classes_of, simpliciality_of, AffineRootSet,
    DomainConfig,
};
use frieze_core::exactgeom::{int_rat, Rational, Window};
use frieze_core::frieze::is_dense;
use frieze_core::quiddity::enumerate_cycles;
use frieze_core::rank2roots::positive_roots;
use frieze_core::{FriezeTable, Int, QuiddityCycle};
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::json::{
    bigs, root_pair, AffineJson, Big, CaWitnessJson, CycleJson, FriezeJson, RootsJson,
    TriangulationJson,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl From<frieze_core::Error> for CliError {
    fn from(e: frieze_core::Error) -> Self {
        match e {
            frieze_core::Error::InvariantViolation(m) => CliError::Invariant(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FriezeFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AffineCheck {
    Simplicial,
    Count,
    Det,
    Ca,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RenderWhat {
    Triangulation,
    Arrangement,
}

/// Parses `"3,1,4,1"` and checks that it is a quiddity cycle.
pub fn parse_cycle(s: &str) -> Result<QuiddityCycle> {
    let entries = s
        .split(',')
        .map(|t| {
            Int::from_str(t.trim())
                .map_err(|_| CliError::Input(format!("{:?} is not an integer", t.trim())))
        })
        .collect::<Result<Vec<Int>>>()?;
    Ok(QuiddityCycle::new(entries)?)
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim())
        .map_err(|_| CliError::Input(format!("{s:?} is not a rational number")))
}

/// Parses `"x_min,x_max,y_min,y_max"`.
pub fn parse_window(s: &str) -> Result<Window> {
    let parts = s
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    match <[Rational; 4]>::try_from(parts) {
        Ok([x0, x1, y0, y1]) => Ok(Window::new(x0, x1, y0, y1)?),
        Err(_) => Err(CliError::Input(
            "window needs four comma-separated bounds".into(),
        )),
    }
}

fn to_line<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

fn cycle_json(c: &QuiddityCycle) -> CycleJson {
    CycleJson {
        c: bigs(c.entries()),
    }
}

/// One `{"c":[...]}` line per cycle of length `n`, sorted.
pub fn enumerate(n: usize, dense: bool, up_to_rotation: bool) -> Result<String> {
    let mut cycles = enumerate_cycles(n)?;
    if dense {
        cycles.retain(is_dense);
    }
    if up_to_rotation {
        cycles = cycles.iter().map(QuiddityCycle::min_rotation).collect();
        cycles.sort();
        cycles.dedup();
    }
    Ok(cycles
        .iter()
        .map(|c| to_line(&cycle_json(c)) + "\n")
        .collect())
}

pub fn frieze(c: &QuiddityCycle, format: FriezeFormat) -> Result<String> {
    let table = FriezeTable::new(c)?;
    Ok(match format {
        FriezeFormat::Text => table.render_text(),
        FriezeFormat::Json => {
            let report = FriezeJson {
                c: bigs(c.entries()),
                phi: table.matrix().iter().map(|row| bigs(row)).collect(),
                m: (1..=c.len()).map(|i| table.m_set(i).members).collect(),
            };
            to_line(&report) + "\n"
        }
    })
}

pub fn triangulate(c: &QuiddityCycle) -> Result<String> {
    let t = c.to_triangulation()?;
    Ok(to_line(&TriangulationJson {
        n: t.n(),
        triangles: t.triangles().to_vec(),
    }) + "\n")
}

pub fn roots(c: &QuiddityCycle, chamber: usize) -> Result<String> {
    let sys = positive_roots(c, chamber)?;
    let report = RootsJson {
        c: bigs(c.entries()),
        chamber,
        roots: sys.roots().iter().map(root_pair).collect(),
        max: sys.maximal_roots().iter().map(root_pair).collect(),
    };
    Ok(to_line(&report) + "\n")
}

pub fn affine(
    c: &QuiddityCycle,
    chamber: usize,
    check: AffineCheck,
    d_bound: u32,
) -> Result<AffineJson> {
    let set = AffineRootSet::new(c, chamber)?;
    let cells = set.fundamental_cells();
    let simp = simpliciality_of(&cells);
    let mut report = AffineJson {
        c: bigs(c.entries()),
        chamber,
        simplicial: simp.simplicial,
        cells: cells.len(),
        witness: None,
        det_classes: None,
        crystallographic: None,
        d_bound: None,
        ca_witness: None,
    };
    match check {
        AffineCheck::Count => {}
        AffineCheck::Simplicial => {
            report.witness = simp.witness.map(|w| {
                w.vertices
                    .iter()
                    .map(|p| [p.x.to_string(), p.y.to_string()])
                    .collect()
            });
        }
        AffineCheck::Det => {
            let classes = determinant_classes_of(&cells)?;
            report.det_classes = Some(
                classes
                    .histogram
                    .iter()
                    .map(|(r, k)| (r.to_string(), *k))
                    .collect::<BTreeMap<_, _>>(),
            );
        }
        AffineCheck::Ca => {
            let ca = crystallographic_check_of(&set, &cells, d_bound)?;
            report.crystallographic = Some(ca.holds);
            report.d_bound = Some(d_bound);
            report.ca_witness = ca.witness.map(|w| CaWitnessJson {
                cell: w.cell,
                root: w.root.clone().map(Big),
                coordinates: w.coordinates.clone().map(|x| x.to_string()),
            });
        }
    }
    Ok(report)
}

pub fn affine_json(
    c: &QuiddityCycle,
    chamber: usize,
    check: AffineCheck,
    d_bound: u32,
) -> Result<String> {
    Ok(to_line(&affine(c, chamber, check, d_bound)?) + "\n")
}

fn positive_f64(scale: &Rational) -> Result<f64> {
    match scale.to_f64() {
        Some(s) if scale.is_positive() && s.is_finite() => Ok(s),
        _ => Err(CliError::Input(format!(
            "scale must be positive, got {scale}"
        ))),
    }
}

/// SVG of the triangulation; `scale` is the circumradius in pixels.
pub fn render_triangulation(c: &QuiddityCycle, scale: &Rational) -> Result<String> {
    let t = c.to_triangulation()?;
    Ok(svg::triangulation(c, &t, positive_f64(scale)?))
}

/// SVG of the slice arrangement at `chamber` inside `window` (default the
/// unit square); `scale` is pixels per unit length.
pub fn render_arrangement(
    c: &QuiddityCycle,
    chamber: usize,
    window: Option<Window>,
    scale: &Rational,
) -> Result<String> {
    let set = AffineRootSet::new(c, chamber)?;
    let window = match window {
        Some(w) => w,
        None => Window::square(int_rat(0), int_rat(1))?,
    };
    let cfg = DomainConfig {
        window,
        margin: int_rat(0),
        ..DomainConfig::unit()
    };
    Ok(svg::arrangement(
        &set.cell_complex(&cfg),
        positive_f64(scale)?,
    ))
}
