//! Rank-3 affine arrangements of imaginary type A₁⁽¹⁾.
//!
//! Given a cycle and a rank-2 chamber `(i, i+1)`, the positive roots
//! `R̂₊ ⊂ ℤ²` at that chamber are embedded as `(a, b, 0)` and shifted by every
//! integer multiple of the imaginary root `α₀ = (0, 0, 1)`:
//! `R = {(a, b, d) : (a, b) ∈ ±R̂₊, d ∈ ℤ}`. Intersecting the hyperplanes
//! `α^⊥` with the affine plane `z = 1` gives the periodic line family
//! `a·x + b·y + d = 0`, whose cells are the chambers of the arrangement.
//!
//! Since `(1,0)` and `(0,1)` are always roots, the family is invariant under
//! `ℤ²` translations and every cell lies in a closed unit square. One
//! translation cell, the half-open unit square, is the fundamental domain:
//! a cell belongs to it when its vertex barycenter does.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::exactgeom::{
    barycenter, build_cell_complex, int_rat, is_integer, CellComplex, IntLine, Point, Rational,
    Window,
};
use crate::quiddity::{Int, QuiddityCycle};
use crate::rank2roots::{positive_roots, Root2};

pub type Root3 = [Int; 3];

fn det3(m: &[Root3; 3]) -> Int {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn ceil_rat(r: &Rational) -> Int {
    r.ceil().to_integer()
}

fn floor_rat(r: &Rational) -> Int {
    r.floor().to_integer()
}

/// The root set `R` for one cycle and one rank-2 chamber, kept lazily as the
/// finite positive roots plus the unbounded `d` direction.
#[derive(Clone, Debug)]
pub struct AffineRootSet {
    cycle: QuiddityCycle,
    chamber: usize,
    finite: Vec<Root2>,
}

impl AffineRootSet {
    pub fn new(cycle: &QuiddityCycle, chamber: usize) -> Result<Self> {
        let sys = positive_roots(cycle, chamber)?;
        Ok(AffineRootSet {
            cycle: cycle.clone(),
            chamber,
            finite: sys.roots().to_vec(),
        })
    }

    pub fn cycle(&self) -> &QuiddityCycle {
        &self.cycle
    }

    pub fn chamber(&self) -> usize {
        self.chamber
    }

    /// `R̂₊`, the finite positive roots at the chosen chamber.
    pub fn finite_roots(&self) -> &[Root2] {
        &self.finite
    }

    pub fn imaginary_root() -> Root3 {
        [Int::zero(), Int::zero(), Int::one()]
    }

    /// Whether `(a, b, d)` is in `R`.
    pub fn contains(&self, r: &Root3) -> bool {
        self.finite
            .iter()
            .any(|f| (f.x == r[0] && f.y == r[1]) || (f.x == -&r[0] && f.y == -&r[1]))
    }

    /// Roots with `|d| <= d_bound`: for each positive root in vertex order,
    /// `(a, b, d)` then `(-a, -b, d)`, with `d` ascending.
    pub fn truncated_roots(&self, d_bound: u32) -> Vec<Root3> {
        let bound = i64::from(d_bound);
        let mut out = Vec::new();
        for f in &self.finite {
            for sign in [1i64, -1] {
                for d in -bound..=bound {
                    out.push([&f.x * sign, &f.y * sign, Int::from(d)]);
                }
            }
        }
        out
    }

    /// Slice lines `a·x + b·y + d = 0` meeting `window` inflated by `margin`.
    pub fn slice_lines(&self, window: &Window, margin: &Rational) -> Vec<IntLine> {
        let big = window.inflate(margin);
        let mut lines = Vec::new();
        for f in &self.finite {
            let values: Vec<Rational> = big
                .corners()
                .iter()
                .map(|p| &p.x * &f.x + &p.y * &f.y)
                .collect();
            let lo = values.iter().min().expect("four corners");
            let hi = values.iter().max().expect("four corners");
            let mut d = ceil_rat(&-hi);
            let d_max = floor_rat(&-lo);
            while d <= d_max {
                lines
                    .push(IntLine::new(f.x.clone(), f.y.clone(), d.clone()).expect("nonzero root"));
                d += 1;
            }
        }
        lines.sort();
        lines.dedup();
        lines
    }

    pub fn cell_complex(&self, cfg: &DomainConfig) -> CellComplex {
        build_cell_complex(&self.slice_lines(&cfg.window, &cfg.margin), &cfg.window)
    }

    /// Cells of the fundamental domain, in canonical face order.
    pub fn fundamental_cells(&self) -> Vec<Chamber3> {
        self.fundamental_cells_with(&DomainConfig::default())
    }

    pub fn fundamental_cells_with(&self, cfg: &DomainConfig) -> Vec<Chamber3> {
        let cx = self.cell_complex(cfg);
        let filter = cfg.filter_square();
        cx.faces
            .iter()
            .filter_map(|f| {
                let pts = cx.face_points(f);
                let center = barycenter(&pts);
                if !filter.contains_half_open(&center) {
                    return None;
                }
                let mut walls = BTreeSet::new();
                for (k, sup) in f.edge_lines.iter().enumerate() {
                    let wall = match sup {
                        Some(l) => cx.lines[*l].clone(),
                        // A window side at an integer coordinate is itself a
                        // slice line, so the face is not clipped there.
                        None => grid_line(&pts[k], &pts[(k + 1) % pts.len()])?,
                    };
                    walls.insert(wall);
                }
                Some(Chamber3::new(pts, center, walls.into_iter().collect()))
            })
            .collect()
    }
}

/// The line `x = k` or `y = k` through a window side, if `k` is an integer.
fn grid_line(p: &Point, q: &Point) -> Option<IntLine> {
    let line = if p.x == q.x {
        is_integer(&p.x).then(|| IntLine::new(1, 0, -p.x.to_integer()))
    } else {
        is_integer(&p.y).then(|| IntLine::new(0, 1, -p.y.to_integer()))
    };
    line.map(|l| l.expect("nonzero normal"))
}

/// Where the slice complex is built and which translation cell is kept.
#[derive(Clone, Debug)]
pub struct DomainConfig {
    pub window: Window,
    pub margin: Rational,
    /// Lower-left corner of the unit square used as fundamental domain.
    pub offset: (Int, Int),
}

impl Default for DomainConfig {
    /// Window `[-1, 2]²`, margin 1, fundamental square `[0, 1)²`.
    fn default() -> Self {
        DomainConfig {
            window: Window::square(int_rat(-1), int_rat(2)).expect("nondegenerate"),
            margin: int_rat(1),
            offset: (Int::zero(), Int::zero()),
        }
    }
}

impl DomainConfig {
    /// Window equal to the unit square itself. Its sides are slice lines,
    /// so the faces of the complex are exactly the fundamental cells; this
    /// is the cheapest configuration and the one used for sweeps.
    pub fn unit() -> Self {
        DomainConfig {
            window: Window::square(int_rat(0), int_rat(1)).expect("nondegenerate"),
            margin: Rational::zero(),
            offset: (Int::zero(), Int::zero()),
        }
    }

    /// Same configuration shifted by an integer vector.
    pub fn shifted(&self, dx: i64, dy: i64) -> Self {
        let (rx, ry) = (int_rat(dx), int_rat(dy));
        DomainConfig {
            window: self.window.translate(&rx, &ry),
            margin: self.margin.clone(),
            offset: (&self.offset.0 + dx, &self.offset.1 + dy),
        }
    }

    pub fn filter_square(&self) -> Window {
        let (x, y) = (
            Rational::from_integer(self.offset.0.clone()),
            Rational::from_integer(self.offset.1.clone()),
        );
        Window::new(x.clone(), &x + int_rat(1), y.clone(), &y + int_rat(1)).expect("unit square")
    }
}

/// One cell of the slice, with its walls and inward root vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber3 {
    /// Counterclockwise from the lowest-leftmost vertex.
    pub vertices: Vec<Point>,
    pub barycenter: Point,
    pub walls: Vec<IntLine>,
    /// `(a, b, d)` per wall, signed so that `a·x + b·y + d > 0` inside.
    pub normals: Vec<Root3>,
    /// `|det|` of the three normals when the cell is a triangle.
    pub det_abs: Option<Int>,
}

impl Chamber3 {
    fn new(vertices: Vec<Point>, barycenter: Point, walls: Vec<IntLine>) -> Self {
        let normals: Vec<Root3> = walls
            .iter()
            .map(|w| {
                let v = w.coefficients();
                if w.eval(&barycenter).is_positive() {
                    v
                } else {
                    v.map(|x| -x)
                }
            })
            .collect();
        let det_abs = (normals.len() == 3 && vertices.len() == 3)
            .then(|| det3(&[normals[0].clone(), normals[1].clone(), normals[2].clone()]).abs());
        Chamber3 {
            vertices,
            barycenter,
            walls,
            normals,
            det_abs,
        }
    }

    pub fn is_triangle(&self) -> bool {
        self.vertices.len() == 3 && self.walls.len() == 3
    }

    fn basis(&self) -> Option<[Root3; 3]> {
        self.is_triangle().then(|| {
            [
                self.normals[0].clone(),
                self.normals[1].clone(),
                self.normals[2].clone(),
            ]
        })
    }

    /// Coordinates of `r` in the basis of the three wall roots.
    pub fn coordinates(&self, r: &Root3) -> Option<[Rational; 3]> {
        let basis = self.basis()?;
        let det = det3(&basis);
        if det.is_zero() {
            return None;
        }
        let coord = |k: usize| {
            let mut m = basis.clone();
            m[k] = r.clone();
            Rational::new(det3(&m), det.clone())
        };
        Some([coord(0), coord(1), coord(2)])
    }

    pub fn translated(&self, dx: i64, dy: i64) -> Chamber3 {
        let (rx, ry) = (int_rat(dx), int_rat(dy));
        let (bx, by) = (Int::from(dx), Int::from(dy));
        let vertices = self
            .vertices
            .iter()
            .map(|p| p.translate(&rx, &ry))
            .collect();
        let walls = self.walls.iter().map(|w| w.translate(&bx, &by)).collect();
        Chamber3::new(vertices, self.barycenter.translate(&rx, &ry), walls)
    }
}

impl fmt::Display for Chamber3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.vertices.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", pts.join(", "))
    }
}

#[derive(Clone, Debug)]
pub struct SimplicialityReport {
    pub simplicial: bool,
    pub cells: usize,
    /// First fundamental-domain cell that is not a triangle.
    pub witness: Option<Chamber3>,
}

pub fn simpliciality_of(cells: &[Chamber3]) -> SimplicialityReport {
    let witness = cells.iter().find(|c| !c.is_triangle()).cloned();
    SimplicialityReport {
        simplicial: witness.is_none(),
        cells: cells.len(),
        witness,
    }
}

/// Whether every fundamental-domain cell is a triangle.
pub fn is_simplicial_affine(c: &QuiddityCycle, chamber: usize) -> Result<SimplicialityReport> {
    Ok(simpliciality_of(
        &AffineRootSet::new(c, chamber)?.fundamental_cells(),
    ))
}

/// Histogram of base-change determinants between each cell and a reference
/// cell `K`.
///
/// `K` is the first cell (canonical order) whose wall roots have the
/// smallest `|det|`; a cell with wall-root determinant `det` is keyed by
/// `|det(K)| / |det|`, the determinant of the matrix expressing `K`'s wall
/// roots in that cell's basis. All keys are therefore at most 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetClasses {
    pub reference: usize,
    pub reference_det: Int,
    pub histogram: BTreeMap<Rational, usize>,
}

impl DetClasses {
    pub fn total(&self) -> usize {
        self.histogram.values().sum()
    }
}

fn require_simplicial(cells: &[Chamber3]) -> Result<()> {
    match cells.iter().find(|c| !c.is_triangle()) {
        Some(w) => Err(Error::NotSimplicial(format!(
            "cell {w} has {} walls",
            w.walls.len()
        ))),
        None => Ok(()),
    }
}

pub fn determinant_classes_of(cells: &[Chamber3]) -> Result<DetClasses> {
    require_simplicial(cells)?;
    let dets: Vec<Int> = cells
        .iter()
        .map(|c| c.det_abs.clone().expect("triangles carry a determinant"))
        .collect();
    let (reference, reference_det) = dets
        .iter()
        .enumerate()
        .fold(None::<(usize, &Int)>, |best, (k, d)| match best {
            Some((_, b)) if b <= d => best,
            _ => Some((k, d)),
        })
        .ok_or_else(|| invalid("no cells in the fundamental domain"))?;
    let reference_det = reference_det.clone();
    if dets.iter().any(Zero::is_zero) {
        return Err(Error::InvariantViolation(
            "wall roots are linearly dependent".into(),
        ));
    }
    let mut histogram = BTreeMap::new();
    for d in &dets {
        *histogram
            .entry(Rational::new(reference_det.clone(), d.clone()))
            .or_insert(0) += 1;
    }
    Ok(DetClasses {
        reference,
        reference_det,
        histogram,
    })
}

pub fn determinant_classes(c: &QuiddityCycle, chamber: usize) -> Result<DetClasses> {
    determinant_classes_of(&AffineRootSet::new(c, chamber)?.fundamental_cells())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaViolation {
    /// Some coordinate is not an integer.
    NonIntegral,
    /// Integral coordinates of both signs.
    MixedSign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaWitness {
    /// Index into the fundamental cells.
    pub cell: usize,
    pub chamber: Chamber3,
    pub root: Root3,
    pub coordinates: [Rational; 3],
    pub kind: CaViolation,
}

#[derive(Clone, Debug)]
pub struct CaReport {
    pub d_bound: u32,
    /// No violation among the truncated roots. This is not a proof for
    /// the infinite root set; a violation, however, is conclusive.
    pub holds: bool,
    pub violations: usize,
    pub non_integral: usize,
    /// First non-integral violation in (cell, root) order, or else the first
    /// mixed-sign one.
    pub witness: Option<CaWitness>,
}

fn classify(coords: &[Rational; 3]) -> Option<CaViolation> {
    if !coords.iter().all(is_integer) {
        return Some(CaViolation::NonIntegral);
    }
    let all_nonneg = coords.iter().all(|x| !x.is_negative());
    let all_nonpos = coords.iter().all(|x| !x.is_positive());
    (!all_nonneg && !all_nonpos).then_some(CaViolation::MixedSign)
}

pub fn crystallographic_check_of(
    set: &AffineRootSet,
    cells: &[Chamber3],
    d_bound: u32,
) -> Result<CaReport> {
    if d_bound < 2 {
        return Err(invalid(format!(
            "d_bound must be at least 2, got {d_bound}"
        )));
    }
    require_simplicial(cells)?;
    let roots = set.truncated_roots(d_bound);
    let per_cell: Vec<Vec<(Root3, [Rational; 3], CaViolation)>> = cells
        .par_iter()
        .map(|cell| {
            roots
                .iter()
                .filter_map(|r| {
                    let coords = cell.coordinates(r).expect("independent wall roots");
                    classify(&coords).map(|kind| (r.clone(), coords, kind))
                })
                .collect()
        })
        .collect();
    let violations = per_cell.iter().map(Vec::len).sum();
    let non_integral = per_cell
        .iter()
        .flatten()
        .filter(|v| v.2 == CaViolation::NonIntegral)
        .count();
    let pick = |want: CaViolation| {
        per_cell.iter().enumerate().find_map(|(k, vs)| {
            vs.iter()
                .find(|v| v.2 == want)
                .map(|(root, coords, kind)| CaWitness {
                    cell: k,
                    chamber: cells[k].clone(),
                    root: root.clone(),
                    coordinates: coords.clone(),
                    kind: *kind,
                })
        })
    };
    let witness = pick(CaViolation::NonIntegral).or_else(|| pick(CaViolation::MixedSign));
    Ok(CaReport {
        d_bound,
        holds: violations == 0,
        violations,
        non_integral,
        witness,
    })
}

/// Checks `R ⊆ ±Σ ℕ₀·α_k` at every fundamental-domain chamber, for the roots
/// with `|d| <= d_bound`.
pub fn crystallographic_check(c: &QuiddityCycle, chamber: usize, d_bound: u32) -> Result<CaReport> {
    let set = AffineRootSet::new(c, chamber)?;
    let cells = set.fundamental_cells();
    crystallographic_check_of(&set, &cells, d_bound)
}

/// Number of hyperplanes through the intersection point nearest to the
/// origin on the wall belonging to vertex `i`.
///
/// The chamber `(i-1, i)` is used, so the wall root of vertex `i` is
/// `(1, 0, 0)` and its slice line is `x = 0`. Every other slice line meets
/// it at `(0, -d/b)`; the nearest such point other than the origin is
/// `(0, -1/b_max)` and the count is the number of lines through it.
pub fn m_alpha(c: &QuiddityCycle, i: usize) -> Result<usize> {
    let n = c.len();
    if n < 3 {
        return Err(invalid("m_alpha needs a cycle of length at least 3"));
    }
    if i == 0 || i > n {
        return Err(invalid(format!("vertex {i} outside 1..={n}")));
    }
    let chamber = if i == 1 { n } else { i - 1 };
    let set = AffineRootSet::new(c, chamber)?;
    let wall = Root2::new(1, 0);
    let others: Vec<&Root2> = set.finite_roots().iter().filter(|r| **r != wall).collect();
    // Intersection heights on x = 0 are -d/b for d ≠ 0; the smallest in
    // absolute value comes from d = 1 and the largest |b|.
    let b_max = others
        .iter()
        .map(|r| r.y.abs())
        .max()
        .filter(|b| !b.is_zero())
        .ok_or_else(|| Error::InvariantViolation("no root meets the wall".into()))?;
    let nearest = Rational::new(-Int::one(), b_max);
    let p = Point::new(Rational::zero(), nearest);
    let through = others
        .iter()
        .filter(|r| {
            // Some integer d makes a·0 + b·y + d vanish.
            let v = &p.y * Rational::from_integer(r.y.clone());
            is_integer(&v)
        })
        .count();
    Ok(through)
}

/// Per-chamber results for one cycle.
#[derive(Clone, Debug)]
pub struct ChamberSummary {
    pub chamber: usize,
    pub cells: usize,
    pub simplicial: bool,
    pub det_classes: Option<BTreeMap<Rational, usize>>,
}

/// Runs the cell count, simpliciality and determinant analysis at every
/// rank-2 chamber of `c`.
pub fn chamber_scan(c: &QuiddityCycle, cfg: &DomainConfig) -> Result<Vec<ChamberSummary>> {
    (1..=c.len())
        .into_par_iter()
        .map(|chamber| {
            let cells = AffineRootSet::new(c, chamber)?.fundamental_cells_with(cfg);
            let report = simpliciality_of(&cells);
            let det_classes = report
                .simplicial
                .then(|| determinant_classes_of(&cells).map(|d| d.histogram))
                .transpose()?;
            Ok(ChamberSummary {
                chamber,
                cells: cells.len(),
                simplicial: report.simplicial,
                det_classes,
            })
        })
        .collect()
}

/// `gcd` of the three coordinates of a root.
pub fn content(r: &Root3) -> Int {
    r[0].gcd(&r[1]).gcd(&r[2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::IntLine;

    fn cyc(v: &[i64]) -> QuiddityCycle {
        QuiddityCycle::from_i64s(v).unwrap()
    }

    fn root(a: i64, b: i64, d: i64) -> Root3 {
        [Int::from(a), Int::from(b), Int::from(d)]
    }

    #[test]
    fn slice_lines_for_triangle() {
        let set = AffineRootSet::new(&cyc(&[1, 1, 1]), 1).unwrap();
        let unit = Window::square(int_rat(0), int_rat(1)).unwrap();
        let lines: BTreeSet<IntLine> = set.slice_lines(&unit, &int_rat(1)).into_iter().collect();
        for k in -1..=2 {
            assert!(lines.contains(&IntLine::new(1, 0, -k).unwrap()));
            assert!(lines.contains(&IntLine::new(0, 1, -k).unwrap()));
            assert!(lines.contains(&IntLine::new(1, 1, -k).unwrap()));
        }
        assert!(lines.contains(&IntLine::new(1, 1, -3).unwrap()));
        // Direct membership: a line is listed iff it meets [-1, 2]².
        let big = unit.inflate(&int_rat(1));
        for f in set.finite_roots() {
            for d in -10..=10 {
                let l = IntLine::new(f.x.clone(), f.y.clone(), d).unwrap();
                assert_eq!(lines.contains(&l), big.meets(&l), "{l}");
            }
        }
    }

    #[test]
    fn slice_lines_translate() {
        let set = AffineRootSet::new(&cyc(&[1, 2, 1, 2]), 1).unwrap();
        let w = Window::square(int_rat(0), int_rat(1)).unwrap();
        let a: BTreeSet<IntLine> = set
            .slice_lines(&w, &int_rat(1))
            .iter()
            .map(|l| l.translate(&Int::from(1), &Int::zero()))
            .collect();
        let b: BTreeSet<IntLine> = set
            .slice_lines(&w.translate(&int_rat(1), &int_rat(0)), &int_rat(1))
            .into_iter()
            .collect();
        assert_eq!(a, b);
    }

    #[test]
    fn triangle_arrangement_cells() {
        let set = AffineRootSet::new(&cyc(&[1, 1, 1]), 1).unwrap();
        let cells = set.fundamental_cells();
        assert_eq!(cells.len(), 2);
        assert!(cells.iter().all(Chamber3::is_triangle));
        let dets = determinant_classes_of(&cells).unwrap();
        assert_eq!(dets.histogram, BTreeMap::from([(int_rat(1), 2)]));
        assert_eq!(dets.reference_det, Int::one());
        // Normals point inward.
        for cell in &cells {
            for nrm in &cell.normals {
                let l = IntLine::new(nrm[0].clone(), nrm[1].clone(), nrm[2].clone()).unwrap();
                let v = &cell.barycenter.x * &nrm[0] + &cell.barycenter.y * &nrm[1] + &nrm[2];
                assert!(v.is_positive(), "{l}");
            }
        }
    }

    #[test]
    fn coordinates_in_wall_basis() {
        let set = AffineRootSet::new(&cyc(&[1, 1, 1]), 1).unwrap();
        let cells = set.fundamental_cells();
        let lower = cells
            .iter()
            .find(|c| c.vertices.contains(&Point::from_ints(0, 0)))
            .unwrap();
        // Walls x > 0, y > 0, 1 - x - y > 0.
        let coords = lower.coordinates(&root(1, 1, 2)).unwrap();
        let mut sorted = coords.to_vec();
        sorted.sort();
        assert_eq!(sorted, vec![int_rat(2), int_rat(3), int_rat(3)]);
    }

    #[test]
    fn simpliciality_small() {
        assert!(
            is_simplicial_affine(&cyc(&[1, 1, 1]), 1)
                .unwrap()
                .simplicial
        );
        assert!(
            is_simplicial_affine(&cyc(&[1, 2, 1, 2]), 1)
                .unwrap()
                .simplicial
        );
        let r = is_simplicial_affine(&cyc(&[1, 2, 2, 1, 3]), 1).unwrap();
        assert!(!r.simplicial);
        assert!(r.witness.unwrap().vertices.len() > 3);
    }

    #[test]
    fn det_and_ca_refuse_non_simplicial() {
        let c = cyc(&[1, 2, 2, 1, 3]);
        assert!(matches!(
            determinant_classes(&c, 1),
            Err(Error::NotSimplicial(_))
        ));
        assert!(matches!(
            crystallographic_check(&c, 1, 2),
            Err(Error::NotSimplicial(_))
        ));
        assert!(crystallographic_check(&cyc(&[1, 1, 1]), 1, 1).is_err());
    }

    #[test]
    fn crystallographic_small() {
        let r = crystallographic_check(&cyc(&[1, 1, 1]), 1, 3).unwrap();
        assert!(r.holds && r.witness.is_none());
        let r = crystallographic_check(&cyc(&[1, 2, 1, 2]), 1, 3).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn root_set_shape() {
        let set = AffineRootSet::new(&cyc(&[1, 2, 1, 2]), 1).unwrap();
        assert!(set.contains(&root(2, 1, 5)));
        assert!(set.contains(&root(-2, -1, -7)));
        assert!(!set.contains(&root(1, 2, 0)));
        assert!(!set.contains(&AffineRootSet::imaginary_root()));
        let roots = set.truncated_roots(2);
        assert_eq!(roots.len(), 4 * 2 * 5);
        for r in &roots {
            assert!(set.contains(r));
            let mut up = r.clone();
            up[2] += 1;
            assert!(set.contains(&up));
            assert!(content(r).is_one());
        }
    }

    #[test]
    fn m_alpha_small() {
        let c = cyc(&[1, 1, 1]);
        for i in 1..=3 {
            assert_eq!(m_alpha(&c, i).unwrap(), 2);
        }
        assert_eq!(m_alpha(&cyc(&[3, 1, 4, 1, 3, 1, 4, 1]), 1).unwrap(), 2);
        assert!(m_alpha(&c, 4).is_err());
    }
}
