//! Exact planar geometry: integer lines, rational points, and the
//! subdivision of a rectangular window by a finite set of lines.
//!
//! Faces are convex polygons. The complex is built by inserting one line at
//! a time and splitting every face it crosses; intersection points are
//! computed exactly, so a vertex shared by neighbouring faces is the same
//! rational point in both.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_rat(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: int_rat(x),
            y: int_rat(y),
        }
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Point {
        Point {
            x: &self.x + dx,
            y: &self.y + dy,
        }
    }
}

/// Lowest first, then leftmost.
impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.y.cmp(&other.y).then_with(|| self.x.cmp(&other.x))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The line `a·x + b·y + d = 0` in canonical form: `gcd(a, b, d) = 1` and
/// the first nonzero of `(a, b)` positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntLine {
    a: BigInt,
    b: BigInt,
    d: BigInt,
}

impl IntLine {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let (mut a, mut b, mut d) = (a.into(), b.into(), d.into());
        if a.is_zero() && b.is_zero() {
            return Err(invalid("a line needs (a, b) != (0, 0)"));
        }
        let g = a.gcd(&b).gcd(&d);
        a /= &g;
        b /= &g;
        d /= &g;
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            a = -a;
            b = -b;
            d = -d;
        }
        Ok(IntLine { a, b, d })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// `(a, b, d)` as a vector.
    pub fn coefficients(&self) -> [BigInt; 3] {
        [self.a.clone(), self.b.clone(), self.d.clone()]
    }

    pub fn eval(&self, p: &Point) -> Rational {
        &p.x * &self.a + &p.y * &self.b + &self.d
    }

    /// Sign of `a·x + b·y + d` at `p`, using integer arithmetic only.
    pub fn side(&self, p: &Point) -> Ordering {
        let (px, qx) = (p.x.numer(), p.x.denom());
        let (py, qy) = (p.y.numer(), p.y.denom());
        let v = &self.a * px * qy + &self.b * py * qx + &self.d * qx * qy;
        v.sign_cmp()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.side(p) == Ordering::Equal
    }

    /// The image of this line under `(x, y) ↦ (x + dx, y + dy)`.
    pub fn translate(&self, dx: &BigInt, dy: &BigInt) -> IntLine {
        let d = &self.d - &self.a * dx - &self.b * dy;
        IntLine {
            a: self.a.clone(),
            b: self.b.clone(),
            d,
        }
    }

    pub fn is_parallel(&self, other: &IntLine) -> bool {
        (&self.a * &other.b - &other.a * &self.b).is_zero()
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl fmt::Display for IntLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y + {} = 0", self.a, self.b, self.d)
    }
}

/// Unique intersection point, or `None` for parallel lines.
pub fn intersect(l1: &IntLine, l2: &IntLine) -> Option<Point> {
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return None;
    }
    let x = &l1.b * &l2.d - &l2.b * &l1.d;
    let y = &l2.a * &l1.d - &l1.a * &l2.d;
    Some(Point {
        x: Rational::new(x, det.clone()),
        y: Rational::new(y, det),
    })
}

/// Axis-aligned closed rectangle `[x_min, x_max] × [y_min, y_max]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub x_min: Rational,
    pub x_max: Rational,
    pub y_min: Rational,
    pub y_max: Rational,
}

impl Window {
    pub fn new(x_min: Rational, x_max: Rational, y_min: Rational, y_max: Rational) -> Result<Self> {
        if x_min >= x_max || y_min >= y_max {
            return Err(invalid("window must have positive width and height"));
        }
        Ok(Window {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }

    /// The square `[lo, hi]²`.
    pub fn square(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(lo.clone(), hi.clone(), lo, hi)
    }

    pub fn inflate(&self, margin: &Rational) -> Window {
        Window {
            x_min: &self.x_min - margin,
            x_max: &self.x_max + margin,
            y_min: &self.y_min - margin,
            y_max: &self.y_max + margin,
        }
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Window {
        Window {
            x_min: &self.x_min + dx,
            x_max: &self.x_max + dx,
            y_min: &self.y_min + dy,
            y_max: &self.y_max + dy,
        }
    }

    /// Corners in counterclockwise order from the lower left.
    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.x_min.clone(), self.y_min.clone()),
            Point::new(self.x_max.clone(), self.y_min.clone()),
            Point::new(self.x_max.clone(), self.y_max.clone()),
            Point::new(self.x_min.clone(), self.y_max.clone()),
        ]
    }

    pub fn area(&self) -> Rational {
        (&self.x_max - &self.x_min) * (&self.y_max - &self.y_min)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.x_min <= p.x && p.x <= self.x_max && self.y_min <= p.y && p.y <= self.y_max
    }

    /// Membership in `[x_min, x_max) × [y_min, y_max)`.
    pub fn contains_half_open(&self, p: &Point) -> bool {
        self.x_min <= p.x && p.x < self.x_max && self.y_min <= p.y && p.y < self.y_max
    }

    /// Whether the line passes through the closed window.
    pub fn meets(&self, line: &IntLine) -> bool {
        let sides: BTreeSet<Ordering> = self.corners().iter().map(|c| line.side(c)).collect();
        sides.contains(&Ordering::Equal)
            || (sides.contains(&Ordering::Less) && sides.contains(&Ordering::Greater))
    }
}

/// An edge of the complex between two vertex indices `from < to`;
/// `line` is `None` on the window boundary.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub line: Option<usize>,
}

/// A convex face, vertices counterclockwise from its lowest-leftmost one.
/// `edge_lines[k]` supports the edge from vertex `k` to vertex `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub edge_lines: Vec<Option<usize>>,
    /// No edge lies on the window boundary, so the face is a complete cell
    /// of the arrangement rather than a clipped piece of one.
    pub bounded: bool,
}

/// Subdivision of a window by lines.
#[derive(Clone, Debug)]
pub struct CellComplex {
    pub window: Window,
    /// Distinct canonical lines, sorted; faces refer to them by index.
    pub lines: Vec<IntLine>,
    /// Sorted lowest-then-leftmost.
    pub vertices: Vec<Point>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
}

impl CellComplex {
    pub fn face_points(&self, face: &Face) -> Vec<Point> {
        face.vertices
            .iter()
            .map(|&v| self.vertices[v].clone())
            .collect()
    }

    /// Distinct supporting lines of the face's edges, as indices into `lines`.
    pub fn supporting_lines(&self, face: &Face) -> BTreeSet<usize> {
        face.edge_lines.iter().flatten().copied().collect()
    }

    /// `V - E + F`, counting the region outside the window as a face.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64 + 1
    }

    /// Index of the face whose closure contains `p` in its interior, or
    /// `None` when `p` lies on an edge or outside the window.
    pub fn locate(&self, p: &Point) -> Option<usize> {
        self.faces.iter().position(|f| {
            let pts = self.face_points(f);
            (0..pts.len())
                .all(|k| orient(&pts[k], &pts[(k + 1) % pts.len()], p) == Ordering::Greater)
        })
    }
}

/// Twice the signed area of the triangle `(p, q, r)`, as a sign.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Ordering {
    let v = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    v.cmp(&Rational::zero())
}

/// Shoelace area of a polygon given counterclockwise.
pub fn polygon_area(points: &[Point]) -> Rational {
    let m = points.len();
    let mut twice = Rational::zero();
    for k in 0..m {
        let (p, q) = (&points[k], &points[(k + 1) % m]);
        twice += &p.x * &q.y - &q.x * &p.y;
    }
    twice / int_rat(2)
}

/// Vertex average; lies in the interior of a convex polygon.
pub fn barycenter(points: &[Point]) -> Point {
    let m = int_rat(points.len() as i64);
    let (sx, sy) = points
        .iter()
        .fold((Rational::zero(), Rational::zero()), |(sx, sy), p| {
            (sx + &p.x, sy + &p.y)
        });
    Point::new(sx / &m, sy / m)
}

#[derive(Clone, Debug)]
struct Poly {
    pts: Vec<Point>,
    sup: Vec<Option<usize>>,
}

/// Splits a convex polygon by `line`; `None` if the line misses its interior.
fn split(poly: &Poly, line: &IntLine, line_idx: usize) -> Option<(Poly, Poly)> {
    let m = poly.pts.len();
    let sides: Vec<Ordering> = poly.pts.iter().map(|p| line.side(p)).collect();
    if !sides.contains(&Ordering::Greater) || !sides.contains(&Ordering::Less) {
        return None;
    }
    let vals: Vec<Rational> = poly.pts.iter().map(|p| line.eval(p)).collect();
    // Pieces collect (point, side, index of the original edge it leaves along).
    let mut pos: Vec<(Point, Ordering, usize)> = Vec::with_capacity(m + 2);
    let mut neg: Vec<(Point, Ordering, usize)> = Vec::with_capacity(m + 2);
    for k in 0..m {
        let k1 = (k + 1) % m;
        let (sk, sn) = (sides[k], sides[k1]);
        if sk != Ordering::Less {
            pos.push((poly.pts[k].clone(), sk, k));
        }
        if sk != Ordering::Greater {
            neg.push((poly.pts[k].clone(), sk, k));
        }
        if (sk == Ordering::Greater && sn == Ordering::Less)
            || (sk == Ordering::Less && sn == Ordering::Greater)
        {
            let t = &vals[k] / (&vals[k] - &vals[k1]);
            let (p, q) = (&poly.pts[k], &poly.pts[k1]);
            let cut = Point::new(&p.x + (&q.x - &p.x) * &t, &p.y + (&q.y - &p.y) * &t);
            pos.push((cut.clone(), Ordering::Equal, k));
            neg.push((cut, Ordering::Equal, k));
        }
    }
    let close = |piece: Vec<(Point, Ordering, usize)>| {
        let r = piece.len();
        let sup = (0..r)
            .map(|k| {
                let (a, b) = (&piece[k], &piece[(k + 1) % r]);
                if a.1 == Ordering::Equal && b.1 == Ordering::Equal {
                    Some(line_idx)
                } else {
                    poly.sup[a.2]
                }
            })
            .collect();
        Poly {
            pts: piece.into_iter().map(|(p, _, _)| p).collect(),
            sup,
        }
    };
    Some((close(pos), close(neg)))
}

/// Rotates a polygon to start at its lowest-leftmost vertex.
fn normalise(mut poly: Poly) -> Poly {
    let start = (0..poly.pts.len())
        .min_by(|&i, &j| poly.pts[i].cmp(&poly.pts[j]))
        .unwrap_or(0);
    poly.pts.rotate_left(start);
    poly.sup.rotate_left(start);
    poly
}

/// Subdivides `window` by `lines` (duplicates are merged, lines missing the
/// window are ignored). Faces are ordered by their vertex sequences
/// compared lowest-then-leftmost.
pub fn build_cell_complex(lines: &[IntLine], window: &Window) -> CellComplex {
    let lines: Vec<IntLine> = lines
        .iter()
        .filter(|l| window.meets(l))
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut polys = vec![Poly {
        pts: window.corners().to_vec(),
        sup: vec![None; 4],
    }];
    for (idx, line) in lines.iter().enumerate() {
        let mut next = Vec::with_capacity(polys.len() + 8);
        for poly in polys {
            match split(&poly, line, idx) {
                Some((a, b)) => {
                    next.push(a);
                    next.push(b);
                }
                None => next.push(poly),
            }
        }
        polys = next;
    }
    let mut polys: Vec<Poly> = polys.into_iter().map(normalise).collect();
    polys.sort_by(|p, q| p.pts.cmp(&q.pts));

    let vertices: Vec<Point> = polys
        .iter()
        .flat_map(|p| p.pts.iter().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: BTreeMap<&Point, usize> = vertices.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut edges: BTreeMap<(usize, usize), Option<usize>> = BTreeMap::new();
    let faces = polys
        .iter()
        .map(|p| {
            let vs: Vec<usize> = p.pts.iter().map(|q| index[q]).collect();
            for k in 0..vs.len() {
                let (u, v) = (vs[k], vs[(k + 1) % vs.len()]);
                edges.insert((u.min(v), u.max(v)), p.sup[k]);
            }
            Face {
                bounded: p.sup.iter().all(Option::is_some),
                vertices: vs,
                edge_lines: p.sup.clone(),
            }
        })
        .collect();
    let edges = edges
        .into_iter()
        .map(|((from, to), line)| Edge { from, to, line })
        .collect();
    CellComplex {
        window: window.clone(),
        lines,
        vertices,
        edges,
        faces,
    }
}

/// Exact area sum of all faces; equals the window area.
pub fn total_area(cx: &CellComplex) -> Rational {
    cx.faces
        .iter()
        .map(|f| polygon_area(&cx.face_points(f)))
        .fold(Rational::zero(), |a, b| a + b)
}

pub(crate) fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(a: i64, b: i64, d: i64) -> IntLine {
        IntLine::new(a, b, d).unwrap()
    }

    fn unit() -> Window {
        Window::square(int_rat(0), int_rat(1)).unwrap()
    }

    #[test]
    fn canonical_lines() {
        assert_eq!(line(-2, 4, 6), line(1, -2, -3));
        assert_eq!(line(0, -3, 3), line(0, 1, -1));
        assert!(IntLine::new(0, 0, 1).is_err());
        assert_eq!(line(2, 0, -1).d(), &BigInt::from(-1));
    }

    #[test]
    fn intersections() {
        assert_eq!(
            intersect(&line(1, 0, 0), &line(0, 1, 0)),
            Some(Point::from_ints(0, 0))
        );
        assert_eq!(
            intersect(&line(1, 1, -1), &line(1, -1, 0)),
            Some(Point::new(rat(1, 2), rat(1, 2)))
        );
        assert_eq!(intersect(&line(1, 0, 0), &line(1, 0, -1)), None);
        let p = intersect(&line(3, 5, -7), &line(2, -1, 4)).unwrap();
        assert!(line(3, 5, -7).contains(&p) && line(2, -1, 4).contains(&p));
    }

    #[test]
    fn empty_arrangement_is_the_window() {
        let cx = build_cell_complex(&[], &unit());
        assert_eq!(cx.faces.len(), 1);
        assert_eq!(cx.vertices.len(), 4);
        assert!(!cx.faces[0].bounded);
        assert_eq!(cx.euler_characteristic(), 2);
    }

    #[test]
    fn one_line_splits_window() {
        let cx = build_cell_complex(&[line(2, 0, -1)], &unit());
        assert_eq!(cx.faces.len(), 2);
        assert_eq!(total_area(&cx), int_rat(1));
        assert_eq!(cx.euler_characteristic(), 2);
        // A line outside the window changes nothing.
        let cx = build_cell_complex(&[line(1, 0, -5)], &unit());
        assert_eq!(cx.faces.len(), 1);
    }

    #[test]
    fn triangle_cell() {
        let window = Window::square(int_rat(-1), int_rat(2)).unwrap();
        let cx = build_cell_complex(&[line(1, 0, 0), line(0, 1, 0), line(1, 1, -1)], &window);
        let k = cx.locate(&Point::new(rat(1, 4), rat(1, 4))).unwrap();
        let face = &cx.faces[k];
        assert!(face.bounded);
        assert_eq!(
            cx.face_points(face),
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(1, 0),
                Point::from_ints(0, 1)
            ]
        );
        assert_eq!(cx.supporting_lines(face).len(), 3);
        assert_eq!(
            barycenter(&cx.face_points(face)),
            Point::new(rat(1, 3), rat(1, 3))
        );
        assert_eq!(cx.faces.len(), 7);
        assert_eq!(cx.euler_characteristic(), 2);
        assert_eq!(total_area(&cx), int_rat(9));
        assert_eq!(cx.faces.iter().filter(|f| f.bounded).count(), 1);
    }

    #[test]
    fn concurrent_lines_share_vertex() {
        // Three lines through the origin plus the window.
        let window = Window::square(int_rat(-1), int_rat(1)).unwrap();
        let cx = build_cell_complex(&[line(1, 0, 0), line(0, 1, 0), line(1, 1, 0)], &window);
        assert_eq!(cx.faces.len(), 6);
        assert!(cx.vertices.contains(&Point::from_ints(0, 0)));
        assert_eq!(cx.euler_characteristic(), 2);
        assert_eq!(total_area(&cx), int_rat(4));
    }

    #[test]
    fn duplicate_lines_merge() {
        let cx = build_cell_complex(&[line(1, 1, -1), line(-2, -2, 2)], &unit());
        assert_eq!(cx.lines.len(), 1);
        assert_eq!(cx.faces.len(), 2);
    }

    #[test]
    fn grid_subdivision() {
        let window = Window::square(rat(-1, 2), rat(7, 2)).unwrap();
        let mut lines = Vec::new();
        for k in 0..=3 {
            lines.push(line(1, 0, -k));
            lines.push(line(0, 1, -k));
        }
        let cx = build_cell_complex(&lines, &window);
        assert_eq!(cx.faces.len(), 25);
        assert_eq!(cx.faces.iter().filter(|f| f.bounded).count(), 9);
        assert_eq!(cx.euler_characteristic(), 2);
        for f in cx.faces.iter().filter(|f| f.bounded) {
            assert_eq!(polygon_area(&cx.face_points(f)), int_rat(1));
        }
    }

    #[test]
    fn faces_are_convex_and_ccw() {
        let window = Window::square(int_rat(-2), int_rat(3)).unwrap();
        let lines: Vec<IntLine> = [
            (1, 2, -1),
            (2, -1, 0),
            (3, 1, -2),
            (1, -3, 1),
            (1, 1, 0),
            (0, 1, -1),
        ]
        .iter()
        .map(|&(a, b, d)| line(a, b, d))
        .collect();
        let cx = build_cell_complex(&lines, &window);
        for f in &cx.faces {
            let pts = cx.face_points(f);
            let m = pts.len();
            for k in 0..m {
                assert_eq!(
                    orient(&pts[k], &pts[(k + 1) % m], &pts[(k + 2) % m]),
                    Ordering::Greater
                );
            }
            for (k, sup) in f.edge_lines.iter().enumerate() {
                if let Some(l) = sup {
                    assert!(
                        cx.lines[*l].contains(&pts[k]) && cx.lines[*l].contains(&pts[(k + 1) % m])
                    );
                }
            }
        }
        assert_eq!(total_area(&cx), int_rat(25));
        assert_eq!(cx.euler_characteristic(), 2);
    }

    #[test]
    fn translation_moves_faces() {
        let window = Window::square(int_rat(-2), int_rat(3)).unwrap();
        let lines: Vec<IntLine> = [(1, 0, 0), (0, 1, 0), (1, 1, -1), (2, 1, -1)]
            .iter()
            .map(|&(a, b, d)| line(a, b, d))
            .collect();
        let (dx, dy) = (BigInt::from(1), BigInt::from(-2));
        let moved: Vec<IntLine> = lines.iter().map(|l| l.translate(&dx, &dy)).collect();
        let a = build_cell_complex(&lines, &window);
        let b = build_cell_complex(&moved, &window.translate(&int_rat(1), &int_rat(-2)));
        let shift = |cx: &CellComplex| -> BTreeSet<Vec<Point>> {
            cx.faces.iter().map(|f| cx.face_points(f)).collect()
        };
        let a_moved: BTreeSet<Vec<Point>> = shift(&a)
            .into_iter()
            .map(|pts| {
                pts.iter()
                    .map(|p| p.translate(&int_rat(1), &int_rat(-2)))
                    .collect()
            })
            .collect();
        assert_eq!(a_moved, shift(&b));
    }

    #[test]
    fn window_meets() {
        let w = unit();
        assert!(w.meets(&line(1, 0, 0)));
        assert!(w.meets(&line(1, 1, -2)));
        assert!(!w.meets(&line(1, 1, -3)));
        assert!(w.contains_half_open(&Point::from_ints(0, 0)));
        assert!(!w.contains_half_open(&Point::from_ints(1, 0)));
        assert!(Window::square(int_rat(1), int_rat(1)).is_err());
    }
}
