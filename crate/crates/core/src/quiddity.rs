//! η-matrices, quiddity cycles and the bijection with polygon triangulations.
//!
//! A quiddity cycle is built recursively: `(0,0)` is a cycle, rotations and
//! reversals of cycles are cycles, and inserting an ear
//! `(c_1, ..., c_n) ↦ (c_1+1, 1, c_2+1, c_3, ..., c_n)` yields a cycle.
//! Recognition runs this recursion backwards by removing ears until `(0,0)`
//! is reached. The matrix identity `η(c_1)⋯η(c_n) = -id` is a consequence,
//! not the definition.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};

/// The integer type shared by cycle entries, frieze entries and root coordinates.
pub type Int = BigInt;

/// 2×2 integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[Int; 2]; 2]);

impl Mat2 {
    pub fn new(a: Int, b: Int, c: Int, d: Int) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn identity() -> Self {
        Mat2::new(Int::one(), Int::zero(), Int::zero(), Int::one())
    }

    pub fn neg_identity() -> Self {
        Mat2::new(-Int::one(), Int::zero(), Int::zero(), -Int::one())
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &Int {
        &self.0[row][col]
    }

    pub fn det(&self) -> Int {
        let m = &self.0;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        Mat2([
            [
                &a[0][0] * &b[0][0] + &a[0][1] * &b[1][0],
                &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1],
            ],
            [
                &a[1][0] * &b[0][0] + &a[1][1] * &b[1][0],
                &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1],
            ],
        ])
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

/// `η(a)`, the matrix with rows `(a, -1)` and `(1, 0)`.
pub fn eta(a: &Int) -> Mat2 {
    Mat2::new(a.clone(), -Int::one(), Int::one(), Int::zero())
}

/// `ξ(a) = η(a)η(1)`.
pub fn xi(a: &Int) -> Mat2 {
    &eta(a) * &eta(&Int::one())
}

/// Left-to-right product `η(c_1)⋯η(c_n)`. The empty product is the identity.
pub fn eta_product(seq: &[Int]) -> Mat2 {
    seq.iter().fold(Mat2::identity(), |acc, a| &acc * &eta(a))
}

/// Converts machine integers into the crate's integer type.
pub fn ints(seq: &[i64]) -> Vec<Int> {
    seq.iter().map(|&v| Int::from(v)).collect()
}

fn is_base(seq: &[Int]) -> bool {
    seq.len() == 2 && seq.iter().all(Zero::is_zero)
}

/// Removes the entry at 0-based `k` and decrements its two cyclic neighbours.
fn remove_at(seq: &[Int], k: usize) -> Vec<Int> {
    let n = seq.len();
    let mut out = seq.to_vec();
    out[(k + n - 1) % n] -= 1;
    out[(k + 1) % n] -= 1;
    out.remove(k);
    out
}

/// Inserts an ear after 0-based `k`, so the new entry sits at index `k + 1`.
fn insert_after(seq: &[Int], k: usize) -> Vec<Int> {
    let n = seq.len();
    let mut out = Vec::with_capacity(n + 1);
    out.extend_from_slice(&seq[..=k]);
    out[k] += 1;
    out.push(Int::one());
    if k + 1 < n {
        out.extend_from_slice(&seq[k + 1..]);
        out[k + 2] += 1;
    } else {
        out[0] += 1;
    }
    out
}

/// Decides membership in the recursively defined set of quiddity cycles.
///
/// Ears are stripped one at a time until either `(0,0)` remains or no ear is
/// left. Stripping any ear of a valid cycle leaves a valid cycle, so the
/// greedy choice is complete.
pub fn is_quiddity_cycle(seq: &[Int]) -> bool {
    let mut cur = seq.to_vec();
    loop {
        if cur.len() < 2 {
            return false;
        }
        if cur.len() == 2 {
            return is_base(&cur);
        }
        if cur.iter().any(|c| !c.is_positive()) {
            return false;
        }
        match cur.iter().position(One::is_one) {
            Some(k) => cur = remove_at(&cur, k),
            None => return false,
        }
    }
}

/// A quiddity cycle, stored as a plain sequence with a distinguished start.
///
/// Two cycles that differ by a rotation are different values; use
/// [`QuiddityCycle::min_rotation`] to normalise where rotation classes are
/// meant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuiddityCycle(Vec<Int>);

impl QuiddityCycle {
    pub fn new(entries: Vec<Int>) -> Result<Self> {
        if is_quiddity_cycle(&entries) {
            Ok(QuiddityCycle(entries))
        } else {
            Err(Error::NotACycle(format_seq(&entries)))
        }
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        Self::new(ints(entries))
    }

    /// The unique cycle of length 2.
    pub fn base() -> Self {
        QuiddityCycle(vec![Int::zero(), Int::zero()])
    }

    /// Wraps a sequence already known to be a cycle.
    pub(crate) fn new_unchecked(entries: Vec<Int>) -> Self {
        debug_assert!(is_quiddity_cycle(&entries), "{}", format_seq(&entries));
        QuiddityCycle(entries)
    }

    pub fn entries(&self) -> &[Int] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Int> {
        self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Entry `c_i` for a 1-based, cyclically wrapped position.
    pub fn entry(&self, i: isize) -> &Int {
        let n = self.0.len() as isize;
        &self.0[((i - 1).rem_euclid(n)) as usize]
    }

    /// Entries as `i64`, for the small values that enumeration produces.
    pub fn to_i64s(&self) -> Vec<i64> {
        self.0
            .iter()
            .map(|c| c.to_i64().expect("cycle entry exceeds i64"))
            .collect()
    }

    pub fn eta_product(&self) -> Mat2 {
        eta_product(&self.0)
    }

    /// `(c_{k+1}, ..., c_n, c_1, ..., c_k)`; negative `k` rotates the other way.
    pub fn rotate(&self, k: isize) -> Self {
        let n = self.0.len() as isize;
        let mut v = self.0.clone();
        v.rotate_left(k.rem_euclid(n) as usize);
        QuiddityCycle(v)
    }

    pub fn reverse(&self) -> Self {
        let mut v = self.0.clone();
        v.reverse();
        QuiddityCycle(v)
    }

    /// Lexicographically smallest rotation; the representative of the
    /// rotation class.
    pub fn min_rotation(&self) -> Self {
        (0..self.len() as isize)
            .map(|k| self.rotate(k))
            .min()
            .expect("cycles are nonempty")
    }

    /// Smallest `p > 0` with `rotate(p) == self`.
    pub fn rotational_period(&self) -> usize {
        let n = self.len();
        (1..=n)
            .find(|&p| n.is_multiple_of(p) && self.0[p..].iter().zip(&self.0).all(|(a, b)| a == b))
            .unwrap_or(n)
    }

    /// Inserts a new ear between positions `i` and `i + 1` (1-based, with
    /// `i = n` meaning between `n` and `1`). The new ear sits at `i + 1`.
    pub fn insert_ear(&self, i: usize) -> Result<Self> {
        let n = self.len();
        if i == 0 || i > n {
            return Err(invalid(format!("position {i} outside 1..={n}")));
        }
        Ok(QuiddityCycle(insert_after(&self.0, i - 1)))
    }

    /// Removes the ear at 1-based position `i`, decrementing its neighbours.
    pub fn remove_ear(&self, i: usize) -> Result<Self> {
        let n = self.len();
        if n < 3 {
            return Err(invalid("cannot remove an ear from a cycle of length 2"));
        }
        if i == 0 || i > n {
            return Err(invalid(format!("position {i} outside 1..={n}")));
        }
        if !self.0[i - 1].is_one() {
            return Err(invalid(format!("position {i} is not an ear of {self}")));
        }
        Ok(QuiddityCycle(remove_at(&self.0, i - 1)))
    }

    /// 1-based positions `i` with `c_i = 1`.
    pub fn ears(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_one())
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// Whether some rotation equals `(n-2, 1, 2, ..., 2, 1)`, i.e. all
    /// triangles share one vertex.
    pub fn is_fan_shaped(&self) -> bool {
        let n = self.len();
        if n < 3 {
            return false;
        }
        let mut fan = vec![Int::from(2); n];
        fan[0] = Int::from(n as i64 - 2);
        fan[1] = Int::one();
        fan[n - 1] = Int::one();
        (0..n as isize).any(|k| self.rotate(k).0 == fan)
    }

    /// Strips every ear of a cycle whose even positions are all `1`:
    /// `(c_1, 1, c_3, 1, ...) ↦ (c_1 - 2, c_3 - 2, ...)`.
    pub fn psi(&self) -> Result<Self> {
        let n = self.len();
        if !n.is_multiple_of(2) || n < 4 {
            return Err(invalid(format!(
                "psi needs an even length of at least 4, got {self}"
            )));
        }
        if self.0.iter().skip(1).step_by(2).any(|c| !c.is_one()) {
            return Err(invalid(format!(
                "psi needs 1 at every even position, got {self}"
            )));
        }
        let out: Vec<Int> = self.0.iter().step_by(2).map(|c| c - 2).collect();
        if !is_quiddity_cycle(&out) {
            return Err(Error::InvariantViolation(format!(
                "psi({self}) = {} is not a cycle",
                format_seq(&out)
            )));
        }
        Ok(QuiddityCycle(out))
    }

    /// Inverse of [`psi`](Self::psi): `(c_1, c_2, ...) ↦ (c_1 + 2, 1, c_2 + 2, 1, ...)`.
    pub fn psi_inv(&self) -> Self {
        let out = self.0.iter().flat_map(|c| [c + 2, Int::one()]).collect();
        QuiddityCycle::new_unchecked(out)
    }

    /// Triangulation with vertex degrees equal to the entries.
    ///
    /// Built by peeling ears: each ear `i` with live neighbours `p, q`
    /// contributes the triangle `(p, i, q)`.
    pub fn to_triangulation(&self) -> Result<Triangulation> {
        let n = self.len();
        if n < 3 {
            return Err(invalid("the cycle (0,0) has no triangulation"));
        }
        let mut live: Vec<(usize, Int)> = self
            .0
            .iter()
            .enumerate()
            .map(|(k, c)| (k + 1, c.clone()))
            .collect();
        let mut triangles = Vec::with_capacity(n - 2);
        while live.len() > 3 {
            let m = live.len();
            let k = live
                .iter()
                .position(|(_, c)| c.is_one())
                .ok_or_else(|| Error::InvariantViolation(format!("no ear left in {self}")))?;
            let prev = (k + m - 1) % m;
            let next = (k + 1) % m;
            triangles.push(sorted3([live[prev].0, live[k].0, live[next].0]));
            live[prev].1 -= 1;
            live[next].1 -= 1;
            live.remove(k);
        }
        triangles.push(sorted3([live[0].0, live[1].0, live[2].0]));
        Triangulation::new(n, triangles)
    }
}

impl fmt::Display for QuiddityCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_seq(&self.0))
    }
}

pub(crate) fn format_seq(seq: &[Int]) -> String {
    let parts: Vec<String> = seq.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Number of subtrees the enumeration search is split into.
const SHARD_DEPTH: usize = 6;

/// Canonical parent position of a cycle of length `>= 3`: its first ear at
/// a 0-based index `>= 1`. Every such cycle has one, since ears of cycles of
/// length at least 4 are never adjacent.
fn canonical_ear(seq: &[Int]) -> Option<usize> {
    seq.iter().skip(1).position(One::is_one).map(|k| k + 1)
}

/// Children of `seq` in the canonical search tree: ear insertions whose new
/// ear is the child's canonical ear. Each cycle has exactly one parent.
fn children(seq: &[Int]) -> impl Iterator<Item = Vec<Int>> + '_ {
    (0..seq.len()).filter_map(move |k| {
        let child = insert_after(seq, k);
        (canonical_ear(&child) == Some(k + 1)).then_some(child)
    })
}

fn collect_subtree(seq: Vec<Int>, n: usize, out: &mut Vec<Vec<Int>>) {
    if seq.len() == n {
        out.push(seq);
        return;
    }
    for child in children(&seq) {
        collect_subtree(child, n, out);
    }
}

/// The search-tree nodes at which the enumeration of length-`n` cycles is
/// split, in a fixed order.
fn shard_roots(n: usize) -> Vec<Vec<Int>> {
    let depth = n.min(SHARD_DEPTH);
    let mut level = vec![QuiddityCycle::base().0];
    while level[0].len() < depth {
        level = level.iter().flat_map(|s| children(s)).collect();
    }
    level
}

/// Number of independent shards [`enumerate_shard`] accepts for length `n`.
pub fn shard_count(n: usize) -> usize {
    shard_roots(n).len()
}

/// Cycles of length `n` in shard `shard` of [`shard_count`]`(n)`, unsorted.
///
/// Shards are disjoint and together produce every cycle exactly once, so
/// they can be run on separate workers and merged in any order.
pub fn enumerate_shard(n: usize, shard: usize) -> Result<Vec<QuiddityCycle>> {
    if n < 2 {
        return Err(invalid(format!("cycle length must be at least 2, got {n}")));
    }
    let roots = shard_roots(n);
    let root = roots
        .get(shard)
        .ok_or_else(|| invalid(format!("shard {shard} out of range 0..{}", roots.len())))?;
    let mut out = Vec::new();
    collect_subtree(root.clone(), n, &mut out);
    Ok(out.into_iter().map(QuiddityCycle).collect())
}

/// All quiddity cycles of length `n` (rotations counted separately), in
/// lexicographic order. There are `C_{n-2}` of them.
pub fn enumerate_cycles(n: usize) -> Result<Vec<QuiddityCycle>> {
    if n < 2 {
        return Err(invalid(format!("cycle length must be at least 2, got {n}")));
    }
    let roots = shard_roots(n);
    let mut all: Vec<QuiddityCycle> = roots
        .into_par_iter()
        .flat_map_iter(|root| {
            let mut out = Vec::new();
            collect_subtree(root, n, &mut out);
            out.into_iter().map(QuiddityCycle)
        })
        .collect();
    all.sort_unstable();
    Ok(all)
}

fn sorted3(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

/// A triangulation of the convex `n`-gon with vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    n: usize,
    triangles: Vec<[usize; 3]>,
}

impl Triangulation {
    /// Validates and normalises (sorted triples, sorted list).
    pub fn new(n: usize, triangles: Vec<[usize; 3]>) -> Result<Self> {
        if n < 3 {
            return Err(invalid(format!(
                "a triangulated polygon needs n >= 3, got {n}"
            )));
        }
        let mut tris: Vec<[usize; 3]> = triangles.into_iter().map(sorted3).collect();
        tris.sort_unstable();
        if tris.len() != n - 2 {
            return Err(invalid(format!(
                "expected {} triangles, got {}",
                n - 2,
                tris.len()
            )));
        }
        let mut side_use: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for t in &tris {
            if t[0] == 0 || t[2] > n || t[0] == t[1] || t[1] == t[2] {
                return Err(invalid(format!("bad triangle {t:?} for n = {n}")));
            }
            for (u, v) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                *side_use.entry((u, v)).or_default() += 1;
            }
        }
        let is_side = |u: usize, v: usize| v == u + 1 || (u == 1 && v == n);
        for u in 1..=n {
            let (a, b) = if u < n { (u, u + 1) } else { (1, n) };
            if side_use.get(&(a, b)) != Some(&1) {
                return Err(invalid(format!(
                    "polygon side ({a},{b}) not covered exactly once"
                )));
            }
        }
        let diagonals: Vec<(usize, usize)> = side_use
            .iter()
            .filter(|(&(u, v), _)| !is_side(u, v))
            .map(|(&e, &k)| (e, k))
            .map(|(e, k)| {
                if k == 2 {
                    Ok(e)
                } else {
                    Err(invalid(format!("diagonal {e:?} used {k} times")))
                }
            })
            .collect::<Result<_>>()?;
        for (i, &(a, b)) in diagonals.iter().enumerate() {
            for &(c, d) in &diagonals[i + 1..] {
                if crosses((a, b), (c, d)) {
                    return Err(invalid(format!("diagonals ({a},{b}) and ({c},{d}) cross")));
                }
            }
        }
        let tri = Triangulation { n, triangles: tris };
        if !tri.dual_is_tree() {
            return Err(invalid("dual graph is not a tree"));
        }
        Ok(tri)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Diagonals as sorted pairs `(u, v)`, `u < v`.
    pub fn diagonals(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let set: BTreeSet<(usize, usize)> = self
            .triangles
            .iter()
            .flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])])
            .filter(|&(u, v)| !(v == u + 1 || (u == 1 && v == n)))
            .collect();
        set.into_iter().collect()
    }

    /// Edges of the dual tree, as pairs of indices into [`triangles`](Self::triangles).
    pub fn dual_tree(&self) -> Vec<(usize, usize)> {
        let mut owner: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut edges = Vec::new();
        for (k, t) in self.triangles.iter().enumerate() {
            for e in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                if let Some(&j) = owner.get(&e) {
                    edges.push((j, k));
                } else {
                    owner.insert(e, k);
                }
            }
        }
        edges
    }

    fn dual_is_tree(&self) -> bool {
        let m = self.triangles.len();
        let edges = self.dual_tree();
        if edges.len() + 1 != m {
            return false;
        }
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (a, b) in edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    /// Whether `u` and `v` are joined by a polygon side or a diagonal.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (u, v) = (u.min(v), u.max(v));
        self.triangles
            .iter()
            .any(|t| t.contains(&u) && t.contains(&v) && u != v)
    }

    /// Number of triangles at each vertex, vertex `k` at index `k - 1`.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for t in &self.triangles {
            for &v in t {
                deg[v - 1] += 1;
            }
        }
        deg
    }

    pub fn to_cycle(&self) -> QuiddityCycle {
        let entries = self
            .vertex_degrees()
            .into_iter()
            .map(|d| Int::from(d as u64))
            .collect();
        QuiddityCycle::new_unchecked(entries)
    }
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}
