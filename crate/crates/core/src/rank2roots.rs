//! Positive roots of the rank-2 root system attached to a cycle, and their
//! componentwise poset.
//!
//! At the chamber `(i, i+1)` the positive roots are
//! `{(φ_i(j), φ_{i+1}(j)) : j = 1..n}`. Chambers are indexed by their left
//! vertex `i`, cyclically.

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::frieze::FriezeTable;
use crate::quiddity::{Int, QuiddityCycle};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root2 {
    pub x: Int,
    pub y: Int,
}

impl Root2 {
    pub fn new(x: impl Into<Int>, y: impl Into<Int>) -> Self {
        Root2 {
            x: x.into(),
            y: y.into(),
        }
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &Root2) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// `self.x > other.x` and `self.y > other.y`.
    pub fn strictly_dominates(&self, other: &Root2) -> bool {
        self.x > other.x && self.y > other.y
    }
}

impl fmt::Display for Root2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// The positive roots at one chamber, listed by vertex `j = 1..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem2 {
    cycle: QuiddityCycle,
    chamber: usize,
    roots: Vec<Root2>,
}

impl RootSystem2 {
    pub fn cycle(&self) -> &QuiddityCycle {
        &self.cycle
    }

    pub fn chamber(&self) -> usize {
        self.chamber
    }

    /// Root of vertex `j` at index `j - 1`.
    pub fn roots(&self) -> &[Root2] {
        &self.roots
    }

    /// Maximal elements of the componentwise order, in vertex order.
    pub fn maximal_roots(&self) -> Vec<Root2> {
        maximal_elements(&self.roots)
    }
}

/// Maximal elements of a finite set under the componentwise order.
pub fn maximal_elements(roots: &[Root2]) -> Vec<Root2> {
    roots
        .iter()
        .filter(|r| !roots.iter().any(|s| s != *r && r.leq(s)))
        .cloned()
        .collect()
}

pub fn positive_roots_from_table(table: &FriezeTable, i: usize) -> Result<RootSystem2> {
    let n = table.n();
    if i == 0 || i > n {
        return Err(invalid(format!("chamber {i} outside 1..={n}")));
    }
    let (a, b) = (i as isize, i as isize + 1);
    let roots: Vec<Root2> = (1..=n as isize)
        .map(|j| Root2 {
            x: table.phi(a, j).clone(),
            y: table.phi(b, j).clone(),
        })
        .collect();
    Ok(RootSystem2 {
        cycle: table.cycle().clone(),
        chamber: i,
        roots,
    })
}

/// Positive roots at chamber `(i, i+1)`.
pub fn positive_roots(c: &QuiddityCycle, i: usize) -> Result<RootSystem2> {
    positive_roots_from_table(&FriezeTable::new(c)?, i)
}

/// A chamber whose root poset has a unique maximal element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxChamber {
    pub chamber: usize,
    pub max: Root2,
    /// `max` exceeds every other root in both coordinates.
    pub strict: bool,
}

/// The smallest chamber with a unique maximal root. For non-dense cycles
/// the smallest chamber whose maximum strictly dominates every other root
/// is returned instead; such a chamber always exists.
pub fn unique_max_chamber(c: &QuiddityCycle) -> Result<MaxChamber> {
    let table = FriezeTable::new(c)?;
    let want_strict = !table.is_dense();
    let mut first_unique = None;
    for i in 1..=c.len() {
        let sys = positive_roots_from_table(&table, i)?;
        let maxima = sys.maximal_roots();
        if maxima.len() != 1 {
            continue;
        }
        let max = maxima.into_iter().next().expect("one element");
        let strict = sys
            .roots()
            .iter()
            .filter(|r| **r != max)
            .all(|r| max.strictly_dominates(r));
        let found = MaxChamber {
            chamber: i,
            max,
            strict,
        };
        if !want_strict || strict {
            return Ok(found);
        }
        first_unique.get_or_insert(found);
    }
    Err(Error::InvariantViolation(format!(
        "{c}: no chamber with a {} maximal root (first unique: {:?})",
        if want_strict {
            "strictly dominating"
        } else {
            "unique"
        },
        first_unique.map(|m| m.chamber)
    )))
}

/// Coordinate sums of the roots, sorted.
pub fn height_multiset(sys: &RootSystem2) -> Vec<Int> {
    let mut h: Vec<Int> = sys.roots().iter().map(|r| &r.x + &r.y).collect();
    h.sort();
    h
}

#[cfg(test)]
fn is_nonnegative(r: &Root2) -> bool {
    use num_traits::Zero;
    r.x >= Int::zero() && r.y >= Int::zero()
}
