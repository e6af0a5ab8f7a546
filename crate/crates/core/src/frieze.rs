//! Frieze entries `φ_i(j)`, maximizer sets `m_i`, and density.
//!
//! `φ_i(j)` is the `(2,1)` entry of `η(c_i)⋯η(c_{j-1})`. Along a row it obeys
//! `φ_i(ℓ) = c_{ℓ-1}·φ_i(ℓ-1) - φ_i(ℓ-2)` starting from `φ_i(i) = 0`,
//! `φ_i(i+1) = 1`, which is how it is computed here.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::quiddity::{enumerate_cycles, Int, QuiddityCycle};

fn check_vertex(c: &QuiddityCycle, i: usize) -> Result<()> {
    let n = c.len();
    if n < 3 {
        return Err(invalid("frieze entries need a cycle of length at least 3"));
    }
    if i == 0 || i > n {
        return Err(invalid(format!("vertex {i} outside 1..={n}")));
    }
    Ok(())
}

/// `(φ_i(1), ..., φ_i(n))` for a 1-based vertex `i`.
pub fn phi_row(c: &QuiddityCycle, i: usize) -> Result<Vec<Int>> {
    check_vertex(c, i)?;
    Ok(phi_row_unchecked(c.entries(), i - 1))
}

fn phi_row_unchecked(c: &[Int], i0: usize) -> Vec<Int> {
    let n = c.len();
    let mut row = vec![Int::zero(); n];
    row[(i0 + 1) % n] = Int::one();
    for step in 2..n {
        let l = (i0 + step) % n;
        let l1 = (i0 + step - 1) % n;
        let l2 = (i0 + step - 2) % n;
        row[l] = &c[l1] * &row[l1] - &row[l2];
    }
    row
}

/// The set `m_i` of vertices where `φ_i` attains its maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxSet {
    pub index: usize,
    pub value: Int,
    pub members: Vec<usize>,
}

impl MaxSet {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.members.len()
    }
}

/// All entries `φ_i(j)` of one cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FriezeTable {
    cycle: QuiddityCycle,
    phi: Vec<Vec<Int>>,
}

impl FriezeTable {
    pub fn new(cycle: &QuiddityCycle) -> Result<Self> {
        if cycle.len() < 3 {
            return Err(invalid("frieze entries need a cycle of length at least 3"));
        }
        let phi = (0..cycle.len())
            .map(|i0| phi_row_unchecked(cycle.entries(), i0))
            .collect();
        Ok(FriezeTable {
            cycle: cycle.clone(),
            phi,
        })
    }

    pub fn cycle(&self) -> &QuiddityCycle {
        &self.cycle
    }

    pub fn n(&self) -> usize {
        self.cycle.len()
    }

    /// `φ_i(j)` for 1-based vertices, wrapping cyclically.
    pub fn phi(&self, i: isize, j: isize) -> &Int {
        let n = self.n() as isize;
        &self.phi[(i - 1).rem_euclid(n) as usize][(j - 1).rem_euclid(n) as usize]
    }

    /// Row `φ_i`, vertex `j` at index `j - 1`.
    pub fn row(&self, i: usize) -> &[Int] {
        &self.phi[i - 1]
    }

    /// The full matrix, `matrix()[i-1][j-1] = φ_i(j)`.
    pub fn matrix(&self) -> &[Vec<Int>] {
        &self.phi
    }

    /// Frieze rows `0..=n`; row `k` holds `φ_i(i+k)` at index `i - 1`.
    /// Row 0 and row `n` are zero, rows 1 and `n-1` are ones, and row 2 is
    /// the cycle shifted by one.
    pub fn pattern_rows(&self) -> Vec<Vec<Int>> {
        let n = self.n() as isize;
        (0..=n)
            .map(|k| (1..=n).map(|i| self.phi(i, i + k).clone()).collect())
            .collect()
    }

    /// Staggered text layout of the frieze over one period of `n` entries
    /// per row. Adjacent rows are offset by half a column so that each
    /// entry sits between the two entries it is computed from.
    pub fn render_text(&self) -> String {
        let n = self.n() as isize;
        let width = self
            .phi
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for k in 0..=n {
            let mut line = String::new();
            for p in 0..2 * n {
                let q = p - k - 1;
                if q.rem_euclid(2) == 0 {
                    let i = (q / 2).rem_euclid(n) + 1;
                    line.push_str(&format!("{:>width$}", self.phi(i, i + k).to_string()));
                } else {
                    line.push_str(&" ".repeat(width));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn m_set(&self, i: usize) -> MaxSet {
        let row = self.row(i);
        let value = row.iter().max().expect("nonempty row").clone();
        let members = row
            .iter()
            .enumerate()
            .filter(|(_, v)| **v == value)
            .map(|(j, _)| j + 1)
            .collect();
        MaxSet {
            index: i,
            value,
            members,
        }
    }

    /// `(|m_1|, ..., |m_n|)`.
    pub fn m_sizes(&self) -> Vec<usize> {
        (1..=self.n()).map(|i| self.m_set(i).len()).collect()
    }

    /// No two cyclically adjacent vertices both have a singleton `m_i`.
    pub fn is_dense(&self) -> bool {
        let sizes = self.m_sizes();
        let n = sizes.len();
        (0..n).all(|k| sizes[k] > 1 || sizes[(k + 1) % n] > 1)
    }

    /// The index `ℓ`, `e1 <= ℓ < e2`, at which `φ_j(e1) - φ_j(e2)` changes
    /// from negative to positive as `j` runs from `e1` to `e2`:
    /// `φ_j(e1) < φ_j(e2)` for `e1 <= j < ℓ`, `φ_ℓ(e1) <= φ_ℓ(e2)`, and
    /// `φ_j(e1) > φ_j(e2)` for `ℓ < j <= e2`.
    pub fn crossing_index(&self, e1: usize, e2: usize) -> Result<usize> {
        let n = self.n();
        if !(1 <= e1 && e1 < e2 && e2 <= n) {
            return Err(invalid(format!(
                "need 1 <= e1 < e2 <= {n}, got ({e1}, {e2})"
            )));
        }
        for e in [e1, e2] {
            if !self.cycle.entry(e as isize).is_one() {
                return Err(invalid(format!("{e} is not an ear of {}", self.cycle)));
            }
        }
        let diff = |j: usize| self.phi(j as isize, e2 as isize) - self.phi(j as isize, e1 as isize);
        let last_weak = (e1..=e2)
            .rev()
            .find(|&j| diff(j) >= Int::zero())
            .ok_or_else(|| Error::InvariantViolation("φ_{e1}(e2) must be positive".into()))?;
        let ok = last_weak < e2 && (e1..last_weak).all(|j| diff(j) > Int::zero());
        if !ok {
            return Err(Error::InvariantViolation(format!(
                "no sign change between ears {e1} and {e2} of {}",
                self.cycle
            )));
        }
        Ok(last_weak)
    }
}

/// Whether `c` is dense; `false` for the length-2 cycle.
pub fn is_dense(c: &QuiddityCycle) -> bool {
    FriezeTable::new(c).map(|t| t.is_dense()).unwrap_or(false)
}

/// Rotation classes (as minimal rotations) of all dense cycles of length
/// `3..=max_len`, ordered by length and then lexicographically.
pub fn classify_dense(max_len: usize) -> Result<Vec<QuiddityCycle>> {
    if max_len < 3 {
        return Err(invalid(format!(
            "max_len must be at least 3, got {max_len}"
        )));
    }
    let mut out = Vec::new();
    for n in 3..=max_len {
        let classes: BTreeSet<QuiddityCycle> = enumerate_cycles(n)?
            .into_par_iter()
            .filter(is_dense)
            .map(|c| c.min_rotation())
            .collect();
        out.extend(classes);
    }
    Ok(out)
}
