//! Exact computations around quiddity cycles and the objects built from them.
//!
//! A quiddity cycle `(c_1, ..., c_n)` records, for a triangulated convex
//! `n`-gon, how many triangles meet each vertex. From a cycle this crate
//! derives:
//!
//! - the frieze entries `φ_i(j)`, their maximizer sets `m_i` and the density
//!   classification ([`frieze`]),
//! - the positive roots of the associated rank-2 root system and its
//!   componentwise poset ([`rank2roots`]),
//! - the periodic affine line arrangement obtained by adding every integer
//!   shift of an imaginary root, with simpliciality, chamber counts,
//!   determinant classes and the crystallographic test ([`affine3`]).
//!
//! Everything is computed with arbitrary-precision integers and rationals;
//! no floating point is involved anywhere. The planar kernel lives in
//! [`exactgeom`].
//!
//! Vertex positions are 1-based labels `1..=n` throughout the public API,
//! matching the usual labelling of polygon vertices. Vectors indexed by
//! vertex hold the entry for vertex `k` at index `k - 1`.

pub mod affine3;
pub mod error;
pub mod exactgeom;
pub mod frieze;
pub mod quiddity;
pub mod rank2roots;

pub use error::{Error, Result};
pub use frieze::{FriezeTable, MaxSet};
pub use quiddity::{Int, Mat2, QuiddityCycle, Triangulation};

/// Catalan number `C_k`; fits in a `u64` for `k <= 36`.
pub fn catalan(k: u64) -> u64 {
    let mut c: u128 = 1;
    for i in 0..u128::from(k) {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    u64::try_from(c).expect("C_k overflows u64 for k > 36")
}
