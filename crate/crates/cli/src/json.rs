//! JSON shapes written by the commands. Integers of any size are written
//! as plain JSON numbers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use frieze_core::rank2roots::Root2;
use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Big(pub BigInt);

impl From<&BigInt> for Big {
    fn from(v: &BigInt) -> Self {
        Big(v.clone())
    }
}

impl fmt::Display for Big {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Big {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n = Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Big {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = Number::deserialize(d)?;
        BigInt::from_str(&n.to_string())
            .map(Big)
            .map_err(|_| D::Error::custom(format!("{n} is not an integer")))
    }
}

pub fn bigs(v: &[BigInt]) -> Vec<Big> {
    v.iter().map(Big::from).collect()
}

pub fn root_pair(r: &Root2) -> [Big; 2] {
    [Big(r.x.clone()), Big(r.y.clone())]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleJson {
    pub c: Vec<Big>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationJson {
    pub n: usize,
    pub triangles: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriezeJson {
    pub c: Vec<Big>,
    /// `phi[i-1][j-1] = φ_i(j)`.
    pub phi: Vec<Vec<Big>>,
    /// Argmax sets `m_i`, 1-based.
    pub m: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsJson {
    pub c: Vec<Big>,
    pub chamber: usize,
    pub roots: Vec<[Big; 2]>,
    pub max: Vec<[Big; 2]>,
}

/// Report of the `affine` command. Fields that a check does not compute
/// are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AffineJson {
    pub c: Vec<Big>,
    pub chamber: usize,
    pub simplicial: bool,
    pub cells: usize,
    /// Vertices of the first non-triangular cell, as rational strings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<[String; 2]>>,
    /// Base-change determinant, written as a rational string, to cell count.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub det_classes: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crystallographic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ca_witness: Option<CaWitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaWitnessJson {
    pub cell: usize,
    pub root: [Big; 3],
    pub coordinates: [String; 3],
}
