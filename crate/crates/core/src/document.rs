//! File formats: fan documents and polynomial tuple documents.
//!
//! Ray indices in files are 1-based; they are shifted to 0-based here and
//! nowhere else.

use serde::{Deserialize, Serialize};

use crate::cone::LatticeVector;
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::holmap::{GaussianRational, Poly, PolyTuple};

pub const SCHEMA_VERSION: u32 = 1;

fn default_schema_version() -> u32 {
    SCHEMA_VERSION
}

/// A fan as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDocument {
    #[serde(default = "default_schema_version")]
    pub schema_version: u32,
    pub dimension: usize,
    pub generators: Vec<Vec<i64>>,
    /// 1-based indices into `generators`.
    #[serde(default)]
    pub maximal_cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl FanDocument {
    pub fn parse(text: &str) -> Result<FanDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Builds the fan: downward closure of the maximal cones plus every ray.
    ///
    /// The result is not validated; see [`crate::fan::validate_fan`].
    pub fn to_fan(&self) -> Result<Fan> {
        let r = self.generators.len();
        let cones = self
            .maximal_cones
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&i| {
                        if i == 0 || i > r {
                            Err(Error::IndexOutOfRange { index: i, len: r })
                        } else {
                            Ok(i - 1)
                        }
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let gens = self.generators.iter().map(|g| LatticeVector::from_i64(g)).collect();
        Fan::new(self.dimension, gens, &cones)
    }

    /// Inverse of [`FanDocument::to_fan`]. Fails with `OVERFLOW` if a
    /// generator does not fit in `i64`.
    pub fn from_fan(f: &Fan, name: Option<String>) -> Result<FanDocument> {
        let generators = f
            .generators()
            .iter()
            .map(|g| g.to_i64().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        let maximal_cones = f
            .maximal_faces()
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|c| c.to_one_based())
            .collect();
        Ok(FanDocument {
            schema_version: SCHEMA_VERSION,
            dimension: f.dim(),
            generators,
            maximal_cones,
            name,
        })
    }
}

/// A coefficient: `["p/q", "p/q*i"]`, or a bare `"p/q"` for a real value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Complex([String; 2]),
    Real(String),
}

impl Coefficient {
    pub fn from_value(x: &GaussianRational) -> Coefficient {
        let (re, im) = x.to_parts();
        Coefficient::Complex([re, im])
    }

    pub fn to_value(&self) -> Result<GaussianRational> {
        match self {
            Coefficient::Complex([re, im]) => GaussianRational::from_strs(re, im),
            Coefficient::Real(re) => GaussianRational::from_strs(re, "0"),
        }
    }
}

/// A tuple of monic polynomials. Each entry lists the coefficients below the
/// leading 1, constant term first, so `z² − 3` is `["-3", "0"]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyTupleDocument {
    pub polys: Vec<Vec<Coefficient>>,
}

impl PolyTupleDocument {
    pub fn parse(text: &str) -> Result<PolyTupleDocument> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_tuple(&self) -> Result<PolyTuple> {
        let polys = self
            .polys
            .iter()
            .map(|p| {
                let lower = p.iter().map(Coefficient::to_value).collect::<Result<Vec<_>>>()?;
                Ok(Poly::monic_from_lower(lower))
            })
            .collect::<Result<Vec<_>>>()?;
        PolyTuple::new(polys)
    }

    pub fn from_tuple(t: &PolyTuple) -> PolyTupleDocument {
        let polys = t
            .polys()
            .iter()
            .map(|p| {
                let c = p.coeffs();
                c[..c.len() - 1].iter().map(Coefficient::from_value).collect()
            })
            .collect();
        PolyTupleDocument { polys }
    }
}
