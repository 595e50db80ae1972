//! Named fans and worked examples, with expected properties stored in a
//! fixture file next to the crate.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cone::LatticeVector;
use crate::document::FanDocument;
use crate::error::Result;
use crate::fan::Fan;

/// Fan of `CP^n`: rays `e₁, …, e_n, e₀ = −Σ e_k`, every proper subset a cone.
pub fn cp_fan(n: usize) -> Fan {
    assert!(n >= 1, "CP^n needs n ≥ 1");
    let mut gens: Vec<LatticeVector> = (0..n)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            LatticeVector::from_i64(&v)
        })
        .collect();
    gens.push(LatticeVector::from_i64(&vec![-1; n]));
    let maximal: Vec<Vec<usize>> = (0..=n).map(|skip| (0..=n).filter(|&i| i != skip).collect()).collect();
    Fan::new(n, gens, &maximal).expect("CP^n fan is well formed")
}

/// The Hirzebruch fan `Σ_k`: rays `(1,0), (0,1), (−1,k), (0,−1)` with the
/// four cyclically adjacent 2-cones.
pub fn hirzebruch_fan(k: i64) -> Fan {
    Fan::from_i64(
        2,
        &[&[1, 0], &[0, 1], &[-1, k], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
    )
    .expect("Hirzebruch fan is well formed")
}

/// The fan of `C²` with its 2-cone removed: two rays, no higher cones.
pub fn c2_fan() -> Fan {
    Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[]).expect("rays-only fan is well formed")
}

/// Where an expected value comes from: a worked example in the literature,
/// or a hand derivation from the defining formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Reference,
    Derived,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expectation {
    pub value: serde_json::Value,
    pub origin: Origin,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogFixture {
    #[serde(flatten)]
    pub fan: FanDocument,
    pub expected: BTreeMap<String, Expectation>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub fan: Fan,
    pub expected: BTreeMap<String, Expectation>,
}

const FIXTURES: &str = include_str!("../fixtures/catalog.json");

/// Every fixture in the bundled catalog.
pub fn entries() -> Result<Vec<CatalogEntry>> {
    let fixtures: Vec<CatalogFixture> = serde_json::from_str(FIXTURES)
        .map_err(|e| crate::error::Error::Parse(e.to_string()))?;
    fixtures
        .into_iter()
        .map(|fx| {
            let fan = fx.fan.to_fan()?;
            Ok(CatalogEntry {
                name: fx.fan.name.clone().unwrap_or_default(),
                fan,
                expected: fx.expected,
            })
        })
        .collect()
}
