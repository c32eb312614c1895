//! Rows of the published tables of solutions, transcribed as structured
//! points so they can be certified independently of the solvers.

use std::path::Path;

use distset_core::exact::factor::minimize;
use distset_core::exact::literal::{parse, parse_rat};
use distset_core::exact::{AlgPoint, Mode, RealAlg, UniPoly};
use distset_core::graph::decode;
use distset_core::{Error, Graph};
use serde::{Deserialize, Serialize};

use crate::DistsetError;

const BUILTIN: &str = include_str!("../data/tables.json");

/// A `mydim` statement from a remark column. `label` is the graph the
/// remark names, which is not always the row it is printed on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MydimClaim {
    pub label: String,
    pub complement: bool,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FixturePoint {
    /// `b` is omitted for complete graphs.
    Pair {
        a: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        b: Option<String>,
    },
    /// `(x, b_of_root(x))` for every real root `x` of `root_of` with
    /// `|x| <= bound`. Coefficients are listed from the constant term up.
    Family { root_of: Vec<i64>, bound: String, b_of_root: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureRow {
    pub table: u8,
    pub label: String,
    pub n: usize,
    pub code: String,
    pub mode: String,
    /// The solution column as printed.
    pub printed: String,
    pub remark: String,
    pub points: Vec<FixturePoint>,
    pub jspherical_remark: bool,
    pub mydim: Option<MydimClaim>,
}

/// All rows of Tables 2 to 6.
pub fn builtin() -> Vec<FixtureRow> {
    serde_json::from_str(BUILTIN).expect("embedded fixtures are valid")
}

pub fn load(path: &Path) -> Result<Vec<FixtureRow>, DistsetError> {
    let text = std::fs::read_to_string(path).map_err(DistsetError::io(path))?;
    Ok(serde_json::from_str(&text)?)
}

impl FixtureRow {
    pub fn graph(&self) -> Result<Graph, Error> {
        decode(&self.code, self.n)
    }

    pub fn mode(&self) -> Result<Mode, Error> {
        self.mode.parse()
    }

    pub fn alg_points(&self) -> Result<Vec<AlgPoint>, Error> {
        let mut out = Vec::new();
        for p in &self.points {
            match p {
                FixturePoint::Pair { a, b } => {
                    let b = match b {
                        Some(b) => parse(b)?,
                        None => RealAlg::from_int(0),
                    };
                    out.push(AlgPoint::from_pair(&parse(a)?, &b));
                }
                FixturePoint::Family { root_of, bound, b_of_root } => {
                    let bound = parse_rat(bound)?;
                    let b = UniPoly::from_coeffs(b_of_root.iter().map(|c| parse_rat(c)).collect::<Result<_, _>>()?);
                    for x in RealAlg::roots_of(&UniPoly::from_ints(root_of))? {
                        if x.cmp_rat(&bound).is_le() && x.cmp_rat(&-bound.clone()).is_ge() {
                            out.push(AlgPoint::new(minimize(&x), UniPoly::x(), b.clone()));
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_row_decodes() {
        let rows = builtin();
        assert_eq!(rows.len(), 73);
        for r in &rows {
            assert_eq!(r.graph().unwrap().order(), r.n, "{}", r.label);
            r.mode().unwrap();
            assert!(!r.alg_points().unwrap().is_empty(), "{}", r.label);
        }
    }

    #[test]
    fn cubic_family_keeps_roots_in_range() {
        let row = builtin().into_iter().find(|r| r.label == "7O").unwrap();
        let pts = row.alg_points().unwrap();
        assert_eq!(pts.len(), 2);
        for p in pts {
            assert!(p.a_f64().abs() <= 1.0);
            assert!((p.b_f64() + 0.5 + 2.0 * p.a_f64()).abs() < 1e-12);
        }
    }
}
