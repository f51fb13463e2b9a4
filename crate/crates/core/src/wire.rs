//! JSON forms of submodules and subgroups, plus canonical basis data.
//!
//! All elements travel as their canonical strings and are read back with
//! the expression parser.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraVector, Field};
use crate::error::{Error, Result};
use crate::groebner::GroebnerData;
use crate::groups::Subgroup;
use crate::module::Submodule;
use crate::parse::{parse_element, parse_word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmoduleJson {
    pub k: usize,
    pub gens: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupJson {
    pub rank: usize,
    pub gens: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerJson {
    pub firsts: Vec<String>,
    pub seconds: Vec<String>,
    #[serde(rename = "C")]
    pub c: Vec<Vec<String>>,
    pub lpps: Vec<String>,
    pub rank: usize,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        pos: e.column(),
        msg: format!("invalid JSON: {e}"),
    }
}

impl SubmoduleJson {
    pub fn from_vectors(k: usize, vectors: &[AlgebraVector]) -> Self {
        SubmoduleJson {
            k,
            gens: vectors
                .iter()
                .map(|v| v.entries().iter().map(ToString::to_string).collect())
                .collect(),
        }
    }

    pub fn from_submodule(m: &Submodule) -> Self {
        Self::from_vectors(m.ambient_k(), m.gens())
    }

    pub fn to_submodule(&self, field: Field, rank: usize) -> Result<Submodule> {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                AlgebraVector::new(
                    g.iter()
                        .map(|e| parse_element(e, field, rank))
                        .collect::<Result<Vec<_>>>()?,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Submodule::new(field, rank, self.k, gens)
    }
}

impl SubgroupJson {
    pub fn from_subgroup(h: &Subgroup) -> Self {
        SubgroupJson {
            rank: h.free_rank(),
            gens: h
                .gens()
                .iter()
                .map(|w| w.display(h.free_rank()).to_string())
                .collect(),
        }
    }

    pub fn to_subgroup(&self) -> Result<Subgroup> {
        let gens = self
            .gens
            .iter()
            .map(|g| parse_word(g, self.rank))
            .collect::<Result<Vec<_>>>()?;
        Subgroup::new(self.rank, gens)
    }
}

impl GroebnerJson {
    pub fn from_data(g: &GroebnerData) -> Self {
        let c = g.second_matrix();
        GroebnerJson {
            firsts: g.firsts().iter().map(ToString::to_string).collect(),
            seconds: g.seconds().iter().map(ToString::to_string).collect(),
            c: (0..c.rows())
                .map(|i| c.row(i).iter().map(ToString::to_string).collect())
                .collect(),
            lpps: g
                .lpp_set()
                .iter()
                .map(|w| w.display(g.free_rank()).to_string())
                .collect(),
            rank: g.rank(),
        }
    }
}

pub fn submodule_from_json(text: &str, field: Field, rank: usize) -> Result<Submodule> {
    let j: SubmoduleJson = serde_json::from_str(text).map_err(json_error)?;
    j.to_submodule(field, rank)
}

pub fn submodule_to_json(m: &Submodule) -> String {
    serde_json::to_string(&SubmoduleJson::from_submodule(m)).expect("serializable")
}

pub fn subgroup_from_json(text: &str) -> Result<Subgroup> {
    let j: SubgroupJson = serde_json::from_str(text).map_err(json_error)?;
    j.to_subgroup()
}

pub fn subgroup_to_json(h: &Subgroup) -> String {
    serde_json::to_string(&SubgroupJson::from_subgroup(h)).expect("serializable")
}

pub fn groebner_to_json(g: &GroebnerData) -> String {
    serde_json::to_string(&GroebnerJson::from_data(g)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::rosenmann_basis;
    use crate::parse::parse_module;

    #[test]
    fn submodule_round_trip() {
        let f = Field::Prime(3);
        let m = parse_module("{x-1, y}; {0, [x,y]}", f, 2, 2).unwrap();
        let text = submodule_to_json(&m);
        assert_eq!(
            text,
            r#"{"k":2,"gens":[["x - 1","y"],["0","x*y*x^-1*y^-1"]]}"#
        );
        assert_eq!(submodule_from_json(&text, f, 2).unwrap(), m);
        assert!(submodule_from_json("{\"k\":2}", f, 2).is_err());
    }

    #[test]
    fn subgroup_round_trip() {
        let h = Subgroup::new(2, vec![crate::algebra::Word::generator(0).pow(2)]).unwrap();
        let text = subgroup_to_json(&h);
        assert_eq!(text, r#"{"rank":2,"gens":["x^2"]}"#);
        assert_eq!(subgroup_from_json(&text).unwrap(), h);
    }

    #[test]
    fn groebner_json() {
        let f = Field::Rational;
        let g = rosenmann_basis(&[parse_element("x - 1", f, 2).unwrap()]).unwrap();
        assert_eq!(
            groebner_to_json(&g),
            r#"{"firsts":["x - 1"],"seconds":["x^-1 - 1"],"C":[["-x^-1"]],"lpps":["x","x^-1"],"rank":1}"#
        );
    }
}
