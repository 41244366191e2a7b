//! Frozen reference posets used as regressions: a Coxeter-type subset in
//! affine A4 and a regular A2 subset that is a negative control for
//! 3-Cohen-Macaulayness.

use std::collections::HashSet;

use serde::Deserialize;

use crate::affine::{parse_affine_word, AffineElt};
use crate::cartan::CartanSpec;
use crate::coxeter::{build_coxeter_subsets, CoxeterSubsets};
use crate::root_datum::{build_root_datum, RootDatum};
use crate::AdmError;

#[derive(Debug, Deserialize)]
pub struct Figure {
    pub name: String,
    datum: serde_json::Value,
    pub mu: Vec<i64>,
    pub k: Vec<usize>,
    /// Which subset the figure depicts: "kcox" or "kadm0".
    pub set: String,
    pub coxeter_type: bool,
    /// Elements as words in the affine simple reflections.
    pub elements: Vec<String>,
    /// Cover pairs (lower, upper) as indices into `elements`.
    pub covers: Vec<(usize, usize)>,
}

pub fn fig3() -> Figure {
    serde_json::from_str(include_str!("../fixtures/fig3.json")).expect("fig3 fixture parses")
}

pub fn fig4() -> Figure {
    serde_json::from_str(include_str!("../fixtures/fig4.json")).expect("fig4 fixture parses")
}

impl Figure {
    pub fn root_datum(&self) -> Result<RootDatum, AdmError> {
        build_root_datum(CartanSpec::from_json_value(&self.datum)?)
    }

    pub fn subsets(&self, rd: &RootDatum) -> Result<CoxeterSubsets, AdmError> {
        build_coxeter_subsets(rd, &self.mu, None, &self.k)
    }

    /// Compare a computed subset with the figure, as sets of elements and
    /// of cover pairs. Returns the computed indices in figure order.
    pub fn check(&self, rd: &RootDatum, cs: &CoxeterSubsets) -> Result<Vec<usize>, AdmError> {
        let (elts, covers) = match self.set.as_str() {
            "kcox" => (&cs.kcox, &cs.kcox_covers),
            "kadm0" => (&cs.kadm0, &cs.kadm0_covers),
            other => return Err(AdmError::Parse(format!("unknown fixture set {other:?}"))),
        };
        let expected: Vec<AffineElt> = self
            .elements
            .iter()
            .map(|s| parse_affine_word(rd, s))
            .collect::<Result<_, _>>()?;
        let mismatch = |m: String| AdmError::WitnessMismatch(format!("{}: {m}", self.name));
        if elts.len() != expected.len() {
            return Err(mismatch(format!(
                "{} elements computed, {} in the figure",
                elts.len(),
                expected.len()
            )));
        }
        let perm: Vec<usize> = expected
            .iter()
            .enumerate()
            .map(|(i, e)| {
                elts.iter().position(|x| x == e).ok_or_else(|| {
                    mismatch(format!("figure element {:?} not computed", self.elements[i]))
                })
            })
            .collect::<Result<_, _>>()?;
        let got: HashSet<(usize, usize)> = covers.iter().copied().collect();
        let want: HashSet<(usize, usize)> = self
            .covers
            .iter()
            .map(|&(lo, hi)| (perm[lo], perm[hi]))
            .collect();
        if got != want {
            return Err(mismatch(format!(
                "{} covers computed, {} in the figure, sets differ",
                got.len(),
                want.len()
            )));
        }
        if cs.coxeter_type != self.coxeter_type {
            return Err(mismatch("Coxeter-type predicate disagrees".into()));
        }
        Ok(perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig4_matches() {
        let fig = fig4();
        let rd = fig.root_datum().unwrap();
        let cs = fig.subsets(&rd).unwrap();
        fig.check(&rd, &cs).unwrap();
        assert_eq!(fig.elements.len(), 13);
        assert_eq!(fig.covers.len(), 21);
    }

    #[test]
    fn fig3_matches() {
        let fig = fig3();
        let rd = fig.root_datum().unwrap();
        let cs = fig.subsets(&rd).unwrap();
        fig.check(&rd, &cs).unwrap();
        assert_eq!(fig.elements.len(), 11);
        assert!(cs.coxeter_type);
    }
}
