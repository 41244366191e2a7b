//! Cartan types and their Cartan matrices.
//!
//! Convention: `cartan[i][j]` is the pairing of the i-th simple coroot with
//! the j-th simple root. Numbering follows Bourbaki.

use serde::{Deserialize, Serialize};

use crate::AdmError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = AdmError;
    fn from_str(s: &str) -> Result<Self, AdmError> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            _ => Err(AdmError::UnknownType(s.to_string())),
        }
    }
}

/// Which cocharacter lattice to take for a given Cartan type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lattice {
    /// X_* = the coroot lattice (simply connected dual side).
    Sc,
    /// X_* = the coweight lattice (adjoint dual side).
    Ad,
    /// GL_n standard lattice Z^n; only valid for a single A_{n-1} component.
    Gl,
    /// Explicit basis, rows in fundamental-coweight coordinates.
    Custom { basis: Vec<Vec<i64>> },
}

/// Input description of a based root datum: list of irreducible components
/// plus a lattice choice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanSpec {
    pub components: Vec<(Family, usize)>,
    pub lattice: Lattice,
}

impl CartanSpec {
    pub fn new(family: Family, rank: usize, lattice: Lattice) -> Self {
        CartanSpec {
            components: vec![(family, rank)],
            lattice,
        }
    }

    /// Parse the JSON form, e.g. `{"type":"A","rank":2,"lattice":"sc"}` or
    /// `{"type":[["A",2],["A",1]],"lattice":{"basis":[[...]]}}`.
    pub fn from_json(s: &str) -> Result<Self, AdmError> {
        let v: serde_json::Value =
            serde_json::from_str(s).map_err(|e| AdmError::Parse(e.to_string()))?;
        Self::from_json_value(&v)
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self, AdmError> {
        let ty = v
            .get("type")
            .ok_or_else(|| AdmError::Parse("missing \"type\"".into()))?;
        let components: Vec<(Family, usize)> = if ty.is_string() {
            let fam: Family = ty.as_str().unwrap().parse()?;
            let rank = v
                .get("rank")
                .and_then(|r| r.as_u64())
                .ok_or_else(|| AdmError::Parse("missing \"rank\"".into()))? as usize;
            vec![(fam, rank)]
        } else {
            let arr = ty
                .as_array()
                .ok_or_else(|| AdmError::Parse("\"type\" must be string or array".into()))?;
            let mut comps = Vec::new();
            for c in arr {
                let pair = c
                    .as_array()
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| AdmError::Parse("component must be [family, rank]".into()))?;
                let fam: Family = pair[0]
                    .as_str()
                    .ok_or_else(|| AdmError::Parse("bad family".into()))?
                    .parse()?;
                let rank = pair[1]
                    .as_u64()
                    .ok_or_else(|| AdmError::Parse("bad rank".into()))?
                    as usize;
                comps.push((fam, rank));
            }
            comps
        };
        let lattice = match v.get("lattice") {
            None => Lattice::Sc,
            Some(serde_json::Value::String(s)) => match s.as_str() {
                "sc" => Lattice::Sc,
                "ad" => Lattice::Ad,
                "gl" => Lattice::Gl,
                other => return Err(AdmError::Parse(format!("unknown lattice {other:?}"))),
            },
            Some(obj) => {
                let basis = obj
                    .get("basis")
                    .and_then(|b| b.as_array())
                    .ok_or_else(|| AdmError::Parse("lattice object needs \"basis\"".into()))?;
                let mut rows = Vec::new();
                for row in basis {
                    let row = row
                        .as_array()
                        .ok_or_else(|| AdmError::Parse("basis row must be array".into()))?;
                    rows.push(
                        row.iter()
                            .map(|x| {
                                x.as_i64()
                                    .ok_or_else(|| AdmError::Parse("basis entry not integer".into()))
                            })
                            .collect::<Result<Vec<i64>, _>>()?,
                    );
                }
                Lattice::Custom { basis: rows }
            }
        };
        Ok(CartanSpec { components, lattice })
    }
}

/// Cartan matrix of an irreducible type; entry `[i][j]` pairs the i-th simple
/// coroot with the j-th simple root.
pub fn cartan_matrix(family: Family, rank: usize) -> Result<Vec<Vec<i64>>, AdmError> {
    let n = rank;
    let bad = |msg: &str| Err(AdmError::UnknownType(format!("{family}{n}: {msg}")));
    let valid = match family {
        Family::A => n >= 1,
        Family::B | Family::C => n >= 2,
        Family::D => n >= 3,
        Family::E => (6..=8).contains(&n),
        Family::F => n == 4,
        Family::G => n == 2,
    };
    if !valid {
        return bad("rank out of range");
    }
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
    }
    let mut link = |i: usize, j: usize, a: i64, b: i64| {
        m[i][j] = a;
        m[j][i] = b;
    };
    match family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            // alpha_n short: <alpha_{n-1}^v, alpha_n> = -1, <alpha_n^v, alpha_{n-1}> = -2
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            // alpha_n long
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to 4
            link(0, 2, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
            link(1, 3, -1, -1);
        }
        Family::F => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => {
            // alpha_1 short
            link(0, 1, -3, -1);
        }
    }
    Ok(m)
}

/// Number of positive roots of an irreducible type (classical counts).
pub fn positive_root_count(family: Family, rank: usize) -> usize {
    let n = rank;
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}
