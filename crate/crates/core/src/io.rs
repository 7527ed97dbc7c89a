//! JSON file formats.
//!
//! Arrangement files list hyperplanes row by row:
//!
//! ```json
//! {"dim": 2, "field": "Q",
//!  "hyperplanes": [{"coeffs": ["-1", "1"], "constant": "1"}, {"coeffs": [1, 0]}],
//!  "group": [[2, 1]]}
//! ```
//!
//! Matrix files hold the normals as the columns of a `d × n` matrix:
//!
//! ```json
//! {"field": {"sqrt": 5}, "matrix": [["1", "0"], ["0", "1/2+1/2*sqrt(5)"]], "constants": ["0", "1"]}
//! ```
//!
//! Scalars are integers or strings in the exact-arithmetic grammar; a
//! missing constant is zero. Groups are lists of permutations in one-line
//! notation on `1..=n`. Parse errors carry a line and column.

use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::arith::{FieldScalar, FieldTag};
use crate::arrangement::{Arrangement, Hyperplane};
use crate::error::{Error, Result};
use crate::perm::PermGroup;

/// An arrangement read from a file, with its optional group.
#[derive(Debug, Clone)]
pub struct Input {
    pub arrangement: Arrangement,
    pub group: Option<PermGroup>,
}

#[derive(Clone, Debug, PartialEq)]
struct Scalar(FieldScalar);

impl Default for Scalar {
    fn default() -> Self {
        Scalar(FieldScalar::from(0))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct ScalarVisitor;

        impl Visitor<'_> for ScalarVisitor {
            type Value = Scalar;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a scalar string such as \"-3/2\" or \"1+sqrt(5)\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Scalar, E> {
                Ok(Scalar(FieldScalar::from(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Scalar, E> {
                i64::try_from(v)
                    .map(|v| Scalar(FieldScalar::from(v)))
                    .or_else(|_| self.visit_str(&v.to_string()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Scalar, E> {
                v.parse().map(Scalar).map_err(E::custom)
            }
        }

        d.deserialize_any(ScalarVisitor)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HyperplaneEntry {
    coeffs: Vec<Scalar>,
    #[serde(default)]
    constant: Scalar,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrangementFile {
    dim: usize,
    #[serde(default = "rational")]
    field: FieldTag,
    hyperplanes: Vec<HyperplaneEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    group: Option<Vec<Vec<usize>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    #[serde(default = "rational")]
    field: FieldTag,
    matrix: Vec<Vec<Scalar>>,
    #[serde(default)]
    constants: Option<Vec<Scalar>>,
    #[serde(default)]
    group: Option<Vec<Vec<usize>>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupFile {
    Bare(Vec<Vec<usize>>),
    Object { group: Vec<Vec<usize>> },
}

fn rational() -> FieldTag {
    FieldTag::Rational
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Format(e.to_string())
}

fn build(dim: usize, field: FieldTag, hyperplanes: Vec<Hyperplane>, group: Option<Vec<Vec<usize>>>) -> Result<Input> {
    let arrangement = Arrangement::new(dim, field, hyperplanes)?;
    let group = group.map(|g| PermGroup::from_one_line(arrangement.len(), &g)).transpose()?;
    Ok(Input { arrangement, group })
}

pub fn read_arrangement_json(text: &str) -> Result<Input> {
    let file: ArrangementFile = serde_json::from_str(text).map_err(json_error)?;
    let hyperplanes = file
        .hyperplanes
        .into_iter()
        .map(|h| Hyperplane::new(h.coeffs.into_iter().map(|c| c.0).collect(), h.constant.0))
        .collect();
    build(file.dim, file.field, hyperplanes, file.group)
}

/// Reads the column convention: hyperplane `j` has normal `matrix[·][j]`.
pub fn read_matrix_json(text: &str) -> Result<Input> {
    let file: MatrixFile = serde_json::from_str(text).map_err(json_error)?;
    let dim = file.matrix.len();
    let n = file.matrix.first().map_or(0, Vec::len);
    if let Some((i, row)) = file.matrix.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::Format(format!("matrix row {i} has {} entries, expected {n}", row.len())));
    }
    let constants = match file.constants {
        Some(c) if c.len() != n => {
            return Err(Error::Format(format!("{} constants for {n} hyperplanes", c.len())));
        }
        Some(c) => c,
        None => vec![Scalar::default(); n],
    };
    let hyperplanes = constants
        .into_iter()
        .enumerate()
        .map(|(j, c)| Hyperplane::new(file.matrix.iter().map(|row| row[j].0.clone()).collect(), c.0))
        .collect();
    build(dim, file.field, hyperplanes, file.group)
}

/// A group on `n` hyperplanes: a bare list of permutations, or any object
/// with a `group` key (so an arrangement file also serves).
pub fn read_group_json(text: &str, n: usize) -> Result<PermGroup> {
    let gens = match serde_json::from_str(text).map_err(json_error)? {
        GroupFile::Bare(g) | GroupFile::Object { group: g } => g,
    };
    PermGroup::from_one_line(n, &gens)
}

pub fn write_arrangement_json(arr: &Arrangement, group: Option<&PermGroup>) -> String {
    let file = ArrangementFile {
        dim: arr.dim(),
        field: arr.field(),
        hyperplanes: arr
            .hyperplanes()
            .iter()
            .map(|h| HyperplaneEntry {
                coeffs: h.coeffs.iter().cloned().map(Scalar).collect(),
                constant: Scalar(h.constant.clone()),
            })
            .collect(),
        group: group.map(|g| g.generators_one_line()),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    const RUNNING: &str = r#"{
  "dim": 2,
  "field": "Q",
  "hyperplanes": [
    {"coeffs": [-1, 1], "constant": 1},
    {"coeffs": ["1", "0"]},
    {"coeffs": [1, 1], "constant": "1"},
    {"coeffs": [0, 1], "constant": 0}
  ]
}"#;

    #[test]
    fn reads_rows_and_columns() {
        let a = read_arrangement_json(RUNNING).unwrap();
        let expected = Arrangement::from_integer_rows(2, &[vec![-1, 1, 1], vec![1, 0, 0], vec![1, 1, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(a.arrangement, expected);
        assert!(a.group.is_none());
        let m = read_matrix_json(r#"{"matrix": [[-1, 1, 1, 0], [1, 0, 1, 1]], "constants": [1, 0, 1, 0]}"#).unwrap();
        assert_eq!(m.arrangement, expected);
    }

    #[test]
    fn round_trips_with_group() {
        for f in [families::resonance(3).unwrap(), families::platonic(families::Platonic::Icosahedron).unwrap()] {
            let text = write_arrangement_json(&f.arrangement, Some(&f.group));
            let back = read_arrangement_json(&text).unwrap();
            assert_eq!(back.arrangement, f.arrangement);
            assert_eq!(back.group.unwrap().order(), f.group.order());
        }
    }

    #[test]
    fn errors_name_their_position() {
        let bad = RUNNING.replace("\"constant\": \"1\"", "\"constant\": \"1/0\"");
        let Err(Error::Format(msg)) = read_arrangement_json(&bad) else {
            panic!("expected a format error");
        };
        assert!(msg.contains("line 7 column"), "{msg}");
        assert!(matches!(
            read_arrangement_json(&RUNNING.replace("[0, 1], \"constant\": 0", "[0, 1, 2], \"constant\": 0")),
            Err(Error::DimensionMismatch { index: 3, .. })
        ));
        let with_group = RUNNING.replace("\n  ]\n}", "\n  ],\n  \"group\": [[2, 1, 3]]\n}");
        assert!(matches!(read_arrangement_json(&with_group), Err(Error::DegreeMismatch { .. }) | Err(Error::InvalidPermutation(_))));
        assert!(read_matrix_json(r#"{"matrix": [[1, 0], [1]]}"#).is_err());
    }

    #[test]
    fn group_files() {
        assert_eq!(read_group_json("[[2, 1, 3], [1, 3, 2]]", 3).unwrap().order().to_u64(), Some(6));
        assert_eq!(read_group_json(r#"{"group": [[2, 1]]}"#, 2).unwrap().order().to_u64(), Some(2));
        assert!(read_group_json("[[2, 1]]", 3).is_err());
    }
}
