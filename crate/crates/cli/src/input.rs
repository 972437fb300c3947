//! Complex I/O: the JSON exchange format and its validation.
//!
//! ```json
//! { "m": 6, "facets": [[1,2,3],[3,4],[4,5,6]], "ground_set": [1,2,3,4,5,6] }
//! ```
//!
//! Vertices are 1-based in files and 0-based inside the library;
//! `ground_set` defaults to `1..=m`.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use momac::vertex_set::{vertex_set_from_one_based, VertexSet, MAX_VERTICES};
use momac::SimplicialComplex;

#[derive(Debug, Serialize, Deserialize)]
pub struct ComplexFile {
    pub m: u32,
    pub facets: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ground_set: Option<Vec<u32>>,
}

pub fn parse_complex_str(text: &str) -> anyhow::Result<SimplicialComplex> {
    let file: ComplexFile =
        serde_json::from_str(text).context("malformed JSON complex description")?;
    if file.m > MAX_VERTICES {
        bail!("vertex cap exceeded: m = {} > {}", file.m, MAX_VERTICES);
    }
    let ground = match &file.ground_set {
        None => VertexSet::full(file.m),
        Some(gs) => {
            for &v in gs {
                if v == 0 || v > file.m {
                    bail!("ground-set vertex {} out of range 1..={}", v, file.m);
                }
            }
            vertex_set_from_one_based(gs)?
        }
    };
    let mut facets = Vec::with_capacity(file.facets.len());
    for f in &file.facets {
        for &v in f {
            if v == 0 || v > file.m {
                bail!("facet vertex {} out of range 1..={}", v, file.m);
            }
        }
        facets.push(vertex_set_from_one_based(f)?);
    }
    Ok(SimplicialComplex::from_facets(facets, ground)?)
}

/// Read a complex from a file, or from stdin when no path is given.
pub fn read_complex(path: Option<&Path>) -> anyhow::Result<SimplicialComplex> {
    let text = match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")?;
            buf
        }
    };
    parse_complex_str(&text)
}

pub fn complex_to_file(k: &SimplicialComplex) -> ComplexFile {
    let m = (32 - k.ground_set().bits().leading_zeros()).max(1);
    let ground: Vec<u32> = k.ground_set().iter().map(|v| v + 1).collect();
    let default_ground = k.ground_set() == VertexSet::full(m);
    ComplexFile {
        m,
        facets: k
            .facets()
            .iter()
            .map(|f| f.iter().map(|v| v + 1).collect())
            .collect(),
        ground_set: (!default_ground).then_some(ground),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_named_example() {
        let k = parse_complex_str(r#"{"m":6,"facets":[[1,2,3],[3,4],[4,5,6]]}"#).unwrap();
        assert_eq!(k.facets().len(), 3);
        assert_eq!(k.ground_set(), VertexSet::full(6));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(parse_complex_str(r#"{"m":25,"facets":[[1]]}"#).is_err());
        assert!(parse_complex_str(r#"{"m":3,"facets":[[4]]}"#).is_err());
        assert!(parse_complex_str(r#"{"m":3,"facets":[[0]]}"#).is_err());
        assert!(parse_complex_str("not json").is_err());
    }

    #[test]
    fn round_trips_through_the_file_shape() {
        let k = parse_complex_str(r#"{"m":4,"facets":[[1,2],[3]],"ground_set":[1,2,3,4]}"#)
            .unwrap();
        let file = complex_to_file(&k);
        let back = parse_complex_str(&serde_json::to_string(&file).unwrap()).unwrap();
        assert_eq!(back.facets(), k.facets());
        assert_eq!(back.ground_set(), k.ground_set());
    }
}
