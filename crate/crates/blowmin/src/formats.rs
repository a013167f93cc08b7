//! JSON file formats for graphs, weightings and shift specs.

use std::fs;
use std::path::Path;

use blowmin_core::{Graph, ShiftMode, ShiftSpec, Weighting};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// `{ "n": 3, "edges": [[0, 1], [1, 2]], "labels": ["a", "b", "c"] }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphFile {
    /// Edges are written as `u < v`, sorted.
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.n(),
            edges: g.edges(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let g = Graph::from_edges(self.n, &self.edges)?;
        Ok(match &self.labels {
            Some(labels) => g.with_labels(labels.clone())?,
            None => g,
        })
    }
}

/// `{ "weights": [3, 0, 3] }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightingFile {
    pub weights: Vec<u64>,
}

/// `{ "A": [1], "B": [0], "mode": "lemma3" }`; the mode defaults to lemma3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShiftFile {
    #[serde(rename = "A")]
    pub a: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
}

impl ShiftFile {
    pub fn from_spec(spec: &ShiftSpec, mode: ShiftMode) -> Self {
        Self {
            a: spec.a().to_vec(),
            b: spec.b().to_vec(),
            mode: Some(mode.as_str().to_owned()),
        }
    }

    pub fn to_spec(&self) -> Result<(ShiftSpec, ShiftMode)> {
        let mode = match self.mode.as_deref() {
            None | Some("lemma3") => ShiftMode::Lemma3,
            Some("lemma4") => ShiftMode::Lemma4,
            Some(other) => return Err(Error::ShiftMode(other.to_owned())),
        };
        Ok((ShiftSpec::new(self.a.clone(), self.b.clone())?, mode))
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    serde_json::from_str::<GraphFile>(text)?.to_graph()
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read_text(path)?)
}

pub fn parse_shift(text: &str) -> Result<(ShiftSpec, ShiftMode)> {
    serde_json::from_str::<ShiftFile>(text)?.to_spec()
}

pub fn read_shift(path: &Path) -> Result<(ShiftSpec, ShiftMode)> {
    parse_shift(&read_text(path)?)
}

/// Inline `3,0,3`, or the path of a weighting JSON file.
pub fn parse_weights(arg: &str) -> Result<Weighting> {
    let inline = arg.chars().all(|c| c.is_ascii_digit() || c == ',' || c.is_whitespace());
    let weights = if inline {
        arg.split(',')
            .map(|s| s.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::Weights(arg.to_owned()))?
    } else {
        serde_json::from_str::<WeightingFile>(&read_text(Path::new(arg))?)?.weights
    };
    Ok(Weighting::new(weights)?)
}

/// Parses `2,1,1`.
pub fn parse_sizes(arg: &str) -> Result<Vec<usize>> {
    arg.split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Error::Usage(format!("invalid part sizes {arg:?}")))
}

/// Hex SHA-256 of the compact JSON form of the graph (sorted edges, labels
/// included).
pub fn graph_hash(g: &Graph) -> String {
    let canonical = serde_json::to_vec(&GraphFile::from_graph(g)).expect("graph files serialize");
    hex::encode(Sha256::digest(&canonical))
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::io(path, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let text = r#"{"n": 3, "edges": [[1, 0], [1, 2]], "labels": ["a", "b", "c"]}"#;
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.label(2), Some("c"));
        let back = GraphFile::from_graph(&g);
        assert_eq!(back.edges, vec![(0, 1), (1, 2)]);
        assert_eq!(back.to_graph().unwrap().edges(), g.edges());
    }

    #[test]
    fn rejects_non_simple_graphs() {
        assert!(parse_graph(r#"{"n": 2, "edges": [[0, 0]]}"#).is_err());
        assert!(parse_graph(r#"{"n": 2, "edges": [[0, 1], [1, 0]]}"#).is_err());
        assert!(parse_graph(r#"{"n": 2, "edges": [[0, 2]]}"#).is_err());
        assert!(parse_graph(r#"{"n": 2, "edges": [], "labels": ["x"]}"#).is_err());
        assert!(parse_graph(r#"{"n": 2, "edge": []}"#).is_err());
    }

    #[test]
    fn hash_ignores_edge_order() {
        let a = parse_graph(r#"{"n": 3, "edges": [[0, 1], [1, 2]]}"#).unwrap();
        let b = parse_graph(r#"{"n": 3, "edges": [[2, 1], [1, 0]]}"#).unwrap();
        assert_eq!(graph_hash(&a), graph_hash(&b));
        assert_eq!(graph_hash(&a).len(), 64);
        let c = parse_graph(r#"{"n": 3, "edges": [[0, 1]]}"#).unwrap();
        assert_ne!(graph_hash(&a), graph_hash(&c));
    }

    #[test]
    fn inline_weights_and_shift_files() {
        assert_eq!(parse_weights("3, 0,3").unwrap().weights(), &[3, 0, 3]);
        assert!(parse_weights("3,-1").is_err());
        assert!(parse_weights("3,,1").is_err());
        let (spec, mode) = parse_shift(r#"{"A": [1, 2], "B": [0, 3], "mode": "lemma4"}"#).unwrap();
        assert_eq!((spec.a(), spec.b(), mode), (&[1, 2][..], &[0, 3][..], ShiftMode::Lemma4));
        assert_eq!(parse_shift(r#"{"A": [1], "B": [0]}"#).unwrap().1, ShiftMode::Lemma3);
        assert!(parse_shift(r#"{"A": [1], "B": [0], "mode": "x"}"#).is_err());
        assert!(parse_shift(r#"{"A": [1], "B": [1]}"#).is_err());
    }
}
