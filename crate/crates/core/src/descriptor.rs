//! JSON matroid descriptors and the inline shorthand accepted by the CLI.
//!
//! A descriptor is an object tagged by `"type"`:
//!
//! ```json
//! {"type": "bases",   "size": 3, "bases": [[0, 1], [0, 2], [1, 2]]}
//! {"type": "graph",   "vertices": 3, "edges": [[0, 1], [0, 2], [1, 2]]}
//! {"type": "matrix",  "prime": 3, "rows": [[1, 0], [0, 1]]}
//! {"type": "uniform", "rank": 2, "size": 3}
//! {"type": "named",   "name": "fano"}
//! ```
//!
//! Any of them may carry `"ops"`, a list of `"dual"`, `{"delete": e}` or
//! `{"contract": e}` applied left to right. Inline forms are `named:NAME`,
//! `uniform:R,M` and `graph:@FILE` (the file holding `{"vertices", "edges"}`).

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{FpMatrix, Matroid};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Source {
    Bases { size: usize, bases: Vec<Vec<usize>> },
    Graph { vertices: usize, edges: Vec<(usize, usize)> },
    Matrix { prime: u64, rows: Vec<Vec<u64>> },
    Uniform { rank: usize, size: usize },
    Named { name: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MinorOp {
    Dual,
    Delete(usize),
    Contract(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descriptor {
    #[serde(flatten)]
    pub source: Source,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ops: Vec<MinorOp>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Descriptor {
    pub fn new(source: Source) -> Descriptor {
        Descriptor { source, ops: Vec::new() }
    }

    pub fn named(name: &str) -> Descriptor {
        Descriptor::new(Source::Named { name: name.to_string() })
    }

    pub fn uniform(rank: usize, size: usize) -> Descriptor {
        Descriptor::new(Source::Uniform { rank, size })
    }

    pub fn graph(vertices: usize, edges: Vec<(usize, usize)>) -> Descriptor {
        Descriptor::new(Source::Graph { vertices, edges })
    }

    pub fn then(mut self, op: MinorOp) -> Descriptor {
        self.ops.push(op);
        self
    }

    pub fn parse_json(text: &str) -> Result<Descriptor> {
        serde_json::from_str(text).map_err(parse_error)
    }

    /// Accepts an inline form or a path to a JSON descriptor file.
    pub fn resolve(spec: &str) -> Result<Descriptor> {
        if let Some(name) = spec.strip_prefix("named:") {
            return Ok(Descriptor::named(name));
        }
        if let Some(rest) = spec.strip_prefix("uniform:") {
            let bad = || Error::Parse { line: 1, column: 1, message: format!("expected uniform:R,M, got {spec:?}") };
            let (r, m) = rest.split_once(',').ok_or_else(bad)?;
            let rank = r.trim().parse().map_err(|_| bad())?;
            let size = m.trim().parse().map_err(|_| bad())?;
            return Ok(Descriptor::uniform(rank, size));
        }
        if let Some(rest) = spec.strip_prefix("graph:") {
            let path = rest.strip_prefix('@').unwrap_or(rest);
            let g: GraphFile = serde_json::from_str(&read(Path::new(path))?).map_err(parse_error)?;
            return Ok(Descriptor::graph(g.vertices, g.edges));
        }
        Descriptor::parse_json(&read(Path::new(spec))?)
    }

    pub fn build(&self) -> Result<Matroid> {
        let mut m = match &self.source {
            Source::Bases { size, bases } => {
                let mut family = Vec::with_capacity(bases.len());
                for b in bases {
                    if let Some(&e) = b.iter().find(|&&e| e >= *size) {
                        return Err(Error::ElementOutOfRange { element: e, size: *size });
                    }
                    family.push(Subset::from_elements(b.iter().copied()));
                }
                Matroid::from_bases(*size, family)?
            }
            Source::Graph { vertices, edges } => Matroid::from_graph(*vertices, edges)?,
            Source::Matrix { prime, rows } => Matroid::from_matrix(&FpMatrix::new(*prime, rows.clone())?)?,
            Source::Uniform { rank, size } => Matroid::uniform(*rank, *size)?,
            Source::Named { name } => Matroid::named(name)?,
        };
        for op in &self.ops {
            m = match *op {
                MinorOp::Dual => m.dual(),
                MinorOp::Delete(e) => m.delete(e)?,
                MinorOp::Contract(e) => m.contract(e)?,
            };
        }
        Ok(m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptors serialize")
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = match &self.source {
            Source::Bases { size, bases } => format!("bases({size}, {} bases)", bases.len()),
            Source::Graph { vertices, edges } => format!("graph({vertices} vertices, {} edges)", edges.len()),
            Source::Matrix { prime, rows } => format!("matrix(F_{prime}, {} rows)", rows.len()),
            Source::Uniform { rank, size } => format!("U({rank},{size})"),
            Source::Named { name } => name.clone(),
        };
        for op in &self.ops {
            s = match op {
                MinorOp::Dual => format!("dual({s})"),
                MinorOp::Delete(e) => format!("{s}\\{e}"),
                MinorOp::Contract(e) => format!("{s}/{e}"),
            };
        }
        f.write_str(&s)
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })
}

fn parse_error(e: serde_json::Error) -> Error {
    let text = e.to_string();
    let message = text.rsplit_once(" at line ").map_or(text.as_str(), |(m, _)| m).to_string();
    Error::Parse { line: e.line(), column: e.column(), message }
}
