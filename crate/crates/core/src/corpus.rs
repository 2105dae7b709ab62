//! The built-in corpus: small uniform matroids, complete graphs, the
//! Petersen graph, Fano and Vamos, together with the dual and the
//! single-element minors at element 0 of each.

use crate::descriptor::{Descriptor, MinorOp};
use crate::error::Result;
use crate::matroid::{complete_graph, Matroid};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    /// Coefficients of the characteristic polynomial, constant term first.
    pub char_poly: Option<Vec<i64>>,
    pub chow_dims: Option<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub descriptor: Descriptor,
    /// Known to be representable over some field.
    pub representable: bool,
    pub expected: Option<Fingerprint>,
}

impl CorpusEntry {
    pub fn build(&self) -> Result<Matroid> {
        self.descriptor.build()
    }

    pub fn matches(&self, filter: &str) -> bool {
        self.name.to_lowercase().contains(&filter.to_lowercase())
    }
}

/// `χ(t)` of the Petersen cycle matroid, i.e. its chromatic polynomial over `t`.
const PETERSEN_CHAR_POLY: [i64; 10] = [-704, 2606, -4305, 4275, -2861, 1353, -455, 105, -15, 1];

fn base_entries() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let entry = |name: String, descriptor, representable, expected| CorpusEntry { name, descriptor, representable, expected };
    for m in 1..=7 {
        for r in 0..=m {
            let expected = (r == 3 && m == 3).then(|| Fingerprint { char_poly: None, chow_dims: Some(vec![1, 4, 1]) });
            out.push(entry(format!("U{r},{m}"), Descriptor::uniform(r, m), true, expected));
        }
    }
    for n in 2..=6 {
        let (v, edges) = complete_graph(n);
        out.push(entry(format!("K{n}"), Descriptor::graph(v, edges), true, None));
    }
    out.push(entry(
        "petersen".into(),
        Descriptor::named("petersen-graphic"),
        true,
        Some(Fingerprint { char_poly: Some(PETERSEN_CHAR_POLY.to_vec()), chow_dims: None }),
    ));
    out.push(entry(
        "fano".into(),
        Descriptor::named("fano"),
        true,
        Some(Fingerprint { char_poly: Some(vec![-8, 14, -7, 1]), chow_dims: Some(vec![1, 8, 1]) }),
    ));
    out.push(entry("vamos".into(), Descriptor::named("vamos"), false, None));
    out
}

/// Base entries followed, for each, by `dual`, `\0` and `/0` variants
/// (minors with an empty ground set are left out).
pub fn corpus() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for base in base_entries() {
        let size = base.build().expect("corpus entries are valid").size();
        let variants = [("dual", MinorOp::Dual), ("del0", MinorOp::Delete(0)), ("con0", MinorOp::Contract(0))];
        out.push(base.clone());
        for (tag, op) in variants {
            if size == 1 && op != MinorOp::Dual {
                continue;
            }
            out.push(CorpusEntry {
                name: format!("{}.{tag}", base.name),
                descriptor: base.descriptor.clone().then(op),
                representable: base.representable,
                expected: None,
            });
        }
    }
    out
}

pub fn filtered(filter: Option<&str>) -> Vec<CorpusEntry> {
    corpus().into_iter().filter(|e| filter.is_none_or(|f| e.matches(f))).collect()
}
