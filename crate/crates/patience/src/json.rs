//! JSON forms of tableaux, graphs, verdicts and paths.
//!
//! Field order is fixed by the structs below, so equal values always
//! serialize to identical bytes.

use patience_core::conjugacy::ConjugacyVerdict;
use patience_core::shiftgraph::{CochargeSequence, ShiftGraph, ShiftPath};
use patience_core::tableau::Column;
use patience_core::{PsTableau, Symbol, Variant, Word};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub variant: String,
    /// Each column bottom to top.
    pub columns: Vec<Vec<u32>>,
}

impl From<&PsTableau> for TableauJson {
    fn from(t: &PsTableau) -> Self {
        TableauJson {
            variant: t.variant().as_str().to_owned(),
            columns: t.columns().iter().map(|c| c.entries().iter().map(|s| s.get()).collect()).collect(),
        }
    }
}

impl TableauJson {
    pub fn to_tableau(&self) -> anyhow::Result<PsTableau> {
        let variant: Variant = self.variant.parse()?;
        let columns = self
            .columns
            .iter()
            .map(|c| {
                let entries = c
                    .iter()
                    .map(|&v| Symbol::new(v).ok_or_else(|| anyhow::anyhow!("symbol {v} is not positive")))
                    .collect::<anyhow::Result<Vec<_>>>()?;
                Ok(Column::new(entries)?)
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        Ok(PsTableau::from_columns(variant, columns)?)
    }
}

pub fn tableau_to_json(t: &PsTableau) -> String {
    serde_json::to_string(&TableauJson::from(t)).expect("plain data serializes")
}

pub fn tableau_from_json(s: &str) -> anyhow::Result<PsTableau> {
    serde_json::from_str::<TableauJson>(s)?.to_tableau()
}

pub fn words_to_json<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> String {
    let words: Vec<String> = words.into_iter().map(|w| w.to_string()).collect();
    serde_json::to_string(&words).expect("plain data serializes")
}

#[derive(Serialize)]
struct GraphJson {
    variant: &'static str,
    evaluation: Vec<usize>,
    vertices: Vec<TableauJson>,
    edges: Vec<[usize; 2]>,
    diameter: Option<usize>,
}

/// `diameter` is `null` for a disconnected graph.
pub fn graph_to_json(g: &ShiftGraph, diameter: Option<usize>) -> String {
    let doc = GraphJson {
        variant: g.variant().as_str(),
        evaluation: g.evaluation().counts().to_vec(),
        vertices: g.vertices().iter().map(TableauJson::from).collect(),
        edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        diameter,
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

#[derive(Serialize)]
struct VerdictJson {
    status: &'static str,
    witness: Option<String>,
    bound: Option<usize>,
}

pub fn verdict_to_json(v: &ConjugacyVerdict) -> String {
    let doc =
        VerdictJson { status: v.status.as_str(), witness: v.witness.as_ref().map(|w| w.to_string()), bound: v.bound };
    serde_json::to_string(&doc).expect("plain data serializes")
}

#[derive(Serialize)]
struct StepJson {
    x: String,
    y: String,
    target: TableauJson,
}

#[derive(Serialize)]
struct PathJson {
    start: TableauJson,
    length: usize,
    steps: Vec<StepJson>,
}

pub fn path_to_json(p: &ShiftPath) -> String {
    let doc = PathJson {
        start: p.start().into(),
        length: p.len(),
        steps: p
            .steps()
            .iter()
            .map(|s| StepJson { x: s.x.to_string(), y: s.y.to_string(), target: (&s.target).into() })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn cocharge_to_json(c: &CochargeSequence) -> String {
    serde_json::to_string(c.labels()).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use patience_core::insert_word;

    #[test]
    fn golden_tableaux() {
        let u: Word = "4511432".parse().unwrap();
        assert_eq!(
            tableau_to_json(&insert_word(&u, Variant::Left)),
            r#"{"variant":"left","columns":[[1,4],[1,5],[2,3,4]]}"#
        );
        assert_eq!(
            tableau_to_json(&insert_word(&u, Variant::Right)),
            r#"{"variant":"right","columns":[[1,1,4],[2,3,4,5]]}"#
        );
    }

    #[test]
    fn round_trip() {
        let t = insert_word(&"3141592".parse().unwrap(), Variant::Right);
        assert_eq!(tableau_from_json(&tableau_to_json(&t)).unwrap(), t);
        assert!(tableau_from_json(r#"{"variant":"left","columns":[[2,1]]}"#).is_err());
        assert!(tableau_from_json(r#"{"variant":"up","columns":[]}"#).is_err());
    }

    #[test]
    fn empty_tableau() {
        assert_eq!(tableau_to_json(&PsTableau::empty(Variant::Left)), r#"{"variant":"left","columns":[]}"#);
    }
}
