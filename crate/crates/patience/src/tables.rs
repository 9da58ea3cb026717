//! Vertex counts and diameters of evaluation classes, as CSV.

use std::io::Write;

use patience_core::shiftgraph::ShiftGraph;
use patience_core::{Evaluation, Guard, Variant};

use crate::parallel;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowOutcome {
    Computed {
        vertices: usize,
        diameter: Option<usize>,
    },
    /// The class has more words than the guard allows.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub evaluation: Evaluation,
    pub outcome: RowOutcome,
}

impl TableRow {
    pub fn vertices(&self) -> Option<usize> {
        match self.outcome {
            RowOutcome::Computed { vertices, .. } => Some(vertices),
            RowOutcome::Skipped => None,
        }
    }

    pub fn diameter(&self) -> Option<usize> {
        match self.outcome {
            RowOutcome::Computed { diameter, .. } => diameter,
            RowOutcome::Skipped => None,
        }
    }
}

pub fn compute_row(e: &Evaluation, variant: Variant, guard: Guard, threads: usize) -> anyhow::Result<TableRow> {
    if guard.check(e.multinomial()).is_err() {
        return Ok(TableRow { evaluation: e.clone(), outcome: RowOutcome::Skipped });
    }
    let g = ShiftGraph::class_graph(e, variant, guard)?;
    let diameter = parallel::diameter(&g, threads)?;
    Ok(TableRow { evaluation: e.clone(), outcome: RowOutcome::Computed { vertices: g.vertex_count(), diameter } })
}

/// One row per standard evaluation of length `1..=max_len`.
pub fn standard_rows(max_len: usize, variant: Variant, guard: Guard, threads: usize) -> anyhow::Result<Vec<TableRow>> {
    (1..=max_len).map(|n| compute_row(&Evaluation::standard(n), variant, guard, threads)).collect()
}

pub fn write_csv<W: Write>(rows: &[TableRow], out: W) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["evaluation", "vertices", "diameter"])?;
    for row in rows {
        let e = row.evaluation.to_string();
        match row.outcome {
            RowOutcome::Computed { vertices, diameter } => {
                let d = diameter.map_or_else(|| "disconnected".to_owned(), |d| d.to_string());
                w.write_record([e, vertices.to_string(), d])?;
            }
            RowOutcome::Skipped => w.write_record([e.as_str(), "SKIPPED", "SKIPPED"])?,
        }
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_standard_rows() {
        let rows = standard_rows(4, Variant::Right, Guard::DEFAULT, 1).unwrap();
        let got: Vec<_> = rows.iter().map(|r| (r.vertices().unwrap(), r.diameter().unwrap())).collect();
        assert_eq!(got, [(1, 0), (2, 1), (5, 2), (15, 4)]);
    }

    #[test]
    fn guard_skips() {
        let e = Evaluation::standard(6);
        let row = compute_row(&e, Variant::Right, Guard::new(100).unwrap(), 1).unwrap();
        assert_eq!(row.outcome, RowOutcome::Skipped);
        let mut buf = Vec::new();
        write_csv(&[row], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "evaluation,vertices,diameter\n\"(1,1,1,1,1,1)\",SKIPPED,SKIPPED\n"
        );
    }
}
