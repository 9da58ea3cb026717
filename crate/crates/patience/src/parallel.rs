use anyhow::Context;
use patience_core::shiftgraph::{ShiftGraph, UNREACHABLE};
use rayon::prelude::*;

/// Diameter by breadth-first search from every vertex, spread over
/// `threads` workers. `None` when the graph is disconnected.
pub fn diameter(g: &ShiftGraph, threads: usize) -> anyhow::Result<Option<usize>> {
    if threads <= 1 {
        return Ok(g.diameter().ok());
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().context("building worker pool")?;
    let ecc = pool.install(|| {
        (0..g.vertex_count())
            .into_par_iter()
            .map(|v| {
                let d = g.distances_from(v);
                if d.contains(&UNREACHABLE) {
                    None
                } else {
                    Some(d.into_iter().max().unwrap_or(0) as usize)
                }
            })
            .collect::<Option<Vec<_>>>()
    });
    Ok(ecc.map(|e| e.into_iter().max().unwrap_or(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use patience_core::{Evaluation, Guard, Variant};

    #[test]
    fn agrees_with_sequential() {
        for counts in [vec![1, 1, 1, 1], vec![2, 1, 2], vec![1]] {
            let g = ShiftGraph::class_graph(&Evaluation::from_counts(counts), Variant::Right, Guard::DEFAULT).unwrap();
            assert_eq!(diameter(&g, 4).unwrap(), Some(g.diameter().unwrap()));
        }
        let g = ShiftGraph::class_graph(&Evaluation::from_counts(vec![4, 2]), Variant::Left, Guard::DEFAULT).unwrap();
        assert_eq!(diameter(&g, 3).unwrap(), None);
    }
}
