use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::error::{Error, Guard, Result};
use crate::insertion::{insert_symbols, words_of};
use crate::multiset::{for_each_word, PermutationRanker};
use crate::tableau::PsTableau;
use crate::word::{Evaluation, Variant};

/// Distance marker for vertices a search did not reach.
pub const UNREACHABLE: u32 = u32::MAX;

/// A cyclic shift graph on tableaux of one evaluation and variant.
///
/// Vertices are numbered in order of the lexicographically first word that
/// inserts to them. Edges are stored once, as `(i, j)` with `i < j`.
#[derive(Debug, Clone)]
pub struct ShiftGraph {
    variant: Variant,
    evaluation: Evaluation,
    vertices: Vec<PsTableau>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<PsTableau, usize>,
}

impl ShiftGraph {
    /// The graph on the whole evaluation class, connected or not.
    pub fn class_graph(e: &Evaluation, variant: Variant, guard: Guard) -> Result<ShiftGraph> {
        guard.check(e.multinomial())?;
        let len = e.total();

        let mut index: HashMap<PsTableau, usize> = HashMap::new();
        let mut vertices = Vec::new();
        let mut word_vertex: Vec<u32> = Vec::new();
        let mut scratch = PsTableau::empty(variant);
        for_each_word(e, |w| {
            scratch.columns_mut().clear();
            scratch.insert_all(w.iter().copied());
            let id = match index.get(&scratch) {
                Some(&id) => id,
                None => {
                    let id = vertices.len();
                    vertices.push(scratch.clone());
                    index.insert(scratch.clone(), id);
                    id
                }
            };
            word_vertex.push(id as u32);
        });

        // rotation by i and by len - i give the same unordered pair
        let ranker = PermutationRanker::new(e);
        let mut edge_set: HashSet<(u32, u32)> = HashSet::new();
        let mut rotated = Vec::with_capacity(len);
        let mut rank = 0usize;
        for_each_word(e, |w| {
            let a = word_vertex[rank];
            for split in 1..=len / 2 {
                rotated.clear();
                rotated.extend_from_slice(&w[split..]);
                rotated.extend_from_slice(&w[..split]);
                let b = word_vertex[ranker.rank(&rotated) as usize];
                if a != b {
                    edge_set.insert((a.min(b), a.max(b)));
                }
            }
            rank += 1;
        });

        let mut edges: Vec<(usize, usize)> = edge_set.into_iter().map(|(a, b)| (a as usize, b as usize)).collect();
        edges.sort_unstable();
        Ok(ShiftGraph::assemble(variant, e.clone(), vertices, edges, index))
    }

    /// The connected component containing `t`.
    pub fn component_of(t: &PsTableau, guard: Guard) -> Result<ShiftGraph> {
        let class = ShiftGraph::class_graph(&t.evaluation(), t.variant(), guard)?;
        let root = class.index_of(t).ok_or(Error::InvalidTableau("tableau is not an insertion result"))?;
        let dist = class.distances_from(root);
        if dist.iter().all(|&d| d != UNREACHABLE) {
            return Ok(class);
        }
        let mut remap = vec![usize::MAX; class.vertices.len()];
        let mut vertices = Vec::new();
        let mut index = HashMap::new();
        for (old, t) in class.vertices.iter().enumerate() {
            if dist[old] != UNREACHABLE {
                remap[old] = vertices.len();
                index.insert(t.clone(), vertices.len());
                vertices.push(t.clone());
            }
        }
        let edges =
            class.edges.iter().filter(|&&(a, _)| dist[a] != UNREACHABLE).map(|&(a, b)| (remap[a], remap[b])).collect();
        Ok(ShiftGraph::assemble(class.variant, class.evaluation, vertices, edges, index))
    }

    fn assemble(
        variant: Variant,
        evaluation: Evaluation,
        vertices: Vec<PsTableau>,
        edges: Vec<(usize, usize)>,
        index: HashMap<PsTableau, usize>,
    ) -> ShiftGraph {
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        ShiftGraph { variant, evaluation, vertices, edges, adjacency, index }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn evaluation(&self) -> &Evaluation {
        &self.evaluation
    }

    pub fn vertices(&self) -> &[PsTableau] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn index_of(&self, t: &PsTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Breadth-first distances from `source`; [`UNREACHABLE`] where none.
    pub fn distances_from(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.vertices.len()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v] + 1;
            for &w in &self.adjacency[v] {
                if dist[w] == UNREACHABLE {
                    dist[w] = d;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, a: usize, b: usize) -> Option<usize> {
        let d = self.distances_from(a)[b];
        (d != UNREACHABLE).then_some(d as usize)
    }

    /// Shortest path as a vertex sequence from `a` to `b`, both included.
    pub fn shortest_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let dist = self.distances_from(b);
        if dist[a] == UNREACHABLE {
            return None;
        }
        let mut path = vec![a];
        let mut v = a;
        while v != b {
            v = *self.adjacency[v].iter().find(|&&w| dist[w] + 1 == dist[v]).expect("bfs layers are consistent");
            path.push(v);
        }
        Some(path)
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        self.distances_from(v)
            .into_iter()
            .try_fold(0u32, |acc, d| (d != UNREACHABLE).then_some(acc.max(d)))
            .map(|d| d as usize)
            .ok_or(Error::Disconnected)
    }

    /// Connected-component label of every vertex, labels in order of first
    /// appearance.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.vertices.len()];
        let mut next = 0;
        for start in 0..self.vertices.len() {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = next;
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        self.vertices.is_empty() || self.distances_from(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Largest shortest-path distance, by a breadth-first search from every
    /// vertex.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for v in 0..self.vertices.len() {
            best = best.max(self.eccentricity(v)?);
        }
        Ok(best)
    }
}

/// Every tableau with evaluation `e`.
pub fn enumerate_class(e: &Evaluation, variant: Variant, guard: Guard) -> Result<BTreeSet<PsTableau>> {
    guard.check(e.multinomial())?;
    let mut out = BTreeSet::new();
    for_each_word(e, |w| {
        out.insert(insert_symbols(w, variant));
    });
    Ok(out)
}

/// Tableaux one cyclic shift away from `t`, computed from the words of `t`
/// and their rotations. `t` itself is excluded.
pub fn shift_neighbors(t: &PsTableau, guard: Guard) -> Result<BTreeSet<PsTableau>> {
    let mut out = BTreeSet::new();
    for w in words_of(t, guard)? {
        for r in w.rotations() {
            let s = insert_symbols(r.symbols(), t.variant());
            if s != *t {
                out.insert(s);
            }
        }
    }
    Ok(out)
}

pub fn component(t: &PsTableau, guard: Guard) -> Result<ShiftGraph> {
    ShiftGraph::component_of(t, guard)
}

pub fn diameter(g: &ShiftGraph) -> Result<usize> {
    g.diameter()
}
