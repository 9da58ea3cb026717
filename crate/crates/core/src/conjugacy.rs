//! Conjugacy relations on PS monoids.
//!
//! * `psim`: `u = xy`, `v = yx` (cyclic shift)
//! * `tpsim`: transitive closure of `psim`
//! * `lsim`: `∃g. ug = gv`, and its mirror `rsim`: `∃g. gu = vg`
//! * `osim`: `lsim ∩ rsim`
//! * `evsim`: equal evaluation
//!
//! `lsim` has no general decision procedure here; the search over
//! conjugators is bounded and reports [`ConjugacyStatus::NotRelatedUpToBound`]
//! when it runs out. Definite negative answers come only from the evaluation
//! check or, for left elements whose bottom row is all 1s, from the free
//! submonoid generated by `P_l(1)` and `P_l(21)`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashSet;

use crate::error::{Error, Guard, Result};
use crate::insertion::{column_reading, insert_symbols, words_of};
use crate::shiftgraph::ShiftGraph;
use crate::tableau::PsTableau;
use crate::word::{Evaluation, Symbol, Variant, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConjugacyStatus {
    Related,
    NotRelated,
    NotRelatedUpToBound,
}

impl ConjugacyStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ConjugacyStatus::Related => "related",
            ConjugacyStatus::NotRelated => "not_related",
            ConjugacyStatus::NotRelatedUpToBound => "not_related_up_to_bound",
        }
    }
}

impl fmt::Display for ConjugacyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a conjugator search. `witness` is set exactly for
/// [`ConjugacyStatus::Related`], `bound` exactly for
/// [`ConjugacyStatus::NotRelatedUpToBound`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyVerdict {
    pub status: ConjugacyStatus,
    pub witness: Option<Word>,
    pub bound: Option<usize>,
}

impl ConjugacyVerdict {
    pub fn related(witness: Word) -> Self {
        ConjugacyVerdict { status: ConjugacyStatus::Related, witness: Some(witness), bound: None }
    }

    pub fn not_related() -> Self {
        ConjugacyVerdict { status: ConjugacyStatus::NotRelated, witness: None, bound: None }
    }

    pub fn up_to_bound(bound: usize) -> Self {
        ConjugacyVerdict { status: ConjugacyStatus::NotRelatedUpToBound, witness: None, bound: Some(bound) }
    }

    pub fn is_related(&self) -> bool {
        self.status == ConjugacyStatus::Related
    }

    pub fn is_not_related(&self) -> bool {
        self.status == ConjugacyStatus::NotRelated
    }
}

fn same_variant(u: &PsTableau, v: &PsTableau) -> Result<Variant> {
    if u.variant() != v.variant() {
        return Err(Error::VariantMismatch);
    }
    Ok(u.variant())
}

/// A factorization `u = P(x·y)`, `v = P(y·x)`, if one exists. Reflexive
/// pairs get `(reading(u), ε)`.
pub fn psim_witness(u: &PsTableau, v: &PsTableau, guard: Guard) -> Result<Option<(Word, Word)>> {
    let variant = same_variant(u, v)?;
    if u == v {
        return Ok(Some((column_reading(u), Word::empty())));
    }
    if u.evaluation() != v.evaluation() {
        return Ok(None);
    }
    for w in words_of(u, guard)? {
        for split in 1..w.len() {
            let r = w.rotation(split);
            if insert_symbols(r.symbols(), variant) == *v {
                let (x, y) = w.split_at(split);
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

pub fn psim(u: &PsTableau, v: &PsTableau, guard: Guard) -> Result<bool> {
    psim_witness(u, v, guard).map(|w| w.is_some())
}

/// `v` lies in the connected component of `u` in the cyclic shift graph.
pub fn tpsim(u: &PsTableau, v: &PsTableau, guard: Guard) -> Result<bool> {
    same_variant(u, v)?;
    if u.evaluation() != v.evaluation() {
        return Ok(false);
    }
    if u == v {
        return Ok(true);
    }
    let component = ShiftGraph::component_of(u, guard)?;
    Ok(component.index_of(v).is_some())
}

/// A `lsim` conjugator along a shortest path in the cyclic shift graph:
/// each shift `xy → yx` contributes `x`, and `lsim` composes.
pub fn tpsim_witness(u: &PsTableau, v: &PsTableau, guard: Guard) -> Result<Option<Word>> {
    same_variant(u, v)?;
    if u.evaluation() != v.evaluation() {
        return Ok(None);
    }
    let component = ShiftGraph::component_of(u, guard)?;
    let (Some(a), Some(b)) = (component.index_of(u), component.index_of(v)) else {
        return Ok(None);
    };
    let path = component.shortest_path(a, b).expect("same component");
    let mut g = Word::empty();
    for pair in path.windows(2) {
        let (from, to) = (&component.vertices()[pair[0]], &component.vertices()[pair[1]]);
        let (x, _) = psim_witness(from, to, guard)?.expect("adjacent vertices are shift related");
        g = g.concat(&x);
    }
    Ok(Some(g))
}

pub fn evsim(u: &PsTableau, v: &PsTableau) -> bool {
    u.evaluation() == v.evaluation()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    /// `u·g = g·v`
    Left,
    /// `g·u = v·g`
    Right,
}

/// Shortest-then-lexicographic search for `g` over `A_k`, `k` the largest
/// symbol of `u` and `v`, with `|g| ≤ max_len`.
///
/// Whether `g` works depends only on `P(g)`, so the search runs over
/// elements, layer by layer, each kept with its lexicographically least
/// word. Extending the words of one layer in order, letters ascending, meets
/// every element of the next layer first through its least word.
fn search_conjugator(u: &PsTableau, v: &PsTableau, max_len: usize, side: Side) -> Option<Word> {
    let variant = u.variant();
    let k = u.max_symbol().max(v.max_symbol()).map_or(0, |s| s.get());
    let alphabet: Vec<Symbol> = (1..=k).filter_map(Symbol::new).collect();
    // ∼l: P(u)·P(g) = P(g)·P(v); ∼r: P(v)·P(g) = P(g)·P(u)
    let (fixed, tail) = match side {
        Side::Left => (u, column_reading(v)),
        Side::Right => (v, column_reading(u)),
    };
    let works = |g: &PsTableau| {
        let mut closed = g.clone();
        closed.insert_all(tail.iter());
        fixed.product(g) == closed
    };
    let mut layer = vec![(PsTableau::empty(variant), Vec::new())];
    for len in 0..=max_len {
        if let Some((_, g)) = layer.iter().find(|(t, _)| works(t)) {
            return Some(Word::new(g.clone()));
        }
        if len == max_len {
            break;
        }
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (t, g) in &layer {
            for &a in &alphabet {
                let mut t = t.clone();
                t.insert(a);
                if seen.insert(t.clone()) {
                    let mut g = g.clone();
                    g.push(a);
                    next.push((t, g));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    None
}

/// Rotation witness for two conjugate generator words: `u = x·y`,
/// `v = y·x` gives `u·x = x·v`.
fn c2_rotation_witness(u: &C2Code, v: &C2Code) -> Option<Word> {
    let n = u.0.len();
    if n != v.0.len() {
        return None;
    }
    (0..n.max(1))
        .find(|&s| u.0[s..].iter().chain(&u.0[..s]).eq(v.0.iter()))
        .map(|s| column_reading(&C2Code(u.0[..s].to_vec()).encode()))
}

/// Bounded decider for `u ∼l v`.
pub fn lsim_bounded(u: &PsTableau, v: &PsTableau, max_g_len: usize) -> Result<ConjugacyVerdict> {
    same_variant(u, v)?;
    if !evsim(u, v) {
        return Ok(ConjugacyVerdict::not_related());
    }
    if let (Some(cu), Some(cv)) = (c2_decode(u), c2_decode(v)) {
        if !lsim_in_c2(&cu, &cv) {
            return Ok(ConjugacyVerdict::not_related());
        }
        let witness = search_conjugator(u, v, max_g_len, Side::Left)
            .or_else(|| c2_rotation_witness(&cu, &cv))
            .expect("rotation-related codes have a witness");
        return Ok(ConjugacyVerdict::related(witness));
    }
    Ok(match search_conjugator(u, v, max_g_len, Side::Left) {
        Some(g) => ConjugacyVerdict::related(g),
        None => ConjugacyVerdict::up_to_bound(max_g_len),
    })
}

/// Bounded decider for the mirror relation `g·u = v·g`.
pub fn rsim_bounded(u: &PsTableau, v: &PsTableau, max_g_len: usize) -> Result<ConjugacyVerdict> {
    same_variant(u, v)?;
    if !evsim(u, v) {
        return Ok(ConjugacyVerdict::not_related());
    }
    Ok(match search_conjugator(u, v, max_g_len, Side::Right) {
        Some(g) => ConjugacyVerdict::related(g),
        None => ConjugacyVerdict::up_to_bound(max_g_len),
    })
}

/// `lsim ∩ rsim`. A related verdict carries the `lsim` conjugator.
pub fn osim_bounded(u: &PsTableau, v: &PsTableau, max_g_len: usize) -> Result<ConjugacyVerdict> {
    let left = lsim_bounded(u, v, max_g_len)?;
    if left.is_not_related() {
        return Ok(left);
    }
    let right = rsim_bounded(u, v, max_g_len)?;
    Ok(match (left.status, right.status) {
        (_, ConjugacyStatus::NotRelated) => right,
        (ConjugacyStatus::Related, ConjugacyStatus::Related) => left,
        _ => ConjugacyVerdict::up_to_bound(max_g_len),
    })
}

/// Generators of the free submonoid of the left monoid: `P_l(1)` and
/// `P_l(21)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum C2Generator {
    One,
    TwoOne,
}

/// An element of the free submonoid as a word over its two generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct C2Code(Vec<C2Generator>);

impl C2Code {
    pub fn new(letters: Vec<C2Generator>) -> C2Code {
        C2Code(letters)
    }

    /// `1 ↦ P_l(1)`, `2 ↦ P_l(21)` applied to a word over `{1, 2}`.
    pub fn from_word(w: &Word) -> Option<C2Code> {
        w.iter()
            .map(|s| match s.get() {
                1 => Some(C2Generator::One),
                2 => Some(C2Generator::TwoOne),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(C2Code)
    }

    pub fn letters(&self) -> &[C2Generator] {
        &self.0
    }

    pub fn to_word(&self) -> Word {
        self.0
            .iter()
            .map(|g| match g {
                C2Generator::One => Symbol::ONE,
                C2Generator::TwoOne => Symbol::new(2).expect("positive"),
            })
            .collect()
    }

    /// The left tableau this code multiplies out to.
    pub fn encode(&self) -> PsTableau {
        let one = Symbol::ONE;
        let two = Symbol::new(2).expect("positive");
        let mut symbols = Vec::new();
        for g in &self.0 {
            match g {
                C2Generator::One => symbols.push(one),
                C2Generator::TwoOne => symbols.extend([two, one]),
            }
        }
        insert_symbols(&symbols, Variant::Left)
    }
}

/// Reads a left tableau whose bottom row is all 1s as a generator word:
/// each column `(1)` is `P_l(1)`, each column `(1,2)` is `P_l(21)`.
pub fn c2_decode(t: &PsTableau) -> Option<C2Code> {
    if t.variant() != Variant::Left {
        return None;
    }
    t.columns()
        .iter()
        .map(|c| match c.entries().iter().map(|s| s.get()).collect::<Vec<_>>()[..] {
            [1] => Some(C2Generator::One),
            [1, 2] => Some(C2Generator::TwoOne),
            _ => None,
        })
        .collect::<Option<Vec<_>>>()
        .map(C2Code)
}

/// Conjugacy in a free monoid: the generator words are rotations of each
/// other.
pub fn lsim_in_c2(u: &C2Code, v: &C2Code) -> bool {
    if u.0.len() != v.0.len() {
        return false;
    }
    if u.0.is_empty() {
        return true;
    }
    let doubled: Vec<C2Generator> = u.0.iter().chain(&u.0).copied().collect();
    doubled.windows(v.0.len()).any(|win| win == v.0.as_slice())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoSymbolViolationKind {
    /// Shift-connected but the bounded search found no conjugator.
    TpsimWithoutLsimWitness,
    /// A conjugator exists but the pair is in different components.
    LsimWithoutTpsim,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSymbolViolation {
    pub u: PsTableau,
    pub v: PsTableau,
    pub kind: TwoSymbolViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSymbolReport {
    pub evaluation: Evaluation,
    pub elements: usize,
    pub pairs_checked: usize,
    pub tpsim_pairs: usize,
    pub violations: Vec<TwoSymbolViolation>,
}

/// Compares shift connectivity with bounded left conjugacy on every ordered
/// pair of the left class of a two-symbol evaluation.
pub fn two_symbol_tpsim_equals_lsim_check(e: &Evaluation, max_g_len: usize, guard: Guard) -> Result<TwoSymbolReport> {
    if e.content_size() != 2 {
        return Err(Error::Precondition("evaluation must have exactly two symbols"));
    }
    let class = ShiftGraph::class_graph(e, Variant::Left, guard)?;
    let labels = class.component_labels();
    let vertices = class.vertices();
    let mut report = TwoSymbolReport {
        evaluation: e.clone(),
        elements: vertices.len(),
        pairs_checked: 0,
        tpsim_pairs: 0,
        violations: Vec::new(),
    };
    for (i, u) in vertices.iter().enumerate() {
        for (j, v) in vertices.iter().enumerate() {
            let connected = labels[i] == labels[j];
            let verdict = lsim_bounded(u, v, max_g_len)?;
            report.pairs_checked += 1;
            if connected {
                report.tpsim_pairs += 1;
            }
            let kind = match (connected, verdict.is_related()) {
                (true, false) => Some(TwoSymbolViolationKind::TpsimWithoutLsimWitness),
                (false, true) => Some(TwoSymbolViolationKind::LsimWithoutTpsim),
                _ => None,
            };
            if let Some(kind) = kind {
                report.violations.push(TwoSymbolViolation { u: u.clone(), v: v.clone(), kind });
            }
        }
    }
    Ok(report)
}

/// Checks that `u·g = g·v` under insertion.
pub fn verify_lsim_witness(u: &PsTableau, v: &PsTableau, g: &Word) -> bool {
    let ug = u.product(&crate::insertion::insert_word(g, u.variant()));
    let mut gv = crate::insertion::insert_word(g, u.variant());
    gv.insert_all(column_reading(v).iter());
    ug == gv
}

/// Checks that `g·u = v·g` under insertion.
pub fn verify_rsim_witness(u: &PsTableau, v: &PsTableau, g: &Word) -> bool {
    verify_lsim_witness(v, u, g)
}

/// Distinct evaluation classes met by a set of tableaux.
pub fn evaluations_of<'a, I: IntoIterator<Item = &'a PsTableau>>(ts: I) -> BTreeSet<Evaluation> {
    ts.into_iter().map(|t| t.evaluation()).collect()
}
