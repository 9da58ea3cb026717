//! Diameter data over many evaluation classes, checked against the known
//! bounds.

use patience_core::Evaluation;

use crate::tables::{compute_row, RowOutcome, TableRow};
use crate::RunConfig;

/// All evaluations with content exactly `{1, …, n}` and total length at
/// most `max_len`, shortest first.
pub fn full_content_evaluations(n: usize, max_len: usize) -> Vec<Evaluation> {
    fn go(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Evaluation>) {
        if cur.len() == n {
            if left == 0 {
                out.push(Evaluation::from_counts(cur.clone()));
            }
            return;
        }
        let slots = n - cur.len();
        for c in 1..=left.saturating_sub(slots - 1) {
            cur.push(c);
            go(n, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for total in n..=max_len {
        go(n, total, &mut Vec::new(), &mut out);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Bound {
    /// Two symbols: diameter exactly 1.
    TwoSymbols,
    /// `n ≥ 3`: at most `2n - 4`.
    Upper,
    /// Standard, `n ≥ 3`: at least `n - 1`.
    LowerStandard,
    /// `n ≥ 4`, 1 repeated, 2 once: at most `2n - 6`.
    RepeatedMin,
}

impl Bound {
    pub fn describe(self) -> &'static str {
        match self {
            Bound::TwoSymbols => "diameter = 1 for two symbols",
            Bound::Upper => "diameter <= 2n-4",
            Bound::LowerStandard => "diameter >= n-1 (standard)",
            Bound::RepeatedMin => "diameter <= 2n-6 (repeated minimum)",
        }
    }
}

/// The bounds that apply to a class with full content `{1, …, n}`, and
/// whether `diameter` satisfies each.
pub fn check_bounds(e: &Evaluation, diameter: usize) -> Vec<(Bound, bool)> {
    let n = e.content_size();
    let c = e.counts();
    let mut out = Vec::new();
    if n == 2 {
        out.push((Bound::TwoSymbols, diameter == 1));
    }
    if n >= 3 {
        out.push((Bound::Upper, diameter + 4 <= 2 * n));
        if e.is_standard() {
            out.push((Bound::LowerStandard, diameter + 1 >= n));
        }
    }
    if n >= 4 && c[0] >= 2 && c[1] == 1 {
        out.push((Bound::RepeatedMin, diameter + 6 <= 2 * n));
    }
    out
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub n: usize,
    pub rows: Vec<TableRow>,
    /// Classes whose diameter breaks the upper bound `2n - 4`
    /// (or `= 1` for two symbols).
    pub upper_violations: Vec<Evaluation>,
    /// Classes below `n - 1`. Data, not errors: the lower bound is only
    /// known for standard classes.
    pub below_lower: Vec<Evaluation>,
}

impl ScanReport {
    pub fn computed(&self) -> impl Iterator<Item = (&Evaluation, usize, usize)> {
        self.rows.iter().filter_map(|r| match r.outcome {
            RowOutcome::Computed { vertices, diameter: Some(d) } => Some((&r.evaluation, vertices, d)),
            _ => None,
        })
    }

    pub fn skipped(&self) -> usize {
        self.rows.iter().filter(|r| r.outcome == RowOutcome::Skipped).count()
    }

    pub fn min_diameter(&self) -> Option<usize> {
        self.computed().map(|(_, _, d)| d).min()
    }

    pub fn max_diameter(&self) -> Option<usize> {
        self.computed().map(|(_, _, d)| d).max()
    }
}

/// Diameters of every class with content `{1, …, n}`, length at most
/// `max_len` and at most `max_class_size` words. Larger classes are kept
/// as skipped rows.
pub fn conjecture_scan(
    n: usize,
    max_class_size: u64,
    max_len: usize,
    config: &RunConfig,
) -> anyhow::Result<ScanReport> {
    let variant = config.variant.unwrap_or(patience_core::Variant::Right);
    let guard = patience_core::Guard::new(max_class_size.max(1)).expect("positive");
    let mut report = ScanReport { n, rows: Vec::new(), upper_violations: Vec::new(), below_lower: Vec::new() };
    for e in full_content_evaluations(n, max_len) {
        let row = compute_row(&e, variant, guard, config.parallelism)?;
        if let Some(d) = row.diameter() {
            let upper_ok =
                check_bounds(&e, d).iter().all(|&(b, ok)| ok || !matches!(b, Bound::Upper | Bound::TwoSymbols));
            if !upper_ok {
                report.upper_violations.push(e.clone());
            }
            if n >= 3 && d + 1 < n {
                report.below_lower.push(e.clone());
            }
        }
        report.rows.push(row);
    }
    Ok(report)
}
