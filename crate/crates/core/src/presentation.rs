//! Defining relations of the two monoids and the congruence they generate.
//!
//! Both presentations consist of pairs `(y·u·x, y·x·u)` where
//! `u = u_m ⋯ u_1` is a decreasing run:
//!
//! * left:  `x < y ≤ u_1 < u_2 < ⋯ < u_m`
//! * right: `x ≤ y < u_1 ≤ u_2 ≤ ⋯ ≤ u_m`

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::{Guard, Result};
use crate::word::{Symbol, Variant, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `y·u·x → y·x·u`
    LeftToRight,
    /// `y·x·u → y·u·x`
    RightToLeft,
}

/// One application site of a defining relation inside a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelationInstance {
    /// Index of `y` in the word.
    pub position: usize,
    pub x: Symbol,
    pub y: Symbol,
    /// `u_m ⋯ u_1` as it appears in the word.
    pub u: Vec<Symbol>,
    pub direction: Direction,
}

impl RelationInstance {
    pub fn m(&self) -> usize {
        self.u.len()
    }

    pub fn is_admissible(&self, variant: Variant) -> bool {
        let Some(&u1) = self.u.last() else {
            return false;
        };
        run_ok(&self.u, variant) && pair_ok(self.x, self.y, u1, variant)
    }

    /// The factor this instance matches.
    pub fn source(&self) -> Vec<Symbol> {
        match self.direction {
            Direction::LeftToRight => self.yux(),
            Direction::RightToLeft => self.yxu(),
        }
    }

    /// The factor that replaces it.
    pub fn target(&self) -> Vec<Symbol> {
        match self.direction {
            Direction::LeftToRight => self.yxu(),
            Direction::RightToLeft => self.yux(),
        }
    }

    fn yux(&self) -> Vec<Symbol> {
        let mut f = alloc::vec![self.y];
        f.extend_from_slice(&self.u);
        f.push(self.x);
        f
    }

    fn yxu(&self) -> Vec<Symbol> {
        let mut f = alloc::vec![self.y, self.x];
        f.extend_from_slice(&self.u);
        f
    }

    pub fn apply(&self, w: &Word) -> Word {
        let mut symbols = w.symbols().to_vec();
        let target = self.target();
        symbols[self.position..self.position + target.len()].copy_from_slice(&target);
        Word::new(symbols)
    }
}

fn run_ok(u: &[Symbol], variant: Variant) -> bool {
    u.windows(2).all(|p| match variant {
        Variant::Left => p[0] > p[1],
        Variant::Right => p[0] >= p[1],
    })
}

fn pair_ok(x: Symbol, y: Symbol, u1: Symbol, variant: Variant) -> bool {
    match variant {
        Variant::Left => x < y && y <= u1,
        Variant::Right => x <= y && y < u1,
    }
}

fn step_ok(prev: Symbol, next: Symbol, variant: Variant) -> bool {
    match variant {
        Variant::Left => prev > next,
        Variant::Right => prev >= next,
    }
}

/// Every admissible relation site in `w`, in both directions.
pub fn relation_instances(w: &Word, variant: Variant) -> Vec<RelationInstance> {
    let s = w.symbols();
    let n = s.len();
    let mut out = Vec::new();
    for p in 0..n.saturating_sub(2) {
        let y = s[p];
        // y · u_m⋯u_1 · x, u starting at p+1
        for end in p + 1..n - 1 {
            if end > p + 1 && !step_ok(s[end - 1], s[end], variant) {
                break;
            }
            let (u1, x) = (s[end], s[end + 1]);
            if pair_ok(x, y, u1, variant) {
                out.push(RelationInstance {
                    position: p,
                    x,
                    y,
                    u: s[p + 1..=end].to_vec(),
                    direction: Direction::LeftToRight,
                });
            }
        }
        // y · x · u_m⋯u_1, u starting at p+2
        let x = s[p + 1];
        for end in p + 2..n {
            if end > p + 2 && !step_ok(s[end - 1], s[end], variant) {
                break;
            }
            if pair_ok(x, y, s[end], variant) {
                out.push(RelationInstance {
                    position: p,
                    x,
                    y,
                    u: s[p + 2..=end].to_vec(),
                    direction: Direction::RightToLeft,
                });
            }
        }
    }
    out
}

/// Words one defining relation away from `w`, excluding `w` itself.
pub fn rewrite_neighbors(w: &Word, variant: Variant) -> BTreeSet<Word> {
    relation_instances(w, variant).iter().map(|r| r.apply(w)).filter(|v| v != w).collect()
}

/// The `≡x`-class of `w`, by breadth-first closure under the relations.
pub fn congruence_closure(w: &Word, variant: Variant, guard: Guard) -> Result<BTreeSet<Word>> {
    guard.check(w.evaluation().multinomial())?;
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(current) = queue.pop_front() {
        for next in rewrite_neighbors(&current, variant) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::insertion::insert_word;
    use alloc::string::{String, ToString};
    use alloc::vec;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn strings(set: &BTreeSet<Word>) -> Vec<String> {
        set.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn right_relation_on_121() {
        let n = rewrite_neighbors(&w("121"), Variant::Right);
        assert!(n.contains(&w("112")));
        assert_eq!(insert_word(&w("121"), Variant::Right), insert_word(&w("112"), Variant::Right));
    }

    #[test]
    fn left_relation_on_213() {
        let n = rewrite_neighbors(&w("213"), Variant::Left);
        assert!(n.contains(&w("231")));
        assert_eq!(insert_word(&w("213"), Variant::Left), insert_word(&w("231"), Variant::Left));
    }

    #[test]
    fn constant_word_has_no_neighbours() {
        for variant in [Variant::Left, Variant::Right] {
            assert!(rewrite_neighbors(&w("111"), variant).is_empty());
        }
    }

    #[test]
    fn longer_runs_are_matched() {
        // y=2, u=43, x=1 under the left schema: 1 < 2 ≤ 3 < 4
        let inst = relation_instances(&w("2431"), Variant::Left);
        assert!(inst.iter().any(|r| r.u == w("43").into_symbols() && r.direction == Direction::LeftToRight));
        assert!(rewrite_neighbors(&w("2431"), Variant::Left).contains(&w("2143")));
        // a repeated entry breaks a left run but not a right one
        assert!(!rewrite_neighbors(&w("2331"), Variant::Left).contains(&w("2133")));
        assert!(!rewrite_neighbors(&w("2331"), Variant::Right).is_empty());
        for r in relation_instances(&w("24431"), Variant::Right) {
            assert!(r.is_admissible(Variant::Right));
        }
    }

    #[test]
    fn closures() {
        let g = Guard::DEFAULT;
        assert_eq!(strings(&congruence_closure(&w("21121"), Variant::Left, g).unwrap()), vec!["21121"]);
        assert_eq!(strings(&congruence_closure(&w("121"), Variant::Right, g).unwrap()), vec!["112", "121"]);
        for variant in [Variant::Left, Variant::Right] {
            assert_eq!(strings(&congruence_closure(&w("5"), variant, g).unwrap()), vec!["5"]);
        }
    }
}
