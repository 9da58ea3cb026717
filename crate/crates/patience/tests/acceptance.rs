//! Acceptance suite. Prints one line per criterion and exits non-zero on
//! any unexpected failure.
//!
//! `PATIENCE_ACCEPTANCE_FULL=1` adds the length 9 row of the standard table
//! (about a minute single-threaded).

use std::collections::BTreeMap;
use std::time::Instant;

use patience::json::tableau_to_json;
use patience::scan::{check_bounds, full_content_evaluations, Bound};
use patience::tables::compute_row;
use patience_core::conjugacy::{
    c2_decode, lsim_bounded, osim_bounded, psim, tpsim, two_symbol_tpsim_equals_lsim_check, verify_lsim_witness,
    ConjugacyStatus,
};
use patience_core::insertion::{column_reading, insert_word, words_of};
use patience_core::multiset::MultisetPermutations;
use patience_core::presentation::congruence_closure;
use patience_core::shiftgraph::{
    central_element, cocharge, cocharge_of_element, component, path_to_center, ShiftGraph,
};
use patience_core::{Evaluation, Guard, PsTableau, Variant, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Outcome {
    Pass(String),
    Fail(String),
    /// Fails in a way that disagrees with a published value; the
    /// check still pins the exact shape of the failure.
    KnownFail(String),
}

fn ev(c: &[usize]) -> Evaluation {
    Evaluation::from_counts(c.to_vec())
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn check(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Outcome::Pass(pass)
    } else {
        Outcome::Fail(fail)
    }
}

fn table_one() -> Outcome {
    let expected: &[(usize, usize)] =
        &[(1, 0), (2, 1), (5, 2), (15, 4), (52, 6), (203, 8), (877, 10), (4140, 12), (21147, 14)];
    let full = std::env::var("PATIENCE_ACCEPTANCE_FULL").is_ok_and(|v| v == "1");
    let max = if full { 9 } else { 8 };
    let mut bad = Vec::new();
    let mut got = Vec::new();
    for n in 1..=max {
        let row = compute_row(&Evaluation::standard(n), Variant::Right, Guard::DEFAULT, 1).unwrap();
        let pair = (row.vertices().unwrap_or(0), row.diameter().unwrap_or(usize::MAX));
        got.push(format!("{}/{}", pair.0, pair.1));
        if pair != expected[n - 1] {
            bad.push(format!("length {n}: got {pair:?}, expected {:?}", expected[n - 1]));
        }
    }
    check(bad.is_empty(), format!("lengths 1-{max}: {}", got.join(" ")), bad.join("; "))
}

fn table_two() -> Outcome {
    let rows: &[(&[usize], usize, usize)] = &[
        (&[5], 1, 0),
        (&[5, 3], 4, 1),
        (&[4, 1, 4], 20, 2),
        (&[3, 3, 1, 2], 75, 3),
        (&[1, 2, 4, 2], 287, 4),
        (&[1, 3, 2, 1, 2], 656, 5),
        (&[2, 1, 1, 2, 3], 554, 4),
        (&[1, 2, 1, 2, 2], 711, 6),
    ];
    let mut bad = Vec::new();
    for &(c, vertices, diameter) in rows {
        let e = ev(c);
        assert!(e.multinomial() <= 200_000);
        let row = compute_row(&e, Variant::Right, Guard::DEFAULT, 1).unwrap();
        if (row.vertices(), row.diameter()) != (Some(vertices), Some(diameter)) {
            bad.push(format!("{e}: got {:?}/{:?}", row.vertices(), row.diameter()));
        }
    }
    if bad.is_empty() {
        return Outcome::Pass(format!("{} rows exact", rows.len()));
    }
    // the printed row (1,2,1,2,2) -> 711/6 matches the class (1,3,1,2,2);
    // the class (1,2,1,2,2) itself has 495 vertices
    let neighbour = compute_row(&ev(&[1, 3, 1, 2, 2]), Variant::Right, Guard::DEFAULT, 1).unwrap();
    let known = bad.len() == 1
        && bad[0] == "(1,2,1,2,2): got Some(495)/Some(6)"
        && (neighbour.vertices(), neighbour.diameter()) == (Some(711), Some(6));
    let msg = format!(
        "{} of {} rows exact; {}; (1,3,1,2,2) gives {:?}/{:?}",
        rows.len() - bad.len(),
        rows.len(),
        bad.join("; "),
        neighbour.vertices(),
        neighbour.diameter()
    );
    if known {
        Outcome::KnownFail(msg)
    } else {
        Outcome::Fail(msg)
    }
}

fn golden_json() -> Outcome {
    let u = w("4511432");
    let r = tableau_to_json(&insert_word(&u, Variant::Left));
    let s = tableau_to_json(&insert_word(&u, Variant::Right));
    let r_expected = r#"{"variant":"left","columns":[[1,4],[1,5],[2,3,4]]}"#;
    let s_expected = r#"{"variant":"right","columns":[[1,1,4],[2,3,4,5]]}"#;
    check(r == r_expected && s == s_expected, format!("R={r} S={s}"), format!("R={r} S={s}"))
}

fn component_1234() -> Outcome {
    let r = |s: &str| insert_word(&w(s), Variant::Right);
    let g = component(&r("1234"), Guard::DEFAULT).unwrap();
    let center = g.index_of(&r("3214")).unwrap();
    let (a, b) = (g.index_of(&r("1234")).unwrap(), g.index_of(&r("4321")).unwrap());
    let got = (g.vertex_count(), g.diameter().unwrap(), g.eccentricity(center).unwrap(), g.distance(a, b).unwrap());
    let msg = format!("vertices={} diameter={} ecc(3214)={} dist(1234,4321)={}", got.0, got.1, got.2, got.3);
    check(got == (15, 4, 2, 3), msg.clone(), msg)
}

fn cocharge_criterion() -> Outcome {
    let value = cocharge(&w("4572631")).unwrap();
    let mut violations = 0;
    let mut pairs = 0u64;
    for n in 1..=6 {
        let mut classes: BTreeMap<PsTableau, Vec<Word>> = BTreeMap::new();
        for word in MultisetPermutations::new(&Evaluation::standard(n)) {
            classes.entry(insert_word(&word, Variant::Right)).or_default().push(word);
        }
        for (t, words) in &classes {
            let reference = cocharge_of_element(t).unwrap();
            for u in words {
                pairs += words.len() as u64;
                if cocharge(u).unwrap() != reference {
                    violations += 1;
                }
            }
        }
    }
    check(
        value.labels() == [0, 1, 1, 2, 2, 2, 3] && violations == 0,
        format!("coch(4572631)={value}; {pairs} equivalent pairs, 0 violations"),
        format!("coch(4572631)={value}; {violations} violations"),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut words = vec![Vec::<u32>::new()];
    let mut frontier = words.clone();
    for _ in 0..6 {
        let next: Vec<Vec<u32>> =
            frontier.iter().flat_map(|p| (1..=3).map(move |a| [p.as_slice(), &[a]].concat())).collect();
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let mut bad = 0;
    for v in [Variant::Left, Variant::Right] {
        for values in &words {
            let word = Word::from_values(values).unwrap();
            let closure = congruence_closure(&word, v, Guard::DEFAULT).unwrap();
            let fibre = words_of(&insert_word(&word, v), Guard::DEFAULT).unwrap();
            if closure != fibre {
                bad += 1;
            }
        }
    }
    check(bad == 0, format!("{} words x 2 variants, 0 discrepancies", words.len()), format!("{bad} discrepancies"))
}

fn diameter_bounds() -> Outcome {
    const MAX_LEN: usize = 10;
    const MAX_CLASS: u128 = 50_000;
    let mut classes = 0;
    let mut broken: BTreeMap<Bound, Vec<(Evaluation, usize)>> = BTreeMap::new();
    for n in 2..=MAX_LEN {
        for e in full_content_evaluations(n, MAX_LEN) {
            if e.multinomial() > MAX_CLASS {
                continue;
            }
            let d = ShiftGraph::class_graph(&e, Variant::Right, Guard::DEFAULT).unwrap().diameter().unwrap();
            classes += 1;
            for (bound, ok) in check_bounds(&e, d) {
                if !ok {
                    broken.entry(bound).or_default().push((e.clone(), d));
                }
            }
        }
    }
    let scope = format!("{classes} classes, length <= {MAX_LEN}, multinomial <= {MAX_CLASS}");
    if broken.is_empty() {
        return Outcome::Pass(format!("{scope}, 0 violations"));
    }
    let summary: Vec<String> = broken
        .iter()
        .map(|(b, v)| format!("{}: {} classes, e.g. {} diameter {}", b.describe(), v.len(), v[0].0, v[0].1))
        .collect();
    // the repeated-minimum bound fails for n = 4 (diameter 3 > 2); only that
    // exact pattern is tolerated
    let known = broken.len() == 1
        && broken.get(&Bound::RepeatedMin).is_some_and(|v| v.iter().all(|(e, d)| e.content_size() == 4 && *d == 3));
    let msg = format!("{scope}; {}", summary.join("; "));
    if known {
        Outcome::KnownFail(msg)
    } else {
        Outcome::Fail(msg)
    }
}

fn constructive_paths() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 3..=6 {
        let e = Evaluation::standard(n);
        let center = central_element(&e).unwrap();
        let class = ShiftGraph::class_graph(&e, Variant::Right, Guard::DEFAULT).unwrap();
        for t in class.vertices() {
            checked += 1;
            match path_to_center(t) {
                Ok(p) if p.verify() && p.len() <= n - 2 && *p.end() == center => {}
                other => bad.push(format!("{}: {:?}", column_reading(t), other.map(|p| p.len()))),
            }
        }
    }
    check(
        bad.is_empty(),
        format!("{checked} tableaux, all verified within n-2 steps"),
        format!("{} failures, e.g. {}", bad.len(), bad.first().cloned().unwrap_or_default()),
    )
}

fn strictness() -> Outcome {
    let l = |s: &str| insert_word(&w(s), Variant::Left);
    let g = Guard::DEFAULT;
    let (a, b) = (l("21121"), l("21112"));
    let psim_ab = psim(&a, &b, g).unwrap();
    let tpsim_ab = tpsim(&a, &b, g).unwrap();
    let (c, d) = (l("211211"), l("211121"));
    let decoded = c2_decode(&c).is_some() && c2_decode(&d).is_some();
    let lsim_cd = lsim_bounded(&c, &d, c.len() + 4).unwrap().status;
    let mut violations = 0;
    let mut pairs = 0;
    for counts in [[1, 1], [2, 1], [2, 2], [3, 2]] {
        let e = ev(&counts);
        let report = two_symbol_tpsim_equals_lsim_check(&e, e.total() + 4, g).unwrap();
        violations += report.violations.len();
        pairs += report.pairs_checked;
    }
    let msg = format!(
        "psim={psim_ab} tpsim={tpsim_ab}; lsim(211211,211121)={lsim_cd} (C2 decoded: {decoded}); two-symbol: {pairs} pairs, {violations} violations"
    );
    check(
        !psim_ab && tpsim_ab && decoded && lsim_cd == ConjugacyStatus::NotRelated && violations == 0,
        msg.clone(),
        msg,
    )
}

fn inclusion_chain() -> Outcome {
    const PAIRS: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_2024);
    let g = Guard::DEFAULT;
    let mut violations = Vec::new();
    let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
    for _ in 0..PAIRS {
        let variant = if rng.gen_bool(0.5) { Variant::Left } else { Variant::Right };
        let len = rng.gen_range(1..=7);
        let mut u: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=4)).collect();
        let mut v = u.clone();
        for i in (1..v.len()).rev() {
            v.swap(i, rng.gen_range(0..=i));
        }
        if rng.gen_bool(0.2) {
            u = v.clone();
            u.rotate_left(rng.gen_range(0..len));
        }
        let tu = insert_word(&Word::from_values(&u).unwrap(), variant);
        let tv = insert_word(&Word::from_values(&v).unwrap(), variant);
        let p = psim(&tu, &tv, g).unwrap();
        let tp = tpsim(&tu, &tv, g).unwrap();
        let bound = tu.len() + 4;
        let o = osim_bounded(&tu, &tv, bound).unwrap();
        let l = lsim_bounded(&tu, &tv, bound).unwrap();
        let e = tu.evaluation() == tv.evaluation();
        if let Some(gw) = &l.witness {
            if !verify_lsim_witness(&tu, &tv, gw) {
                violations.push(format!("bad lsim witness for {tu:?}/{tv:?}"));
            }
        }
        let steps = [
            ("psim=>tpsim", !p || tp),
            ("tpsim=>osim", !tp || !o.is_not_related()),
            ("osim=>lsim", !o.is_related() || l.is_related()),
            ("osim=>lsim (negative)", !l.is_not_related() || !o.is_related()),
            ("lsim=>evsim", !l.is_related() || e),
        ];
        for (name, ok) in steps {
            if !ok {
                violations.push(format!("{name} fails for {} / {}", column_reading(&tu), column_reading(&tv)));
            }
        }
        *tally
            .entry(if p {
                "psim"
            } else if tp {
                "tpsim"
            } else if l.is_related() {
                "lsim"
            } else {
                "other"
            })
            .or_default() += 1;
    }
    let mix: Vec<String> = tally.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    if violations.is_empty() {
        Outcome::Pass(format!("{PAIRS} pairs (bound |u|+4), 0 violations; strongest relation {}", mix.join(" ")))
    } else {
        Outcome::Fail(format!("{} violations, e.g. {}", violations.len(), violations[0]))
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("standard class table", table_one),
        ("non-standard class table", table_two),
        ("insertion golden JSON", golden_json),
        ("component of 1234", component_1234),
        ("cocharge value and invariance", cocharge_criterion),
        ("rewriting closure equals insertion fibre", oracle_equivalence),
        ("diameter bounds", diameter_bounds),
        ("constructive paths to the center", constructive_paths),
        ("conjugacy strictness witnesses", strictness),
        ("inclusion chain on random pairs", inclusion_chain),
    ];
    let mut unexpected = 0;
    let mut known = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match outcome {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Fail(d) => {
                unexpected += 1;
                ("FAIL", d)
            }
            Outcome::KnownFail(d) => {
                known += 1;
                ("FAIL (known)", d)
            }
        };
        println!("criterion {:>2} {tag}: {name} [{secs:.1}s] {detail}", i + 1);
    }
    let total = criteria.len();
    println!(
        "acceptance: {} passed, {known} known failures, {unexpected} unexpected failures",
        total - known - unexpected
    );
    if unexpected > 0 {
        std::process::exit(1);
    }
}
