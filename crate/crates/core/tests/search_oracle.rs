//! Cross-checks the search engine against a naive enumeration that shares
//! no code with it: families are bitsets over the subset lattice and the
//! recovering predicate is four nested loops over members.

use sandglass::search::{
    extremal_search, RejectionReason, SearchBudget, SearchObjective,
};
use sandglass::sets::GroundSet;

fn naive_first_condition(a: &[u64], b: &[u64]) -> bool {
    for (i, &x) in a.iter().enumerate() {
        for &s in b {
            for (j, &y) in a.iter().enumerate() {
                for &t in b {
                    if x & !s == y & !t && i != j {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn naive_recovering(a: &[u64], b: &[u64]) -> bool {
    naive_first_condition(a, b) && naive_second_condition(a, b)
}

fn naive_second_condition(a: &[u64], b: &[u64]) -> bool {
    for &x in a {
        for (i, &s) in b.iter().enumerate() {
            for &y in a {
                for (j, &t) in b.iter().enumerate() {
                    if s & !x == t & !y && i != j {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn family_from_bitset(bits: u32, masks: &[u64]) -> Vec<u64> {
    masks
        .iter()
        .enumerate()
        .filter(|(i, _)| bits >> i & 1 == 1)
        .map(|(_, &m)| m)
        .collect()
}

struct NaiveMaxima {
    size: u64,
    full_unions: u64,
    weight: u64,
}

fn naive_maxima(n: usize) -> NaiveMaxima {
    let masks: Vec<u64> = (0..1u64 << n).collect();
    let full = (1u64 << n) - 1;
    let family_count = 1u32 << masks.len();
    let mut best = NaiveMaxima {
        size: 0,
        full_unions: 0,
        weight: 0,
    };
    for fa in 1..family_count {
        let a = family_from_bitset(fa, &masks);
        for fb in 1..family_count {
            let b = family_from_bitset(fb, &masks);
            if !naive_recovering(&a, &b) {
                continue;
            }
            let size = (a.len() * b.len()) as u64;
            let mut unions = 0;
            let mut weight = 0u64;
            for &x in &a {
                for &y in &b {
                    if x | y == full {
                        unions += 1;
                    }
                    weight += 1u64 << (x & y).count_ones();
                }
            }
            best.size = best.size.max(size);
            best.full_unions = best.full_unions.max(unions);
            best.weight = best.weight.max(weight);
        }
    }
    best
}

#[test]
fn engine_agrees_with_full_enumeration_up_to_three() {
    for n in 1..=3usize {
        let oracle = naive_maxima(n);
        assert_eq!(oracle.size, 1u64 << n, "oracle size at n={n}");
        assert_eq!(oracle.full_unions, 1, "oracle full unions at n={n}");
        assert_eq!(oracle.weight, 1u64 << n, "oracle weight at n={n}");

        let ground = GroundSet::new(n).unwrap();
        for (objective, expect) in [
            (SearchObjective::MaxSize, oracle.size),
            (SearchObjective::MaxFullUnions, oracle.full_unions),
            (SearchObjective::MaxAharoni, oracle.weight),
        ] {
            let outcome =
                extremal_search(ground, objective, SearchBudget::default(), 1).unwrap();
            assert!(outcome.exhausted, "n={n} {objective:?}");
            assert_eq!(outcome.best_value, expect, "n={n} {objective:?}");
        }
    }
}

/// If a recovering pair on four elements had three full-union solutions,
/// restricting both families to the matched members would yield one with
/// three members a side and still three solutions; no such pair exists.
#[test]
fn no_three_matching_on_four_elements() {
    let masks: Vec<u64> = (0..16).collect();
    let full = 15u64;
    let mut triples = Vec::new();
    for i in 0..16 {
        for j in i + 1..16 {
            for k in j + 1..16 {
                triples.push([masks[i], masks[j], masks[k]]);
            }
        }
    }
    let mut best = 0;
    for a in &triples {
        for b in &triples {
            let unions = a
                .iter()
                .flat_map(|&x| b.iter().map(move |&y| x | y))
                .filter(|&u| u == full)
                .count();
            if unions >= 3 && naive_recovering(a, b) {
                best = best.max(unions);
            }
        }
    }
    assert_eq!(best, 0);

    // The engine's exhaustive run settles the maximum at two.
    let outcome = extremal_search(
        GroundSet::new(4).unwrap(),
        SearchObjective::MaxFullUnions,
        SearchBudget::default(),
        1,
    )
    .unwrap();
    assert!(outcome.exhausted);
    assert_eq!(outcome.best_value, 2);
}

#[test]
fn four_element_exhaustive_values() {
    let ground = GroundSet::new(4).unwrap();
    let size = extremal_search(ground, SearchObjective::MaxSize, SearchBudget::default(), 1)
        .unwrap();
    assert!(size.exhausted);
    assert_eq!(size.best_value, 16);
    let weight = extremal_search(
        ground,
        SearchObjective::MaxAharoni,
        SearchBudget::default(),
        1,
    )
    .unwrap();
    assert!(weight.exhausted);
    assert_eq!(weight.best_value, 16);
}

#[test]
fn rejection_events_replay_against_the_naive_predicate() {
    let outcome = extremal_search(
        GroundSet::new(3).unwrap(),
        SearchObjective::MaxAharoni,
        SearchBudget::default(),
        1,
    )
    .unwrap();
    assert!(!outcome.rejections.is_empty());
    for event in outcome.rejections.iter().take(100) {
        // The state the candidate was checked against was itself sound.
        assert!(naive_recovering(&event.a_masks, &event.b_masks));
        let mut extended = event.b_masks.clone();
        extended.push(event.candidate);
        match event.reason {
            RejectionReason::FirstCondition => {
                assert!(!naive_first_condition(&event.a_masks, &extended))
            }
            RejectionReason::SecondCondition => {
                assert!(!naive_second_condition(&event.a_masks, &extended))
            }
        }
    }
}

#[test]
fn budgeted_run_reports_incomplete_sweep() {
    let outcome = extremal_search(
        GroundSet::new(5).unwrap(),
        SearchObjective::MaxSize,
        SearchBudget {
            max_nodes: Some(1_000),
            time_limit: None,
        },
        1,
    )
    .unwrap();
    assert!(!outcome.exhausted);
    assert!(outcome.best_value >= 32);
    assert!(outcome.witness.is_verified_recovering());
}

#[test]
fn worker_count_does_not_change_exhaustive_results() {
    let ground = GroundSet::new(4).unwrap();
    for objective in [
        SearchObjective::MaxSize,
        SearchObjective::MaxFullUnions,
        SearchObjective::MaxAharoni,
    ] {
        let single = extremal_search(ground, objective, SearchBudget::default(), 1).unwrap();
        let multi = extremal_search(ground, objective, SearchBudget::default(), 3).unwrap();
        assert_eq!(single.best_value, multi.best_value, "{objective:?}");
        assert!(single.exhausted && multi.exhausted);
    }
}
