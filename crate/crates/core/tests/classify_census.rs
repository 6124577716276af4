mod common;

use std::collections::BTreeSet;

use common::{all_fixtures, expected, Naive};
use frobrel::classify::{
    brute_force_census, canonical_form, classify, encode, sample_completeness, search_census,
    CanonicalForm, ClassifyOptions,
};
use frobrel::frobenius::{is_frobenius, isomorphic, permutations};
use frobrel::{partition_function, ElemSet, Error, FrobData};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn opts() -> ClassifyOptions {
    ClassifyOptions::default()
}

#[test]
fn counts_up_to_three() {
    let counts: Vec<usize> = (0..=3)
        .map(|n| classify(n, &opts()).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 1, 5, 25]);
}

#[test]
fn members_are_sound_and_sorted() {
    for n in 0..=3 {
        let census = classify(n, &opts()).unwrap();
        let forms: Vec<&CanonicalForm> = census.members.iter().map(|m| &m.canonical).collect();
        assert!(forms.windows(2).all(|w| w[0] < w[1]));
        for m in &census.members {
            assert!(Naive::of(m.object.data()).is_frobenius());
            assert_eq!(canonical_form(m.object.data()), m.canonical);
        }
    }
}

/// Each fixture matches exactly one census member, with the same
/// proposition and construction tag.
#[test]
fn census_matches_fixtures_row_for_row() {
    let exp = expected();
    let censuses = [classify(2, &opts()).unwrap(), classify(3, &opts()).unwrap()];
    let mut used = BTreeSet::new();
    for (name, d) in all_fixtures() {
        let census = &censuses[d.n() - 2];
        let hits: Vec<usize> = census
            .members
            .iter()
            .enumerate()
            .filter(|(_, m)| isomorphic(&d, m.object.data()).is_some())
            .map(|(i, _)| i)
            .collect();
        assert_eq!(hits.len(), 1, "{name}");
        assert!(used.insert((d.n(), hits[0])), "{name} matched twice");
        let m = &census.members[hits[0]];
        let want = exp[&name]["proposition"].as_str().unwrap();
        assert_eq!(m.partition.as_ref().unwrap().proposition, want, "{name}");
        match exp[&name]["construction"].as_str() {
            Some(tag) => assert!(
                m.constructions.iter().any(|c| c.starts_with(tag)),
                "{name}: {:?}",
                m.constructions
            ),
            None => assert!(m.constructions.is_empty(), "{name}: {:?}", m.constructions),
        }
    }
    assert_eq!(used.len(), 30);
}

#[test]
fn brute_force_agrees_at_two() {
    let census = classify(2, &opts()).unwrap();
    assert_eq!(brute_force_census(2), census.canonical_forms());
    // labeled count: every valid raw candidate
    let valid = (0u64..1 << 12)
        .filter(|&code| {
            let m = |k: u64| ElemSet((code >> k) & 3);
            let d = FrobData::from_parts(2, m(0), m(2), (0..4).map(|e| m(4 + 2 * e)).collect());
            is_frobenius(&d)
        })
        .count() as u64;
    assert_eq!(census.labeled_count(), valid);
}

/// All tables allowed by the unit masks, for every unit and counit.
#[test]
fn exhaustive_masked_enumeration_at_three() {
    let n = 3;
    let census = classify(n, &opts()).unwrap();
    let mut forms = BTreeSet::new();
    let mut labeled = 0u64;
    for unit in 1u64..8 {
        let unit = ElemSet(unit);
        let masks: Vec<u64> = (0..n * n)
            .map(|e| {
                let (x, y) = (e / n, e % n);
                let mut m = 0b111;
                if unit.contains(y) {
                    m &= 1 << x;
                }
                if unit.contains(x) {
                    m &= 1 << y;
                }
                m
            })
            .collect();
        let free: Vec<(usize, usize)> = (0..n * n)
            .flat_map(|e| {
                let m = masks[e];
                (0..n)
                    .filter(move |&z| m >> z & 1 == 1)
                    .map(move |z| (e, z))
            })
            .collect();
        for code in 0u64..1 << free.len() {
            let mut mul = vec![ElemSet::EMPTY; n * n];
            for (k, &(e, z)) in free.iter().enumerate() {
                if code >> k & 1 == 1 {
                    mul[e].insert(z);
                }
            }
            for counit in 0u64..8 {
                let d = FrobData::from_parts(n, unit, ElemSet(counit), mul.clone());
                if is_frobenius(&d) {
                    labeled += 1;
                    forms.insert(canonical_form(&d));
                }
            }
        }
    }
    assert_eq!(forms, census.canonical_forms());
    assert_eq!(labeled, census.labeled_count());
}

#[test]
fn canonical_form_agrees_with_isomorphism() {
    let census = classify(3, &opts()).unwrap();
    let mut pool: Vec<FrobData> = census
        .members
        .iter()
        .map(|m| m.object.data().clone())
        .collect();
    let mut rng = StdRng::seed_from_u64(5);
    let perms = permutations(3);
    for _ in 0..100 {
        let base = pool[rng.gen_range(0..25)].clone();
        pool.push(base.relabel(&perms[rng.gen_range(0..6)]));
    }
    for a in &pool {
        for b in &pool {
            assert_eq!(
                canonical_form(a) == canonical_form(b),
                isomorphic(a, b).is_some()
            );
        }
    }
}

#[test]
fn canonical_form_is_least_encoding() {
    for m in classify(3, &opts()).unwrap().members {
        let d = m.object.data();
        let least = permutations(3)
            .iter()
            .map(|p| encode(&d.relabel(p)))
            .min()
            .unwrap();
        assert_eq!(least, m.canonical);
    }
}

#[test]
fn output_independent_of_jobs() {
    let one = classify(
        3,
        &ClassifyOptions {
            jobs: Some(1),
            ..opts()
        },
    )
    .unwrap();
    let four = classify(
        3,
        &ClassifyOptions {
            jobs: Some(4),
            ..opts()
        },
    )
    .unwrap();
    assert_eq!(one.to_json(), four.to_json());
    assert_eq!(one.stats, four.stats);
    assert_eq!(one.to_markdown(), four.to_markdown());
}

#[test]
fn sampled_completeness_at_three() {
    let census = classify(3, &opts()).unwrap().canonical_forms();
    let report = sample_completeness(3, 200_000, 0, &census);
    assert_eq!(report.samples, 200_000);
    assert_eq!(report.unmatched, 0);
}

#[test]
fn bound_is_enforced() {
    let o = ClassifyOptions { max_n: 2, ..opts() };
    assert!(matches!(
        classify(3, &o),
        Err(Error::BoundExceeded { n: 3, bound: 2 })
    ));
    assert!(search_census(9, None).is_err());
}

#[test]
fn four_element_census_is_sound() {
    let census = classify(4, &opts()).unwrap();
    for m in &census.members {
        assert!(Naive::of(m.object.data()).is_frobenius());
        let pf = partition_function(&m.object);
        assert_eq!(m.partition.as_ref(), Some(&pf));
    }
    assert_eq!(census.canonical_forms().len(), census.len());
}

#[test]
fn markdown_layout() {
    let md = classify(2, &opts()).unwrap().to_markdown();
    let lines: Vec<&str> = md.lines().collect();
    assert_eq!(
        lines[0],
        "| Case | Unit | Counit | Multiplication | Partition function |"
    );
    assert_eq!(lines.len(), 7);
    assert!(md.contains("| g is odd |"));
    assert!(md.contains("| g = 1 |"));
}

/// A second, structurally different search reproduces the census.
#[test]
fn entry_search_agrees() {
    for n in 1..=4 {
        let (forms, _) = common::entry_search_census(n);
        assert_eq!(
            forms,
            classify(n, &opts()).unwrap().canonical_forms(),
            "n = {n}"
        );
    }
}
