//! Fixture loading and naive reference implementations shared by the
//! integration tests. The references use plain `BTreeSet`s and direct loops,
//! sharing no code with the library beyond the data accessors.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use frobrel::{ElemSet, FrobData, FrobObject};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn load(name: &str) -> FrobData {
    let text = std::fs::read_to_string(fixtures_dir().join(format!("{name}.json")))
        .unwrap_or_else(|e| panic!("{name}: {e}"));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// `(name, data)` for the five two-element and twenty-five three-element
/// fixtures, in table order.
pub fn all_fixtures() -> Vec<(String, FrobData)> {
    let names = (1..=5)
        .map(|i| format!("table1_case{i}"))
        .chain((1..=25).map(|i| format!("table2_case{i}")));
    names.map(|n| (n.clone(), load(&n))).collect()
}

pub fn expected() -> serde_json::Value {
    let text = std::fs::read_to_string(fixtures_dir().join("expected.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

pub fn object(d: &FrobData) -> FrobObject {
    frobrel::verify(d).unwrap_or_else(|r| panic!("{r}"))
}

pub type Table = Vec<Vec<BTreeSet<usize>>>;

pub struct Naive {
    pub n: usize,
    pub unit: BTreeSet<usize>,
    pub counit: BTreeSet<usize>,
    pub mul: Table,
}

impl Naive {
    pub fn of(d: &FrobData) -> Naive {
        let n = d.n();
        Naive {
            n,
            unit: d.unit().iter().collect(),
            counit: d.counit().iter().collect(),
            mul: (0..n)
                .map(|x| (0..n).map(|y| d.mul(x, y).iter().collect()).collect())
                .collect(),
        }
    }

    pub fn unital(&self) -> bool {
        (0..self.n).all(|x| {
            let right: BTreeSet<usize> = self
                .unit
                .iter()
                .flat_map(|&e| self.mul[x][e].clone())
                .collect();
            let left: BTreeSet<usize> = self
                .unit
                .iter()
                .flat_map(|&e| self.mul[e][x].clone())
                .collect();
            right == BTreeSet::from([x]) && left == BTreeSet::from([x])
        })
    }

    pub fn associative(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mut l = BTreeSet::new();
                    for &w in &self.mul[x][y] {
                        l.extend(self.mul[w][z].iter().copied());
                    }
                    let mut r = BTreeSet::new();
                    for &w in &self.mul[y][z] {
                        r.extend(self.mul[x][w].iter().copied());
                    }
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The pairing matrix, if it is a permutation matrix, as `x ↦ y`.
    pub fn alpha(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let hit = |x: usize, y: usize| self.mul[x][y].iter().any(|z| self.counit.contains(z));
        let mut alpha = vec![0; n];
        for (x, a) in alpha.iter_mut().enumerate() {
            let ys: Vec<usize> = (0..n).filter(|&y| hit(x, y)).collect();
            if ys.len() != 1 {
                return None;
            }
            *a = ys[0];
        }
        for y in 0..n {
            if (0..n).filter(|&x| hit(x, y)).count() != 1 {
                return None;
            }
        }
        Some(alpha)
    }

    pub fn is_frobenius(&self) -> bool {
        self.unital() && self.alpha().is_some() && self.associative()
    }

    /// `S(x) = ⋃_y ⋃_{z ∈ μ(y,x)} μ(α(y), z)`.
    pub fn handle(&self, state: &BTreeSet<usize>) -> BTreeSet<usize> {
        let alpha = self.alpha().expect("nondegenerate");
        let mut out = BTreeSet::new();
        for &x in state {
            for (y, &ay) in alpha.iter().enumerate() {
                for &z in &self.mul[y][x] {
                    out.extend(self.mul[ay][z].iter().copied());
                }
            }
        }
        out
    }

    /// `Z(Σ_g)` for `g < len` by direct iteration.
    pub fn partition_values(&self, len: usize) -> Vec<bool> {
        let mut state = self.unit.clone();
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push(state.iter().any(|x| self.counit.contains(x)));
            state = self.handle(&state);
        }
        out
    }
}

/// Census by whole-entry backtracking: each entry ranges over the subsets
/// allowed by the unit masks and the permutation pattern, and an axiom
/// instance is checked exactly once every entry it reads is assigned. Only
/// prefix units are tried; every counit and permutation is tried.
pub fn entry_search_census(n: usize) -> (BTreeSet<frobrel::classify::CanonicalForm>, u64) {
    use frobrel::classify::canonical_form;
    use frobrel::frobenius::permutations;

    struct S<'a> {
        n: usize,
        unit: u8,
        domains: Vec<Vec<u8>>,
        table: Vec<Option<u8>>,
        out: &'a mut dyn FnMut(&[Option<u8>]),
    }

    impl S<'_> {
        fn get(&self, x: usize, y: usize) -> Option<u8> {
            self.table[x * self.n + y]
        }

        fn union_over(&self, outer: u8, inner: impl Fn(usize) -> Option<u8>) -> Option<u8> {
            let mut acc = 0u8;
            for w in 0..self.n {
                if outer >> w & 1 == 1 {
                    acc |= inner(w)?;
                }
            }
            Some(acc)
        }

        fn consistent(&self) -> bool {
            let n = self.n;
            for x in 0..n {
                let right = self.union_over(self.unit, |e| self.get(x, e));
                let left = self.union_over(self.unit, |e| self.get(e, x));
                if right.is_some_and(|r| r != 1 << x) || left.is_some_and(|l| l != 1 << x) {
                    return false;
                }
            }
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let l = self
                            .get(x, y)
                            .and_then(|xy| self.union_over(xy, |w| self.get(w, z)));
                        let r = self
                            .get(y, z)
                            .and_then(|yz| self.union_over(yz, |w| self.get(x, w)));
                        if let (Some(l), Some(r)) = (l, r) {
                            if l != r {
                                return false;
                            }
                        }
                    }
                }
            }
            true
        }

        fn run(&mut self, k: usize) {
            if k == self.table.len() {
                (self.out)(&self.table);
                return;
            }
            for i in 0..self.domains[k].len() {
                self.table[k] = Some(self.domains[k][i]);
                if self.consistent() {
                    self.run(k + 1);
                }
            }
            self.table[k] = None;
        }
    }

    let full: u8 = ((1u16 << n) - 1) as u8;
    let mut forms = BTreeSet::new();
    let mut leaves = 0u64;
    for k in 1..=n {
        let unit: u8 = ((1u16 << k) - 1) as u8;
        for eps in 0..=full {
            if eps.count_ones() as usize != k {
                continue;
            }
            for pi in permutations(n) {
                let domains: Vec<Vec<u8>> = (0..n * n)
                    .map(|e| {
                        let (x, y) = (e / n, e % n);
                        (0..=full)
                            .filter(|&s| {
                                (unit >> y & 1 == 0 || s & !(1 << x) == 0)
                                    && (unit >> x & 1 == 0 || s & !(1 << y) == 0)
                                    && ((s & eps != 0) == (pi[x] == y))
                            })
                            .collect()
                    })
                    .collect();
                let mut record = |t: &[Option<u8>]| {
                    let mul = t.iter().map(|m| ElemSet(m.unwrap() as u64)).collect();
                    let d = FrobData::from_parts(n, ElemSet(unit as u64), ElemSet(eps as u64), mul);
                    assert!(frobrel::frobenius::is_frobenius(&d));
                    leaves += 1;
                    forms.insert(canonical_form(&d));
                };
                let mut s = S {
                    n,
                    unit,
                    domains,
                    table: vec![None; n * n],
                    out: &mut record,
                };
                s.run(0);
            }
        }
    }
    (forms, leaves)
}
