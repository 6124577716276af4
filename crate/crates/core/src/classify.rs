//! Exhaustive classification of Frobenius objects on `n` elements up to
//! isomorphism.
//!
//! The search fixes the unit (one representative per cardinality), then a
//! counit (one representative per orbit of the stabilizer of the partially
//! forced table), then the permutation pattern that nondegeneracy demands
//! of `M[x][y] = (μ̃(x,y) ∩ ε ≠ ∅)`. Each such branch is an independent work
//! item. Within a branch the multiplication table is a three-valued
//! assignment of its `n³` membership bits; a depth-first search decides
//! bits in row-major order, "out" before "in", and after every decision
//! propagates unit clauses and associativity bounds until a fixpoint.
//! Survivors are deduplicated by [`CanonicalForm`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::constructors::catalog;
use crate::error::{Error, Result};
use crate::frobenius::{
    is_frobenius, next_permutation, permutations, verify, FrobData, FrobObject,
};
use crate::relation::{ElemSet, FinSet};
use crate::tqft::{partition_function, PartitionFunction};

/// Largest carrier the search engine represents (one byte per table entry).
pub const SEARCH_LIMIT: usize = 8;

/// Default bound on `n`; override with `FROBREL_MAX_N`.
pub const DEFAULT_MAX_N: usize = 4;

/// The propagation derived a bit that must be both in and out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Contradiction;

type Prop = std::result::Result<(), Contradiction>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bit {
    In,
    Out,
    Undecided,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct Table {
    yes: [u8; SEARCH_LIMIT * SEARCH_LIMIT],
    no: [u8; SEARCH_LIMIT * SEARCH_LIMIT],
}

impl Table {
    fn set_in(&mut self, e: usize, m: u8, pending: &mut u64) -> Prop {
        if self.no[e] & m != 0 {
            return Err(Contradiction);
        }
        if self.yes[e] | m != self.yes[e] {
            self.yes[e] |= m;
            *pending |= 1 << e;
        }
        Ok(())
    }

    fn set_out(&mut self, e: usize, m: u8, pending: &mut u64) -> Prop {
        if self.yes[e] & m != 0 {
            return Err(Contradiction);
        }
        if self.no[e] | m != self.no[e] {
            self.no[e] |= m;
            *pending |= 1 << e;
        }
        Ok(())
    }
}

/// Constraints shared by every node below a stage of the search.
#[derive(Debug)]
struct Ctx {
    n: usize,
    full: u8,
    /// At-least-one clauses: some listed `(entry, mask)` bit must be in.
    clauses: Vec<Vec<(u8, u8)>>,
    clauses_by_entry: Vec<Vec<u32>>,
    /// Triples `(x, y, z)` whose bracketings read a given entry.
    triples_by_entry: Vec<Vec<(u8, u8, u8)>>,
    associativity: bool,
}

impl Ctx {
    fn new(n: usize) -> Self {
        let mut triples_by_entry = vec![Vec::new(); n * n];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    // left reads (x,y) and (w,z); right reads (y,z) and (x,w)
                    let mut deps = vec![x * n + y, y * n + z];
                    deps.extend((0..n).map(|w| w * n + z));
                    deps.extend((0..n).map(|w| x * n + w));
                    deps.sort_unstable();
                    deps.dedup();
                    for e in deps {
                        triples_by_entry[e].push((x as u8, y as u8, z as u8));
                    }
                }
            }
        }
        Ctx {
            n,
            full: ElemSet::full(n).0 as u8,
            clauses: Vec::new(),
            clauses_by_entry: vec![Vec::new(); n * n],
            triples_by_entry,
            associativity: false,
        }
    }

    fn add_clause(&mut self, clause: Vec<(u8, u8)>) {
        let id = self.clauses.len() as u32;
        let mut entries: Vec<u8> = clause.iter().map(|&(e, _)| e).collect();
        entries.sort_unstable();
        entries.dedup();
        for e in entries {
            self.clauses_by_entry[e as usize].push(id);
        }
        self.clauses.push(clause);
    }

    fn clone_for_next_stage(&self) -> Ctx {
        Ctx {
            n: self.n,
            full: self.full,
            clauses: self.clauses.clone(),
            clauses_by_entry: self.clauses_by_entry.clone(),
            triples_by_entry: self.triples_by_entry.clone(),
            associativity: self.associativity,
        }
    }

    fn all_entries(&self) -> u64 {
        if self.n * self.n == 64 {
            u64::MAX
        } else {
            (1u64 << (self.n * self.n)) - 1
        }
    }

    fn check_clause(&self, t: &mut Table, c: usize, pending: &mut u64) -> Prop {
        let clause = &self.clauses[c];
        if clause.iter().any(|&(e, m)| t.yes[e as usize] & m != 0) {
            return Ok(());
        }
        let mut open = clause
            .iter()
            .map(|&(e, m)| (e as usize, m & !t.no[e as usize]))
            .filter(|&(_, m)| m != 0);
        match (open.next(), open.next()) {
            (None, _) => Err(Contradiction),
            (Some((e, m)), None) if m.count_ones() == 1 => t.set_in(e, m, pending),
            _ => Ok(()),
        }
    }

    /// Bounds on `⋃_{w ∈ μ̃(outer)} μ̃(inner(w))`.
    fn bounds(&self, t: &Table, outer: usize, inner: impl Fn(usize) -> usize) -> (u8, u8) {
        let yes = t.yes[outer];
        let maybe = self.full & !t.no[outer];
        let (mut lo, mut hi) = (0u8, 0u8);
        for w in bits(maybe) {
            let e = inner(w);
            hi |= self.full & !t.no[e];
            if yes >> w & 1 == 1 {
                lo |= t.yes[e];
            }
        }
        (lo, hi)
    }

    /// Forces one bracketing towards `need ⊆ side ⊆ !forbid`.
    fn enforce(
        &self,
        t: &mut Table,
        outer: usize,
        inner: impl Fn(usize) -> usize,
        need: u8,
        forbid: u8,
        pending: &mut u64,
    ) -> Prop {
        if forbid != 0 {
            for w in bits(self.full & !t.no[outer]) {
                let e = inner(w);
                if t.yes[outer] >> w & 1 == 1 {
                    t.set_out(e, forbid, pending)?;
                } else if t.yes[e] & forbid != 0 {
                    t.set_out(outer, 1 << w, pending)?;
                }
            }
        }
        let (lo, _) = self.bounds(t, outer, &inner);
        for v in bits(need & !lo) {
            let mut witness = None;
            let mut count = 0;
            for w in bits(self.full & !t.no[outer]) {
                if !t.no[inner(w)] >> v & 1 == 1 {
                    count += 1;
                    witness = Some(w);
                }
            }
            match (count, witness) {
                (0, _) => return Err(Contradiction),
                (1, Some(w)) => {
                    t.set_in(outer, 1 << w, pending)?;
                    t.set_in(inner(w), 1 << v, pending)?;
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn check_triple(
        &self,
        t: &mut Table,
        (x, y, z): (usize, usize, usize),
        pending: &mut u64,
    ) -> Prop {
        let n = self.n;
        let left_inner = |w: usize| w * n + z;
        let right_inner = |w: usize| x * n + w;
        let (llo, lhi) = self.bounds(t, x * n + y, left_inner);
        let (rlo, rhi) = self.bounds(t, y * n + z, right_inner);
        if llo & !rhi != 0 || rlo & !lhi != 0 {
            return Err(Contradiction);
        }
        self.enforce(t, x * n + y, left_inner, rlo, self.full & !rhi, pending)?;
        self.enforce(t, y * n + z, right_inner, llo, self.full & !lhi, pending)
    }

    fn propagate(&self, t: &mut Table, mut pending: u64) -> Prop {
        while pending != 0 {
            let e = pending.trailing_zeros() as usize;
            pending &= pending - 1;
            for &c in &self.clauses_by_entry[e] {
                self.check_clause(t, c as usize, &mut pending)?;
            }
            if self.associativity {
                for &(x, y, z) in &self.triples_by_entry[e] {
                    self.check_triple(t, (x as usize, y as usize, z as usize), &mut pending)?;
                }
            }
        }
        Ok(())
    }
}

fn bits(m: u8) -> impl Iterator<Item = usize> {
    ElemSet(m as u64).iter()
}

/// A partial Frobenius table with the unit (and possibly counit) fixed.
#[derive(Clone)]
pub struct SearchNode {
    ctx: Arc<Ctx>,
    unit: ElemSet,
    counit: Option<ElemSet>,
    table: Table,
}

impl fmt::Debug for SearchNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        write!(
            f,
            "SearchNode(n={n}, unit={:?}, counit={:?}, ",
            self.unit, self.counit
        )?;
        for x in 0..n {
            for y in 0..n {
                let e = x * n + y;
                write!(
                    f,
                    "[+{:0w$b} -{:0w$b}]",
                    self.table.yes[e],
                    self.table.no[e],
                    w = n
                )?;
            }
            f.write_str(if x + 1 < n { " / " } else { ")" })?;
        }
        Ok(())
    }
}

impl SearchNode {
    /// Fully undecided table on `n` elements with unit `unit`.
    pub fn root(n: usize, unit: ElemSet) -> Result<Self> {
        if n > SEARCH_LIMIT {
            return Err(Error::CarrierTooLarge(n, SEARCH_LIMIT));
        }
        Ok(SearchNode {
            ctx: Arc::new(Ctx::new(n)),
            unit,
            counit: None,
            table: Table {
                yes: [0; SEARCH_LIMIT * SEARCH_LIMIT],
                no: [0; SEARCH_LIMIT * SEARCH_LIMIT],
            },
        })
    }

    pub fn n(&self) -> usize {
        self.ctx.n
    }

    pub fn unit(&self) -> ElemSet {
        self.unit
    }

    pub fn counit(&self) -> Option<ElemSet> {
        self.counit
    }

    pub fn bit(&self, x: usize, y: usize, z: usize) -> Bit {
        let e = x * self.n() + y;
        if self.table.yes[e] >> z & 1 == 1 {
            Bit::In
        } else if self.table.no[e] >> z & 1 == 1 {
            Bit::Out
        } else {
            Bit::Undecided
        }
    }

    /// Elements known to be in `μ̃(x, y)`.
    pub fn known_in(&self, x: usize, y: usize) -> ElemSet {
        ElemSet(self.table.yes[x * self.n() + y] as u64)
    }

    /// Elements known to be absent from `μ̃(x, y)`.
    pub fn known_out(&self, x: usize, y: usize) -> ElemSet {
        ElemSet(self.table.no[x * self.n() + y] as u64)
    }

    /// The entry if all its bits are decided.
    pub fn entry(&self, x: usize, y: usize) -> Option<ElemSet> {
        let e = x * self.n() + y;
        (self.table.yes[e] | self.table.no[e] == self.ctx.full)
            .then(|| ElemSet(self.table.yes[e] as u64))
    }

    pub fn undecided_bits(&self) -> usize {
        let n = self.n();
        (0..n * n)
            .map(|e| {
                (self.ctx.full & !(self.table.yes[e] | self.table.no[e])).count_ones() as usize
            })
            .sum()
    }

    /// Sets `μ̃(x, y) = set` exactly and propagates the active constraints.
    pub fn fix_entry(
        &self,
        x: usize,
        y: usize,
        set: ElemSet,
    ) -> std::result::Result<SearchNode, Contradiction> {
        let mut node = self.clone();
        let e = x * self.n() + y;
        let mut pending = 0;
        let m = set.0 as u8;
        node.table.set_in(e, m, &mut pending)?;
        node.table.set_out(e, self.ctx.full & !m, &mut pending)?;
        node.ctx.propagate(&mut node.table, pending | 1 << e)?;
        Ok(node)
    }

    /// Turns on associativity propagation for this node and its descendants.
    pub fn with_associativity(&self) -> std::result::Result<SearchNode, Contradiction> {
        let mut ctx = self.ctx.clone_for_next_stage();
        ctx.associativity = true;
        let mut node = SearchNode {
            ctx: Arc::new(ctx),
            ..self.clone()
        };
        node.ctx
            .propagate(&mut node.table, node.ctx.all_entries())?;
        Ok(node)
    }

    fn to_data(&self) -> FrobData {
        let n = self.n();
        let mul = (0..n * n)
            .map(|e| ElemSet(self.table.yes[e] as u64))
            .collect();
        FrobData::from_parts(n, self.unit, self.counit.unwrap_or_default(), mul)
    }
}

/// One unit per cardinality: the prefixes `{0, .., k-1}`, `k ≥ 1`
/// (`η = ∅` cannot be unital on a nonempty carrier); `n = 0` has only `∅`.
pub fn enumerate_units(n: usize) -> Vec<ElemSet> {
    if n == 0 {
        return vec![ElemSet::EMPTY];
    }
    (1..=n).map(ElemSet::full).collect()
}

/// Forces every bit implied by both unit laws.
pub fn propagate_unitality(node: SearchNode) -> std::result::Result<SearchNode, Contradiction> {
    let n = node.n();
    let mut ctx = node.ctx.clone_for_next_stage();
    let mut table = node.table;
    let mut pending = 0;
    let unit: Vec<usize> = node.unit.iter().collect();
    if unit.is_empty() && n > 0 {
        return Err(Contradiction);
    }
    for x in 0..n {
        let others = ctx.full & !(1u8 << x);
        for &e in &unit {
            table.set_out(x * n + e, others, &mut pending)?;
            table.set_out(e * n + x, others, &mut pending)?;
        }
        ctx.add_clause(unit.iter().map(|&e| ((x * n + e) as u8, 1 << x)).collect());
        ctx.add_clause(unit.iter().map(|&e| ((e * n + x) as u8, 1 << x)).collect());
    }
    ctx.propagate(&mut table, ctx.all_entries())?;
    Ok(SearchNode {
        ctx: Arc::new(ctx),
        table,
        ..node
    })
}

fn relabel_table(t: &Table, n: usize, p: &[usize]) -> Table {
    let mut out = Table {
        yes: [0; SEARCH_LIMIT * SEARCH_LIMIT],
        no: [0; SEARCH_LIMIT * SEARCH_LIMIT],
    };
    let map = |m: u8| ElemSet(m as u64).map(p).0 as u8;
    for x in 0..n {
        for y in 0..n {
            out.yes[p[x] * n + p[y]] = map(t.yes[x * n + y]);
            out.no[p[x] * n + p[y]] = map(t.no[x * n + y]);
        }
    }
    out
}

/// Counits with `|ε| = |η|`, one per orbit of the relabelings that fix the
/// unit and the decided bits.
pub fn enumerate_counits(node: &SearchNode) -> Vec<ElemSet> {
    let n = node.n();
    let k = node.unit.len();
    let stabilizer: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| node.unit.map(p) == node.unit && relabel_table(&node.table, n, p) == node.table)
        .collect();
    let mut reps = BTreeSet::new();
    for mask in 0u64..1 << n {
        let s = ElemSet(mask);
        if s.len() != k {
            continue;
        }
        let rep = stabilizer
            .iter()
            .map(|p| s.map(p).iter().collect::<Vec<_>>())
            .min()
            .expect("stabilizer contains the identity");
        reps.insert(rep);
    }
    reps.into_iter().map(ElemSet::from_elems).collect()
}

/// One child per permutation `π` with `M = P_π`: the entry `(x, π(x))`
/// meets the counit and every other entry avoids it.
pub fn propagate_nondegeneracy(node: &SearchNode) -> Vec<SearchNode> {
    let n = node.n();
    let eps = node.counit.expect("counit fixed before nondegeneracy").0 as u8;
    let mut out = Vec::new();
    for pi in permutations(n) {
        let mut ctx = node.ctx.clone_for_next_stage();
        let mut table = node.table;
        let mut pending = 0;
        let mut ok = true;
        for (x, &px) in pi.iter().enumerate() {
            for y in 0..n {
                if px == y {
                    ctx.add_clause(vec![((x * n + y) as u8, eps)]);
                } else if table.set_out(x * n + y, eps, &mut pending).is_err() {
                    ok = false;
                }
            }
        }
        if ok && ctx.propagate(&mut table, ctx.all_entries()).is_ok() {
            out.push(SearchNode {
                ctx: Arc::new(ctx),
                table,
                ..node.clone()
            });
        }
    }
    out
}

impl SearchNode {
    pub fn with_counit(&self, counit: ElemSet) -> SearchNode {
        SearchNode {
            counit: Some(counit),
            ..self.clone()
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub work_items: u64,
    pub nodes: u64,
    pub leaves: u64,
}

impl SearchStats {
    fn merge(self, o: SearchStats) -> SearchStats {
        SearchStats {
            work_items: self.work_items + o.work_items,
            nodes: self.nodes + o.nodes,
            leaves: self.leaves + o.leaves,
        }
    }
}

fn dfs(node: &SearchNode, stats: &mut SearchStats, out: &mut dyn FnMut(FrobData)) {
    stats.nodes += 1;
    let n = node.n();
    let full = node.ctx.full;
    let next = (0..n * n).find_map(|e| {
        let open = full & !(node.table.yes[e] | node.table.no[e]);
        (open != 0).then(|| (e, open.trailing_zeros() as usize))
    });
    let Some((e, z)) = next else {
        stats.leaves += 1;
        let d = node.to_data();
        debug_assert!(is_frobenius(&d), "search leaf failed verification: {d:?}");
        out(d);
        return;
    };
    for value in [Bit::Out, Bit::In] {
        let mut child = node.clone();
        let mut pending = 0;
        let set = match value {
            Bit::Out => child.table.set_out(e, 1 << z, &mut pending),
            _ => child.table.set_in(e, 1 << z, &mut pending),
        };
        if set.is_ok()
            && child
                .ctx
                .propagate(&mut child.table, pending | 1 << e)
                .is_ok()
        {
            dfs(&child, stats, out);
        }
    }
}

/// Depth-first completion of a node under associativity propagation.
pub fn search_associativity(node: &SearchNode) -> Vec<FrobData> {
    let mut out = Vec::new();
    search_with(node, &mut SearchStats::default(), &mut |d| out.push(d));
    out
}

fn search_with(node: &SearchNode, stats: &mut SearchStats, out: &mut dyn FnMut(FrobData)) {
    if let Ok(active) = node.with_associativity() {
        dfs(&active, stats, out);
    }
}

/// The lexicographically least encoding of `(η, ε, μ)` over all relabelings:
/// `η` bits, then `ε` bits, then `μ` bits in row-major `(x, y, z)` order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    words: Vec<u64>,
}

impl CanonicalForm {
    pub fn to_hex(&self) -> String {
        let bits = 2 * self.n + self.n.pow(3);
        let mut s = String::new();
        for (i, w) in self.words.iter().enumerate() {
            let used = (bits - i * 64).min(64);
            let digits = used.div_ceil(4);
            let v = if used == 64 {
                *w
            } else {
                *w >> (64 - 4 * digits)
            };
            s.push_str(&format!("{v:0digits$x}"));
        }
        s
    }
}

/// Bit string of the data in the canonical-form order, packed MSB first.
pub fn encode(d: &FrobData) -> CanonicalForm {
    let n = d.n();
    let total = 2 * n + n * n * n;
    let mut words = vec![0u64; total.div_ceil(64).max(1)];
    let mut i = 0;
    let mut push = |b: bool| {
        if b {
            words[i / 64] |= 1 << (63 - i % 64);
        }
        i += 1;
    };
    for x in 0..n {
        push(d.unit().contains(x));
    }
    for x in 0..n {
        push(d.counit().contains(x));
    }
    for x in 0..n {
        for y in 0..n {
            let m = d.mul(x, y);
            for z in 0..n {
                push(m.contains(z));
            }
        }
    }
    CanonicalForm { n, words }
}

/// Canonical form and a relabeling that achieves it.
pub fn canonical_labeling(d: &FrobData) -> (CanonicalForm, Vec<usize>) {
    let n = d.n();
    let mut p: Vec<usize> = (0..n).collect();
    let mut best = (encode(&d.relabel(&p)), p.clone());
    while next_permutation(&mut p) {
        let c = encode(&d.relabel(&p));
        if c < best.0 {
            best = (c, p.clone());
        }
    }
    best
}

pub fn canonical_form(d: &FrobData) -> CanonicalForm {
    canonical_labeling(d).0
}

/// The relabeling with the lexicographically greatest encoding: units come
/// first, then counits, as in hand-written tables.
pub fn display_form(d: &FrobData) -> FrobData {
    let n = d.n();
    let mut p: Vec<usize> = (0..n).collect();
    let mut best = d.relabel(&p);
    let mut best_code = encode(&best);
    while next_permutation(&mut p) {
        let r = d.relabel(&p);
        let c = encode(&r);
        if c > best_code {
            best = r;
            best_code = c;
        }
    }
    best
}

/// Number of relabelings fixing the data.
pub fn automorphism_count(d: &FrobData) -> usize {
    permutations(d.n())
        .iter()
        .filter(|p| &d.relabel(p) == d)
        .count()
}

/// Splits the carrier into two nonempty blocks with empty cross products,
/// if possible.
pub fn decomposition(d: &FrobData) -> Option<(ElemSet, ElemSet)> {
    let n = d.n();
    if n < 2 {
        return None;
    }
    let full = ElemSet::full(n);
    // subsets containing element 0, proper
    (0u64..1 << (n - 1)).find_map(|m| {
        let a = ElemSet(m << 1 | 1);
        if a == full {
            return None;
        }
        let b = ElemSet(full.0 & !a.0);
        let closed =
            |s: ElemSet, t: ElemSet| s.iter().all(|x| t.iter().all(|y| d.mul(x, y).is_empty()));
        let inside = |s: ElemSet| s.iter().all(|x| s.iter().all(|y| d.mul(x, y).is_subset(s)));
        (closed(a, b) && closed(b, a) && inside(a) && inside(b)).then_some((a, b))
    })
}

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Refuse `n` above this bound.
    pub max_n: usize,
    /// Worker threads for the search; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Attach partition functions, constructions and automorphism counts.
    pub annotate: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        let max_n = std::env::var("FROBREL_MAX_N")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_N);
        ClassifyOptions {
            max_n,
            jobs: None,
            annotate: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub canonical: CanonicalForm,
    /// Member in display labeling.
    pub object: FrobObject,
    pub commutative: bool,
    pub partition: Option<PartitionFunction>,
    pub constructions: Vec<String>,
    pub decomposable: bool,
    pub automorphisms: usize,
}

impl Serialize for CensusEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let d = self.object.data();
        let n = d.n();
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("n", &n)?;
        m.serialize_entry("labels", &d.carrier().labels())?;
        m.serialize_entry("unit", &d.unit().iter().collect::<Vec<_>>())?;
        m.serialize_entry("counit", &d.counit().iter().collect::<Vec<_>>())?;
        let mul: Vec<Vec<Vec<usize>>> = (0..n)
            .map(|x| (0..n).map(|y| d.mul(x, y).iter().collect()).collect())
            .collect();
        m.serialize_entry("mul", &mul)?;
        m.serialize_entry("canonical", &self.canonical.to_hex())?;
        m.serialize_entry("commutative", &self.commutative)?;
        if let Some(pf) = &self.partition {
            m.serialize_entry("partition_function", pf)?;
        }
        m.serialize_entry("constructions", &self.constructions)?;
        m.serialize_entry("decomposable", &self.decomposable)?;
        m.serialize_entry("automorphisms", &self.automorphisms)?;
        m.end()
    }
}

#[derive(Clone, Debug)]
pub struct Census {
    pub n: usize,
    pub members: Vec<CensusEntry>,
    pub stats: SearchStats,
}

impl Census {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn canonical_forms(&self) -> BTreeSet<CanonicalForm> {
        self.members.iter().map(|m| m.canonical.clone()).collect()
    }

    /// Number of Frobenius structures on the labeled set `{0, .., n-1}`.
    pub fn labeled_count(&self) -> u64 {
        let fact: u64 = (1..=self.n as u64).product();
        self.members
            .iter()
            .map(|m| fact / m.automorphisms as u64)
            .sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.members).expect("census serializes")
    }

    /// Markdown table with columns Case, Unit, Counit, Multiplication,
    /// Partition function.
    pub fn to_markdown(&self) -> String {
        markdown_table(self.members.iter().map(|m| {
            (
                m.object.data(),
                m.partition
                    .as_ref()
                    .map(|p| p.proposition.clone())
                    .unwrap_or_default(),
            )
        }))
    }
}

fn fmt_set(d: &FrobData, s: ElemSet) -> String {
    if s.is_empty() {
        "∅".into()
    } else {
        let labels: Vec<String> = s.iter().map(|i| d.carrier().label(i)).collect();
        format!("{{{}}}", labels.join(","))
    }
}

/// Renders objects as rows of a markdown table.
pub fn markdown_table<'a>(rows: impl Iterator<Item = (&'a FrobData, String)>) -> String {
    let mut out = String::from("| Case | Unit | Counit | Multiplication | Partition function |\n");
    out.push_str("|---|---|---|---|---|\n");
    for (i, (d, prop)) in rows.enumerate() {
        let n = d.n();
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| fmt_set(d, d.mul(x, y)))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" ; ");
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} |\n",
            i + 1,
            fmt_set(d, d.unit()),
            fmt_set(d, d.counit()),
            table,
            prop
        ));
    }
    out
}

/// Independent top-level branches: unit × counit × permutation pattern.
pub fn work_items(n: usize) -> Result<Vec<SearchNode>> {
    let mut items = Vec::new();
    for unit in enumerate_units(n) {
        let Ok(node) = propagate_unitality(SearchNode::root(n, unit)?) else {
            continue;
        };
        for counit in enumerate_counits(&node) {
            items.extend(propagate_nondegeneracy(&node.with_counit(counit)));
        }
    }
    Ok(items)
}

fn search_item(node: &SearchNode) -> (BTreeMap<CanonicalForm, FrobData>, SearchStats) {
    let mut found = BTreeMap::new();
    let mut stats = SearchStats {
        work_items: 1,
        ..SearchStats::default()
    };
    search_with(node, &mut stats, &mut |d| {
        let (c, p) = canonical_labeling(&d);
        found.entry(c).or_insert_with(|| d.relabel(&p));
    });
    (found, stats)
}

type ItemResult = (BTreeMap<CanonicalForm, FrobData>, SearchStats);

#[cfg(feature = "parallel")]
fn run_items(items: &[SearchNode], jobs: Option<usize>) -> Vec<ItemResult> {
    use rayon::prelude::*;
    let run = || items.par_iter().map(search_item).collect::<Vec<_>>();
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_items(items: &[SearchNode], _jobs: Option<usize>) -> Vec<ItemResult> {
    items.iter().map(search_item).collect()
}

/// Canonical representatives of every isomorphism class on `n` elements,
/// without annotations.
pub fn search_census(
    n: usize,
    jobs: Option<usize>,
) -> Result<(BTreeMap<CanonicalForm, FrobData>, SearchStats)> {
    if n > SEARCH_LIMIT {
        return Err(Error::CarrierTooLarge(n, SEARCH_LIMIT));
    }
    let items = work_items(n)?;
    let mut all = BTreeMap::new();
    let mut stats = SearchStats::default();
    for (found, s) in run_items(&items, jobs) {
        all.extend(found);
        stats = stats.merge(s);
    }
    Ok((all, stats))
}

/// Full pipeline: search, deduplicate, re-verify, annotate.
pub fn classify(n: usize, opts: &ClassifyOptions) -> Result<Census> {
    let bound = opts.max_n.min(SEARCH_LIMIT);
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let (found, stats) = search_census(n, opts.jobs)?;
    let known: Vec<(CanonicalForm, String)> = if opts.annotate {
        catalog(n)
            .into_iter()
            .map(|c| (canonical_form(c.object.data()), c.name))
            .collect()
    } else {
        Vec::new()
    };
    let mut members = Vec::with_capacity(found.len());
    for (canonical, data) in found {
        let shown = display_form(&data);
        let object = verify(&shown)
            .map_err(|r| Error::Data(format!("search produced an invalid object: {r}")))?;
        let (partition, constructions, decomposable, automorphisms) = if opts.annotate {
            (
                Some(partition_function(&object)),
                known
                    .iter()
                    .filter(|(c, _)| *c == canonical)
                    .map(|(_, name)| name.clone())
                    .collect(),
                decomposition(&shown).is_some(),
                automorphism_count(&shown),
            )
        } else {
            (None, Vec::new(), false, automorphism_count(&shown))
        };
        members.push(CensusEntry {
            canonical,
            commutative: object.is_commutative(),
            object,
            partition,
            constructions,
            decomposable,
            automorphisms,
        });
    }
    Ok(Census { n, members, stats })
}

/// Every raw candidate on `n` elements (`2^(2n + n³)` of them) filtered by
/// [`verify`], as canonical forms. Feasible for `n ≤ 2`.
pub fn brute_force_census(n: usize) -> BTreeSet<CanonicalForm> {
    let bits = 2 * n + n * n * n;
    assert!(
        bits < 40,
        "brute force over 2^{bits} candidates is not feasible"
    );
    (0u64..1 << bits)
        .filter_map(|code| {
            let d = decode_raw(n, code);
            is_frobenius(&d).then(|| canonical_form(&d))
        })
        .collect()
}

fn decode_raw(n: usize, code: u64) -> FrobData {
    let mask = ElemSet::full(n).0;
    let unit = ElemSet(code & mask);
    let counit = ElemSet((code >> n) & mask);
    let mul = (0..n * n)
        .map(|e| ElemSet((code >> (2 * n + e * n)) & mask))
        .collect();
    FrobData::new(FinSet::new(n), unit, counit, mul).expect("raw data in range")
}

/// Uniformly random raw data: every unit, counit and multiplication bit is
/// an independent fair coin.
pub fn random_raw(n: usize, rng: &mut impl Rng) -> FrobData {
    let mask = ElemSet::full(n).0;
    let mut draw = || ElemSet(rng.gen::<u64>() & mask);
    let unit = draw();
    let counit = draw();
    let mul = (0..n * n).map(|_| draw()).collect();
    FrobData::from_parts(n, unit, counit, mul)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub samples: u64,
    /// Samples that passed [`verify`].
    pub valid: u64,
    /// Valid samples whose canonical form is missing from the census.
    pub unmatched: u64,
}

const SAMPLE_CHUNK: u64 = 8192;

fn sample_chunk(
    n: usize,
    seed: u64,
    chunk: u64,
    count: u64,
    census: &BTreeSet<CanonicalForm>,
) -> SampleReport {
    let mut rng = StdRng::seed_from_u64(seed ^ chunk.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut r = SampleReport {
        samples: count,
        ..SampleReport::default()
    };
    for _ in 0..count {
        let d = random_raw(n, &mut rng);
        if is_frobenius(&d) {
            r.valid += 1;
            if !census.contains(&canonical_form(&d)) {
                r.unmatched += 1;
            }
        }
    }
    r
}

/// Filters `samples` uniformly random raw candidates through [`verify`] and
/// checks each survivor against the census. Deterministic for a given seed
/// regardless of thread count.
pub fn sample_completeness(
    n: usize,
    samples: u64,
    seed: u64,
    census: &BTreeSet<CanonicalForm>,
) -> SampleReport {
    let chunks: Vec<(u64, u64)> = (0..samples.div_ceil(SAMPLE_CHUNK))
        .map(|c| (c, SAMPLE_CHUNK.min(samples - c * SAMPLE_CHUNK)))
        .collect();
    let run = |&(c, k): &(u64, u64)| sample_chunk(n, seed, c, k, census);
    #[cfg(feature = "parallel")]
    let parts: Vec<SampleReport> = {
        use rayon::prelude::*;
        chunks.par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<SampleReport> = chunks.iter().map(run).collect();
    parts
        .into_iter()
        .fold(SampleReport::default(), |a, b| SampleReport {
            samples: a.samples + b.samples,
            valid: a.valid + b.valid,
            unmatched: a.unmatched + b.unmatched,
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn after_unitality(n: usize, k: usize) -> SearchNode {
        propagate_unitality(SearchNode::root(n, ElemSet::full(k)).unwrap()).unwrap()
    }

    fn set(v: &[usize]) -> ElemSet {
        ElemSet::from_elems(v.iter().copied())
    }

    #[test]
    fn units() {
        assert_eq!(
            enumerate_units(3),
            vec![set(&[0]), set(&[0, 1]), set(&[0, 1, 2])]
        );
        assert_eq!(enumerate_units(2), vec![set(&[0]), set(&[0, 1])]);
        assert_eq!(enumerate_units(1), vec![set(&[0])]);
        assert_eq!(enumerate_units(0), vec![ElemSet::EMPTY]);
    }

    #[test]
    fn empty_unit_contradicts() {
        assert!(propagate_unitality(SearchNode::root(2, ElemSet::EMPTY).unwrap()).is_err());
    }

    #[test]
    fn unitality_two_elements_single_unit() {
        let node = after_unitality(2, 1);
        assert_eq!(node.entry(0, 0), Some(set(&[0])));
        assert_eq!(node.entry(0, 1), Some(set(&[1])));
        assert_eq!(node.entry(1, 0), Some(set(&[1])));
        assert_eq!(node.bit(1, 1, 0), Bit::Undecided);
        assert_eq!(node.bit(1, 1, 1), Bit::Undecided);
    }

    #[test]
    fn unitality_two_elements_full_unit() {
        let node = after_unitality(2, 2);
        assert_eq!(node.undecided_bits(), 0);
        assert_eq!(node.entry(0, 0), Some(set(&[0])));
        assert_eq!(node.entry(0, 1), Some(ElemSet::EMPTY));
        assert_eq!(node.entry(1, 0), Some(ElemSet::EMPTY));
        assert_eq!(node.entry(1, 1), Some(set(&[1])));
    }

    #[test]
    fn unitality_three_elements_two_units() {
        let node = after_unitality(3, 2);
        for (x, y) in [(0, 2), (1, 2), (2, 0), (2, 1)] {
            assert_eq!(node.known_out(x, y), set(&[0, 1]), "({x},{y})");
        }
        assert_eq!(node.entry(0, 1), Some(ElemSet::EMPTY));
    }

    #[test]
    fn counit_candidates() {
        assert_eq!(
            enumerate_counits(&after_unitality(2, 1)),
            vec![set(&[0]), set(&[1])]
        );
        assert_eq!(
            enumerate_counits(&after_unitality(3, 2)),
            vec![set(&[0, 1]), set(&[0, 2])]
        );
        assert_eq!(
            enumerate_counits(&after_unitality(3, 3)),
            vec![set(&[0, 1, 2])]
        );
        assert_eq!(
            enumerate_counits(&after_unitality(3, 1)),
            vec![set(&[0]), set(&[1])]
        );
    }

    #[test]
    fn nondegeneracy_two_elements() {
        let node = after_unitality(2, 1);
        let kids = propagate_nondegeneracy(&node.with_counit(set(&[0])));
        assert_eq!(kids.len(), 1);
        assert_eq!(kids[0].bit(1, 1, 0), Bit::In);
        let kids = propagate_nondegeneracy(&node.with_counit(set(&[1])));
        assert_eq!(kids.len(), 1);
        assert_eq!(kids[0].bit(1, 1, 1), Bit::Out);
    }

    #[test]
    fn nondegeneracy_three_elements_two_units() {
        let node = after_unitality(3, 2);
        let kids = propagate_nondegeneracy(&node.with_counit(set(&[0, 2])));
        assert_eq!(kids.len(), 1);
        let k = &kids[0];
        assert_eq!(k.entry(0, 2), Some(ElemSet::EMPTY));
        assert_eq!(k.entry(2, 0), Some(ElemSet::EMPTY));
        assert_eq!(k.entry(1, 2), Some(set(&[2])));
        assert_eq!(k.entry(2, 1), Some(set(&[2])));
        assert_eq!(k.known_out(2, 2), set(&[0, 2]));
    }

    #[test]
    fn two_element_search() {
        let mut forms = BTreeSet::new();
        for item in work_items(2).unwrap() {
            for d in search_associativity(&item) {
                assert!(is_frobenius(&d));
                forms.insert(canonical_form(&d));
            }
        }
        assert_eq!(forms.len(), 5);
    }

    fn scenario(pi_identity: bool) -> SearchNode {
        let node = after_unitality(3, 1).with_counit(set(&[0]));
        propagate_nondegeneracy(&node)
            .into_iter()
            .find(|k| (k.bit(1, 1, 0) == Bit::In) == pi_identity)
            .unwrap()
            .with_associativity()
            .unwrap()
    }

    #[test]
    fn bb_equals_a_forces_entries() {
        let node = scenario(true).fix_entry(1, 1, set(&[0])).unwrap();
        assert_eq!(node.entry(1, 2), Some(set(&[2])));
        assert_eq!(node.entry(2, 1), Some(set(&[2])));
        assert!(set(&[0, 1]).is_subset(node.known_in(2, 2)));
    }

    #[test]
    fn bb_empty_has_no_survivors() {
        assert!(scenario(false).fix_entry(1, 1, ElemSet::EMPTY).is_err());
        assert!(scenario(true).fix_entry(1, 1, ElemSet::EMPTY).is_err());
    }

    #[test]
    fn canonical_form_invariant_under_relabeling() {
        let d = FrobData::parse_compact("a|b|a,b,c;b,c,ac;c,ac,abc").unwrap();
        let c = canonical_form(&d);
        for p in permutations(3) {
            assert_eq!(canonical_form(&d.relabel(&p)), c);
        }
        assert_eq!(display_form(&d.relabel(&[2, 0, 1])), d);
    }

    #[test]
    fn hex_encoding() {
        let d = FrobData::parse_compact("a|a|a").unwrap();
        // bits 1,1,1 -> 111 -> padded to one hex digit 1110
        assert_eq!(encode(&d).to_hex(), "e");
    }

    #[test]
    fn decomposition_detects_blocks() {
        let d = FrobData::parse_compact("ab|ac|a,-,-;-,b,c;-,c,b").unwrap();
        assert_eq!(decomposition(&d), Some((set(&[0]), set(&[1, 2]))));
        let z3 = FrobData::parse_compact("a|a|a,b,c;b,c,a;c,a,b").unwrap();
        assert_eq!(decomposition(&z3), None);
    }

    #[test]
    fn bound_refused() {
        let opts = ClassifyOptions {
            max_n: 3,
            ..ClassifyOptions::default()
        };
        assert_eq!(
            classify(4, &opts).unwrap_err(),
            Error::BoundExceeded { n: 4, bound: 3 }
        );
    }

    #[test]
    fn small_counts() {
        let opts = ClassifyOptions::default();
        assert_eq!(classify(0, &opts).unwrap().len(), 1);
        assert_eq!(classify(1, &opts).unwrap().len(), 1);
        assert_eq!(classify(2, &opts).unwrap().len(), 5);
    }

    #[test]
    fn sampling_is_deterministic() {
        let census = classify(2, &ClassifyOptions::default())
            .unwrap()
            .canonical_forms();
        let a = sample_completeness(2, 20_000, 7, &census);
        let b = sample_completeness(2, 20_000, 7, &census);
        assert_eq!(a, b);
        assert_eq!(a.samples, 20_000);
        assert!(a.valid > 0);
        assert_eq!(a.unmatched, 0);
    }
}
