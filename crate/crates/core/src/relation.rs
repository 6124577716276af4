//! Finite sets and binary relations between them.
//!
//! Elements of a finite set of size `n` are the integers `0..n`. A relation
//! `X -> Y` is stored as a bit-matrix with one packed row of `u64` words per
//! source element, so union and composition run a word at a time.
//!
//! Composition is written in diagrammatic order: `compose(r, s)` applies `r`
//! first and then `s`. Cartesian products of indexed sets are flattened
//! row-major, `(i, j) ↦ i * n₂ + j`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A finite set `{0, .., size-1}` with optional display labels.
/// Equality compares effective labels, so default labels match `None`.
#[derive(Clone, Debug)]
pub struct FinSet {
    size: usize,
    labels: Option<Vec<String>>,
}

impl FinSet {
    pub fn new(size: usize) -> Self {
        FinSet { size, labels: None }
    }

    pub fn with_labels(labels: Vec<String>) -> Result<Self> {
        let distinct: BTreeSet<&str> = labels.iter().map(String::as_str).collect();
        if distinct.len() != labels.len() {
            return Err(Error::Labels("labels must be distinct".into()));
        }
        Ok(FinSet {
            size: labels.len(),
            labels: Some(labels),
        })
    }

    /// The one-point set, the monoidal unit.
    pub fn point() -> Self {
        FinSet::new(1)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    /// Display label of element `i`: the stored label, or `a, b, c, ..` for
    /// carriers of at most 26 elements and `x0, x1, ..` beyond that.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => default_label(i, self.size),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.size).map(|i| self.label(i)).collect()
    }
}

pub(crate) fn default_label(i: usize, size: usize) -> String {
    if size <= 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{i}")
    }
}

impl PartialEq for FinSet {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && (self.labels == other.labels || self.labels() == other.labels())
    }
}

impl Eq for FinSet {}

impl std::hash::Hash for FinSet {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.size.hash(h);
        self.labels().hash(h);
    }
}

/// A subset of a carrier of at most 64 elements, packed into one word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);
    pub const MAX_CARRIER: usize = 64;

    pub fn singleton(i: usize) -> Self {
        ElemSet(1 << i)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(it: I) -> Self {
        ElemSet(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, o: ElemSet) -> ElemSet {
        ElemSet(self.0 | o.0)
    }

    pub fn intersect(self, o: ElemSet) -> ElemSet {
        ElemSet(self.0 & o.0)
    }

    pub fn meets(self, o: ElemSet) -> bool {
        self.0 & o.0 != 0
    }

    pub fn is_subset(self, o: ElemSet) -> bool {
        self.0 & !o.0 == 0
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Image under an element map.
    pub fn map(self, f: &[usize]) -> ElemSet {
        ElemSet::from_elems(self.iter().map(|i| f[i]))
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        ElemSet::from_elems(it)
    }
}

/// A binary relation between two finite indexed sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    src: usize,
    dst: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(src: usize, dst: usize) -> Self {
        let words = words_for(dst);
        Relation {
            src,
            dst,
            words,
            bits: vec![0; src * words],
        }
    }

    pub fn from_pairs<I>(src: usize, dst: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Relation::empty(src, dst);
        for (i, j) in pairs {
            if i >= src || j >= dst {
                return Err(Error::PairOutOfBounds(i, j, src, dst));
            }
            r.set(i, j);
        }
        Ok(r)
    }

    /// Relation `{•} -> X` whose image is `set`.
    pub fn from_point(dst: usize, set: ElemSet) -> Self {
        let mut r = Relation::empty(1, dst);
        for j in set.iter() {
            r.set(0, j);
        }
        r
    }

    /// Relation `X -> {•}` relating every element of `set` to the point.
    pub fn to_point(src: usize, set: ElemSet) -> Self {
        let mut r = Relation::empty(src, 1);
        for i in set.iter() {
            r.set(i, 0);
        }
        r
    }

    /// Graph of a function given as an element map.
    pub fn graph(dst: usize, f: &[usize]) -> Self {
        let mut r = Relation::empty(f.len(), dst);
        for (i, &j) in f.iter().enumerate() {
            r.set(i, j);
        }
        r
    }

    pub(crate) fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / WORD] |= 1 << (j % WORD);
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn dst(&self) -> usize {
        self.dst
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i < self.src && j < self.dst && self.bits[i * self.words + j / WORD] >> (j % WORD) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.bits[i * self.words..(i + 1) * self.words]
    }

    /// Targets related to source element `i`, in increasing order.
    pub fn image(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i)
            .iter()
            .enumerate()
            .flat_map(|(w, &word)| ElemSet(word).iter().map(move |b| w * WORD + b))
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.src).flat_map(move |i| self.image(i).map(move |j| (i, j)))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn identity(size: usize) -> Self {
        let mut r = Relation::empty(size, size);
        for i in 0..size {
            r.set(i, i);
        }
        r
    }

    /// `{(x, z) | ∃y. (x, y) ∈ self ∧ (y, z) ∈ next}`: apply `self`, then `next`.
    pub fn compose(&self, next: &Relation) -> Result<Relation> {
        if self.dst != next.src {
            return Err(Error::Shape {
                op: "compose",
                left: self.dst,
                right: next.src,
            });
        }
        let mut out = Relation::empty(self.src, next.dst);
        for x in 0..self.src {
            let mut acc = vec![0u64; out.words];
            for y in self.image(x) {
                for (a, b) in acc.iter_mut().zip(next.row(y)) {
                    *a |= b;
                }
            }
            out.row_mut(x).copy_from_slice(&acc);
        }
        Ok(out)
    }

    /// Cartesian product `self ⊗ other` under row-major flattening.
    pub fn product(&self, other: &Relation) -> Relation {
        let src = self.src * other.src;
        let dst = self.dst * other.dst;
        let mut out = Relation::empty(src, dst);
        for a in 0..self.src {
            for b in self.image(a) {
                for c in 0..other.src {
                    for d in other.image(c) {
                        out.set(a * other.src + c, b * other.dst + d);
                    }
                }
            }
        }
        out
    }

    pub fn converse(&self) -> Relation {
        let mut out = Relation::empty(self.dst, self.src);
        for (i, j) in self.pairs() {
            out.set(j, i);
        }
        out
    }

    /// The braiding `X×X -> X×X`, `(i, j) ↦ (j, i)`.
    pub fn swap(size: usize) -> Relation {
        let mut out = Relation::empty(size * size, size * size);
        for i in 0..size {
            for j in 0..size {
                out.set(i * size + j, j * size + i);
            }
        }
        out
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        if self.src != other.src || self.dst != other.dst {
            return Err(Error::Shape {
                op: "union",
                left: self.src * self.dst,
                right: other.src * other.dst,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
        Ok(out)
    }

    pub fn to_power_map(&self) -> PowerMap {
        PowerMap {
            src: self.src,
            dst: self.dst,
            image: (0..self.src).map(|i| self.image(i).collect()).collect(),
        }
    }

    pub fn from_power_map(m: &PowerMap) -> Relation {
        let mut out = Relation::empty(m.src, m.dst);
        for (i, img) in m.image.iter().enumerate() {
            for &j in img {
                out.set(i, j);
            }
        }
        out
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation({} -> {}, ", self.src, self.dst)?;
        f.debug_set().entries(self.pairs()).finish()?;
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct RelationJson {
    src: usize,
    dst: usize,
    pairs: Vec<[usize; 2]>,
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RelationJson {
            src: self.src,
            dst: self.dst,
            pairs: self.pairs().map(|(i, j)| [i, j]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Relation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RelationJson::deserialize(d)?;
        Relation::from_pairs(j.src, j.dst, j.pairs.into_iter().map(|[i, k]| (i, k)))
            .map_err(serde::de::Error::custom)
    }
}

/// A relation presented as a set-valued map `X -> P(Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerMap {
    pub src: usize,
    pub dst: usize,
    pub image: Vec<BTreeSet<usize>>,
}

impl PowerMap {
    pub fn empty(src: usize, dst: usize) -> Self {
        PowerMap {
            src,
            dst,
            image: vec![BTreeSet::new(); src],
        }
    }

    /// Composition through images: `(self ; next)(x) = ⋃_{y ∈ self(x)} next(y)`.
    pub fn then(&self, next: &PowerMap) -> Result<PowerMap> {
        if self.dst != next.src {
            return Err(Error::Shape {
                op: "compose",
                left: self.dst,
                right: next.src,
            });
        }
        let image = self
            .image
            .iter()
            .map(|ys| {
                ys.iter()
                    .flat_map(|&y| next.image[y].iter().copied())
                    .collect()
            })
            .collect();
        Ok(PowerMap {
            src: self.src,
            dst: next.dst,
            image,
        })
    }
}
