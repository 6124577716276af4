//! Frobenius objects in the category of sets and relations.
//!
//! [`FrobData`] is raw candidate data: a carrier `X`, unit and counit
//! subsets, and a set-valued multiplication `μ̃ : X × X -> P(X)`. It makes no
//! axiom claims. [`verify`] checks unitality, nondegeneracy and associativity
//! and, on success, produces a [`FrobObject`] carrying the nondegeneracy
//! bijection `α̂`. Derived structure (comultiplication, copairing) is only
//! available on verified objects.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relation::{ElemSet, FinSet, PowerMap, Relation};

/// Candidate data for a Frobenius object on `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobData {
    carrier: FinSet,
    unit: ElemSet,
    counit: ElemSet,
    /// `mul[x * n + y] = μ̃(x, y)`.
    mul: Vec<ElemSet>,
}

impl FrobData {
    pub fn new(carrier: FinSet, unit: ElemSet, counit: ElemSet, mul: Vec<ElemSet>) -> Result<Self> {
        let n = carrier.size();
        if n > ElemSet::MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n, ElemSet::MAX_CARRIER));
        }
        if mul.len() != n * n {
            return Err(Error::Data(format!(
                "multiplication table has {} entries, expected {}",
                mul.len(),
                n * n
            )));
        }
        let full = ElemSet::full(n);
        if !unit.is_subset(full)
            || !counit.is_subset(full)
            || mul.iter().any(|m| !m.is_subset(full))
        {
            return Err(Error::Data(format!(
                "element index out of range for carrier of size {n}"
            )));
        }
        Ok(FrobData {
            carrier,
            unit,
            counit,
            mul,
        })
    }

    /// Unlabeled data; panics if the table shape is wrong.
    pub fn from_parts(n: usize, unit: ElemSet, counit: ElemSet, mul: Vec<ElemSet>) -> Self {
        FrobData::new(FinSet::new(n), unit, counit, mul).expect("well-formed Frobenius data")
    }

    /// Parse a compact literal such as `"a|a|a,b;b,a"`: unit, counit, then
    /// the table row by row (`;` between rows, `,` between entries, letters
    /// within an entry, `-` or nothing for the empty set).
    pub fn parse_compact(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split('|').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Data(format!(
                "expected `unit|counit|table`, got `{s}`"
            )));
        }
        let rows: Vec<Vec<&str>> = parts[2]
            .split(';')
            .map(|r| r.split(',').map(str::trim).collect())
            .collect();
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Data("table must be square".into()));
        }
        let elems = |t: &str| -> Result<ElemSet> {
            let mut set = ElemSet::EMPTY;
            for c in t.chars().filter(|c| !c.is_whitespace() && *c != '-') {
                let i = (c as u32).wrapping_sub('a' as u32) as usize;
                if i >= n {
                    return Err(Error::Data(format!("unknown element `{c}`")));
                }
                set.insert(i);
            }
            Ok(set)
        };
        let mul = rows
            .iter()
            .flatten()
            .map(|t| elems(t))
            .collect::<Result<Vec<_>>>()?;
        FrobData::new(FinSet::new(n), elems(parts[0])?, elems(parts[1])?, mul)
    }

    pub fn n(&self) -> usize {
        self.carrier.size()
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    pub fn unit(&self) -> ElemSet {
        self.unit
    }

    pub fn counit(&self) -> ElemSet {
        self.counit
    }

    pub fn mul(&self, x: usize, y: usize) -> ElemSet {
        self.mul[x * self.n() + y]
    }

    pub fn mul_table(&self) -> &[ElemSet] {
        &self.mul
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        let carrier = FinSet::with_labels(labels)?;
        if carrier.size() != self.n() {
            return Err(Error::Labels(format!(
                "{} labels for a carrier of size {}",
                carrier.size(),
                self.n()
            )));
        }
        self.carrier = carrier;
        Ok(self)
    }

    pub fn with_mul(&self, x: usize, y: usize, v: ElemSet) -> FrobData {
        let mut d = self.clone();
        let n = d.n();
        d.mul[x * n + y] = v;
        d
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| (x + 1..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Transport along a bijection: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> FrobData {
        let n = self.n();
        let mut mul = vec![ElemSet::EMPTY; n * n];
        for x in 0..n {
            for y in 0..n {
                mul[perm[x] * n + perm[y]] = self.mul(x, y).map(perm);
            }
        }
        FrobData {
            carrier: FinSet::new(n),
            unit: self.unit.map(perm),
            counit: self.counit.map(perm),
            mul,
        }
    }

    /// `μ` as a relation `X×X -> X`.
    pub fn mul_relation(&self) -> Relation {
        let n = self.n();
        let mut r = Relation::empty(n * n, n);
        for (xy, m) in self.mul.iter().enumerate() {
            for z in m.iter() {
                r.set(xy, z);
            }
        }
        r
    }

    pub fn unit_relation(&self) -> Relation {
        Relation::from_point(self.n(), self.unit)
    }

    pub fn counit_relation(&self) -> Relation {
        Relation::to_point(self.n(), self.counit)
    }

    /// `μ̃` as a power map indexed by flattened ordered pairs.
    pub fn mul_power_map(&self) -> PowerMap {
        PowerMap {
            src: self.n() * self.n(),
            dst: self.n(),
            image: self.mul.iter().map(|m| m.iter().collect()).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `μ̃(x, e)` for `e ∈ η`.
    Right,
    /// `μ̃(e, x)` for `e ∈ η`.
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitalityFailure {
    pub x: usize,
    pub side: Side,
    /// `⋃_{e ∈ η} μ̃(x, e)` (or the mirrored union), which should be `{x}`.
    pub got: ElemSet,
}

/// `μ ∘ (1 ⊗ η) = 1 = μ ∘ (η ⊗ 1)`, checked elementwise.
pub fn check_unitality(d: &FrobData) -> std::result::Result<(), UnitalityFailure> {
    let n = d.n();
    for x in 0..n {
        for side in [Side::Right, Side::Left] {
            let got = d.unit.iter().fold(ElemSet::EMPTY, |acc, e| {
                acc.union(match side {
                    Side::Right => d.mul(x, e),
                    Side::Left => d.mul(e, x),
                })
            });
            if got != ElemSet::singleton(x) {
                return Err(UnitalityFailure { x, side, got });
            }
        }
    }
    Ok(())
}

/// `⋃_{w ∈ μ̃(x,y)} μ̃(w, z)`.
pub(crate) fn left_bracket(d: &FrobData, x: usize, y: usize, z: usize) -> ElemSet {
    d.mul(x, y)
        .iter()
        .fold(ElemSet::EMPTY, |acc, w| acc.union(d.mul(w, z)))
}

/// `⋃_{w ∈ μ̃(y,z)} μ̃(x, w)`.
pub(crate) fn right_bracket(d: &FrobData, x: usize, y: usize, z: usize) -> ElemSet {
    d.mul(y, z)
        .iter()
        .fold(ElemSet::EMPTY, |acc, w| acc.union(d.mul(x, w)))
}

/// Returns the lexicographically least triple where the two bracketings differ.
pub fn check_associativity(d: &FrobData) -> std::result::Result<(), (usize, usize, usize)> {
    let n = d.n();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if left_bracket(d, x, y, z) != right_bracket(d, x, y, z) {
                    return Err((x, y, z));
                }
            }
        }
    }
    Ok(())
}

/// The bijection `α̂` pairing each `x` with the unique `y` such that
/// `μ̃(x, y)` meets the counit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NondegeneracyWitness {
    alpha_hat: Vec<usize>,
    alpha_inverse: Vec<usize>,
}

impl NondegeneracyWitness {
    pub fn alpha(&self, x: usize) -> usize {
        self.alpha_hat[x]
    }

    pub fn alpha_inverse(&self, y: usize) -> usize {
        self.alpha_inverse[y]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.alpha_hat
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NondegeneracyFailure {
    /// Row `x` has `count` partners `y` with `μ̃(x,y) ∩ ε ≠ ∅`.
    Row { x: usize, count: usize },
    /// Column `y` has `count` partners `x` with `μ̃(x,y) ∩ ε ≠ ∅`.
    Column { y: usize, count: usize },
}

pub fn check_nondegeneracy(
    d: &FrobData,
) -> std::result::Result<NondegeneracyWitness, NondegeneracyFailure> {
    let n = d.n();
    let meets = |x: usize, y: usize| d.mul(x, y).meets(d.counit);
    let mut alpha_hat = vec![0; n];
    for (x, slot) in alpha_hat.iter_mut().enumerate() {
        let partners: Vec<usize> = (0..n).filter(|&y| meets(x, y)).collect();
        if partners.len() != 1 {
            return Err(NondegeneracyFailure::Row {
                x,
                count: partners.len(),
            });
        }
        *slot = partners[0];
    }
    for y in 0..n {
        let count = (0..n).filter(|&x| meets(x, y)).count();
        if count != 1 {
            return Err(NondegeneracyFailure::Column { y, count });
        }
    }
    let mut alpha_inverse = vec![0; n];
    for (x, &y) in alpha_hat.iter().enumerate() {
        alpha_inverse[y] = x;
    }
    Ok(NondegeneracyWitness {
        alpha_hat,
        alpha_inverse,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomFailure {
    Unitality(UnitalityFailure),
    Nondegeneracy(NondegeneracyFailure),
    Associativity { x: usize, y: usize, z: usize },
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomFailure::Unitality(u) => {
                let side = match u.side {
                    Side::Right => "right",
                    Side::Left => "left",
                };
                write!(
                    f,
                    "unitality: {side} unit law fails at element {} (got {:?})",
                    u.x,
                    u.got.iter().collect::<Vec<_>>()
                )
            }
            AxiomFailure::Nondegeneracy(NondegeneracyFailure::Row { x, count }) => {
                write!(
                    f,
                    "nondegeneracy: row {x} has {count} entries meeting the counit"
                )
            }
            AxiomFailure::Nondegeneracy(NondegeneracyFailure::Column { y, count }) => {
                write!(
                    f,
                    "nondegeneracy: column {y} has {count} entries meeting the counit"
                )
            }
            AxiomFailure::Associativity { x, y, z } => {
                write!(f, "associativity: bracketings differ at ({x}, {y}, {z})")
            }
        }
    }
}

/// All axiom failures of a candidate, in checking order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub failures: Vec<AxiomFailure>,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fail) in self.failures.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{fail}")?;
        }
        Ok(())
    }
}

impl std::error::Error for VerifyReport {}

/// A verified Frobenius object.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobObject {
    data: FrobData,
    alpha: NondegeneracyWitness,
    commutative: bool,
}

/// Checks unitality, nondegeneracy and associativity, reporting every failure.
pub fn verify(d: &FrobData) -> std::result::Result<FrobObject, VerifyReport> {
    let mut failures = Vec::new();
    if let Err(u) = check_unitality(d) {
        failures.push(AxiomFailure::Unitality(u));
    }
    let witness = match check_nondegeneracy(d) {
        Ok(w) => Some(w),
        Err(e) => {
            failures.push(AxiomFailure::Nondegeneracy(e));
            None
        }
    };
    if let Err((x, y, z)) = check_associativity(d) {
        failures.push(AxiomFailure::Associativity { x, y, z });
    }
    match witness {
        Some(alpha) if failures.is_empty() => Ok(FrobObject {
            commutative: d.is_commutative(),
            data: d.clone(),
            alpha,
        }),
        _ => Err(VerifyReport { failures }),
    }
}

/// Cheaper yes/no version of [`verify`] that stops at the first failure.
pub fn is_frobenius(d: &FrobData) -> bool {
    check_unitality(d).is_ok() && check_nondegeneracy(d).is_ok() && check_associativity(d).is_ok()
}

impl FrobObject {
    pub fn data(&self) -> &FrobData {
        &self.data
    }

    pub fn n(&self) -> usize {
        self.data.n()
    }

    pub fn witness(&self) -> &NondegeneracyWitness {
        &self.alpha
    }

    pub fn alpha(&self, x: usize) -> usize {
        self.alpha.alpha(x)
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn into_data(self) -> FrobData {
        self.data
    }

    /// `δ̃(x) = {(α̂(y), z) | y ∈ X, z ∈ μ̃(y, x)}`, with pairs flattened
    /// row-major.
    pub fn comultiplication(&self) -> PowerMap {
        let n = self.n();
        let mut out = PowerMap::empty(n, n * n);
        for x in 0..n {
            for y in 0..n {
                for z in self.data.mul(y, x).iter() {
                    out.image[x].insert(self.alpha(y) * n + z);
                }
            }
        }
        out
    }

    pub fn comul_relation(&self) -> Relation {
        Relation::from_power_map(&self.comultiplication())
    }

    /// `β = δ ∘ η`, as a set of ordered pairs.
    pub fn copairing(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let delta = self.comultiplication();
        let mut pairs: Vec<(usize, usize)> = self
            .data
            .unit
            .iter()
            .flat_map(|e| {
                delta.image[e]
                    .iter()
                    .map(|&p| (p / n, p % n))
                    .collect::<Vec<_>>()
            })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }

    /// `β` as a relation `{•} -> X×X`.
    pub fn copairing_relation(&self) -> Relation {
        let n = self.n();
        Relation::from_pairs(
            1,
            n * n,
            self.copairing().into_iter().map(|(a, b)| (0, a * n + b)),
        )
        .expect("copairing pairs are in range")
    }

    pub fn alpha_relation(&self) -> Relation {
        Relation::graph(self.n(), self.alpha.as_slice())
    }
}

/// Next permutation in lexicographic order; false after the last one.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

/// Searches all `n!` bijections for one transporting `f` onto `g`.
pub fn isomorphic(f: &FrobData, g: &FrobData) -> Option<Vec<usize>> {
    if f.n() != g.n() || f.unit.len() != g.unit.len() || f.counit.len() != g.counit.len() {
        return None;
    }
    let mut p: Vec<usize> = (0..f.n()).collect();
    loop {
        if is_isomorphism(f, g, &p) {
            return Some(p);
        }
        if !next_permutation(&mut p) {
            return None;
        }
    }
}

fn is_isomorphism(f: &FrobData, g: &FrobData, phi: &[usize]) -> bool {
    let n = f.n();
    f.unit.map(phi) == g.unit
        && f.counit.map(phi) == g.counit
        && (0..n).all(|x| (0..n).all(|y| f.mul(x, y).map(phi) == g.mul(phi[x], phi[y])))
}

/// Block-diagonal disjoint union; elements of `g` are shifted by `f.n()`.
pub fn disjoint_union(f: &FrobObject, g: &FrobObject) -> FrobObject {
    let (m, k) = (f.n(), g.n());
    let n = m + k;
    let shift = |s: ElemSet| ElemSet(s.0 << m);
    let mut mul = vec![ElemSet::EMPTY; n * n];
    for x in 0..m {
        for y in 0..m {
            mul[x * n + y] = f.data.mul(x, y);
        }
    }
    for x in 0..k {
        for y in 0..k {
            mul[(m + x) * n + m + y] = shift(g.data.mul(x, y));
        }
    }
    let data = FrobData::from_parts(
        n,
        f.data.unit.union(shift(g.data.unit)),
        f.data.counit.union(shift(g.data.counit)),
        mul,
    );
    verify(&data).expect("disjoint union of Frobenius objects is Frobenius")
}

// JSON form: {"n", "labels", "unit", "counit", "mul"}.
#[derive(Serialize, Deserialize)]
pub(crate) struct FrobJson {
    n: usize,
    #[serde(default)]
    labels: Option<Vec<String>>,
    unit: Vec<usize>,
    counit: Vec<usize>,
    mul: Vec<Vec<Vec<usize>>>,
}

impl FrobJson {
    fn elems(n: usize, v: &[usize]) -> Result<ElemSet> {
        if let Some(&bad) = v.iter().find(|&&i| i >= n) {
            return Err(Error::Data(format!(
                "element {bad} out of range for n = {n}"
            )));
        }
        Ok(ElemSet::from_elems(v.iter().copied()))
    }
}

impl Serialize for FrobData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.n();
        FrobJson {
            n,
            labels: Some(self.carrier.labels()),
            unit: self.unit.iter().collect(),
            counit: self.counit.iter().collect(),
            mul: (0..n)
                .map(|x| (0..n).map(|y| self.mul(x, y).iter().collect()).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FrobData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FrobJson::deserialize(d)?;
        let build = || -> Result<FrobData> {
            let n = j.n;
            if j.mul.len() != n || j.mul.iter().any(|r| r.len() != n) {
                return Err(Error::Data(format!("mul must be an {n} x {n} table")));
            }
            let mul = j
                .mul
                .iter()
                .flatten()
                .map(|e| FrobJson::elems(n, e))
                .collect::<Result<Vec<_>>>()?;
            let carrier = match &j.labels {
                Some(l) if l.len() != n => {
                    return Err(Error::Labels(format!("{} labels for n = {n}", l.len())))
                }
                Some(l) => FinSet::with_labels(l.clone())?,
                None => FinSet::new(n),
            };
            FrobData::new(
                carrier,
                FrobJson::elems(n, &j.unit)?,
                FrobJson::elems(n, &j.counit)?,
                mul,
            )
        };
        build().map_err(serde::de::Error::custom)
    }
}

impl Serialize for FrobObject {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.data.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FrobObject {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let data = FrobData::deserialize(d)?;
        verify(&data).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(s: &str) -> FrobData {
        FrobData::parse_compact(s).unwrap()
    }

    fn obj(s: &str) -> FrobObject {
        verify(&data(s)).unwrap()
    }

    const CASE1: &str = "a|a|a,b;b,a";
    const CASE3: &str = "a|b|a,b;b,a";
    const CASE4: &str = "a|b|a,b;b,-";

    #[test]
    fn compact_literal() {
        let d = data("ab|ab|a,-;-,b");
        assert_eq!(d.unit(), ElemSet::full(2));
        assert_eq!(d.mul(0, 1), ElemSet::EMPTY);
        assert_eq!(d.mul(1, 1), ElemSet::singleton(1));
        assert!(FrobData::parse_compact("a|a|a,b;b").is_err());
        assert!(FrobData::parse_compact("a|a|a,c;b,a").is_err());
    }

    #[test]
    fn unitality_examples() {
        assert!(check_unitality(&data(CASE1)).is_ok());
        let no_unit = data("|a|a,b;b,a");
        let err = check_unitality(&no_unit).unwrap_err();
        assert_eq!((err.x, err.side), (0, Side::Right));
        for bb in ["-", "a", "b", "ab"] {
            assert!(
                check_unitality(&data(&format!("a|a|a,b;b,{bb}"))).is_ok(),
                "{bb}"
            );
        }
    }

    #[test]
    fn unitality_left_side_reported() {
        let d = data("a|a|a,-;b,a");
        let err = check_unitality(&d).unwrap_err();
        assert_eq!((err.x, err.side), (1, Side::Left));
    }

    #[test]
    fn unitality_matches_relation_equalities() {
        for bb in ["-", "a", "b", "ab"] {
            for row in ["a,b", "ab,b", "a,-"] {
                let d = data(&format!("a|a|{row};b,{bb}"));
                let n = d.n();
                let id = Relation::identity(n);
                let mu = d.mul_relation();
                let right = id.product(&d.unit_relation()).compose(&mu).unwrap();
                let left = d.unit_relation().product(&id).compose(&mu).unwrap();
                assert_eq!(check_unitality(&d).is_ok(), right == id && left == id);
            }
        }
    }

    #[test]
    fn associativity_failure_from_three_element_scenario() {
        // η = ε = {a}, μ̃(b,b) = ∅ with row b shaped by nondegeneracy.
        let d = data("a|a|a,b,c;b,-,a;c,a,-");
        assert_eq!(check_associativity(&d), Err((1, 1, 2)));
    }

    #[test]
    fn nondegeneracy_examples() {
        let w = check_nondegeneracy(&data(CASE4)).unwrap();
        assert_eq!(w.as_slice(), &[1, 0]);
        let w = check_nondegeneracy(&data(CASE1)).unwrap();
        assert_eq!(w.as_slice(), &[0, 1]);
        assert_eq!(
            check_nondegeneracy(&data("a|a|a,b;b,b")),
            Err(NondegeneracyFailure::Row { x: 1, count: 0 })
        );
        assert_eq!(
            check_nondegeneracy(&data("a|a|a,a;b,b")),
            Err(NondegeneracyFailure::Row { x: 0, count: 2 })
        );
        assert_eq!(
            check_nondegeneracy(&data("a|a|a,b;a,b")),
            Err(NondegeneracyFailure::Column { y: 0, count: 2 })
        );
    }

    #[test]
    fn verify_reports_all_failures_in_order() {
        let report = verify(&data("|a|a,b;b,b")).unwrap_err();
        assert!(matches!(report.failures[0], AxiomFailure::Unitality(_)));
        assert!(matches!(report.failures[1], AxiomFailure::Nondegeneracy(_)));
        assert!(report.to_string().contains("unitality"));
    }

    #[test]
    fn comultiplication_case4() {
        let f = obj(CASE4);
        let d = f.comultiplication();
        // (b,a) = 2, (a,b) = 1, (b,b) = 3
        assert_eq!(d.image[0].iter().copied().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(d.image[1].iter().copied().collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn one_element_object() {
        let f = obj("a|a|a");
        assert_eq!(
            f.comultiplication().image[0]
                .iter()
                .copied()
                .collect::<Vec<_>>(),
            vec![0]
        );
        assert_eq!(f.copairing(), vec![(0, 0)]);
    }

    #[test]
    fn copairing_case3() {
        assert_eq!(obj(CASE3).copairing(), vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn empty_object_is_valid() {
        let f = verify(&FrobData::from_parts(
            0,
            ElemSet::EMPTY,
            ElemSet::EMPTY,
            vec![],
        ))
        .unwrap();
        assert_eq!(f.n(), 0);
        assert!(f.is_commutative());
        assert!(f.copairing().is_empty());
    }

    #[test]
    fn isomorphic_examples() {
        assert_eq!(isomorphic(&data(CASE1), &data(CASE3)), None);
        assert_eq!(isomorphic(&data(CASE4), &data(CASE4)), Some(vec![0, 1]));
        // case 5 of the three-element census and its b/c exchange
        let c5 = data("a|a|a,b,c;b,ac,bc;c,bc,ab");
        assert_eq!(c5.relabel(&[0, 2, 1]), c5);
        let c14 = data("a|b|a,b,c;b,-,-;c,-,bc");
        let swapped = c14.relabel(&[0, 2, 1]);
        assert_ne!(c14, swapped);
        assert_eq!(isomorphic(&c14, &swapped), Some(vec![0, 2, 1]));
        assert_eq!(isomorphic(&c14, &c5), None);
    }

    #[test]
    fn disjoint_union_with_empty_is_identity() {
        let empty = verify(&FrobData::from_parts(
            0,
            ElemSet::EMPTY,
            ElemSet::EMPTY,
            vec![],
        ))
        .unwrap();
        let f = obj(CASE4);
        assert_eq!(
            disjoint_union(&empty, &f).data().mul_table(),
            f.data().mul_table()
        );
        assert_eq!(
            disjoint_union(&f, &empty).data().counit(),
            f.data().counit()
        );
    }

    #[test]
    fn disjoint_union_uses_both_counits() {
        let u = disjoint_union(&obj("a|a|a"), &obj(CASE3));
        assert_eq!(u.data().unit(), ElemSet::from_elems([0, 1]));
        assert_eq!(u.data().counit(), ElemSet::from_elems([0, 2]));
        assert_eq!(u.data().mul(0, 1), ElemSet::EMPTY);
    }

    #[test]
    fn permutations_are_lexicographic() {
        let p = permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p[1], vec![0, 2, 1]);
        assert_eq!(p[5], vec![2, 1, 0]);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn json_round_trip() {
        let f = obj("a|b|a,b,c;b,-,-;c,-,b");
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"n":3,"labels":["a","b","c"],"unit":[0],"counit":[1],"mul":[[[0],[1],[2]],[[1],[],[]],[[2],[],[1]]]}"#
        );
        let back: FrobObject = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<FrobObject>(
            r#"{"n":1,"unit":[],"counit":[0],"mul":[[[0]]]}"#
        )
        .is_err());
    }
}
