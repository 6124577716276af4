//! Closed-surface invariants of commutative Frobenius objects.
//!
//! The genus-`g` value is `ε ∘ (μ ∘ δ)^g ∘ η`, a relation `{•} -> {•}`,
//! i.e. a Boolean. The handle operator `S = μ ∘ δ` acts on subsets of the
//! carrier, so the sequence of states `S^g ∘ η` lives in a finite space and
//! the Boolean sequence is eventually periodic.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frobenius::FrobObject;
use crate::relation::ElemSet;

/// `S̃ : X -> P(X)` for `S = μ ∘ δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HandleOperator {
    s_map: Vec<ElemSet>,
}

impl HandleOperator {
    pub fn image(&self, x: usize) -> ElemSet {
        self.s_map[x]
    }

    pub fn as_slice(&self) -> &[ElemSet] {
        &self.s_map
    }

    /// `⋃_{x ∈ set} S̃(x)`.
    pub fn apply(&self, set: ElemSet) -> ElemSet {
        set.iter()
            .fold(ElemSet::EMPTY, |acc, x| acc.union(self.s_map[x]))
    }
}

/// `S̃(x) = ⋃_{y ∈ X} ⋃_{z ∈ μ̃(y,x)} μ̃(α̂(y), z)`.
pub fn handle_operator(f: &FrobObject) -> HandleOperator {
    let d = f.data();
    let n = d.n();
    let s_map = (0..n)
        .map(|x| {
            (0..n).fold(ElemSet::EMPTY, |acc, y| {
                d.mul(y, x)
                    .iter()
                    .fold(acc, |acc, z| acc.union(d.mul(f.alpha(y), z)))
            })
        })
        .collect();
    HandleOperator { s_map }
}

/// `S^g ∘ η` as a subset of the carrier.
pub fn genus_state(f: &FrobObject, g: usize) -> ElemSet {
    let s = handle_operator(f);
    (0..g).fold(f.data().unit(), |state, _| s.apply(state))
}

/// A Boolean sequence `b_0, b_1, ..` given as a finite preperiod followed by
/// a period repeated forever, together with its rendering as a proposition
/// in `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionFunction {
    pub preperiod: Vec<bool>,
    pub period: Vec<bool>,
    pub proposition: String,
    /// Set for noncommutative inputs, where the formula is computed but does
    /// not come from a TQFT.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub formal: bool,
}

impl PartitionFunction {
    /// Builds the minimal presentation of the sequence and renders it.
    pub fn from_sequence(preperiod: Vec<bool>, period: Vec<bool>) -> Self {
        assert!(!period.is_empty(), "period must be nonempty");
        let (preperiod, period) = minimize(preperiod, period);
        let proposition = render(&preperiod, &period);
        PartitionFunction {
            preperiod,
            period,
            proposition,
            formal: false,
        }
    }

    /// `Z(Σ_g)`.
    pub fn value(&self, g: usize) -> bool {
        if g < self.preperiod.len() {
            self.preperiod[g]
        } else {
            self.period[(g - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn values(&self, len: usize) -> Vec<bool> {
        (0..len).map(|g| self.value(g)).collect()
    }

    /// Same Boolean sequence, ignoring the `formal` tag.
    pub fn same_sequence(&self, other: &PartitionFunction) -> bool {
        self.preperiod == other.preperiod && self.period == other.period
    }
}

impl fmt::Display for PartitionFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.proposition)
    }
}

/// Smallest period, then shortest preperiod.
fn minimize(mut pre: Vec<bool>, mut period: Vec<bool>) -> (Vec<bool>, Vec<bool>) {
    let p = period.len();
    if let Some(d) =
        (1..=p).find(|&d| p.is_multiple_of(d) && (0..p).all(|i| period[i] == period[i % d]))
    {
        period.truncate(d);
    }
    while let Some(&last) = pre.last() {
        if last != *period.last().expect("nonempty period") {
            break;
        }
        pre.pop();
        period.rotate_right(1);
    }
    (pre, period)
}

fn render(pre: &[bool], period: &[bool]) -> String {
    let bits = |v: &[bool]| {
        v.iter()
            .map(|&b| if b { 'T' } else { 'F' })
            .collect::<String>()
    };
    match (pre, period) {
        ([], [true]) => "True".into(),
        ([], [false]) => "False".into(),
        (pre, [false]) if pre.last() == Some(&true) && pre[..pre.len() - 1].iter().all(|b| !b) => {
            format!("g = {}", pre.len() - 1)
        }
        (pre, [true]) if pre.iter().all(|b| !b) => format!("g ≥ {}", pre.len()),
        ([], [false, true]) => "g is odd".into(),
        ([], [true, false]) => "g is even".into(),
        ([], period) if period.iter().filter(|&&b| b).count() == 1 => {
            let r = period.iter().position(|&b| b).expect("one true entry");
            format!("g ≡ {r} (mod {})", period.len())
        }
        (pre, period) => format!("preperiod [{}], period [{}]", bits(pre), bits(period)),
    }
}

/// Parses a rendered proposition back into its Boolean sequence.
pub fn parse_proposition(s: &str) -> Result<PartitionFunction> {
    let bad = || Error::Proposition(s.to_string());
    let norm: String = s
        .trim()
        .replace(">=", "≥")
        .replace("==", "=")
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ");
    let compact: String = norm.chars().filter(|c| !c.is_whitespace()).collect();
    let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
    let (pre, period) = match compact.as_str() {
        "True" => (vec![], vec![true]),
        "False" => (vec![], vec![false]),
        "gisodd" => (vec![], vec![false, true]),
        "giseven" => (vec![], vec![true, false]),
        c if c.starts_with("g≥") => {
            let k = num(&c["g≥".len()..])?;
            (vec![false; k], vec![true])
        }
        c if c.starts_with("g≡") && c.ends_with(')') => {
            let body = &c["g≡".len()..c.len() - 1];
            let (r, m) = body.split_once("(mod").ok_or_else(bad)?;
            let (r, m) = (num(r)?, num(m)?);
            if m == 0 || r >= m {
                return Err(bad());
            }
            let mut period = vec![false; m];
            period[r] = true;
            (vec![], period)
        }
        c if c.starts_with("g=") => {
            let k = num(&c[2..])?;
            let mut pre = vec![false; k + 1];
            pre[k] = true;
            (pre, vec![false])
        }
        c if c.starts_with("preperiod[") => {
            let rest = &c["preperiod[".len()..];
            let (pre, rest) = rest.split_once("],period[").ok_or_else(bad)?;
            let period = rest.strip_suffix(']').ok_or_else(bad)?;
            let bits = |t: &str| -> Result<Vec<bool>> {
                t.chars()
                    .map(|ch| match ch {
                        'T' => Ok(true),
                        'F' => Ok(false),
                        _ => Err(bad()),
                    })
                    .collect()
            };
            let period = bits(period)?;
            if period.is_empty() {
                return Err(bad());
            }
            (bits(pre)?, period)
        }
        _ => return Err(bad()),
    };
    Ok(PartitionFunction::from_sequence(pre, period))
}

/// `Z(Σ_g) = T` iff `(S^g ∘ η) ∩ ε ≠ ∅`, with exact preperiod and period
/// found by recording every visited state.
pub fn partition_function(f: &FrobObject) -> PartitionFunction {
    let s = handle_operator(f);
    let eps = f.data().counit();
    let mut seen: HashMap<ElemSet, usize> = HashMap::new();
    let mut states = Vec::new();
    let mut state = f.data().unit();
    let start = loop {
        if let Some(&i) = seen.get(&state) {
            break i;
        }
        seen.insert(state, states.len());
        states.push(state);
        state = s.apply(state);
    };
    let values: Vec<bool> = states.iter().map(|st| st.meets(eps)).collect();
    let mut pf =
        PartitionFunction::from_sequence(values[..start].to_vec(), values[start..].to_vec());
    pf.formal = !f.is_commutative();
    pf
}

/// Closed form for an abelian group `ℤ_m` with counit `{ω}`:
/// `Z(Σ_g) = T` iff `(g − 1)ω ≡ 0 (mod m)`.
pub fn partition_function_abelian(m: usize, omega: usize) -> PartitionFunction {
    assert!(m >= 1, "modulus must be positive");
    let omega = omega % m;
    // (g-1)ω mod m, starting from g = 0
    let period: Vec<bool> = (0..m)
        .map(|g| ((g + m - 1) * omega).is_multiple_of(m))
        .collect();
    PartitionFunction::from_sequence(vec![], period)
}
