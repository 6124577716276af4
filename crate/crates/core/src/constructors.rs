//! Frobenius objects built from algebra: groupoids (optionally with a
//! twisted counit), finite groups with a shifted counit, and the
//! class-product structure on conjugacy classes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frobenius::{permutations, verify, FrobData, FrobObject};
use crate::relation::{ElemSet, FinSet};

/// A finite group given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    size: usize,
    cayley: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    #[serde(default)]
    name: Option<String>,
    size: usize,
    cayley: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(name: impl Into<String>, cayley: Vec<Vec<usize>>) -> Result<Self> {
        let size = cayley.len();
        if size == 0 {
            return Err(Error::Group("a group has at least one element".into()));
        }
        if cayley.iter().any(|r| r.len() != size) {
            return Err(Error::Group("Cayley table must be square".into()));
        }
        if cayley.iter().flatten().any(|&v| v >= size) {
            return Err(Error::Group("Cayley table entry out of range".into()));
        }
        let flat: Vec<usize> = cayley.into_iter().flatten().collect();
        let m = |a: usize, b: usize| flat[a * size + b];
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::Group(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..size)
            .find(|&e| (0..size).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::Group("no identity element".into()))?;
        let inverse = (0..size)
            .map(|a| {
                (0..size)
                    .find(|&b| m(a, b) == identity && m(b, a) == identity)
                    .ok_or_else(|| Error::Group(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup {
            name: name.into(),
            size,
            cayley: flat,
            identity,
            inverse,
        })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: GroupJson = serde_json::from_str(s)?;
        if j.cayley.len() != j.size {
            return Err(Error::Group(format!(
                "size {} does not match a table with {} rows",
                j.size,
                j.cayley.len()
            )));
        }
        FiniteGroup::new(j.name.unwrap_or_else(|| format!("G{}", j.size)), j.cayley)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GroupJson {
            name: Some(self.name.clone()),
            size: self.size,
            cayley: self
                .cayley
                .chunks(self.size)
                .map(<[usize]>::to_vec)
                .collect(),
        })
        .expect("group serializes")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.size + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Order of an element.
    pub fn order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `ℤ_m` with elements `0..m` under addition.
    pub fn cyclic(m: usize) -> Self {
        let t = (0..m)
            .map(|a| (0..m).map(|b| (a + b) % m).collect())
            .collect();
        FiniteGroup::new(format!("Z{m}"), t).expect("cyclic group")
    }

    /// Symmetric group on `k ≤ 4` letters; permutations in lexicographic
    /// order, product `(p q)(i) = p(q(i))`.
    pub fn symmetric(k: usize) -> Result<Self> {
        if k == 0 || k > 4 {
            return Err(Error::Group(format!(
                "symmetric groups are built for 1 ≤ k ≤ 4, got {k}"
            )));
        }
        let perms = permutations(k);
        let index: BTreeMap<Vec<usize>, usize> = perms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let t = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index[&(0..k).map(|i| p[q[i]]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect();
        FiniteGroup::new(format!("S{k}"), t)
    }

    /// Dihedral group of order `2k`: `r^i` is `i`, `s r^i` is `k + i`.
    pub fn dihedral(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Group("dihedral group needs k ≥ 1".into()));
        }
        let n = 2 * k;
        // (s^a r^i)(s^b r^j) = s^(a+b) r^(±i + j) with the sign flipped when b = 1.
        let t = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let (a, i) = (x / k, x % k);
                        let (b, j) = (y / k, y % k);
                        let i = if b == 1 { (k - i) % k } else { i };
                        ((a + b) % 2) * k + (i + j) % k
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::new(format!("D{k}"), t)
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}` indexed `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> Self {
        // unit quaternions as (sign, basis) with basis 0=1, 1=i, 2=j, 3=k
        let basis_mul = |p: usize, q: usize| -> (bool, usize) {
            match (p, q) {
                (0, q) => (false, q),
                (p, 0) => (false, p),
                (p, q) if p == q => (true, 0),
                (1, 2) => (false, 3),
                (2, 1) => (true, 3),
                (2, 3) => (false, 1),
                (3, 2) => (true, 1),
                (3, 1) => (false, 2),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        };
        let t = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (neg, b) = basis_mul(x / 2, y / 2);
                        let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
                        b * 2 + sign as usize
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::new("Q8", t).expect("quaternion group")
    }

    /// Built-in groups by name: `Zn`, `Sk` (k ≤ 4), `Dk`, `Q8`, `V4`.
    pub fn by_name(name: &str) -> Result<Self> {
        let unknown = || Error::UnknownGroup(name.to_string());
        let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
        match name {
            "Q8" => Ok(FiniteGroup::quaternion()),
            "V4" => {
                let mut g = FiniteGroup::dihedral(2)?;
                g.name = "V4".into();
                Ok(g)
            }
            _ if name.starts_with('Z') => {
                let m = num(&name[1..])?;
                if m == 0 {
                    return Err(unknown());
                }
                Ok(FiniteGroup::cyclic(m))
            }
            _ if name.starts_with('S') => FiniteGroup::symmetric(num(&name[1..])?),
            _ if name.starts_with('D') => FiniteGroup::dihedral(num(&name[1..])?),
            _ => Err(unknown()),
        }
    }

    /// Conjugacy classes; the identity class comes first, the rest are
    /// ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.size];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut order: Vec<usize> = vec![self.identity];
        order.extend((0..self.size).filter(|&g| g != self.identity));
        for g in order {
            if class_of[g] != usize::MAX {
                continue;
            }
            let mut c: Vec<usize> = (0..self.size)
                .map(|h| self.mul(self.mul(h, g), self.inverse(h)))
                .collect();
            c.sort_unstable();
            c.dedup();
            for &x in &c {
                class_of[x] = classes.len();
            }
            classes.push(c);
        }
        classes
    }
}

/// Marker for an undefined composite in a groupoid's composition table.
pub const UNDEFINED: Option<usize> = None;

/// A finite groupoid. `compose[g][h]` is `g · h`, defined iff `s(g) = t(h)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroupoid {
    pub objects: usize,
    pub morphisms: usize,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub compose: Vec<Vec<Option<usize>>>,
    pub identities: Vec<usize>,
    pub inverses: Vec<usize>,
}

impl FiniteGroupoid {
    /// Checks the groupoid axioms, naming the first violated one.
    pub fn validate(&self) -> Result<()> {
        let (n0, n1) = (self.objects, self.morphisms);
        let bad = |m: String| Err(Error::Groupoid(m));
        if self.source.len() != n1 || self.target.len() != n1 || self.inverses.len() != n1 {
            return bad("source, target and inverses must have one entry per morphism".into());
        }
        if self.identities.len() != n0 {
            return bad("identities must have one entry per object".into());
        }
        if self.compose.len() != n1 || self.compose.iter().any(|r| r.len() != n1) {
            return bad("composition table must be morphisms x morphisms".into());
        }
        if self.source.iter().chain(&self.target).any(|&o| o >= n0)
            || self
                .identities
                .iter()
                .chain(&self.inverses)
                .any(|&g| g >= n1)
        {
            return bad("index out of range".into());
        }
        let (s, t) = (&self.source, &self.target);
        for g in 0..n1 {
            for h in 0..n1 {
                match (s[g] == t[h], self.compose[g][h]) {
                    (true, None) => return bad(format!("composite {g}·{h} is missing")),
                    (false, Some(_)) => {
                        return bad(format!("composite {g}·{h} defined although s(g) ≠ t(h)"))
                    }
                    (true, Some(gh)) if gh >= n1 => return bad("index out of range".into()),
                    (true, Some(gh)) if s[gh] != s[h] || t[gh] != t[g] => {
                        return bad(format!("axiom 1: source/target of {g}·{h} are wrong"))
                    }
                    _ => {}
                }
            }
        }
        let c = |g: usize, h: usize| self.compose[g][h].expect("composable");
        for g in 0..n1 {
            for h in (0..n1).filter(|&h| s[g] == t[h]) {
                for k in (0..n1).filter(|&k| s[h] == t[k]) {
                    if c(c(g, h), k) != c(g, c(h, k)) {
                        return bad(format!("axiom 2: associativity fails at ({g}, {h}, {k})"));
                    }
                }
            }
        }
        for (o, &e) in self.identities.iter().enumerate() {
            if s[e] != o || t[e] != o {
                return bad(format!(
                    "axiom 3: identity of object {o} is not a loop at {o}"
                ));
            }
        }
        for g in 0..n1 {
            if c(g, self.identities[s[g]]) != g || c(self.identities[t[g]], g) != g {
                return bad(format!("axiom 3: unit law fails for morphism {g}"));
            }
            let inv = self.inverses[g];
            if s[inv] != t[g] || t[inv] != s[g] {
                return bad(format!("axiom 4: inverse of {g} has the wrong endpoints"));
            }
            if c(g, inv) != self.identities[t[g]] || c(inv, g) != self.identities[s[g]] {
                return bad(format!("axiom 4: inverse law fails for morphism {g}"));
            }
        }
        Ok(())
    }

    /// One-object groupoid of a group.
    pub fn from_group(g: &FiniteGroup) -> Self {
        FiniteGroupoid::transitive(1, g)
    }

    /// `k` objects and only identity morphisms.
    pub fn trivial(k: usize) -> Self {
        FiniteGroupoid::disjoint_union_all(&vec![
            FiniteGroupoid::transitive(
                1,
                &FiniteGroup::cyclic(1)
            );
            k
        ])
    }

    /// The connected groupoid `Pair(k) × G`: one morphism `(t, s, h)` from
    /// `s` to `t` for each `h ∈ G`.
    pub fn transitive(k: usize, g: &FiniteGroup) -> Self {
        let m = g.size();
        let idx = |t: usize, s: usize, h: usize| (t * k + s) * m + h;
        let n1 = k * k * m;
        let mut source = vec![0; n1];
        let mut target = vec![0; n1];
        let mut inverses = vec![0; n1];
        let mut compose = vec![vec![None; n1]; n1];
        for t in 0..k {
            for s in 0..k {
                for h in 0..m {
                    let a = idx(t, s, h);
                    source[a] = s;
                    target[a] = t;
                    inverses[a] = idx(s, t, g.inverse(h));
                    for s2 in 0..k {
                        for h2 in 0..m {
                            compose[a][idx(s, s2, h2)] = Some(idx(t, s2, g.mul(h, h2)));
                        }
                    }
                }
            }
        }
        FiniteGroupoid {
            objects: k,
            morphisms: n1,
            source,
            target,
            compose,
            identities: (0..k).map(|o| idx(o, o, g.identity())).collect(),
            inverses,
        }
    }

    pub fn disjoint_union(&self, other: &FiniteGroupoid) -> FiniteGroupoid {
        FiniteGroupoid::disjoint_union_all(&[self.clone(), other.clone()])
    }

    pub fn disjoint_union_all(parts: &[FiniteGroupoid]) -> FiniteGroupoid {
        let objects = parts.iter().map(|p| p.objects).sum();
        let morphisms = parts.iter().map(|p| p.morphisms).sum();
        let mut out = FiniteGroupoid {
            objects,
            morphisms,
            source: Vec::with_capacity(morphisms),
            target: Vec::with_capacity(morphisms),
            compose: vec![vec![None; morphisms]; morphisms],
            identities: Vec::with_capacity(objects),
            inverses: Vec::with_capacity(morphisms),
        };
        let (mut o0, mut m0) = (0, 0);
        for p in parts {
            out.source.extend(p.source.iter().map(|o| o + o0));
            out.target.extend(p.target.iter().map(|o| o + o0));
            out.identities.extend(p.identities.iter().map(|g| g + m0));
            out.inverses.extend(p.inverses.iter().map(|g| g + m0));
            for g in 0..p.morphisms {
                for h in 0..p.morphisms {
                    out.compose[m0 + g][m0 + h] = p.compose[g][h].map(|gh| gh + m0);
                }
            }
            o0 += p.objects;
            m0 += p.morphisms;
        }
        out
    }

    /// Every section of the target map.
    pub fn sections(&self) -> Vec<Section> {
        let fibres: Vec<Vec<usize>> = (0..self.objects)
            .map(|o| {
                (0..self.morphisms)
                    .filter(|&g| self.target[g] == o)
                    .collect()
            })
            .collect();
        let mut out = vec![Vec::new()];
        for fibre in &fibres {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<usize>| {
                    fibre.iter().map(move |&g| {
                        let mut p = prefix.clone();
                        p.push(g);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(|sigma| Section { sigma }).collect()
    }

    /// Sections of `t` whose composite with `s` is a bijection; exactly
    /// these give a nondegenerate twisted counit.
    pub fn bisections(&self) -> Vec<Section> {
        self.sections()
            .into_iter()
            .filter(|s| s.is_bisection(self))
            .collect()
    }
}

/// A section `σ : G₀ -> G₁` of the target map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub sigma: Vec<usize>,
}

impl Section {
    pub fn validate(&self, gpd: &FiniteGroupoid) -> Result<()> {
        if self.sigma.len() != gpd.objects {
            return Err(Error::Groupoid(
                "section must have one entry per object".into(),
            ));
        }
        for (o, &g) in self.sigma.iter().enumerate() {
            if g >= gpd.morphisms || gpd.target[g] != o {
                return Err(Error::Groupoid(format!(
                    "σ({o}) = {g} does not have target {o}"
                )));
            }
        }
        Ok(())
    }

    /// `s ∘ σ` is a bijection of the objects. For a fixed `h`, the `g` with
    /// `g·h ∈ σ(G₀)` correspond to objects `o` with `s(σ(o)) = s(h)`, so the
    /// pairing has one entry per column only in this case.
    pub fn is_bisection(&self, gpd: &FiniteGroupoid) -> bool {
        let mut hit = vec![false; gpd.objects];
        for &g in &self.sigma {
            hit[gpd.source[g]] = true;
        }
        hit.into_iter().all(|b| b)
    }
}

/// `X = G₁`, `η = e(G₀)`, `μ̃(g, h) = {g·h}`, `ε = σ(G₀)` (`σ = e` without a twist).
pub fn groupoid_to_frobenius(gpd: &FiniteGroupoid, twist: Option<&Section>) -> Result<FrobObject> {
    gpd.validate()?;
    let sigma = match twist {
        Some(s) => {
            s.validate(gpd)?;
            if !s.is_bisection(gpd) {
                return Err(Error::Groupoid(format!(
                    "twisted counit {:?} is not nondegenerate: s∘σ is not a bijection of the objects",
                    s.sigma
                )));
            }
            s.sigma.clone()
        }
        None => gpd.identities.clone(),
    };
    let n = gpd.morphisms;
    if n > ElemSet::MAX_CARRIER {
        return Err(Error::CarrierTooLarge(n, ElemSet::MAX_CARRIER));
    }
    let mul = gpd
        .compose
        .iter()
        .flatten()
        .map(|c| c.map_or(ElemSet::EMPTY, ElemSet::singleton))
        .collect();
    let data = FrobData::new(
        FinSet::new(n),
        gpd.identities.iter().copied().collect(),
        sigma.iter().copied().collect(),
        mul,
    )?;
    let obj = verify(&data)
        .map_err(|r| Error::Groupoid(format!("construction failed to verify: {r}")))?;
    for g in 0..n {
        let predicted = gpd.compose[gpd.inverses[g]][sigma[gpd.target[g]]]
            .expect("g⁻¹ · σ(t(g)) is composable");
        if obj.alpha(g) != predicted {
            return Err(Error::Groupoid(format!(
                "nondegeneracy partner of {g} is {}, expected g⁻¹·σ(t(g)) = {predicted}",
                obj.alpha(g)
            )));
        }
    }
    Ok(obj)
}

/// One-object specialization with counit `{ω}`.
pub fn group_to_frobenius(grp: &FiniteGroup, omega: usize) -> Result<FrobObject> {
    if omega >= grp.size() {
        return Err(Error::Group(format!(
            "ω = {omega} is not an element of {}",
            grp.name()
        )));
    }
    groupoid_to_frobenius(
        &FiniteGroupoid::from_group(grp),
        Some(&Section { sigma: vec![omega] }),
    )
}

/// Carrier = conjugacy classes, `η = ε = {[e]}`,
/// `μ̃(C₁, C₂) = {[g₁g₂] | g₁ ∈ C₁, g₂ ∈ C₂}`.
pub fn conjugacy_classes_to_frobenius(grp: &FiniteGroup) -> Result<FrobObject> {
    let classes = grp.conjugacy_classes();
    let k = classes.len();
    if k > ElemSet::MAX_CARRIER {
        return Err(Error::CarrierTooLarge(k, ElemSet::MAX_CARRIER));
    }
    let mut class_of = vec![0; grp.size()];
    for (i, c) in classes.iter().enumerate() {
        for &g in c {
            class_of[g] = i;
        }
    }
    // Inverses of a class must form a class.
    for c in &classes {
        let mut inv: Vec<usize> = c.iter().map(|&g| grp.inverse(g)).collect();
        inv.sort_unstable();
        if inv != classes[class_of[inv[0]]] {
            return Err(Error::Group(format!(
                "inverses of class {c:?} do not form a class"
            )));
        }
    }
    let mut mul = vec![ElemSet::EMPTY; k * k];
    for (i, c1) in classes.iter().enumerate() {
        for (j, c2) in classes.iter().enumerate() {
            mul[i * k + j] = c1
                .iter()
                .flat_map(|&a| c2.iter().map(move |&b| (a, b)))
                .map(|(a, b)| class_of[grp.mul(a, b)])
                .collect();
        }
    }
    let e = ElemSet::singleton(class_of[grp.identity()]);
    let data = FrobData::new(FinSet::new(k), e, e, mul)?;
    let obj =
        verify(&data).map_err(|r| Error::Group(format!("class object failed to verify: {r}")))?;
    for (i, c) in classes.iter().enumerate() {
        if obj.alpha(i) != class_of[grp.inverse(c[0])] {
            return Err(Error::Group(format!(
                "α̂ of class {i} is not the inverse class"
            )));
        }
    }
    Ok(obj)
}

/// A named construction, used to annotate census members.
#[derive(Clone, Debug)]
pub struct Construction {
    pub name: String,
    pub object: FrobObject,
}

fn builtin_groups(max_order: usize) -> Vec<FiniteGroup> {
    let mut gs: Vec<FiniteGroup> = (1..=max_order).map(FiniteGroup::cyclic).collect();
    for name in ["V4", "S3", "D4", "Q8", "D5", "D6", "S4"] {
        let g = FiniteGroup::by_name(name).expect("built-in group");
        if g.size() <= max_order {
            gs.push(g);
        }
    }
    gs
}

fn groupoid_name(parts: &[(usize, &FiniteGroup)]) -> String {
    parts
        .iter()
        .map(|&(k, g)| match (k, g.size()) {
            (1, 1) => "1".to_string(),
            (1, _) => g.name().to_string(),
            (k, 1) => format!("Pair{k}"),
            (k, _) => format!("Pair{k}×{}", g.name()),
        })
        .collect::<Vec<_>>()
        .join(" ⊔ ")
}

/// Groupoids with exactly `n` morphisms, as multisets of connected
/// components `Pair(k) × G` over the built-in groups.
fn groupoid_shapes(n: usize, groups: &[FiniteGroup]) -> Vec<Vec<(usize, usize)>> {
    // components as (k, group index) with size k²|G|, listed in a fixed order
    let comps: Vec<(usize, usize, usize)> = (1..=n)
        .flat_map(|k| {
            groups
                .iter()
                .enumerate()
                .filter(move |(_, g)| k * k * g.size() <= n)
                .map(move |(gi, g)| (k, gi, k * k * g.size()))
        })
        .collect();
    fn rec(
        comps: &[(usize, usize, usize)],
        start: usize,
        left: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for (i, &(k, gi, sz)) in comps.iter().enumerate().skip(start) {
            if sz <= left {
                cur.push((k, gi));
                rec(comps, i, left - sz, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&comps, 0, n, &mut Vec::new(), &mut out);
    out
}

/// Known constructions on a carrier of `n` elements: groups with every
/// counit, groupoids with every twist, and conjugacy-class objects.
pub fn catalog(n: usize) -> Vec<Construction> {
    let mut out = Vec::new();
    let groups = builtin_groups(n.max(1));
    for shape in groupoid_shapes(n, &groups) {
        let parts: Vec<(usize, &FiniteGroup)> =
            shape.iter().map(|&(k, gi)| (k, &groups[gi])).collect();
        let gpd = FiniteGroupoid::disjoint_union_all(
            &parts
                .iter()
                .map(|&(k, g)| FiniteGroupoid::transitive(k, g))
                .collect::<Vec<_>>(),
        );
        let base = groupoid_name(&parts);
        let label = if parts.len() == 1 && parts[0].0 == 1 {
            "group"
        } else {
            "groupoid"
        };
        for sec in gpd.bisections() {
            let twisted = sec.sigma != gpd.identities;
            let name = if twisted {
                format!("{label} {base}, counit {:?}", sec.sigma)
            } else {
                format!("{label} {base}")
            };
            if let Ok(object) = groupoid_to_frobenius(&gpd, Some(&sec)) {
                out.push(Construction { name, object });
            }
        }
    }
    for g in builtin_groups(24) {
        if g.conjugacy_classes().len() == n && !g.is_abelian() {
            if let Ok(object) = conjugacy_classes_to_frobenius(&g) {
                out.push(Construction {
                    name: format!("conjugacy classes of {}", g.name()),
                    object,
                });
            }
        }
    }
    out
}
