//! String diagrams over a Frobenius object.
//!
//! Surface syntax, read top to bottom:
//!
//! ```text
//! diagram := layer (';' layer)*
//! layer   := gen ('*' gen)*  |  '(' layer ')'
//! gen     := id | swap | eta | eps | mu | delta | beta | alpha
//! ```
//!
//! A layer places generators side by side; `;` stacks layers vertically.
//! Evaluating a diagram on an object composes the structure relations in
//! the category of relations, giving a relation `X^in -> X^out` where `X^0`
//! is the one-point set.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::frobenius::FrobObject;
use crate::relation::Relation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Id,
    Swap,
    Eta,
    Eps,
    Mu,
    Delta,
    Beta,
    Alpha,
}

impl Generator {
    pub const ALL: [Generator; 8] = [
        Generator::Id,
        Generator::Swap,
        Generator::Eta,
        Generator::Eps,
        Generator::Mu,
        Generator::Delta,
        Generator::Beta,
        Generator::Alpha,
    ];

    /// (input wires, output wires)
    pub fn arity(self) -> (usize, usize) {
        match self {
            Generator::Id => (1, 1),
            Generator::Swap => (2, 2),
            Generator::Eta => (0, 1),
            Generator::Eps => (1, 0),
            Generator::Mu => (2, 1),
            Generator::Delta => (1, 2),
            Generator::Beta => (0, 2),
            Generator::Alpha => (1, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::Id => "id",
            Generator::Swap => "swap",
            Generator::Eta => "eta",
            Generator::Eps => "eps",
            Generator::Mu => "mu",
            Generator::Delta => "delta",
            Generator::Beta => "beta",
            Generator::Alpha => "alpha",
        }
    }

    fn relation(self, f: &FrobObject) -> Relation {
        let n = f.n();
        match self {
            Generator::Id => Relation::identity(n),
            Generator::Swap => Relation::swap(n),
            Generator::Eta => f.data().unit_relation(),
            Generator::Eps => f.data().counit_relation(),
            Generator::Mu => f.data().mul_relation(),
            Generator::Delta => f.comul_relation(),
            Generator::Beta => f.copairing_relation(),
            Generator::Alpha => f.alpha_relation(),
        }
    }
}

impl FromStr for Generator {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        Generator::ALL.into_iter().find(|g| g.name() == s).ok_or(())
    }
}

/// A well-typed diagram: adjacent layers agree on their wire counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    layers: Vec<Vec<Generator>>,
    in_arity: usize,
    out_arity: usize,
}

fn layer_arity(layer: &[Generator]) -> (usize, usize) {
    layer.iter().fold((0, 0), |(i, o), g| {
        let (gi, go) = g.arity();
        (i + gi, o + go)
    })
}

impl Diagram {
    /// Type-checks a list of layers; layer numbers in errors are 1-based.
    pub fn from_layers(layers: Vec<Vec<Generator>>) -> Result<Self> {
        if layers.is_empty() || layers.iter().any(Vec::is_empty) {
            return Err(Error::Parse {
                layer: layers.iter().position(Vec::is_empty).map_or(1, |i| i + 1),
                message: "empty layer".into(),
            });
        }
        for (k, pair) in layers.windows(2).enumerate() {
            let (_, out) = layer_arity(&pair[0]);
            let (inp, _) = layer_arity(&pair[1]);
            if out != inp {
                return Err(Error::Arity {
                    layer: k + 2,
                    expected: inp,
                    actual: out,
                });
            }
        }
        let in_arity = layer_arity(&layers[0]).0;
        let out_arity = layer_arity(layers.last().expect("nonempty")).1;
        Ok(Diagram {
            layers,
            in_arity,
            out_arity,
        })
    }

    pub fn layers(&self) -> &[Vec<Generator>] {
        &self.layers
    }

    pub fn in_arity(&self) -> usize {
        self.in_arity
    }

    pub fn out_arity(&self) -> usize {
        self.out_arity
    }

    /// The genus-`g` closed surface: `eta ; (delta ; mu)^g ; eps`.
    pub fn genus(g: usize) -> Diagram {
        let mut layers = vec![vec![Generator::Eta]];
        for _ in 0..g {
            layers.push(vec![Generator::Delta]);
            layers.push(vec![Generator::Mu]);
        }
        layers.push(vec![Generator::Eps]);
        Diagram::from_layers(layers).expect("genus word is well typed")
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, layer) in self.layers.iter().enumerate() {
            if k > 0 {
                f.write_str(" ; ")?;
            }
            for (i, g) in layer.iter().enumerate() {
                if i > 0 {
                    f.write_str(" * ")?;
                }
                f.write_str(g.name())?;
            }
        }
        Ok(())
    }
}

impl FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

pub fn parse(src: &str) -> Result<Diagram> {
    let mut layers = Vec::new();
    for (k, text) in src.split(';').enumerate() {
        let layer = k + 1;
        let mut text = text.trim();
        if let Some(inner) = text.strip_prefix('(') {
            text = inner.strip_suffix(')').ok_or_else(|| Error::Parse {
                layer,
                message: "unbalanced parenthesis".into(),
            })?;
        }
        let gens = text
            .split('*')
            .map(|tok| {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(Error::Parse {
                        layer,
                        message: "missing generator".into(),
                    });
                }
                tok.parse::<Generator>().map_err(|_| Error::Parse {
                    layer,
                    message: format!("unknown token `{tok}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        layers.push(gens);
    }
    Diagram::from_layers(layers)
}

/// Evaluates to a relation `X^in -> X^out`, composing layers top to bottom.
pub fn evaluate(d: &Diagram, f: &FrobObject) -> Relation {
    let mut cache: Vec<Option<Relation>> = vec![None; Generator::ALL.len()];
    let mut rel_of = |g: Generator| -> Relation {
        let slot = &mut cache[g as usize];
        slot.get_or_insert_with(|| g.relation(f)).clone()
    };
    let mut acc: Option<Relation> = None;
    for layer in &d.layers {
        let lr = layer
            .iter()
            .fold(Relation::identity(1), |acc, &g| acc.product(&rel_of(g)));
        acc = Some(match acc {
            None => lr,
            Some(prev) => prev.compose(&lr).expect("layers are well typed"),
        });
    }
    acc.expect("diagram has at least one layer")
}

/// Semantic equality on one object.
pub fn equal_diagrams(d1: &Diagram, d2: &Diagram, f: &FrobObject) -> Result<bool> {
    if d1.in_arity != d2.in_arity || d1.out_arity != d2.out_arity {
        return Err(Error::DiagramMismatch(
            d1.in_arity,
            d1.out_arity,
            d2.in_arity,
            d2.out_arity,
        ));
    }
    Ok(evaluate(d1, f) == evaluate(d2, f))
}

/// Named equations that every Frobenius object satisfies.
pub const AXIOM_EQUATIONS: &[(&str, &str, &str)] = &[
    ("left unitality", "eta * id ; mu", "id"),
    ("right unitality", "id * eta ; mu", "id"),
    ("associativity", "mu * id ; mu", "id * mu ; mu"),
    ("left snake", "id * beta ; mu * id ; eps * id", "id"),
    ("right snake", "beta * id ; id * mu ; id * eps", "id"),
    (
        "comultiplication from copairing",
        "beta * id ; id * mu",
        "delta",
    ),
    ("copairing", "eta ; delta", "beta"),
    ("left counitality", "delta ; eps * id", "id"),
    ("right counitality", "delta ; id * eps", "id"),
    (
        "coassociativity",
        "delta ; delta * id",
        "delta ; id * delta",
    ),
    ("Frobenius left", "delta * id ; id * mu", "mu ; delta"),
    ("Frobenius right", "id * delta ; mu * id", "mu ; delta"),
];
