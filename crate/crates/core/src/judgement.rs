//! Judgements, assumption contexts and sequents.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use indexmap::IndexSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::claim::Claim;
use crate::error::{NotAnAssumption, ParseError};
use crate::evidence::Evidence;
pub use crate::names::ActorId;
use crate::syntax;
use crate::weight::Weight;

/// `evidence^actor_weight ∈ claim`
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Judgement {
    pub evidence: Evidence,
    pub actor: ActorId,
    pub weight: Weight,
    pub claim: Claim,
}

impl Judgement {
    /// A judgement at full weight.
    pub fn new(evidence: Evidence, actor: ActorId, claim: Claim) -> Self {
        Judgement {
            evidence,
            actor,
            weight: Weight::one(),
            claim,
        }
    }

    pub fn with_weight(mut self, weight: Weight) -> Self {
        self.weight = weight;
        self
    }
}

impl fmt::Display for Judgement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&syntax::print_judgement(self))
    }
}

impl FromStr for Judgement {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        syntax::parse_judgement(s)
    }
}

impl Serialize for Judgement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Judgement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Ordered, duplicate-free list of assumptions. Equality is order-sensitive.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Context(IndexSet<Judgement>);

impl Context {
    pub fn new() -> Self {
        Context(IndexSet::new())
    }

    pub fn singleton(j: Judgement) -> Self {
        let mut set = IndexSet::with_capacity(1);
        set.insert(j);
        Context(set)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: &Judgement) -> bool {
        self.0.contains(j)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Judgement> + '_ {
        self.0.iter()
    }

    /// Appends `j` unless already present.
    pub fn push(&mut self, j: Judgement) {
        self.0.insert(j);
    }

    pub fn union(&self, other: &Context) -> Context {
        ctx_union(self, other)
    }
}

impl PartialEq for Context {
    fn eq(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().eq(other.0.iter())
    }
}

impl Eq for Context {}

impl Hash for Context {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.len().hash(state);
        for j in &self.0 {
            j.hash(state);
        }
    }
}

impl FromIterator<Judgement> for Context {
    fn from_iter<I: IntoIterator<Item = Judgement>>(iter: I) -> Self {
        Context(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Context {
    type Item = &'a Judgement;
    type IntoIter = indexmap::set::Iter<'a, Judgement>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Concatenation with duplicates dropped, keeping first occurrences in order.
pub fn ctx_union(p: &Context, q: &Context) -> Context {
    let mut out = p.0.clone();
    out.reserve(q.len());
    for j in &q.0 {
        if !out.contains(j) {
            out.insert(j.clone());
        }
    }
    Context(out)
}

/// Removes `j` from `ctx`, preserving the order of the rest.
pub fn ctx_discharge(ctx: &Context, j: &Judgement) -> Result<Context, NotAnAssumption> {
    if !ctx.contains(j) {
        return Err(NotAnAssumption {
            judgement: j.to_string(),
        });
    }
    Ok(ctx.iter().filter(|k| *k != j).cloned().collect())
}

/// `assumptions ⊢ conclusion`
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sequent {
    pub assumptions: Context,
    pub conclusion: Judgement,
}

impl Sequent {
    pub fn new(assumptions: Context, conclusion: Judgement) -> Self {
        Sequent {
            assumptions,
            conclusion,
        }
    }

    /// Free evidence variables of the conclusion that no assumption accounts for.
    pub fn unbound_vars(&self) -> Vec<crate::evidence::EvidenceVar> {
        self.conclusion
            .evidence
            .free_vars()
            .into_iter()
            .filter(|v| {
                !self
                    .assumptions
                    .iter()
                    .any(|a| matches!(&a.evidence, Evidence::Var(x) if x == v))
            })
            .collect()
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.assumptions.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        if !self.assumptions.is_empty() {
            f.write_str(" ")?;
        }
        write!(f, "|- {}", self.conclusion)
    }
}
