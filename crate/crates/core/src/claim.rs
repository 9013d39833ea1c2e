//! Claims: the propositions that evidence supports.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;
use crate::syntax;

/// A claim over atomic claims. Negation is `Implies(a, Bottom)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Atomic(String),
    Bottom,
    And(Box<Claim>, Box<Claim>),
    Or(Box<Claim>, Box<Claim>),
    Implies(Box<Claim>, Box<Claim>),
}

impl Claim {
    pub fn atom(name: impl Into<String>) -> Claim {
        Claim::Atomic(name.into())
    }

    pub fn and(left: Claim, right: Claim) -> Claim {
        Claim::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Claim, right: Claim) -> Claim {
        Claim::Or(Box::new(left), Box::new(right))
    }

    pub fn implies(antecedent: Claim, consequent: Claim) -> Claim {
        Claim::Implies(Box::new(antecedent), Box::new(consequent))
    }

    pub fn not(claim: Claim) -> Claim {
        Claim::implies(claim, Claim::Bottom)
    }

    /// Number of binary connectives.
    pub fn connectives(&self) -> usize {
        match self {
            Claim::Atomic(_) | Claim::Bottom => 0,
            Claim::And(l, r) | Claim::Or(l, r) | Claim::Implies(l, r) => {
                1 + l.connectives() + r.connectives()
            }
        }
    }

    /// Pre-order list of all subclaims, including `self`.
    pub fn subclaims(&self) -> Vec<&Claim> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(c) = stack.pop() {
            out.push(c);
            if let Claim::And(l, r) | Claim::Or(l, r) | Claim::Implies(l, r) = c {
                stack.push(r);
                stack.push(l);
            }
        }
        out
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&syntax::print_claim(self))
    }
}

impl FromStr for Claim {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        syntax::parse_claim(s)
    }
}

impl Serialize for Claim {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Claim {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
