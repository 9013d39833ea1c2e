//! Evidence terms (witnesses) and their binding structure.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CaptureError, ParseError};
pub use crate::names::EvidenceVar;
use crate::syntax;

/// Provenance carried by an atomic witness (who, where, when, how). Opaque to the logic.
pub type Payload = BTreeMap<String, String>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Evidence {
    /// Ground evidence. An empty payload means "no provenance attached".
    Atom { name: String, payload: Payload },
    Var(EvidenceVar),
    Pair(Box<Evidence>, Box<Evidence>),
    /// `i(e)`, the left disjunct tag.
    TagLeft(Box<Evidence>),
    /// `j(e)`, the right disjunct tag.
    TagRight(Box<Evidence>),
    Lambda(EvidenceVar, Box<Evidence>),
    App(Box<Evidence>, Box<Evidence>),
    Cases {
        scrutinee: Box<Evidence>,
        left: (EvidenceVar, Box<Evidence>),
        right: (EvidenceVar, Box<Evidence>),
    },
    Split {
        scrutinee: Box<Evidence>,
        left: EvidenceVar,
        right: EvidenceVar,
        body: Box<Evidence>,
    },
}

impl Evidence {
    pub fn atom(name: impl Into<String>) -> Evidence {
        Evidence::Atom {
            name: name.into(),
            payload: Payload::new(),
        }
    }

    /// Panics if `name` is not an identifier.
    pub fn var(name: &str) -> Evidence {
        Evidence::Var(EvidenceVar::new(name).expect("invalid variable name"))
    }

    pub fn pair(a: Evidence, b: Evidence) -> Evidence {
        Evidence::Pair(Box::new(a), Box::new(b))
    }

    pub fn tag_left(e: Evidence) -> Evidence {
        Evidence::TagLeft(Box::new(e))
    }

    pub fn tag_right(e: Evidence) -> Evidence {
        Evidence::TagRight(Box::new(e))
    }

    pub fn lambda(var: EvidenceVar, body: Evidence) -> Evidence {
        Evidence::Lambda(var, Box::new(body))
    }

    pub fn app(f: Evidence, arg: Evidence) -> Evidence {
        Evidence::App(Box::new(f), Box::new(arg))
    }

    pub fn cases(
        scrutinee: Evidence,
        left: (EvidenceVar, Evidence),
        right: (EvidenceVar, Evidence),
    ) -> Evidence {
        Evidence::Cases {
            scrutinee: Box::new(scrutinee),
            left: (left.0, Box::new(left.1)),
            right: (right.0, Box::new(right.1)),
        }
    }

    pub fn split(scrutinee: Evidence, left: EvidenceVar, right: EvidenceVar, body: Evidence) -> Evidence {
        Evidence::Split {
            scrutinee: Box::new(scrutinee),
            left,
            right,
            body: Box::new(body),
        }
    }

    /// Introduction forms only at the root (`App`, `Cases`, `Split` are non-canonical).
    pub fn is_canonical_head(&self) -> bool {
        !matches!(self, Evidence::App(..) | Evidence::Cases { .. } | Evidence::Split { .. })
    }

    /// No non-canonical constructor anywhere in the term.
    pub fn is_canonical(&self) -> bool {
        match self {
            Evidence::Atom { .. } | Evidence::Var(_) => true,
            Evidence::Pair(a, b) => a.is_canonical() && b.is_canonical(),
            Evidence::TagLeft(a) | Evidence::TagRight(a) | Evidence::Lambda(_, a) => a.is_canonical(),
            Evidence::App(..) | Evidence::Cases { .. } | Evidence::Split { .. } => false,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Evidence::Atom { .. } | Evidence::Var(_) => 1,
            Evidence::Pair(a, b) | Evidence::App(a, b) => 1 + a.size() + b.size(),
            Evidence::TagLeft(a) | Evidence::TagRight(a) | Evidence::Lambda(_, a) => 1 + a.size(),
            Evidence::Cases { scrutinee, left, right } => 1 + scrutinee.size() + left.1.size() + right.1.size(),
            Evidence::Split { scrutinee, body, .. } => 1 + scrutinee.size() + body.size(),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<EvidenceVar> {
        let mut out = BTreeSet::new();
        collect_free(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn has_free(&self, v: &EvidenceVar) -> bool {
        match self {
            Evidence::Atom { .. } => false,
            Evidence::Var(x) => x == v,
            Evidence::Pair(a, b) | Evidence::App(a, b) => a.has_free(v) || b.has_free(v),
            Evidence::TagLeft(a) | Evidence::TagRight(a) => a.has_free(v),
            Evidence::Lambda(x, b) => x != v && b.has_free(v),
            Evidence::Cases { scrutinee, left, right } => {
                scrutinee.has_free(v)
                    || (&left.0 != v && left.1.has_free(v))
                    || (&right.0 != v && right.1.has_free(v))
            }
            Evidence::Split { scrutinee, left, right, body } => {
                scrutinee.has_free(v) || (left != v && right != v && body.has_free(v))
            }
        }
    }

    /// Whether `v` is bound by some binder anywhere inside this term.
    pub fn binds(&self, v: &EvidenceVar) -> bool {
        match self {
            Evidence::Atom { .. } | Evidence::Var(_) => false,
            Evidence::Pair(a, b) | Evidence::App(a, b) => a.binds(v) || b.binds(v),
            Evidence::TagLeft(a) | Evidence::TagRight(a) => a.binds(v),
            Evidence::Lambda(x, b) => x == v || b.binds(v),
            Evidence::Cases { scrutinee, left, right } => {
                scrutinee.binds(v) || &left.0 == v || &right.0 == v || left.1.binds(v) || right.1.binds(v)
            }
            Evidence::Split { scrutinee, left, right, body } => {
                scrutinee.binds(v) || left == v || right == v || body.binds(v)
            }
        }
    }
}

fn collect_free<'a>(e: &'a Evidence, bound: &mut Vec<&'a EvidenceVar>, out: &mut BTreeSet<EvidenceVar>) {
    match e {
        Evidence::Atom { .. } => {}
        Evidence::Var(x) => {
            if !bound.contains(&x) {
                out.insert(x.clone());
            }
        }
        Evidence::Pair(a, b) | Evidence::App(a, b) => {
            collect_free(a, bound, out);
            collect_free(b, bound, out);
        }
        Evidence::TagLeft(a) | Evidence::TagRight(a) => collect_free(a, bound, out),
        Evidence::Lambda(x, b) => {
            bound.push(x);
            collect_free(b, bound, out);
            bound.pop();
        }
        Evidence::Cases { scrutinee, left, right } => {
            collect_free(scrutinee, bound, out);
            for (x, d) in [left, right] {
                bound.push(x);
                collect_free(d, bound, out);
                bound.pop();
            }
        }
        Evidence::Split { scrutinee, left, right, body } => {
            collect_free(scrutinee, bound, out);
            bound.push(left);
            bound.push(right);
            collect_free(body, bound, out);
            bound.truncate(bound.len() - 2);
        }
    }
}

/// Free variables of `e`.
pub fn free_vars(e: &Evidence) -> BTreeSet<EvidenceVar> {
    e.free_vars()
}

/// Replaces the free occurrences of `v` in `body` by `value`.
///
/// Never renames: if a binder inside `body` would capture a free variable of
/// `value` at a substitution site, the result is a [`CaptureError`].
pub fn substitute(body: &Evidence, v: &EvidenceVar, value: &Evidence) -> Result<Evidence, CaptureError> {
    let value_fv = value.free_vars();
    subst(body, v, value, &value_fv)
}

fn subst(
    e: &Evidence,
    v: &EvidenceVar,
    value: &Evidence,
    value_fv: &BTreeSet<EvidenceVar>,
) -> Result<Evidence, CaptureError> {
    if !e.has_free(v) {
        return Ok(e.clone());
    }
    let go = |t: &Evidence| subst(t, v, value, value_fv).map(Box::new);
    let under = |binder: &EvidenceVar, t: &Evidence| -> Result<Box<Evidence>, CaptureError> {
        if binder == v || !t.has_free(v) {
            return Ok(Box::new(t.clone()));
        }
        if value_fv.contains(binder) {
            return Err(CaptureError {
                var: v.clone(),
                binder: binder.clone(),
            });
        }
        go(t)
    };
    Ok(match e {
        Evidence::Var(_) => value.clone(),
        Evidence::Atom { .. } => e.clone(),
        Evidence::Pair(a, b) => Evidence::Pair(go(a)?, go(b)?),
        Evidence::App(a, b) => Evidence::App(go(a)?, go(b)?),
        Evidence::TagLeft(a) => Evidence::TagLeft(go(a)?),
        Evidence::TagRight(a) => Evidence::TagRight(go(a)?),
        Evidence::Lambda(x, b) => Evidence::Lambda(x.clone(), under(x, b)?),
        Evidence::Cases { scrutinee, left, right } => Evidence::Cases {
            scrutinee: go(scrutinee)?,
            left: (left.0.clone(), under(&left.0, &left.1)?),
            right: (right.0.clone(), under(&right.0, &right.1)?),
        },
        Evidence::Split { scrutinee, left, right, body } => {
            let body = if left == v || right == v || !body.has_free(v) {
                body.clone()
            } else if let Some(b) = [left, right].into_iter().find(|b| value_fv.contains(*b)) {
                return Err(CaptureError {
                    var: v.clone(),
                    binder: b.clone(),
                });
            } else {
                go(body)?
            };
            Evidence::Split {
                scrutinee: go(scrutinee)?,
                left: left.clone(),
                right: right.clone(),
                body,
            }
        }
    })
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&syntax::print_evidence(self))
    }
}

impl FromStr for Evidence {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        syntax::parse_evidence(s)
    }
}

impl Serialize for Evidence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Evidence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> EvidenceVar {
        EvidenceVar::new(s).unwrap()
    }

    #[test]
    fn free_vars_examples() {
        assert_eq!(free_vars(&Evidence::var("x")), BTreeSet::from([v("x")]));
        assert!(free_vars(&Evidence::lambda(v("x"), Evidence::var("x"))).is_empty());
        // x free on the left; inside the lambda x is bound but y is not.
        let e = Evidence::pair(
            Evidence::var("x"),
            Evidence::lambda(v("x"), Evidence::pair(Evidence::var("x"), Evidence::var("y"))),
        );
        assert_eq!(free_vars(&e), BTreeSet::from([v("x"), v("y")]));
    }

    #[test]
    fn binders_of_cases_and_split() {
        let e = Evidence::cases(
            Evidence::var("c"),
            (v("x"), Evidence::var("x")),
            (v("y"), Evidence::var("z")),
        );
        assert_eq!(free_vars(&e), BTreeSet::from([v("c"), v("z")]));
        let s = Evidence::split(
            Evidence::var("p"),
            v("x"),
            v("y"),
            Evidence::pair(Evidence::var("y"), Evidence::var("w")),
        );
        assert_eq!(free_vars(&s), BTreeSet::from([v("p"), v("w")]));
    }

    #[test]
    fn substitute_examples() {
        let e = Evidence::atom("e");
        assert_eq!(substitute(&Evidence::var("x"), &v("x"), &e).unwrap(), e);
        let id = Evidence::lambda(v("x"), Evidence::var("x"));
        assert_eq!(substitute(&id, &v("x"), &e).unwrap(), id);
        let body = Evidence::pair(Evidence::var("x"), Evidence::lambda(v("y"), Evidence::var("x")));
        assert_eq!(
            substitute(&body, &v("x"), &e).unwrap(),
            Evidence::pair(e.clone(), Evidence::lambda(v("y"), e.clone()))
        );
    }

    #[test]
    fn capture_is_reported_not_renamed() {
        let body = Evidence::lambda(v("y"), Evidence::var("x"));
        let err = substitute(&body, &v("x"), &Evidence::var("y")).unwrap_err();
        assert_eq!(err.binder, v("y"));
        // No occurrence under the binder: nothing to capture.
        let body = Evidence::pair(Evidence::var("x"), Evidence::lambda(v("y"), Evidence::var("y")));
        assert!(substitute(&body, &v("x"), &Evidence::var("y")).is_ok());
    }

    #[test]
    fn binds_sees_inner_binders() {
        let b = Evidence::pair(Evidence::var("x"), Evidence::lambda(v("x"), Evidence::var("x")));
        assert!(b.binds(&v("x")));
        assert!(!b.binds(&v("y")));
    }
}
