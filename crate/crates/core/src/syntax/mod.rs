//! Concrete syntax for claims, evidence, judgements, trust relations and search
//! configurations.
//!
//! | form        | syntax                                                     |
//! |-------------|------------------------------------------------------------|
//! | claim       | `A`, `_\|_`, `A /\ B`, `A \/ B`, `A -> B`                  |
//! | evidence    | `a`, `a{who="p"}`, `?x`, `(e, f)`, `i(e)`, `j(e)`, `\x. e` |
//! | elimination | `app(f, a)`, `cases(c, (x) d, (y) e)`, `split(c, (x, y) d)` |
//! | judgement   | `e ^ k in A`, `e ^ k @ 0.5 in A`, `e ^ k @ 1/3 in A`       |
//!
//! `/\` binds tighter than `\/`, which binds tighter than `->`. The first two
//! associate to the left, `->` to the right.
//!
//! A bare name in evidence is a variable when an enclosing binder binds it and an
//! atom otherwise. `?x` forces a (free) variable and `x{}` forces an atom.

mod files;
mod lexer;
mod parser;
mod printer;

pub use files::{parse_config, parse_trust, parse_trust_relations, print_config, print_trust};
pub use printer::{print_claim, print_evidence, print_judgement};

use crate::claim::Claim;
use crate::error::ParseError;
use crate::evidence::Evidence;
use crate::judgement::Judgement;

pub fn parse_claim(text: &str) -> Result<Claim, ParseError> {
    let mut p = parser::Parser::new(text)?;
    let c = p.claim()?;
    p.finish()?;
    Ok(c)
}

pub fn parse_evidence(text: &str) -> Result<Evidence, ParseError> {
    let mut p = parser::Parser::new(text)?;
    let e = p.evidence()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_judgement(text: &str) -> Result<Judgement, ParseError> {
    let mut p = parser::Parser::new(text)?;
    let j = p.judgement()?;
    p.finish()?;
    Ok(j)
}
