//! Computation rules for non-canonical evidence.
//!
//! ```text
//! app(\x. b, a)              ~> b[a/x]
//! cases(i(a), (x) d, (y) e)  ~> d[a/x]
//! cases(j(b), (x) d, (y) e)  ~> e[b/y]
//! split((a, b), (x, y) d)    ~> d[a/x][b/y]
//! ```

use crate::error::{CaptureError, NormalizeError};
use crate::evidence::{substitute, Evidence};

/// Where the next redex is looked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Leftmost-innermost; the default.
    Innermost,
    /// Leftmost-outermost.
    Outermost,
}

/// Contracts `e` if it is itself a redex.
pub fn contract(e: &Evidence) -> Result<Option<Evidence>, CaptureError> {
    match e {
        Evidence::App(f, a) => match &**f {
            Evidence::Lambda(x, b) => substitute(b, x, a).map(Some),
            _ => Ok(None),
        },
        Evidence::Cases { scrutinee, left, right } => match &**scrutinee {
            Evidence::TagLeft(a) => substitute(&left.1, &left.0, a).map(Some),
            Evidence::TagRight(b) => substitute(&right.1, &right.0, b).map(Some),
            _ => Ok(None),
        },
        Evidence::Split {
            scrutinee,
            left,
            right,
            body,
        } => match &**scrutinee {
            Evidence::Pair(a, b) => {
                let once = substitute(body, left, a)?;
                substitute(&once, right, b).map(Some)
            }
            _ => Ok(None),
        },
        _ => Ok(None),
    }
}

/// One leftmost-innermost contraction, or `None` when `e` is normal.
pub fn reduce_step(e: &Evidence) -> Result<Option<Evidence>, CaptureError> {
    reduce_step_with(e, Strategy::Innermost)
}

pub fn reduce_step_with(e: &Evidence, strategy: Strategy) -> Result<Option<Evidence>, CaptureError> {
    if strategy == Strategy::Outermost {
        if let Some(r) = contract(e)? {
            return Ok(Some(r));
        }
    }
    if let Some(r) = reduce_children(e, strategy)? {
        return Ok(Some(r));
    }
    match strategy {
        Strategy::Innermost => contract(e),
        Strategy::Outermost => Ok(None),
    }
}

fn reduce_children(e: &Evidence, s: Strategy) -> Result<Option<Evidence>, CaptureError> {
    let step = |t: &Evidence| reduce_step_with(t, s);
    Ok(match e {
        Evidence::Atom { .. } | Evidence::Var(_) => None,
        Evidence::Pair(a, b) | Evidence::App(a, b) => {
            let rebuild = |a: Evidence, b: Evidence| match e {
                Evidence::Pair(..) => Evidence::pair(a, b),
                _ => Evidence::app(a, b),
            };
            if let Some(a2) = step(a)? {
                Some(rebuild(a2, (**b).clone()))
            } else {
                step(b)?.map(|b2| rebuild((**a).clone(), b2))
            }
        }
        Evidence::TagLeft(a) => step(a)?.map(Evidence::tag_left),
        Evidence::TagRight(a) => step(a)?.map(Evidence::tag_right),
        Evidence::Lambda(x, b) => step(b)?.map(|b2| Evidence::lambda(x.clone(), b2)),
        Evidence::Cases { scrutinee, left, right } => {
            if let Some(c) = step(scrutinee)? {
                Some(Evidence::Cases {
                    scrutinee: Box::new(c),
                    left: left.clone(),
                    right: right.clone(),
                })
            } else if let Some(d) = step(&left.1)? {
                Some(Evidence::Cases {
                    scrutinee: scrutinee.clone(),
                    left: (left.0.clone(), Box::new(d)),
                    right: right.clone(),
                })
            } else {
                step(&right.1)?.map(|d| Evidence::Cases {
                    scrutinee: scrutinee.clone(),
                    left: left.clone(),
                    right: (right.0.clone(), Box::new(d)),
                })
            }
        }
        Evidence::Split {
            scrutinee,
            left,
            right,
            body,
        } => {
            if let Some(c) = step(scrutinee)? {
                Some(Evidence::Split {
                    scrutinee: Box::new(c),
                    left: left.clone(),
                    right: right.clone(),
                    body: body.clone(),
                })
            } else {
                step(body)?.map(|d| Evidence::Split {
                    scrutinee: scrutinee.clone(),
                    left: left.clone(),
                    right: right.clone(),
                    body: Box::new(d),
                })
            }
        }
    })
}

/// Reduces to normal form with at most `fuel` contractions, returning the step count too.
pub fn normalize_counting(e: &Evidence, fuel: usize, strategy: Strategy) -> Result<(Evidence, usize), NormalizeError> {
    let mut cur = e.clone();
    for steps in 0..=fuel {
        match reduce_step_with(&cur, strategy)? {
            None => return Ok((cur, steps)),
            Some(_) if steps == fuel => break,
            Some(next) => cur = next,
        }
    }
    Err(NormalizeError::FuelExhausted { last: cur })
}

/// Leftmost-innermost normal form of `e`.
pub fn normalize(e: &Evidence, fuel: usize) -> Result<Evidence, NormalizeError> {
    normalize_counting(e, fuel, Strategy::Innermost).map(|(t, _)| t)
}

/// Whether both terms have the same normal form.
pub fn evidence_equal(e1: &Evidence, e2: &Evidence, fuel: usize) -> Result<bool, NormalizeError> {
    Ok(normalize(e1, fuel)? == normalize(e2, fuel)?)
}
