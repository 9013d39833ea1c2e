use std::fmt::Write;

use crate::claim::Claim;
use crate::evidence::{Evidence, EvidenceVar, Payload};
use crate::judgement::Judgement;

fn prec(c: &Claim) -> u8 {
    match c {
        Claim::Implies(..) => 1,
        Claim::Or(..) => 2,
        Claim::And(..) => 3,
        Claim::Atomic(_) | Claim::Bottom => 4,
    }
}

/// Prints a claim with the fewest parentheses that re-parse to the same tree.
pub fn print_claim(c: &Claim) -> String {
    let mut out = String::new();
    write_claim(&mut out, c, 0);
    out
}

fn write_claim(out: &mut String, c: &Claim, min: u8) {
    let paren = prec(c) < min;
    if paren {
        out.push('(');
    }
    match c {
        Claim::Atomic(name) => out.push_str(name),
        Claim::Bottom => out.push_str("_|_"),
        Claim::And(l, r) => {
            write_claim(out, l, 3);
            out.push_str(" /\\ ");
            write_claim(out, r, 4);
        }
        Claim::Or(l, r) => {
            write_claim(out, l, 2);
            out.push_str(" \\/ ");
            write_claim(out, r, 3);
        }
        Claim::Implies(l, r) => {
            write_claim(out, l, 2);
            out.push_str(" -> ");
            write_claim(out, r, 1);
        }
    }
    if paren {
        out.push(')');
    }
}

/// Prints evidence so that it re-parses to the same term.
///
/// Bound variables print bare and free ones as `?x`. An atom prints with braces
/// when it carries a payload or when a binder in scope shares its name.
pub fn print_evidence(e: &Evidence) -> String {
    let mut out = String::new();
    write_evidence(&mut out, e, &mut Vec::new());
    out
}

fn write_evidence<'a>(out: &mut String, e: &'a Evidence, scope: &mut Vec<&'a EvidenceVar>) {
    match e {
        Evidence::Atom { name, payload } => {
            out.push_str(name);
            if !payload.is_empty() || scope.iter().any(|v| v.as_str() == name) {
                write_payload(out, payload);
            }
        }
        Evidence::Var(v) => {
            if !scope.contains(&v) {
                out.push('?');
            }
            out.push_str(v.as_str());
        }
        Evidence::Pair(a, b) => {
            out.push('(');
            write_evidence(out, a, scope);
            out.push_str(", ");
            write_evidence(out, b, scope);
            out.push(')');
        }
        Evidence::TagLeft(a) => {
            out.push_str("i(");
            write_evidence(out, a, scope);
            out.push(')');
        }
        Evidence::TagRight(a) => {
            out.push_str("j(");
            write_evidence(out, a, scope);
            out.push(')');
        }
        Evidence::Lambda(x, body) => {
            let _ = write!(out, "\\{x}. ");
            scope.push(x);
            write_evidence(out, body, scope);
            scope.pop();
        }
        Evidence::App(f, a) => {
            out.push_str("app(");
            write_evidence(out, f, scope);
            out.push_str(", ");
            write_evidence(out, a, scope);
            out.push(')');
        }
        Evidence::Cases { scrutinee, left, right } => {
            out.push_str("cases(");
            write_evidence(out, scrutinee, scope);
            for (x, d) in [left, right] {
                let _ = write!(out, ", ({x}) ");
                scope.push(x);
                write_evidence(out, d, scope);
                scope.pop();
            }
            out.push(')');
        }
        Evidence::Split { scrutinee, left, right, body } => {
            out.push_str("split(");
            write_evidence(out, scrutinee, scope);
            let _ = write!(out, ", ({left}, {right}) ");
            scope.push(left);
            scope.push(right);
            write_evidence(out, body, scope);
            scope.truncate(scope.len() - 2);
            out.push(')');
        }
    }
}

fn write_payload(out: &mut String, payload: &Payload) {
    out.push('{');
    for (i, (k, v)) in payload.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(k);
        out.push_str("=\"");
        for ch in v.chars() {
            match ch {
                '"' => out.push_str("\\\""),
                '\\' => out.push_str("\\\\"),
                '\n' => out.push_str("\\n"),
                c => out.push(c),
            }
        }
        out.push('"');
    }
    out.push('}');
}

pub fn print_judgement(j: &Judgement) -> String {
    let mut out = print_evidence(&j.evidence);
    let _ = write!(out, " ^ {}", j.actor);
    if !j.weight.is_one() {
        let _ = write!(out, " @ {}", j.weight);
    }
    let _ = write!(out, " in {}", print_claim(&j.claim));
    out
}
