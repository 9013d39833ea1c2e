#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use veracity_core::{
    apply_rule, ActorId, Claim, Evidence, EvidenceVar, Judgement, Kernel, Payload, ProofTree, RuleInstance, RuleName,
    StepConfig, TrustRelation, Weight,
};

pub fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"))
}

/// Collapses every whitespace run to one space and trims the ends.
pub fn ws(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

pub fn j(s: &str) -> Judgement {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn c(s: &str) -> Claim {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn v(s: &str) -> EvidenceVar {
    EvidenceVar::new(s).unwrap()
}

pub fn actor(s: &str) -> ActorId {
    ActorId::new(s).unwrap()
}

pub fn w(s: &str) -> Weight {
    s.parse().unwrap()
}

pub fn leaf(s: &str) -> ProofTree {
    apply_rule(RuleInstance::Assume { judgement: j(s) }, vec![]).unwrap()
}

pub fn impl_intro(x: &str, ante: &str, t: ProofTree) -> ProofTree {
    apply_rule(
        RuleInstance::ImplIntro {
            var: v(x),
            antecedent: c(ante),
        },
        vec![t],
    )
    .unwrap()
}

pub fn and_intro(l: ProofTree, r: ProofTree) -> ProofTree {
    apply_rule(RuleInstance::AndIntro, vec![l, r]).unwrap()
}

/// The proof script order: three implication introductions, two conjunction
/// introductions, three assumptions.
pub fn three_claims_tree() -> ProofTree {
    let body = and_intro(
        and_intro(leaf("?x ^ P in C1"), leaf("?y ^ P in C2")),
        leaf("?z ^ P in C3"),
    );
    impl_intro("z", "C3", impl_intro("y", "C2", impl_intro("x", "C1", body)))
}

pub fn three_claims_lexicon() -> veracity_core::Lexicon {
    let mut lex = veracity_core::Lexicon::default();
    lex.actors.insert("P".into(), "Penelope".into());
    for i in 1..=3 {
        lex.claims.insert(format!("C{i}"), format!("claim {i}"));
    }
    lex
}

pub fn chain_relation() -> TrustRelation {
    TrustRelation::new("T")
        .with_edge("k", "l", w("0.5"))
        .unwrap()
        .with_edge("l", "m", w("0.4"))
        .unwrap()
}

pub fn trust_step(kernel: &Kernel, t: ProofTree, k: &str, l: &str, weight: &str) -> ProofTree {
    kernel
        .apply(
            RuleInstance::Trust {
                relation: "T".into(),
                truster: actor(k),
                trusted: actor(l),
                weight: w(weight),
            },
            vec![t],
        )
        .unwrap()
}

/// `a ^ m in A`, then `l` trusts `m` at 0.4, then `k` trusts `l` at 0.5.
pub fn trust_chain_tree() -> (Kernel, ProofTree) {
    let kernel = Kernel::with_relations([chain_relation()]);
    let t = trust_step(&kernel, leaf("a ^ m in A"), "l", "m", "0.4");
    let t = trust_step(&kernel, t, "k", "l", "0.5");
    (kernel, t)
}

/// Peter's process example: a ground fact for the last step, with the three
/// earlier steps discharged as hypotheses.
pub fn peters_process_tree() -> ProofTree {
    let fact = leaf("l ^ Peter in L12");
    impl_intro("x", "L3", impl_intro("y", "L5 /\\ L6", impl_intro("z", "L10", fact)))
}

pub fn quad_config() -> StepConfig {
    StepConfig {
        assumables: vec![j("e ^ a1 in C"), j("e ^ a1 in C /\\ C")],
        rules: [RuleName::Assume, RuleName::AndIntro].into(),
        depth: 3,
        ..StepConfig::default()
    }
}

pub fn quad_goal() -> Judgement {
    j("e ^ a1 in (C /\\ C) /\\ (C /\\ C)")
}

// ---------------------------------------------------------------------------
// Random terms. Names are drawn from small pools so that shadowing, atoms that
// share a binder's name, and keyword-like names all turn up.

const NAMES: [&str; 9] = ["x", "y", "z", "a", "b", "i", "j", "app", "C1"];

pub fn rand_name<R: Rng>(rng: &mut R) -> &'static str {
    NAMES.choose(rng).unwrap()
}

pub fn rand_claim<R: Rng>(rng: &mut R, depth: u32) -> Claim {
    if depth == 0 || rng.gen_ratio(1, 3) {
        return if rng.gen_ratio(1, 8) {
            Claim::Bottom
        } else {
            Claim::atom(["A", "B", "C1", "L12", "in", "x"].choose(rng).unwrap().to_string())
        };
    }
    let l = rand_claim(rng, depth - 1);
    let r = rand_claim(rng, depth - 1);
    match rng.gen_range(0..3) {
        0 => Claim::and(l, r),
        1 => Claim::or(l, r),
        _ => Claim::implies(l, r),
    }
}

pub fn rand_payload<R: Rng>(rng: &mut R) -> Payload {
    let mut p = Payload::new();
    for _ in 0..rng.gen_range(0..3) {
        let key = ["who", "where", "when", "how"].choose(rng).unwrap().to_string();
        let val = ["p", "lab 7", "say \"hi\"", "a\\b", "two\nlines", ""].choose(rng).unwrap().to_string();
        p.insert(key, val);
    }
    p
}

pub fn rand_evidence<R: Rng>(rng: &mut R, depth: u32) -> Evidence {
    if depth == 0 || rng.gen_ratio(1, 4) {
        return if rng.gen_bool(0.5) {
            Evidence::Var(v(rand_name(rng)))
        } else {
            let payload = if rng.gen_ratio(1, 4) { rand_payload(rng) } else { Payload::new() };
            Evidence::Atom {
                name: rand_name(rng).to_string(),
                payload,
            }
        };
    }
    let mut sub = || rand_evidence(rng, depth - 1);
    let (a, b, cc) = (sub(), sub(), sub());
    match rng.gen_range(0..8) {
        0 => Evidence::pair(a, b),
        1 => Evidence::tag_left(a),
        2 => Evidence::tag_right(a),
        3 => Evidence::lambda(v(rand_name(rng)), a),
        4 => Evidence::app(a, b),
        5 => Evidence::cases(a, (v(rand_name(rng)), b), (v(rand_name(rng)), cc)),
        _ => Evidence::split(a, v(rand_name(rng)), v(rand_name(rng)), b),
    }
}

pub fn rand_weight<R: Rng>(rng: &mut R) -> Weight {
    let d: i64 = rng.gen_range(1..=40);
    let n: i64 = rng.gen_range(0..=d);
    Weight::from_ratio(n, d).unwrap()
}

pub fn rand_judgement<R: Rng>(rng: &mut R) -> Judgement {
    Judgement {
        evidence: rand_evidence(rng, 4),
        actor: actor(["P", "k", "a1", "in", "Peter"].choose(rng).unwrap()),
        weight: if rng.gen_bool(0.5) { Weight::one() } else { rand_weight(rng) },
        claim: rand_claim(rng, 3),
    }
}

// ---------------------------------------------------------------------------
// Reference substitution, written from the definition and independent of the
// library. Only used where no capture can arise.

pub fn oracle_free(e: &Evidence) -> BTreeSet<String> {
    match e {
        Evidence::Atom { .. } => BTreeSet::new(),
        Evidence::Var(x) => [x.to_string()].into(),
        Evidence::Pair(a, b) | Evidence::App(a, b) => &oracle_free(a) | &oracle_free(b),
        Evidence::TagLeft(a) | Evidence::TagRight(a) => oracle_free(a),
        Evidence::Lambda(x, b) => {
            let mut s = oracle_free(b);
            s.remove(x.as_str());
            s
        }
        Evidence::Cases { scrutinee, left, right } => {
            let mut l = oracle_free(&left.1);
            l.remove(left.0.as_str());
            let mut r = oracle_free(&right.1);
            r.remove(right.0.as_str());
            &(&oracle_free(scrutinee) | &l) | &r
        }
        Evidence::Split {
            scrutinee,
            left,
            right,
            body,
        } => {
            let mut b = oracle_free(body);
            b.remove(left.as_str());
            b.remove(right.as_str());
            &oracle_free(scrutinee) | &b
        }
    }
}

pub fn oracle_subst(e: &Evidence, x: &str, val: &Evidence) -> Evidence {
    let go = |t: &Evidence| oracle_subst(t, x, val);
    match e {
        Evidence::Atom { .. } => e.clone(),
        Evidence::Var(y) => {
            if y.as_str() == x {
                val.clone()
            } else {
                e.clone()
            }
        }
        Evidence::Pair(a, b) => Evidence::pair(go(a), go(b)),
        Evidence::App(a, b) => Evidence::app(go(a), go(b)),
        Evidence::TagLeft(a) => Evidence::tag_left(go(a)),
        Evidence::TagRight(a) => Evidence::tag_right(go(a)),
        Evidence::Lambda(y, b) => Evidence::lambda(y.clone(), if y.as_str() == x { (**b).clone() } else { go(b) }),
        Evidence::Cases { scrutinee, left, right } => Evidence::cases(
            go(scrutinee),
            (left.0.clone(), if left.0.as_str() == x { (*left.1).clone() } else { go(&left.1) }),
            (right.0.clone(), if right.0.as_str() == x { (*right.1).clone() } else { go(&right.1) }),
        ),
        Evidence::Split {
            scrutinee,
            left,
            right,
            body,
        } => Evidence::split(
            go(scrutinee),
            left.clone(),
            right.clone(),
            if left.as_str() == x || right.as_str() == x { (**body).clone() } else { go(body) },
        ),
    }
}

/// Canonical term (no app/cases/split) over the given variables plus atoms.
pub fn rand_canonical<R: Rng>(rng: &mut R, vars: &[&str], depth: u32) -> Evidence {
    if depth == 0 || rng.gen_ratio(1, 3) {
        return if !vars.is_empty() && rng.gen_bool(0.6) {
            Evidence::Var(v(vars.choose(rng).unwrap()))
        } else {
            Evidence::atom(["a", "b", "c", "e"].choose(rng).unwrap().to_string())
        };
    }
    match rng.gen_range(0..4) {
        0 => Evidence::pair(rand_canonical(rng, vars, depth - 1), rand_canonical(rng, vars, depth - 1)),
        1 => Evidence::tag_left(rand_canonical(rng, vars, depth - 1)),
        2 => Evidence::tag_right(rand_canonical(rng, vars, depth - 1)),
        _ => {
            let b = ["u", "w", "t"].choose(rng).unwrap();
            let mut inner = vars.to_vec();
            inner.push(b);
            Evidence::lambda(v(b), rand_canonical(rng, &inner, depth - 1))
        }
    }
}

// ---------------------------------------------------------------------------
// Simply typed terms, which always normalise. Every binder gets a fresh name.

#[derive(Clone, Debug, PartialEq)]
pub enum Ty {
    Base,
    Prod(Box<Ty>, Box<Ty>),
    Sum(Box<Ty>, Box<Ty>),
    Arrow(Box<Ty>, Box<Ty>),
}

pub fn rand_ty<R: Rng>(rng: &mut R, depth: u32) -> Ty {
    if depth == 0 || rng.gen_ratio(1, 2) {
        return Ty::Base;
    }
    let a = Box::new(rand_ty(rng, depth - 1));
    let b = Box::new(rand_ty(rng, depth - 1));
    match rng.gen_range(0..3) {
        0 => Ty::Prod(a, b),
        1 => Ty::Sum(a, b),
        _ => Ty::Arrow(a, b),
    }
}

pub struct TypedGen {
    counter: usize,
}

impl Default for TypedGen {
    fn default() -> Self {
        Self::new()
    }
}

impl TypedGen {
    pub fn new() -> Self {
        TypedGen { counter: 0 }
    }

    fn fresh(&mut self) -> EvidenceVar {
        self.counter += 1;
        v(&format!("v{}", self.counter))
    }

    /// A term of type `ty` whose free variables come from `ctx`.
    pub fn term<R: Rng>(&mut self, rng: &mut R, ty: &Ty, ctx: &[(EvidenceVar, Ty)], depth: u32) -> Evidence {
        let vars: Vec<&EvidenceVar> = ctx.iter().filter(|(_, t)| t == ty).map(|(x, _)| x).collect();
        if depth == 0 {
            if let Some(x) = vars.choose(rng) {
                return Evidence::Var((*x).clone());
            }
            return self.intro(rng, ty, ctx, 0);
        }
        match rng.gen_range(0..10) {
            0 | 1 if !vars.is_empty() => Evidence::Var((*vars.choose(rng).unwrap()).clone()),
            2 | 3 => {
                let a = rand_ty(rng, 1);
                let x = self.fresh();
                let mut inner = ctx.to_vec();
                inner.push((x.clone(), a.clone()));
                let body = self.term(rng, ty, &inner, depth - 1);
                let arg = self.term(rng, &a, ctx, depth - 1);
                Evidence::app(Evidence::lambda(x, body), arg)
            }
            4 => {
                let (a, b) = (rand_ty(rng, 1), rand_ty(rng, 1));
                let scrut_ty = Ty::Sum(Box::new(a.clone()), Box::new(b.clone()));
                let scrut = self.term(rng, &scrut_ty, ctx, depth - 1);
                let (x, y) = (self.fresh(), self.fresh());
                let mut lc = ctx.to_vec();
                lc.push((x.clone(), a));
                let mut rc = ctx.to_vec();
                rc.push((y.clone(), b));
                let d = self.term(rng, ty, &lc, depth - 1);
                let e = self.term(rng, ty, &rc, depth - 1);
                Evidence::cases(scrut, (x, d), (y, e))
            }
            5 => {
                let (a, b) = (rand_ty(rng, 1), rand_ty(rng, 1));
                let scrut_ty = Ty::Prod(Box::new(a.clone()), Box::new(b.clone()));
                let scrut = self.term(rng, &scrut_ty, ctx, depth - 1);
                let (x, y) = (self.fresh(), self.fresh());
                let mut inner = ctx.to_vec();
                inner.push((x.clone(), a));
                inner.push((y.clone(), b));
                let d = self.term(rng, ty, &inner, depth - 1);
                Evidence::split(scrut, x, y, d)
            }
            6 => {
                // Neutral application of a variable, if one has a usable arrow type.
                let fns: Vec<(EvidenceVar, Ty)> = ctx
                    .iter()
                    .filter(|(_, t)| matches!(t, Ty::Arrow(_, r) if **r == *ty))
                    .cloned()
                    .collect();
                match fns.choose(rng) {
                    Some((f, Ty::Arrow(a, _))) => {
                        let arg = self.term(rng, a, ctx, depth - 1);
                        Evidence::app(Evidence::Var(f.clone()), arg)
                    }
                    _ => self.intro(rng, ty, ctx, depth),
                }
            }
            _ => self.intro(rng, ty, ctx, depth),
        }
    }

    fn intro<R: Rng>(&mut self, rng: &mut R, ty: &Ty, ctx: &[(EvidenceVar, Ty)], depth: u32) -> Evidence {
        let d = depth.saturating_sub(1);
        match ty {
            Ty::Base => Evidence::atom(["a", "b", "c"].choose(rng).unwrap().to_string()),
            Ty::Prod(a, b) => Evidence::pair(self.term(rng, a, ctx, d), self.term(rng, b, ctx, d)),
            Ty::Sum(a, b) => {
                if rng.gen_bool(0.5) {
                    Evidence::tag_left(self.term(rng, a, ctx, d))
                } else {
                    Evidence::tag_right(self.term(rng, b, ctx, d))
                }
            }
            Ty::Arrow(a, b) => {
                let x = self.fresh();
                let mut inner = ctx.to_vec();
                inner.push((x.clone(), (**a).clone()));
                Evidence::lambda(x, self.term(rng, b, &inner, d))
            }
        }
    }
}
