//! Reference implementations the acceptance checks compare against. Nothing here
//! calls the library's own search, normaliser or weight arithmetic.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use veracity_core::search::{Goal, StepConfig};
use veracity_core::{
    apply_rule, parse_judgement, Claim, Context, ErrorCode, Evidence, ImplElimForm, Judgement, Kernel, ProofTree,
    RuleInstance, RuleName, Sequent, Weight,
};

use crate::common::*;

// ---------------------------------------------------------------------------
// Ratios as plain (numerator, denominator) pairs in machine integers.

pub fn rand_ratio<R: Rng>(rng: &mut R) -> (u64, u64) {
    let d = rng.gen_range(1..=100);
    (rng.gen_range(0..=d), d)
}

pub fn ratio_product(xs: &[(u64, u64)]) -> (u64, u64) {
    xs.iter().fold((1, 1), |(n, d), &(a, b)| (n * a, d * b))
}

pub fn compare_ratio(a: (u64, u64), b: (u64, u64)) -> Ordering {
    (a.0 as u128 * b.1 as u128).cmp(&(b.0 as u128 * a.1 as u128))
}

pub fn to_weight(n: u64, d: u64) -> Weight {
    Weight::from_ratio(n as i64, d as i64).unwrap()
}

// ---------------------------------------------------------------------------
// Brute-force proof enumeration for Assume and the introduction rules.

pub const INTRO_RULES: [RuleName; 5] = [
    RuleName::Assume,
    RuleName::AndIntro,
    RuleName::OrIntro1,
    RuleName::OrIntro2,
    RuleName::ImplIntro,
];

fn fresh(cfg: &StepConfig, hyps: &[(String, Claim)]) -> String {
    let mut taken: HashSet<String> = hyps.iter().map(|(x, _)| x.clone()).collect();
    for a in &cfg.assumables {
        match &a.evidence {
            Evidence::Atom { name, .. } => {
                taken.insert(name.clone());
            }
            Evidence::Var(x) => {
                taken.insert(x.to_string());
            }
            _ => {}
        }
    }
    let mut round = 0;
    loop {
        for base in ["x", "y", "z", "u", "v", "w"] {
            let name = if round == 0 { base.to_string() } else { format!("{base}{round}") };
            if !taken.contains(&name) {
                return name;
            }
        }
        round += 1;
    }
}

fn enumerate(cfg: &StepConfig, kernel: &Kernel, goal: &Goal, hyps: &[(String, Claim)], depth: usize) -> Vec<ProofTree> {
    if depth == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut emit = |inst: RuleInstance, premises: Vec<ProofTree>| {
        if let Ok(t) = kernel.apply(inst, premises) {
            out.push(t);
        }
    };
    for a in &cfg.assumables {
        if a.actor == goal.actor && a.claim == goal.claim {
            emit(RuleInstance::Assume { judgement: a.clone() }, vec![]);
        }
    }
    for (x, claim) in hyps {
        if *claim == goal.claim {
            let judgement = Judgement::new(Evidence::var(x), goal.actor.clone(), claim.clone());
            emit(RuleInstance::Assume { judgement }, vec![]);
        }
    }
    let sub = |claim: &Claim, hyps: &[(String, Claim)]| {
        enumerate(cfg, kernel, &Goal::new(goal.actor.clone(), claim.clone()), hyps, depth - 1)
    };
    match &goal.claim {
        Claim::And(l, r) => {
            let rs = sub(r, hyps);
            for a in sub(l, hyps) {
                for b in &rs {
                    emit(RuleInstance::AndIntro, vec![a.clone(), b.clone()]);
                }
            }
        }
        Claim::Or(l, r) => {
            for a in sub(l, hyps) {
                emit(RuleInstance::OrIntro1 { other: (**r).clone() }, vec![a]);
            }
            for b in sub(r, hyps) {
                emit(RuleInstance::OrIntro2 { other: (**l).clone() }, vec![b]);
            }
        }
        Claim::Implies(ante, cons) => {
            let x = fresh(cfg, hyps);
            let mut inner = hyps.to_vec();
            inner.push((x.clone(), (**ante).clone()));
            for body in sub(cons, &inner) {
                emit(
                    RuleInstance::ImplIntro {
                        var: v(&x),
                        antecedent: (**ante).clone(),
                    },
                    vec![body],
                );
            }
        }
        _ => {}
    }
    out
}

pub fn brute_force_proofs(cfg: &StepConfig, goal: &Goal) -> HashSet<ProofTree> {
    assert!(cfg.rules.iter().all(|r| INTRO_RULES.contains(r)));
    let kernel = cfg.kernel();
    let hyps: Vec<(String, Claim)> = goal.hypotheses.iter().map(|h| (h.var.to_string(), h.claim.clone())).collect();
    enumerate(cfg, &kernel, goal, &hyps, cfg.depth)
        .into_iter()
        .filter(|t| kernel.check(t).ok)
        .collect()
}

fn claims_up_to(connectives: usize, atoms: &[&str]) -> Vec<Vec<Claim>> {
    let mut by_size: Vec<Vec<Claim>> = vec![atoms.iter().map(|a| Claim::atom(*a)).collect()];
    for n in 1..=connectives {
        let mut level = Vec::new();
        for k in 0..n {
            for l in &by_size[k] {
                for r in &by_size[n - 1 - k] {
                    level.push(Claim::and(l.clone(), r.clone()));
                    level.push(Claim::or(l.clone(), r.clone()));
                    level.push(Claim::implies(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(level);
    }
    by_size
}

fn subsets_up_to<T: Clone>(pool: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for item in pool {
        let grown: Vec<Vec<T>> = out
            .iter()
            .filter(|s| s.len() < k)
            .map(|s| {
                let mut s = s.clone();
                s.push(item.clone());
                s
            })
            .collect();
        out.extend(grown);
    }
    out
}

fn intro_config(assumables: Vec<Judgement>) -> StepConfig {
    StepConfig {
        assumables,
        rules: INTRO_RULES.into_iter().collect(),
        depth: 4,
        max_proofs: usize::MAX,
        ..StepConfig::default()
    }
}

/// Every subset (of size at most three) of a fixed pool of assumables against
/// every goal over two atoms with at most two connectives, plus seeded random
/// goals with three or four connectives.
pub fn search_cases() -> Vec<(StepConfig, Goal)> {
    let pool: Vec<Judgement> = [
        "a ^ P in A",
        "b ^ P in B",
        "c ^ P in A /\\ B",
        "d ^ Q in A",
        "?h ^ P in A -> B",
        "x ^ P @ 0.5 in B",
    ]
    .iter()
    .map(|s| j(s))
    .collect();
    let configs = subsets_up_to(&pool, 3);
    let claims = claims_up_to(4, &["A", "B"]);
    let mut cases = Vec::new();
    for cfg in &configs {
        for claim in claims[..=2].iter().flatten() {
            cases.push((intro_config(cfg.clone()), Goal::new(actor("P"), claim.clone())));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5E);
    for _ in 0..400 {
        let size = rng.gen_range(3..=4);
        let claim = claims[size].choose(&mut rng).unwrap().clone();
        let cfg = configs.choose(&mut rng).unwrap().clone();
        let who = if rng.gen_ratio(1, 5) { "Q" } else { "P" };
        cases.push((intro_config(cfg), Goal::new(actor(who), claim)));
    }
    cases
}

// ---------------------------------------------------------------------------
// Computation rule instances with the expected one-step result.

/// `kind`: 0 `app`, 1 `cases` on `i`, 2 `cases` on `j`, 3 `split`.
pub fn redex_instance<R: Rng>(rng: &mut R, kind: usize) -> (Evidence, Evidence) {
    let arg = rand_canonical(rng, &[], 3);
    match kind {
        0 => {
            let body = rand_canonical(rng, &["x"], 4);
            let want = oracle_subst(&body, "x", &arg);
            (Evidence::app(Evidence::lambda(v("x"), body), arg), want)
        }
        1 | 2 => {
            let d = rand_canonical(rng, &["x"], 4);
            let e = rand_canonical(rng, &["y"], 4);
            let (scrutinee, want) = if kind == 1 {
                (Evidence::tag_left(arg.clone()), oracle_subst(&d, "x", &arg))
            } else {
                (Evidence::tag_right(arg.clone()), oracle_subst(&e, "y", &arg))
            };
            (Evidence::cases(scrutinee, (v("x"), d), (v("y"), e)), want)
        }
        _ => {
            let second = rand_canonical(rng, &[], 3);
            let body = rand_canonical(rng, &["x", "y"], 4);
            let want = oracle_subst(&oracle_subst(&body, "x", &arg), "y", &second);
            (Evidence::split(Evidence::pair(arg, second), v("x"), v("y"), body), want)
        }
    }
}

// ---------------------------------------------------------------------------
// Malformed proofs with the code each must be rejected with.

fn node(ctx: &[&str], concl: &str, instance: RuleInstance, premises: Vec<ProofTree>) -> ProofTree {
    let mut assumptions = Context::new();
    for s in ctx {
        assumptions.push(j(s));
    }
    ProofTree {
        conclusion: Sequent::new(assumptions, j(concl)),
        instance,
        premises,
    }
}

fn first_code(kernel: &Kernel, t: &ProofTree) -> Option<ErrorCode> {
    let report = kernel.check(t);
    if report.ok {
        None
    } else {
        report.violations.first().map(|v| v.code)
    }
}

pub fn negative_cases() -> Vec<(&'static str, ErrorCode, Option<ErrorCode>)> {
    let plain = Kernel::new();
    let right_tagged = apply_rule(RuleInstance::OrIntro2 { other: c("A") }, vec![leaf("b ^ P in B")]).unwrap();
    // \x. \x. x and \x. \y. x, built by (partly vacuous) discharges.
    let shadowing = impl_intro("x", "A", impl_intro("x", "B", leaf("?x ^ P in B")));
    let konst = impl_intro("x", "A", impl_intro("y", "B", leaf("?x ^ P in A")));
    let mut out = Vec::new();
    let mut case = |name, want, t: ProofTree| out.push((name, want, first_code(&plain, &t)));

    case(
        "actor mismatch",
        ErrorCode::ActorMismatch,
        node(
            &["a ^ P in A", "b ^ Q in B"],
            "(a, b) ^ P in A /\\ B",
            RuleInstance::AndIntro,
            vec![leaf("a ^ P in A"), leaf("b ^ Q in B")],
        ),
    );
    case(
        "wrong tag for OrElim1",
        ErrorCode::EvidenceShapeMismatch,
        node(&["b ^ P in B"], "b ^ P in A", RuleInstance::OrElim1, vec![right_tagged]),
    );
    case(
        "broken context union",
        ErrorCode::ContextError,
        node(
            &["a ^ P in A"],
            "(a, b) ^ P in A /\\ B",
            RuleInstance::AndIntro,
            vec![leaf("a ^ P in A"), leaf("b ^ P in B")],
        ),
    );
    case(
        "discharge of non-assumption",
        ErrorCode::NotAnAssumption,
        node(
            &[],
            "\\x. x ^ P in A -> B",
            RuleInstance::ImplIntro {
                var: v("x"),
                antecedent: c("A"),
            },
            vec![leaf("?x ^ P in B")],
        ),
    );
    case(
        "freshness violation",
        ErrorCode::FreshnessViolation,
        node(
            &["a ^ P in A"],
            "\\x. x ^ P in B -> B",
            RuleInstance::ImplElim {
                form: ImplElimForm::Beta,
            },
            vec![shadowing, leaf("a ^ P in A")],
        ),
    );
    case(
        "arity error",
        ErrorCode::ArityMismatch,
        node(&["a ^ P in A"], "(a, a) ^ P in A /\\ A", RuleInstance::AndIntro, vec![leaf("a ^ P in A")]),
    );
    case(
        "claim mismatch",
        ErrorCode::ClaimMismatch,
        node(
            &["f ^ P in A -> B", "a ^ P in C"],
            "app(f, a) ^ P in B",
            RuleInstance::ImplElim {
                form: ImplElimForm::App,
            },
            vec![leaf("f ^ P in A -> B"), leaf("a ^ P in C")],
        ),
    );
    case(
        "capture on substitution",
        ErrorCode::CaptureError,
        node(
            &["?y ^ P in A"],
            "\\y. ?y ^ P in B -> A",
            RuleInstance::ImplElim {
                form: ImplElimForm::Beta,
            },
            vec![konst, leaf("?y ^ P in A")],
        ),
    );
    let mut tampered = three_claims_tree();
    tampered.conclusion.conclusion.evidence = "\\z. \\y. \\x. ((y, x), z)".parse().unwrap();
    case("tampered witness", ErrorCode::ConclusionMismatch, tampered);

    let trust = Kernel::with_relations([chain_relation()]);
    let unknown = node(
        &["a ^ m in A"],
        "a ^ k @ 0.3 in A",
        RuleInstance::Trust {
            relation: "T".into(),
            truster: actor("k"),
            trusted: actor("m"),
            weight: w("0.3"),
        },
        vec![leaf("a ^ m in A")],
    );
    out.push(("unknown trust edge", ErrorCode::UnknownTrustEdge, first_code(&trust, &unknown)));
    let misweighted = node(
        &["a ^ l in A"],
        "a ^ k @ 0.9 in A",
        RuleInstance::Trust {
            relation: "T".into(),
            truster: actor("k"),
            trusted: actor("l"),
            weight: w("0.9"),
        },
        vec![leaf("a ^ l in A")],
    );
    out.push(("misweighted trust edge", ErrorCode::UnknownTrustEdge, first_code(&trust, &misweighted)));

    let over = parse_judgement("a ^ P @ 1.5 in A").err().map(|e| e.code);
    out.push(("weight above one", ErrorCode::WeightOutOfRange, over));
    let doc = veracity_core::render_machine(&leaf("a ^ P @ 0.5 in A")).replace("0.5", "3/2");
    let from_doc = veracity_core::parse_machine(&doc).err().map(|e| e.code);
    out.push(("weight above one in a document", ErrorCode::ParseError, from_doc));
    out
}

// ---------------------------------------------------------------------------

/// A checked tree of exactly `nodes` nodes: a balanced conjunction of distinct
/// hypotheses under one implication introduction.
pub fn big_tree(nodes: usize) -> ProofTree {
    assert!(nodes >= 2 && nodes % 2 == 0);
    let leaves = nodes / 2;
    let mut queue: VecDeque<ProofTree> = (0..leaves).map(|i| leaf(&format!("?h{i} ^ P in A{i}"))).collect();
    while queue.len() > 1 {
        let mut next = VecDeque::new();
        while let Some(a) = queue.pop_front() {
            match queue.pop_front() {
                Some(b) => next.push_back(apply_rule(RuleInstance::AndIntro, vec![a, b]).unwrap()),
                None => next.push_back(a),
            }
        }
        queue = next;
    }
    let body = queue.pop_front().unwrap();
    impl_intro("h0", "A0", body)
}
