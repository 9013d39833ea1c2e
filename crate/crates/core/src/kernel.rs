//! Rule schemas, proof trees and the checker.
//!
//! Every rule is implemented once, in [`Kernel::conclude`], which computes a node's
//! sequent from its parameters and the sequents of its premises. Construction and
//! checking both go through it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::claim::Claim;
use crate::error::{ErrorCode, KernelError, NotAnAssumption, TrustError};
use crate::evidence::{substitute, Evidence, EvidenceVar};
use crate::judgement::{ctx_union, ActorId, Context, Judgement, Sequent};
use crate::trust::{TrustEdge, TrustRelation};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleName {
    Assume,
    BotElim,
    AndIntro,
    AndElim1,
    AndElim2,
    AndElimSplit,
    OrIntro1,
    OrIntro2,
    OrElim1,
    OrElim2,
    OrElimCases,
    ImplIntro,
    ImplElim,
    Trust,
}

impl RuleName {
    pub const ALL: [RuleName; 14] = [
        RuleName::Assume,
        RuleName::BotElim,
        RuleName::AndIntro,
        RuleName::AndElim1,
        RuleName::AndElim2,
        RuleName::AndElimSplit,
        RuleName::OrIntro1,
        RuleName::OrIntro2,
        RuleName::OrElim1,
        RuleName::OrElim2,
        RuleName::OrElimCases,
        RuleName::ImplIntro,
        RuleName::ImplElim,
        RuleName::Trust,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleName::Assume => "Assume",
            RuleName::BotElim => "BotElim",
            RuleName::AndIntro => "AndIntro",
            RuleName::AndElim1 => "AndElim1",
            RuleName::AndElim2 => "AndElim2",
            RuleName::AndElimSplit => "AndElimSplit",
            RuleName::OrIntro1 => "OrIntro1",
            RuleName::OrIntro2 => "OrIntro2",
            RuleName::OrElim1 => "OrElim1",
            RuleName::OrElim2 => "OrElim2",
            RuleName::OrElimCases => "OrElimCases",
            RuleName::ImplIntro => "ImplIntro",
            RuleName::ImplElim => "ImplElim",
            RuleName::Trust => "Trust",
        }
    }

    /// Number of proof premises (trust edges are not premises).
    pub fn arity(self) -> usize {
        match self {
            RuleName::Assume => 0,
            RuleName::AndIntro | RuleName::AndElimSplit | RuleName::ImplElim => 2,
            RuleName::OrElimCases => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown rule `{0}`")]
pub struct UnknownRule(pub String);

impl FromStr for RuleName {
    type Err = UnknownRule;

    /// Accepts `AndIntro` as well as `and_intro` and `and-intro`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| !matches!(c, '_' | '-')).flat_map(char::to_lowercase).collect();
        RuleName::ALL
            .into_iter()
            .find(|r| r.as_str().to_lowercase() == key)
            .ok_or_else(|| UnknownRule(s.to_string()))
    }
}

/// Which evidence an implication elimination concludes with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ImplElimForm {
    /// Substitute the argument into a literal lambda body.
    Beta,
    /// Keep the non-canonical `app(f, a)`.
    App,
}

/// A rule together with the parameters that fix its conclusion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "rule", content = "params")]
pub enum RuleInstance {
    Assume { judgement: Judgement },
    BotElim { claim: Claim },
    AndIntro,
    AndElim1,
    AndElim2,
    AndElimSplit { left: EvidenceVar, right: EvidenceVar },
    OrIntro1 { other: Claim },
    OrIntro2 { other: Claim },
    OrElim1,
    OrElim2,
    OrElimCases { left: EvidenceVar, right: EvidenceVar },
    ImplIntro { var: EvidenceVar, antecedent: Claim },
    ImplElim { form: ImplElimForm },
    Trust {
        relation: String,
        truster: ActorId,
        trusted: ActorId,
        weight: Weight,
    },
}

impl RuleInstance {
    pub fn name(&self) -> RuleName {
        match self {
            RuleInstance::Assume { .. } => RuleName::Assume,
            RuleInstance::BotElim { .. } => RuleName::BotElim,
            RuleInstance::AndIntro => RuleName::AndIntro,
            RuleInstance::AndElim1 => RuleName::AndElim1,
            RuleInstance::AndElim2 => RuleName::AndElim2,
            RuleInstance::AndElimSplit { .. } => RuleName::AndElimSplit,
            RuleInstance::OrIntro1 { .. } => RuleName::OrIntro1,
            RuleInstance::OrIntro2 { .. } => RuleName::OrIntro2,
            RuleInstance::OrElim1 => RuleName::OrElim1,
            RuleInstance::OrElim2 => RuleName::OrElim2,
            RuleInstance::OrElimCases { .. } => RuleName::OrElimCases,
            RuleInstance::ImplIntro { .. } => RuleName::ImplIntro,
            RuleInstance::ImplElim { .. } => RuleName::ImplElim,
            RuleInstance::Trust { .. } => RuleName::Trust,
        }
    }

    pub fn assume(evidence: Evidence, actor: ActorId, claim: Claim) -> Self {
        RuleInstance::Assume {
            judgement: Judgement::new(evidence, actor, claim),
        }
    }

    pub fn trust_edge(&self) -> Option<TrustEdge> {
        match self {
            RuleInstance::Trust {
                relation,
                truster,
                trusted,
                weight,
            } => Some(TrustEdge {
                relation: relation.clone(),
                truster: truster.clone(),
                trusted: trusted.clone(),
                weight: weight.clone(),
            }),
            _ => None,
        }
    }
}

/// A derivation. `conclusion` is stored so that [`check`] can compare it with the
/// conclusion the rule actually yields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProofTree {
    pub conclusion: Sequent,
    pub instance: RuleInstance,
    pub premises: Vec<ProofTree>,
}

impl ProofTree {
    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::node_count).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::depth).max().unwrap_or(0)
    }

    pub fn judgement(&self) -> &Judgement {
        &self.conclusion.conclusion
    }

    /// The subtree at `path` (child indices from the root).
    pub fn subtree(&self, path: &[usize]) -> Option<&ProofTree> {
        path.iter().try_fold(self, |t, &i| t.premises.get(i))
    }
}

/// Renders a node path as `root`, `root.0`, `root.0.1`, ...
pub fn path_string(path: &[usize]) -> String {
    let mut s = String::from("root");
    for i in path {
        s.push('.');
        s.push_str(&i.to_string());
    }
    s
}

/// Parses the output of [`path_string`].
pub fn parse_path(s: &str) -> Option<Vec<usize>> {
    let mut parts = s.split('.');
    if parts.next()? != "root" {
        return None;
    }
    parts.map(|p| p.parse().ok()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub path: String,
    pub code: ErrorCode,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        CheckReport {
            ok: violations.is_empty(),
            violations,
        }
    }
}

/// An assumption a proof depends on, and whether the root has discharged it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UsedAssumption {
    pub judgement: Judgement,
    pub discharged: bool,
}

/// Weight of a multi-premise logical rule: the weakest premise.
pub fn combine_weights<'a>(weights: impl IntoIterator<Item = &'a Weight>) -> Weight {
    weights.into_iter().min().cloned().unwrap_or_else(Weight::one)
}

/// Rule checker over a fixed set of named trust relations.
#[derive(Debug, Clone, Default)]
pub struct Kernel {
    relations: BTreeMap<String, TrustRelation>,
}

impl Kernel {
    pub fn new() -> Self {
        Kernel::default()
    }

    pub fn with_relations(relations: impl IntoIterator<Item = TrustRelation>) -> Self {
        let mut k = Kernel::new();
        for r in relations {
            k.add_relation(r);
        }
        k
    }

    /// Adds or replaces the relation with this name.
    pub fn add_relation(&mut self, rel: TrustRelation) {
        self.relations.insert(rel.name.clone(), rel);
    }

    pub fn relation(&self, name: &str) -> Option<&TrustRelation> {
        self.relations.get(name)
    }

    pub fn relations(&self) -> impl Iterator<Item = &TrustRelation> {
        self.relations.values()
    }

    /// Builds a node, computing its conclusion from the premises.
    pub fn apply(&self, instance: RuleInstance, premises: Vec<ProofTree>) -> Result<ProofTree, KernelError> {
        let seqs: Vec<&Sequent> = premises.iter().map(|p| &p.conclusion).collect();
        let conclusion = self.conclude(&instance, &seqs)?;
        Ok(ProofTree {
            conclusion,
            instance,
            premises,
        })
    }

    /// The sequent that `instance` derives from premises with these conclusions.
    pub fn conclude(&self, instance: &RuleInstance, premises: &[&Sequent]) -> Result<Sequent, KernelError> {
        let rule = instance.name();
        if premises.len() != rule.arity() {
            return Err(KernelError::ArityMismatch {
                rule: rule.to_string(),
                expected: rule.arity(),
                found: premises.len(),
            });
        }
        let prem = |i: usize| &premises[i].conclusion;
        match instance {
            RuleInstance::Assume { judgement } => {
                if !matches!(judgement.evidence, Evidence::Atom { .. } | Evidence::Var(_)) {
                    return Err(KernelError::EvidenceShapeMismatch(format!(
                        "assumed evidence must be a name or a variable, got {}",
                        judgement.evidence
                    )));
                }
                Ok(Sequent::new(Context::singleton(judgement.clone()), judgement.clone()))
            }
            RuleInstance::BotElim { claim } => {
                let p = prem(0);
                if p.claim != Claim::Bottom {
                    return Err(KernelError::ClaimMismatch(format!("expected _|_, got {}", p.claim)));
                }
                Ok(Sequent::new(
                    premises[0].assumptions.clone(),
                    Judgement {
                        claim: claim.clone(),
                        ..p.clone()
                    },
                ))
            }
            RuleInstance::AndIntro => {
                let actor = same_actor(premises)?;
                let (a, b) = (prem(0), prem(1));
                Ok(Sequent::new(
                    ctx_union(&premises[0].assumptions, &premises[1].assumptions),
                    Judgement {
                        evidence: Evidence::pair(a.evidence.clone(), b.evidence.clone()),
                        actor,
                        weight: combine_weights([&a.weight, &b.weight]),
                        claim: Claim::and(a.claim.clone(), b.claim.clone()),
                    },
                ))
            }
            RuleInstance::AndElim1 | RuleInstance::AndElim2 => {
                let p = prem(0);
                let Claim::And(l, r) = &p.claim else {
                    return Err(KernelError::ClaimMismatch(format!("expected a conjunction, got {}", p.claim)));
                };
                let Evidence::Pair(a, b) = &p.evidence else {
                    return Err(KernelError::EvidenceShapeMismatch(format!(
                        "expected a pair, got {}",
                        p.evidence
                    )));
                };
                let first = matches!(instance, RuleInstance::AndElim1);
                let (e, c) = if first { (a, l) } else { (b, r) };
                Ok(Sequent::new(
                    premises[0].assumptions.clone(),
                    Judgement {
                        evidence: (**e).clone(),
                        claim: (**c).clone(),
                        ..p.clone()
                    },
                ))
            }
            RuleInstance::AndElimSplit { left, right } => {
                let actor = same_actor(premises)?;
                if left == right {
                    return Err(KernelError::FreshnessViolation(format!(
                        "split binds `{left}` twice"
                    )));
                }
                let (c, d) = (prem(0), prem(1));
                let Claim::And(a, b) = &c.claim else {
                    return Err(KernelError::ClaimMismatch(format!("expected a conjunction, got {}", c.claim)));
                };
                let (ctx, _) = discharge_var(&premises[1].assumptions, left, &actor, a)?;
                let (ctx, _) = discharge_var(&ctx, right, &actor, b)?;
                Ok(Sequent::new(
                    ctx_union(&premises[0].assumptions, &ctx),
                    Judgement {
                        evidence: Evidence::split(c.evidence.clone(), left.clone(), right.clone(), d.evidence.clone()),
                        actor,
                        weight: combine_weights([&c.weight, &d.weight]),
                        claim: d.claim.clone(),
                    },
                ))
            }
            RuleInstance::OrIntro1 { other } | RuleInstance::OrIntro2 { other } => {
                let p = prem(0);
                let left = matches!(instance, RuleInstance::OrIntro1 { .. });
                let (evidence, claim) = if left {
                    (Evidence::tag_left(p.evidence.clone()), Claim::or(p.claim.clone(), other.clone()))
                } else {
                    (Evidence::tag_right(p.evidence.clone()), Claim::or(other.clone(), p.claim.clone()))
                };
                Ok(Sequent::new(
                    premises[0].assumptions.clone(),
                    Judgement {
                        evidence,
                        claim,
                        ..p.clone()
                    },
                ))
            }
            RuleInstance::OrElim1 | RuleInstance::OrElim2 => {
                let p = prem(0);
                let Claim::Or(l, r) = &p.claim else {
                    return Err(KernelError::ClaimMismatch(format!("expected a disjunction, got {}", p.claim)));
                };
                let (e, c) = match (instance, &p.evidence) {
                    (RuleInstance::OrElim1, Evidence::TagLeft(e)) => (e, l),
                    (RuleInstance::OrElim2, Evidence::TagRight(e)) => (e, r),
                    _ => {
                        let want = if matches!(instance, RuleInstance::OrElim1) { "i(..)" } else { "j(..)" };
                        return Err(KernelError::EvidenceShapeMismatch(format!(
                            "expected evidence {want}, got {}",
                            p.evidence
                        )));
                    }
                };
                Ok(Sequent::new(
                    premises[0].assumptions.clone(),
                    Judgement {
                        evidence: (**e).clone(),
                        claim: (**c).clone(),
                        ..p.clone()
                    },
                ))
            }
            RuleInstance::OrElimCases { left, right } => {
                let actor = same_actor(premises)?;
                let (c, d, e) = (prem(0), prem(1), prem(2));
                let Claim::Or(a, b) = &c.claim else {
                    return Err(KernelError::ClaimMismatch(format!("expected a disjunction, got {}", c.claim)));
                };
                if d.claim != e.claim {
                    return Err(KernelError::ClaimMismatch(format!(
                        "case branches conclude {} and {}",
                        d.claim, e.claim
                    )));
                }
                let (dctx, _) = discharge_var(&premises[1].assumptions, left, &actor, a)?;
                let (ectx, _) = discharge_var(&premises[2].assumptions, right, &actor, b)?;
                Ok(Sequent::new(
                    ctx_union(&ctx_union(&premises[0].assumptions, &dctx), &ectx),
                    Judgement {
                        evidence: Evidence::cases(
                            c.evidence.clone(),
                            (left.clone(), d.evidence.clone()),
                            (right.clone(), e.evidence.clone()),
                        ),
                        actor,
                        weight: combine_weights([&c.weight, &d.weight, &e.weight]),
                        claim: d.claim.clone(),
                    },
                ))
            }
            RuleInstance::ImplIntro { var, antecedent } => {
                let p = prem(0);
                let (ctx, _) = discharge_var(&premises[0].assumptions, var, &p.actor, antecedent)?;
                Ok(Sequent::new(
                    ctx,
                    Judgement {
                        evidence: Evidence::lambda(var.clone(), p.evidence.clone()),
                        claim: Claim::implies(antecedent.clone(), p.claim.clone()),
                        ..p.clone()
                    },
                ))
            }
            RuleInstance::ImplElim { form } => {
                let actor = same_actor(premises)?;
                let (f, a) = (prem(0), prem(1));
                let Claim::Implies(ante, cons) = &f.claim else {
                    return Err(KernelError::ClaimMismatch(format!("expected an implication, got {}", f.claim)));
                };
                if **ante != a.claim {
                    return Err(KernelError::ClaimMismatch(format!(
                        "argument proves {}, function expects {}",
                        a.claim, ante
                    )));
                }
                let evidence = match form {
                    ImplElimForm::App => Evidence::app(f.evidence.clone(), a.evidence.clone()),
                    ImplElimForm::Beta => {
                        let Evidence::Lambda(x, body) = &f.evidence else {
                            return Err(KernelError::EvidenceShapeMismatch(format!(
                                "beta elimination needs a lambda, got {}",
                                f.evidence
                            )));
                        };
                        if body.binds(x) {
                            return Err(KernelError::FreshnessViolation(format!(
                                "`{x}` is bound again inside {}",
                                f.evidence
                            )));
                        }
                        substitute(body, x, &a.evidence)?
                    }
                };
                Ok(Sequent::new(
                    ctx_union(&premises[0].assumptions, &premises[1].assumptions),
                    Judgement {
                        evidence,
                        actor,
                        weight: combine_weights([&f.weight, &a.weight]),
                        claim: (**cons).clone(),
                    },
                ))
            }
            RuleInstance::Trust {
                relation,
                truster,
                trusted,
                weight,
            } => {
                let p = prem(0);
                if &p.actor != trusted {
                    return Err(KernelError::ActorMismatch(format!(
                        "trust edge is about {trusted}, premise is held by {}",
                        p.actor
                    )));
                }
                let unknown = || {
                    KernelError::UnknownTrustEdge(TrustError::UnknownTrustEdge {
                        relation: relation.clone(),
                        truster: truster.to_string(),
                        trusted: trusted.to_string(),
                    })
                };
                let declared = if truster == trusted {
                    Some(Weight::one())
                } else {
                    self.relations.get(relation).and_then(|r| r.weight(truster, trusted))
                };
                match declared {
                    Some(w) if &w == weight => {}
                    _ => return Err(unknown()),
                }
                Ok(Sequent::new(
                    premises[0].assumptions.clone(),
                    Judgement {
                        actor: truster.clone(),
                        weight: weight.mul(&p.weight),
                        ..p.clone()
                    },
                ))
            }
        }
    }

    /// Re-derives every node from its premises' stored conclusions.
    pub fn check(&self, tree: &ProofTree) -> CheckReport {
        let mut violations = Vec::new();
        let mut path = Vec::new();
        self.check_node(tree, &mut path, &mut violations);
        CheckReport::from_violations(violations)
    }

    fn check_node(&self, t: &ProofTree, path: &mut Vec<usize>, out: &mut Vec<Violation>) {
        for (i, p) in t.premises.iter().enumerate() {
            path.push(i);
            self.check_node(p, path, out);
            path.pop();
        }
        let seqs: Vec<&Sequent> = t.premises.iter().map(|p| &p.conclusion).collect();
        let (code, message) = match self.conclude(&t.instance, &seqs) {
            Ok(computed) if computed == t.conclusion => return,
            Ok(computed) if computed.assumptions != t.conclusion.assumptions => (
                ErrorCode::ContextError,
                format!(
                    "stated assumptions [{}] but the rule yields [{}]",
                    join(&t.conclusion.assumptions),
                    join(&computed.assumptions)
                ),
            ),
            Ok(computed) => (
                ErrorCode::ConclusionMismatch,
                format!(
                    "stated {} but the rule yields {}",
                    t.conclusion.conclusion, computed.conclusion
                ),
            ),
            Err(e) => (e.code(), e.to_string()),
        };
        out.push(Violation {
            path: path_string(path),
            code,
            message,
        });
    }

    fn require_ok(&self, tree: &ProofTree) -> Result<(), KernelError> {
        let report = self.check(tree);
        if report.ok {
            Ok(())
        } else {
            Err(KernelError::InvalidTree(Box::new(report)))
        }
    }

    /// Assume leaves and binder-discharged hypotheses, in the order met left to right.
    pub fn assumptions_used(&self, tree: &ProofTree) -> Result<Vec<UsedAssumption>, KernelError> {
        self.require_ok(tree)?;
        let mut seen: Vec<Judgement> = Vec::new();
        collect_assumptions(tree, &mut seen);
        Ok(seen
            .into_iter()
            .map(|j| UsedAssumption {
                discharged: !tree.conclusion.assumptions.contains(&j),
                judgement: j,
            })
            .collect())
    }

    pub fn trust_edges_used(&self, tree: &ProofTree) -> Result<BTreeSet<TrustEdge>, KernelError> {
        self.require_ok(tree)?;
        let mut out = BTreeSet::new();
        let mut stack = vec![tree];
        while let Some(t) = stack.pop() {
            out.extend(t.instance.trust_edge());
            stack.extend(t.premises.iter());
        }
        Ok(out)
    }
}

fn join(ctx: &Context) -> String {
    ctx.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(", ")
}

fn same_actor(premises: &[&Sequent]) -> Result<ActorId, KernelError> {
    let first = &premises[0].conclusion.actor;
    if let Some(other) = premises.iter().map(|p| &p.conclusion.actor).find(|a| *a != first) {
        return Err(KernelError::ActorMismatch(format!("{first} and {other}")));
    }
    Ok(first.clone())
}

/// Removes the hypotheses for `x` from `ctx`. Returns what was removed, or the implicit
/// full-weight hypothesis when `x` was not used at all.
fn discharge_var(
    ctx: &Context,
    x: &EvidenceVar,
    actor: &ActorId,
    claim: &Claim,
) -> Result<(Context, Vec<Judgement>), KernelError> {
    let is_x = |j: &Judgement| matches!(&j.evidence, Evidence::Var(v) if v == x);
    let mut removed = Vec::new();
    let mut kept = Context::new();
    for j in ctx {
        if is_x(j) {
            if &j.actor != actor || &j.claim != claim {
                return Err(NotAnAssumption {
                    judgement: Judgement::new(Evidence::Var(x.clone()), actor.clone(), claim.clone()).to_string(),
                }
                .into());
            }
            removed.push(j.clone());
        } else {
            if j.evidence.has_free(x) {
                return Err(KernelError::FreshnessViolation(format!(
                    "`{x}` is still free in assumption {j}"
                )));
            }
            kept.push(j.clone());
        }
    }
    if removed.is_empty() {
        removed.push(Judgement::new(Evidence::Var(x.clone()), actor.clone(), claim.clone()));
    }
    Ok((kept, removed))
}

fn collect_assumptions(t: &ProofTree, seen: &mut Vec<Judgement>) {
    for p in &t.premises {
        collect_assumptions(p, seen);
    }
    let mut add = |j: Judgement| {
        if !seen.contains(&j) {
            seen.push(j);
        }
    };
    let prem_ctx = |i: usize| &t.premises[i].conclusion.assumptions;
    let actor = &t.conclusion.conclusion.actor;
    // Trees reaching here have checked, so discharge cannot fail.
    let discharged = |ctx: &Context, x: &EvidenceVar, c: &Claim| {
        discharge_var(ctx, x, actor, c).map(|r| r.1).unwrap_or_default()
    };
    match &t.instance {
        RuleInstance::Assume { judgement } => add(judgement.clone()),
        RuleInstance::ImplIntro { var, antecedent } => {
            discharged(prem_ctx(0), var, antecedent).into_iter().for_each(add)
        }
        RuleInstance::AndElimSplit { left, right } => {
            if let Claim::And(a, b) = &t.premises[0].conclusion.conclusion.claim {
                discharged(prem_ctx(1), left, a).into_iter().for_each(&mut add);
                discharged(prem_ctx(1), right, b).into_iter().for_each(add);
            }
        }
        RuleInstance::OrElimCases { left, right } => {
            if let Claim::Or(a, b) = &t.premises[0].conclusion.conclusion.claim {
                discharged(prem_ctx(1), left, a).into_iter().for_each(&mut add);
                discharged(prem_ctx(2), right, b).into_iter().for_each(add);
            }
        }
        _ => {}
    }
}

/// [`Kernel::apply`] with no trust relations.
pub fn apply_rule(instance: RuleInstance, premises: Vec<ProofTree>) -> Result<ProofTree, KernelError> {
    Kernel::new().apply(instance, premises)
}

/// [`Kernel::check`] with no trust relations.
pub fn check(tree: &ProofTree) -> CheckReport {
    Kernel::new().check(tree)
}

pub fn assumptions_used(tree: &ProofTree) -> Result<Vec<UsedAssumption>, KernelError> {
    Kernel::new().assumptions_used(tree)
}

pub fn trust_edges_used(tree: &ProofTree) -> Result<BTreeSet<TrustEdge>, KernelError> {
    Kernel::new().trust_edges_used(tree)
}
