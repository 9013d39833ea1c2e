//! Depth-bounded enumeration of all proofs of a goal.
//!
//! Goals carry only an actor, a claim and the hypotheses introduced by binders
//! above them. Evidence, weights and contexts are recomputed by the kernel once a
//! tree has no holes left.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::claim::Claim;
use crate::error::KernelError;
use crate::evidence::{Evidence, EvidenceVar};
use crate::judgement::{ActorId, Judgement};
use crate::kernel::{ImplElimForm, Kernel, ProofTree, RuleInstance, RuleName};
use crate::trust::TrustRelation;

pub const DEFAULT_DEPTH: usize = 4;
pub const DEFAULT_MAX_PROOFS: usize = 1000;

/// A variable bound by an enclosing binder and usable by `Assume`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hypothesis {
    pub var: EvidenceVar,
    pub actor: ActorId,
    pub claim: Claim,
}

impl Hypothesis {
    pub fn judgement(&self) -> Judgement {
        Judgement::new(Evidence::Var(self.var.clone()), self.actor.clone(), self.claim.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Goal {
    pub actor: ActorId,
    pub claim: Claim,
    #[serde(default)]
    pub hypotheses: Vec<Hypothesis>,
}

impl Goal {
    pub fn new(actor: ActorId, claim: Claim) -> Self {
        Goal {
            actor,
            claim,
            hypotheses: Vec::new(),
        }
    }

    /// The goal for a judgement; its evidence and weight play no part in search.
    pub fn from_judgement(j: &Judgement) -> Self {
        Goal::new(j.actor.clone(), j.claim.clone())
    }

    fn sub(&self, actor: &ActorId, claim: Claim) -> Goal {
        Goal {
            actor: actor.clone(),
            claim,
            hypotheses: self.hypotheses.clone(),
        }
    }

    fn with_hyps(&self, claim: Claim, extra: impl IntoIterator<Item = (EvidenceVar, Claim)>) -> Goal {
        let mut hypotheses = self.hypotheses.clone();
        hypotheses.extend(extra.into_iter().map(|(var, claim)| Hypothesis {
            var,
            actor: self.actor.clone(),
            claim,
        }));
        Goal {
            actor: self.actor.clone(),
            claim,
            hypotheses,
        }
    }
}

/// A proof tree that may still contain holes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PartialProof {
    Hole(Goal),
    Node {
        goal: Goal,
        instance: RuleInstance,
        premises: Vec<PartialProof>,
    },
}

impl PartialProof {
    pub fn goal(&self) -> &Goal {
        match self {
            PartialProof::Hole(g) | PartialProof::Node { goal: g, .. } => g,
        }
    }

    pub fn is_complete(&self) -> bool {
        match self {
            PartialProof::Hole(_) => false,
            PartialProof::Node { premises, .. } => premises.iter().all(PartialProof::is_complete),
        }
    }

    /// Holes with their paths, left to right.
    pub fn holes(&self) -> Vec<(Vec<usize>, &Goal)> {
        let mut out = Vec::new();
        self.collect_holes(&mut Vec::new(), &mut out);
        out
    }

    fn collect_holes<'a>(&'a self, path: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, &'a Goal)>) {
        match self {
            PartialProof::Hole(g) => out.push((path.clone(), g)),
            PartialProof::Node { premises, .. } => {
                for (i, p) in premises.iter().enumerate() {
                    path.push(i);
                    p.collect_holes(path, out);
                    path.pop();
                }
            }
        }
    }

    pub fn at(&self, path: &[usize]) -> Option<&PartialProof> {
        path.iter().try_fold(self, |p, &i| match p {
            PartialProof::Node { premises, .. } => premises.get(i),
            PartialProof::Hole(_) => None,
        })
    }

    fn at_mut(&mut self, path: &[usize]) -> Option<&mut PartialProof> {
        path.iter().try_fold(self, |p, &i| match p {
            PartialProof::Node { premises, .. } => premises.get_mut(i),
            PartialProof::Hole(_) => None,
        })
    }

    /// Replaces the hole at `path`. Returns false if there is no hole there.
    pub fn fill(&mut self, path: &[usize], with: PartialProof) -> bool {
        match self.at_mut(path) {
            Some(slot @ PartialProof::Hole(_)) => {
                *slot = with;
                true
            }
            _ => false,
        }
    }

    /// Shallowest depth at which a hole occurs (root is 0).
    pub fn min_hole_depth(&self) -> Option<usize> {
        self.holes().iter().map(|(p, _)| p.len()).min()
    }

    /// Builds the kernel tree, recomputing evidence and contexts bottom-up.
    pub fn to_proof_tree(&self, kernel: &Kernel) -> Result<ProofTree, IncompleteOrInvalid> {
        match self {
            PartialProof::Hole(_) => Err(IncompleteOrInvalid::Incomplete),
            PartialProof::Node { instance, premises, .. } => {
                let premises = premises
                    .iter()
                    .map(|p| p.to_proof_tree(kernel))
                    .collect::<Result<Vec<_>, _>>()?;
                kernel
                    .apply(instance.clone(), premises)
                    .map_err(IncompleteOrInvalid::Invalid)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IncompleteOrInvalid {
    #[error("the proof still has holes")]
    Incomplete,
    #[error(transparent)]
    Invalid(KernelError),
}

/// What search may assume and which rules it may use.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepConfig {
    /// Ground facts (or free hypotheses) that `Assume` may introduce.
    pub assumables: Vec<Judgement>,
    pub trust: Vec<TrustRelation>,
    pub rules: BTreeSet<RuleName>,
    pub depth: usize,
    pub max_proofs: usize,
}

impl StepConfig {
    pub fn default_rules() -> BTreeSet<RuleName> {
        [
            RuleName::Assume,
            RuleName::AndIntro,
            RuleName::OrIntro1,
            RuleName::OrIntro2,
            RuleName::ImplIntro,
            RuleName::Trust,
        ]
        .into()
    }

    pub fn kernel(&self) -> Kernel {
        Kernel::with_relations(self.trust.iter().cloned())
    }

    fn enabled(&self, r: RuleName) -> bool {
        self.rules.contains(&r)
    }

    /// Claims that elimination rules may pass through: every subclaim of an
    /// assumable or hypothesis claim, first occurrence first.
    fn pool(&self, goal: &Goal) -> Vec<Claim> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let roots = self
            .assumables
            .iter()
            .map(|j| &j.claim)
            .chain(goal.hypotheses.iter().map(|h| &h.claim));
        for root in roots {
            for c in root.subclaims() {
                if seen.insert(c) {
                    out.push(c.clone());
                }
            }
        }
        out
    }

    fn fresh_vars(&self, goal: &Goal, n: usize) -> Vec<EvidenceVar> {
        let taken: HashSet<&str> = goal
            .hypotheses
            .iter()
            .map(|h| h.var.as_str())
            .chain(self.assumables.iter().filter_map(|j| match &j.evidence {
                Evidence::Atom { name, .. } => Some(name.as_str()),
                Evidence::Var(v) => Some(v.as_str()),
                _ => None,
            }))
            .collect();
        fresh_names()
            .filter(|s| !taken.contains(s.as_str()))
            .take(n)
            .map(|s| EvidenceVar::new(s).expect("generated names are identifiers"))
            .collect()
    }
}

impl Default for StepConfig {
    fn default() -> Self {
        StepConfig {
            assumables: Vec::new(),
            trust: Vec::new(),
            rules: StepConfig::default_rules(),
            depth: DEFAULT_DEPTH,
            max_proofs: DEFAULT_MAX_PROOFS,
        }
    }
}

/// `x, y, z, u, v, w, x1, y1, ...`
fn fresh_names() -> impl Iterator<Item = String> {
    const BASE: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
    (0usize..).flat_map(|round| {
        BASE.iter().map(move |b| if round == 0 { b.to_string() } else { format!("{b}{round}") })
    })
}

fn node(goal: &Goal, instance: RuleInstance, premises: Vec<Goal>) -> PartialProof {
    PartialProof::Node {
        goal: goal.clone(),
        instance,
        premises: premises.into_iter().map(PartialProof::Hole).collect(),
    }
}

/// All one-node expansions of `goal`: `Assume` candidates first, then the other
/// enabled rules in [`RuleName`] order.
pub fn step(cfg: &StepConfig, goal: &Goal) -> Vec<PartialProof> {
    let mut out = Vec::new();
    let a = &goal.actor;
    if cfg.enabled(RuleName::Assume) {
        let ground = cfg.assumables.iter().filter(|j| &j.actor == a && j.claim == goal.claim).cloned();
        let hyps = goal
            .hypotheses
            .iter()
            .filter(|h| &h.actor == a && h.claim == goal.claim)
            .map(Hypothesis::judgement);
        for judgement in ground.chain(hyps) {
            out.push(node(goal, RuleInstance::Assume { judgement }, vec![]));
        }
    }
    let pool = || cfg.pool(goal);
    for rule in RuleName::ALL.into_iter().filter(|r| *r != RuleName::Assume && cfg.enabled(*r)) {
        match rule {
            RuleName::BotElim => out.push(node(
                goal,
                RuleInstance::BotElim {
                    claim: goal.claim.clone(),
                },
                vec![goal.sub(a, Claim::Bottom)],
            )),
            RuleName::AndIntro => {
                if let Claim::And(l, r) = &goal.claim {
                    out.push(node(
                        goal,
                        RuleInstance::AndIntro,
                        vec![goal.sub(a, (**l).clone()), goal.sub(a, (**r).clone())],
                    ));
                }
            }
            RuleName::AndElim1 | RuleName::AndElim2 => {
                for other in pool() {
                    let (inst, claim) = if rule == RuleName::AndElim1 {
                        (RuleInstance::AndElim1, Claim::and(goal.claim.clone(), other))
                    } else {
                        (RuleInstance::AndElim2, Claim::and(other, goal.claim.clone()))
                    };
                    out.push(node(goal, inst, vec![goal.sub(a, claim)]));
                }
            }
            RuleName::AndElimSplit => {
                for c in pool() {
                    if let Claim::And(l, r) = &c {
                        let vars = cfg.fresh_vars(goal, 2);
                        let (x, y) = (vars[0].clone(), vars[1].clone());
                        out.push(node(
                            goal,
                            RuleInstance::AndElimSplit {
                                left: x.clone(),
                                right: y.clone(),
                            },
                            vec![
                                goal.sub(a, c.clone()),
                                goal.with_hyps(goal.claim.clone(), [(x, (**l).clone()), (y, (**r).clone())]),
                            ],
                        ));
                    }
                }
            }
            RuleName::OrIntro1 | RuleName::OrIntro2 => {
                if let Claim::Or(l, r) = &goal.claim {
                    let (inst, premise) = if rule == RuleName::OrIntro1 {
                        (RuleInstance::OrIntro1 { other: (**r).clone() }, l)
                    } else {
                        (RuleInstance::OrIntro2 { other: (**l).clone() }, r)
                    };
                    out.push(node(goal, inst, vec![goal.sub(a, (**premise).clone())]));
                }
            }
            RuleName::OrElim1 | RuleName::OrElim2 => {
                for other in pool() {
                    let (inst, claim) = if rule == RuleName::OrElim1 {
                        (RuleInstance::OrElim1, Claim::or(goal.claim.clone(), other))
                    } else {
                        (RuleInstance::OrElim2, Claim::or(other, goal.claim.clone()))
                    };
                    out.push(node(goal, inst, vec![goal.sub(a, claim)]));
                }
            }
            RuleName::OrElimCases => {
                for c in pool() {
                    if let Claim::Or(l, r) = &c {
                        let vars = cfg.fresh_vars(goal, 2);
                        let (x, y) = (vars[0].clone(), vars[1].clone());
                        out.push(node(
                            goal,
                            RuleInstance::OrElimCases {
                                left: x.clone(),
                                right: y.clone(),
                            },
                            vec![
                                goal.sub(a, c.clone()),
                                goal.with_hyps(goal.claim.clone(), [(x, (**l).clone())]),
                                goal.with_hyps(goal.claim.clone(), [(y, (**r).clone())]),
                            ],
                        ));
                    }
                }
            }
            RuleName::ImplIntro => {
                if let Claim::Implies(ante, cons) = &goal.claim {
                    let x = cfg.fresh_vars(goal, 1).remove(0);
                    out.push(node(
                        goal,
                        RuleInstance::ImplIntro {
                            var: x.clone(),
                            antecedent: (**ante).clone(),
                        },
                        vec![goal.with_hyps((**cons).clone(), [(x, (**ante).clone())])],
                    ));
                }
            }
            RuleName::ImplElim => {
                for ante in pool() {
                    out.push(node(
                        goal,
                        RuleInstance::ImplElim { form: ImplElimForm::App },
                        vec![
                            goal.sub(a, Claim::implies(ante.clone(), goal.claim.clone())),
                            goal.sub(a, ante),
                        ],
                    ));
                }
            }
            RuleName::Trust => {
                for rel in &cfg.trust {
                    for edge in rel.edges().filter(|e| &e.truster == a) {
                        out.push(node(
                            goal,
                            RuleInstance::Trust {
                                relation: rel.name.clone(),
                                truster: edge.truster,
                                trusted: edge.trusted.clone(),
                                weight: edge.weight,
                            },
                            vec![goal.sub(&edge.trusted, goal.claim.clone())],
                        ));
                    }
                }
            }
            RuleName::Assume => unreachable!(),
        }
    }
    out
}

/// Fills every hole at the shallowest hole depth with each of its `step` expansions.
///
/// Alternatives combine as a product in which the leftmost hole varies fastest.
pub fn one_level_deeper(cfg: &StepConfig, p: &PartialProof) -> Vec<PartialProof> {
    let Some(depth) = p.min_hole_depth() else {
        return vec![p.clone()];
    };
    let frontier: Vec<(Vec<usize>, Vec<PartialProof>)> = p
        .holes()
        .into_iter()
        .filter(|(path, _)| path.len() == depth)
        .map(|(path, g)| (path, step(cfg, g)))
        .collect();
    if frontier.iter().any(|(_, opts)| opts.is_empty()) {
        return Vec::new();
    }
    let total: usize = frontier.iter().map(|(_, o)| o.len()).product();
    let mut out = Vec::with_capacity(total);
    for mut idx in 0..total {
        let mut filled = p.clone();
        for (path, opts) in &frontier {
            let choice = idx % opts.len();
            idx /= opts.len();
            filled.fill(path, opts[choice].clone());
        }
        out.push(filled);
    }
    out
}

/// All structurally distinct, kernel-checked proofs of `goal` of depth at most
/// `cfg.depth`, in discovery order, truncated to `cfg.max_proofs`.
pub fn search(cfg: &StepConfig, goal: &Judgement) -> Vec<ProofTree> {
    search_goal(cfg, &Goal::from_judgement(goal))
}

pub fn search_goal(cfg: &StepConfig, goal: &Goal) -> Vec<ProofTree> {
    let kernel = cfg.kernel();
    let mut frontier = vec![PartialProof::Hole(goal.clone())];
    let mut results = Vec::new();
    let mut seen = HashSet::new();
    for _ in 0..cfg.depth {
        if frontier.is_empty() || results.len() >= cfg.max_proofs {
            break;
        }
        let expanded: Vec<Vec<PartialProof>> = frontier.par_iter().map(|p| one_level_deeper(cfg, p)).collect();
        frontier = Vec::new();
        for p in expanded.into_iter().flatten() {
            if !p.is_complete() {
                frontier.push(p);
                continue;
            }
            let Ok(tree) = p.to_proof_tree(&kernel) else {
                continue;
            };
            if results.len() < cfg.max_proofs && kernel.check(&tree).ok && seen.insert(tree.clone()) {
                results.push(tree);
            }
        }
    }
    results
}

/// Renames the binders a candidate introduces (`ImplIntro`, `AndElimSplit`,
/// `OrElimCases`), updating the hypotheses of its new holes to match.
pub fn rename_binders(candidate: &PartialProof, names: &[EvidenceVar]) -> Result<PartialProof, String> {
    let PartialProof::Node { goal, instance, premises } = candidate else {
        return Err("only rule applications bind variables".into());
    };
    let mut instance = instance.clone();
    let binders: Vec<&mut EvidenceVar> = match &mut instance {
        RuleInstance::ImplIntro { var, .. } => vec![var],
        RuleInstance::AndElimSplit { left, right } | RuleInstance::OrElimCases { left, right } => vec![left, right],
        _ => vec![],
    };
    if binders.len() != names.len() {
        return Err(format!("candidate binds {} variable(s), {} name(s) given", binders.len(), names.len()));
    }
    let taken: HashSet<&EvidenceVar> = goal.hypotheses.iter().map(|h| &h.var).collect();
    if let Some(n) = names.iter().find(|n| taken.contains(n)) {
        return Err(format!("`{n}` is already bound here"));
    }
    if names.len() == 2 && names[0] == names[1] {
        return Err(format!("`{}` given twice", names[0]));
    }
    let mut renames = Vec::new();
    for (slot, new) in binders.into_iter().zip(names) {
        renames.push((slot.clone(), new.clone()));
        *slot = new.clone();
    }
    let base = goal.hypotheses.len();
    let premises = premises
        .iter()
        .map(|p| match p {
            PartialProof::Hole(g) => {
                let mut g = g.clone();
                for h in g.hypotheses.iter_mut().skip(base) {
                    if let Some((_, new)) = renames.iter().find(|(old, _)| *old == h.var) {
                        h.var = new.clone();
                    }
                }
                PartialProof::Hole(g)
            }
            other => other.clone(),
        })
        .collect();
    Ok(PartialProof::Node {
        goal: goal.clone(),
        instance,
        premises,
    })
}
