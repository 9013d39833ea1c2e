//! JSON shapes returned by the API.

use serde::Serialize;
use serde_json::Value;
use veracity_core::kernel::path_string;
use veracity_core::{Goal, Kernel, PartialProof, RuleInstance};

#[derive(Debug, Serialize)]
pub struct HypothesisView {
    pub var: String,
    pub actor: String,
    pub claim: String,
}

#[derive(Debug, Serialize)]
pub struct GoalView {
    pub actor: String,
    pub claim: String,
    pub hypotheses: Vec<HypothesisView>,
}

impl From<&Goal> for GoalView {
    fn from(g: &Goal) -> Self {
        GoalView {
            actor: g.actor.to_string(),
            claim: g.claim.to_string(),
            hypotheses: g
                .hypotheses
                .iter()
                .map(|h| HypothesisView {
                    var: h.var.to_string(),
                    actor: h.actor.to_string(),
                    claim: h.claim.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HoleView {
    pub id: String,
    pub goal: GoalView,
}

/// `(rule, params)` as the machine format writes them.
pub fn rule_and_params(instance: &RuleInstance) -> (String, Option<Value>) {
    let rule = instance.name().to_string();
    match serde_json::to_value(instance) {
        Ok(Value::Object(mut m)) => (rule, m.remove("params")),
        _ => (rule, None),
    }
}

#[derive(Debug, Serialize)]
pub struct CandidateView {
    pub id: String,
    pub rule: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<Value>,
    /// Goals of the holes the candidate would open, in premise order.
    pub premises: Vec<GoalView>,
}

impl CandidateView {
    pub fn new(index: usize, candidate: &PartialProof) -> Self {
        let PartialProof::Node { instance, premises, .. } = candidate else {
            unreachable!("step only yields rule applications")
        };
        let (rule, params) = rule_and_params(instance);
        CandidateView {
            id: index.to_string(),
            rule,
            params,
            premises: premises.iter().map(|p| GoalView::from(p.goal())).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct NodeView {
    pub path: String,
    pub goal: GoalView,
    pub hole: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<Value>,
    /// The checked sequent, once the subtree has no holes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conclusion: Option<String>,
    pub premises: Vec<NodeView>,
}

pub fn node_view(p: &PartialProof, kernel: &Kernel, path: &mut Vec<usize>) -> NodeView {
    match p {
        PartialProof::Hole(goal) => NodeView {
            path: path_string(path),
            goal: goal.into(),
            hole: true,
            rule: None,
            params: None,
            conclusion: None,
            premises: Vec::new(),
        },
        PartialProof::Node { goal, instance, premises } => {
            let (rule, params) = rule_and_params(instance);
            let conclusion = p.to_proof_tree(kernel).ok().map(|t| t.conclusion.to_string());
            let mut children = Vec::with_capacity(premises.len());
            for (i, q) in premises.iter().enumerate() {
                path.push(i);
                children.push(node_view(q, kernel, path));
                path.pop();
            }
            NodeView {
                path: path_string(path),
                goal: goal.into(),
                hole: false,
                rule: Some(rule),
                params,
                conclusion,
                premises: children,
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SessionView {
    pub id: String,
    pub goal: String,
    pub complete: bool,
    pub holes: Vec<HoleView>,
    /// Number of states `undo` can go back through.
    pub history: usize,
    pub tree: NodeView,
}
