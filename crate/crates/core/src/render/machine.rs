//! Self-describing JSON documents for proof trees (`.vproof`).
//!
//! ```json
//! {
//!   "format": "veracity-proof",
//!   "version": 1,
//!   "root": {
//!     "rule": "ImplIntro",
//!     "params": { "var": "x", "antecedent": "C1" },
//!     "conclusion": { "assumptions": ["?y ^ P in C2"], "judgement": "\\x. (x, ?y) ^ P in C1 -> C1 /\\ C2" },
//!     "premises": [ ... ]
//!   }
//! }
//! ```
//!
//! Claims, evidence and judgements are written in the concrete syntax. Stored
//! conclusions are kept as written, so a tampered document parses and then fails
//! to check.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{ErrorCode, ParseError};
use crate::judgement::{Context, Judgement, Sequent};
use crate::kernel::{ProofTree, RuleInstance, RuleName};

pub const MACHINE_FORMAT: &str = "veracity-proof";
pub const MACHINE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    format: String,
    version: u32,
    root: Node,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Node {
    rule: RuleName,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    params: Map<String, Value>,
    conclusion: Conclusion,
    #[serde(default)]
    premises: Vec<Node>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Conclusion {
    assumptions: Vec<Judgement>,
    judgement: Judgement,
}

fn to_node(t: &ProofTree) -> Node {
    let params = match serde_json::to_value(&t.instance).expect("rule instances serialise") {
        Value::Object(mut m) => match m.remove("params") {
            Some(Value::Object(p)) => p,
            _ => Map::new(),
        },
        _ => Map::new(),
    };
    Node {
        rule: t.instance.name(),
        params,
        conclusion: Conclusion {
            assumptions: t.conclusion.assumptions.iter().cloned().collect(),
            judgement: t.conclusion.conclusion.clone(),
        },
        premises: t.premises.iter().map(to_node).collect(),
    }
}

fn from_node(n: Node, path: &mut Vec<usize>) -> Result<ProofTree, String> {
    let mut tagged = Map::new();
    tagged.insert("rule".into(), Value::String(n.rule.as_str().into()));
    if !n.params.is_empty() {
        tagged.insert("params".into(), Value::Object(n.params));
    }
    let instance: RuleInstance = serde_json::from_value(Value::Object(tagged))
        .map_err(|e| format!("bad parameters for {} at {}: {e}", n.rule, crate::kernel::path_string(path)))?;
    let mut assumptions = Context::new();
    for j in n.conclusion.assumptions {
        if assumptions.contains(&j) {
            return Err(format!(
                "duplicate assumption {j} at {}",
                crate::kernel::path_string(path)
            ));
        }
        assumptions.push(j);
    }
    let mut premises = Vec::with_capacity(n.premises.len());
    for (i, p) in n.premises.into_iter().enumerate() {
        path.push(i);
        premises.push(from_node(p, path)?);
        path.pop();
    }
    Ok(ProofTree {
        conclusion: Sequent::new(assumptions, n.conclusion.judgement),
        instance,
        premises,
    })
}

/// Pretty-printed document, newline-terminated. Equal trees give equal bytes.
pub fn render_machine(t: &ProofTree) -> String {
    let doc = Document {
        format: MACHINE_FORMAT.into(),
        version: MACHINE_VERSION,
        root: to_node(t),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("documents serialise");
    s.push('\n');
    s
}

/// Reads a document back. The tree is returned as stored; run the kernel to check it.
pub fn parse_machine(text: &str) -> Result<ProofTree, ParseError> {
    let mut de = serde_json::Deserializer::from_str(text);
    de.disable_recursion_limit();
    let doc = Document::deserialize(&mut de)
        .and_then(|d| de.end().map(|_| d))
        .map_err(|e| ParseError::new(e.line().max(1), e.column().max(1), e.to_string()))?;
    if doc.format != MACHINE_FORMAT {
        return Err(ParseError::new(1, 1, format!("not a proof document: format `{}`", doc.format)));
    }
    if doc.version != MACHINE_VERSION {
        return Err(ParseError::new(1, 1, format!("unsupported version {}", doc.version)));
    }
    from_node(doc.root, &mut Vec::new()).map_err(|m| ParseError::new(1, 1, m).with_code(ErrorCode::ParseError))
}
