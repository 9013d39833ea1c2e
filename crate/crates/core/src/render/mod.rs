//! LaTeX derivations, natural-language outlines and a JSON tree format.

mod latex;
mod machine;
mod nl;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::KernelError;
use crate::kernel::{Kernel, ProofTree};
use crate::trust::TrustRelation;

pub use latex::{
    latex_claim, latex_evidence, latex_ident, latex_judgement, latex_sequent, render_latex, render_latex_with,
    ClaimStyle, LatexOptions,
};
pub use machine::{parse_machine, render_machine, MACHINE_FORMAT, MACHINE_VERSION};
pub use nl::{render_nl, render_nl_with, NlFormat, NlOptions};

/// Display names for actors and atomic claims, e.g. `P = "Penelope"`, `C1 = "claim 1"`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lexicon {
    #[serde(default)]
    pub actors: BTreeMap<String, String>,
    #[serde(default)]
    pub claims: BTreeMap<String, String>,
}

impl Lexicon {
    pub fn actor<'a>(&'a self, name: &'a str) -> &'a str {
        self.actors.get(name).map_or(name, String::as_str)
    }

    pub fn claim<'a>(&'a self, name: &'a str) -> &'a str {
        self.claims.get(name).map_or(name, String::as_str)
    }
}

/// Renderers refuse trees that do not check. The edges a tree cites are taken as
/// given here; checking them against real relations is the caller's business.
fn ensure_valid(kernel: Option<&Kernel>, tree: &ProofTree) -> Result<(), KernelError> {
    let own;
    let kernel = match kernel {
        Some(k) => k,
        None => {
            own = kernel_from_cited_edges(tree);
            &own
        }
    };
    let report = kernel.check(tree);
    if report.ok {
        Ok(())
    } else {
        Err(KernelError::InvalidTree(Box::new(report)))
    }
}

/// A kernel whose relations hold exactly the edges `tree` cites.
pub fn kernel_from_cited_edges(tree: &ProofTree) -> Kernel {
    let mut rels: BTreeMap<String, TrustRelation> = BTreeMap::new();
    let mut stack = vec![tree];
    while let Some(t) = stack.pop() {
        if let Some(e) = t.instance.trust_edge() {
            let rel = rels
                .entry(e.relation.clone())
                .or_insert_with(|| TrustRelation::new(e.relation.clone()));
            if rel.weight(&e.truster, &e.trusted).is_none() {
                // A conflicting duplicate is left for the checker to reject.
                let _ = rel.add_edge(e.truster, e.trusted, e.weight);
            }
        }
        stack.extend(t.premises.iter());
    }
    Kernel::with_relations(rels.into_values())
}
