//! A proof kernel for a veracity logic: an intuitionistic natural-deduction system
//! whose judgements `e ^ k @ w in A` say that actor `k` holds claim `A` on evidence
//! `e` with trust weight `w`.
//!
//! ```
//! use veracity_core::{apply_rule, check, RuleInstance};
//!
//! let leaf = |s: &str| apply_rule(RuleInstance::Assume { judgement: s.parse().unwrap() }, vec![]).unwrap();
//! let both = apply_rule(RuleInstance::AndIntro, vec![leaf("a ^ P in A"), leaf("b ^ P in B")]).unwrap();
//! assert_eq!(both.judgement().to_string(), "(a, b) ^ P in A /\\ B");
//! assert!(check(&both).ok);
//! ```

pub mod claim;
pub mod error;
pub mod evidence;
pub mod judgement;
pub mod kernel;
mod names;
pub mod normalize;
pub mod render;
pub mod search;
pub mod syntax;
pub mod trust;
pub mod weight;

pub use claim::Claim;
pub use error::{
    CaptureError, ErrorCode, KernelError, NormalizeError, NotAnAssumption, ParseError, TrustError, WeightError,
};
pub use evidence::{free_vars, substitute, Evidence, EvidenceVar, Payload};
pub use judgement::{ctx_discharge, ctx_union, ActorId, Context, Judgement, Sequent};
pub use kernel::{
    apply_rule, assumptions_used, check, trust_edges_used, CheckReport, ImplElimForm, Kernel, ProofTree,
    RuleInstance, RuleName, UsedAssumption, Violation,
};
pub use names::{is_identifier, InvalidIdentifier};
pub use normalize::{evidence_equal, normalize, reduce_step, Strategy};
pub use render::{
    parse_machine, render_latex, render_machine, render_nl, ClaimStyle, LatexOptions, Lexicon, NlFormat, NlOptions,
};
pub use search::{one_level_deeper, search, step, Goal, Hypothesis, PartialProof, StepConfig};
pub use syntax::{parse_claim, parse_config, parse_evidence, parse_judgement, parse_trust};
pub use trust::{apply_trust, best_trust, compare_chain_star, path_weight, ChainStar, TrustEdge, TrustRelation};
pub use weight::{weight_mul, Weight};
