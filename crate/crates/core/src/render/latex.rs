use std::fmt::Write;

use crate::claim::Claim;
use crate::error::KernelError;
use crate::evidence::Evidence;
use crate::judgement::{Judgement, Sequent};
use crate::kernel::{Kernel, ProofTree, RuleInstance};

use super::ensure_valid;

/// How compound claims are bracketed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClaimStyle {
    /// Every compound claim in parentheses, the outermost included.
    #[default]
    Full,
    /// No parentheses at all. Compact but ambiguous.
    Bare,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatexOptions {
    /// Written verbatim as the environment's scale argument.
    pub scale: String,
    pub claim_style: ClaimStyle,
}

impl Default for LatexOptions {
    fn default() -> Self {
        LatexOptions {
            scale: "0.8".into(),
            claim_style: ClaimStyle::Full,
        }
    }
}

impl LatexOptions {
    pub fn with_scale(scale: impl Into<String>) -> Self {
        LatexOptions {
            scale: scale.into(),
            ..Self::default()
        }
    }
}

/// `C1` becomes `C_{1}`; other names are emitted with underscores escaped.
pub fn latex_ident(name: &str) -> String {
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    let (head, tail) = name.split_at(split);
    if !head.is_empty()
        && !tail.is_empty()
        && head.chars().all(|c| c.is_ascii_alphabetic())
        && tail.chars().all(|c| c.is_ascii_digit())
    {
        format!("{head}_{{{tail}}}")
    } else {
        name.replace('_', "\\_")
    }
}

pub fn latex_claim(c: &Claim, style: ClaimStyle) -> String {
    let bin = |l: &Claim, op: &str, r: &Claim| {
        let inner = format!("{} {op} {}", latex_claim(l, style), latex_claim(r, style));
        match style {
            ClaimStyle::Full => format!("({inner})"),
            ClaimStyle::Bare => inner,
        }
    };
    match c {
        Claim::Atomic(name) => latex_ident(name),
        Claim::Bottom => "\\bot".into(),
        Claim::And(l, r) => bin(l, "\\wedge", r),
        Claim::Or(l, r) => bin(l, "\\vee", r),
        Claim::Implies(l, r) => bin(l, "\\rightarrow", r),
    }
}

pub fn latex_evidence(e: &Evidence) -> String {
    match e {
        Evidence::Atom { name, .. } => latex_ident(name),
        Evidence::Var(v) => latex_ident(v.as_str()),
        Evidence::Pair(a, b) => format!("({}, {})", latex_evidence(a), latex_evidence(b)),
        Evidence::TagLeft(a) => format!("i({})", latex_evidence(a)),
        Evidence::TagRight(a) => format!("j({})", latex_evidence(a)),
        Evidence::Lambda(x, b) => format!("\\lambda({})({})", latex_ident(x.as_str()), latex_evidence(b)),
        Evidence::App(f, a) => format!("app({}, {})", latex_evidence(f), latex_evidence(a)),
        Evidence::Cases { scrutinee, left, right } => format!(
            "cases({}, ({}){}, ({}){})",
            latex_evidence(scrutinee),
            latex_ident(left.0.as_str()),
            latex_evidence(&left.1),
            latex_ident(right.0.as_str()),
            latex_evidence(&right.1)
        ),
        Evidence::Split {
            scrutinee,
            left,
            right,
            body,
        } => format!(
            "split({}, ({}, {}){})",
            latex_evidence(scrutinee),
            latex_ident(left.as_str()),
            latex_ident(right.as_str()),
            latex_evidence(body)
        ),
    }
}

/// `e^{k}_{w} \in C`, with the subscript dropped at weight 1.
pub fn latex_judgement(j: &Judgement, style: ClaimStyle) -> String {
    let mut s = format!("{}^{{{}}}", latex_evidence(&j.evidence), latex_ident(j.actor.as_str()));
    if !j.weight.is_one() {
        let _ = write!(s, "_{{{}}}", j.weight);
    }
    let _ = write!(s, " \\in {}", latex_claim(&j.claim, style));
    s
}

pub fn latex_sequent(s: &Sequent, style: ClaimStyle) -> String {
    let concl = latex_judgement(&s.conclusion, style);
    if s.assumptions.is_empty() {
        return concl;
    }
    let ctx: Vec<String> = s.assumptions.iter().map(|j| latex_judgement(j, style)).collect();
    format!("{} \\vdash_{{}} {concl}", ctx.join(", "))
}

fn label(i: &RuleInstance) -> String {
    match i {
        RuleInstance::Assume { .. } => "assume".into(),
        RuleInstance::BotElim { .. } => "\\bot^{-}".into(),
        RuleInstance::AndIntro => "\\wedge^{+}".into(),
        RuleInstance::AndElim1 => "\\wedge^{-}1".into(),
        RuleInstance::AndElim2 => "\\wedge^{-}2".into(),
        RuleInstance::AndElimSplit { .. } => "\\wedge^{-}".into(),
        RuleInstance::OrIntro1 { .. } => "\\vee^{+}1".into(),
        RuleInstance::OrIntro2 { .. } => "\\vee^{+}2".into(),
        RuleInstance::OrElim1 => "\\vee^{-}1".into(),
        RuleInstance::OrElim2 => "\\vee^{-}2".into(),
        RuleInstance::OrElimCases { .. } => "\\vee^{-}".into(),
        RuleInstance::ImplIntro { .. } => "\\rightarrow^+".into(),
        RuleInstance::ImplElim { .. } => "\\rightarrow^-".into(),
        RuleInstance::Trust { relation, .. } => format!("trust\\ {}", latex_ident(relation)),
    }
}

fn inference(arity: usize) -> &'static str {
    match arity {
        1 => "\\UnaryInfC",
        2 => "\\BinaryInfC",
        3 => "\\TrinaryInfC",
        4 => "\\QuaternaryInfC",
        _ => "\\QuinaryInfC",
    }
}

fn write_node(out: &mut String, t: &ProofTree, style: ClaimStyle) {
    let seq = latex_sequent(&t.conclusion, style);
    if let RuleInstance::Assume { judgement } = &t.instance {
        let _ = write!(
            out,
            "\\AxiomC{{$ {} \\textit{{ is a veracity claim}} $}} \\RightLabel{{ $ assume $}}\\UnaryInfC{{$ {seq} $}}",
            latex_claim(&judgement.claim, style)
        );
        return;
    }
    let mut arity = t.premises.len();
    if let RuleInstance::Trust {
        relation,
        truster,
        trusted,
        weight,
    } = &t.instance
    {
        let sub = if weight.is_one() { String::new() } else { format!("_{{{weight}}}") };
        let _ = write!(
            out,
            "\\AxiomC{{$ {} {}{sub} {} $}}",
            latex_ident(truster.as_str()),
            latex_ident(relation),
            latex_ident(trusted.as_str())
        );
        arity += 1;
    }
    for p in &t.premises {
        write_node(out, p, style);
    }
    let _ = write!(
        out,
        " \\RightLabel{{ $ {} $}} {}{{$ {seq} $}}",
        label(&t.instance),
        inference(arity)
    );
}

/// Renders a checked tree as one `scprooftree` derivation. Trust edges cited by
/// the tree are assumed to exist; see [`render_latex_with`] to check them too.
pub fn render_latex(t: &ProofTree, opts: &LatexOptions) -> Result<String, KernelError> {
    ensure_valid(None, t)?;
    Ok(latex_unchecked(t, opts))
}

pub fn render_latex_with(kernel: &Kernel, t: &ProofTree, opts: &LatexOptions) -> Result<String, KernelError> {
    ensure_valid(Some(kernel), t)?;
    Ok(latex_unchecked(t, opts))
}

fn latex_unchecked(t: &ProofTree, opts: &LatexOptions) -> String {
    let mut out = format!("\\begin{{scprooftree}}{{{}}}", opts.scale);
    write_node(&mut out, t, opts.claim_style);
    out.push_str("\\end{scprooftree}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::apply_rule;

    #[test]
    fn identifiers() {
        assert_eq!(latex_ident("C1"), "C_{1}");
        assert_eq!(latex_ident("a1"), "a_{1}");
        assert_eq!(latex_ident("L12"), "L_{12}");
        assert_eq!(latex_ident("P"), "P");
        assert_eq!(latex_ident("my_claim"), "my\\_claim");
        assert_eq!(latex_ident("x1y"), "x1y");
    }

    #[test]
    fn claim_styles() {
        let c: Claim = "C1 /\\ C2 -> C3".parse().unwrap();
        assert_eq!(latex_claim(&c, ClaimStyle::Full), "((C_{1} \\wedge C_{2}) \\rightarrow C_{3})");
        assert_eq!(latex_claim(&c, ClaimStyle::Bare), "C_{1} \\wedge C_{2} \\rightarrow C_{3}");
    }

    #[test]
    fn single_assume() {
        let t = apply_rule(
            RuleInstance::Assume {
                judgement: "?x ^ P in C1".parse().unwrap(),
            },
            vec![],
        )
        .unwrap();
        assert_eq!(
            render_latex(&t, &LatexOptions::default()).unwrap(),
            "\\begin{scprooftree}{0.8}\\AxiomC{$ C_{1} \\textit{ is a veracity claim} $} \\RightLabel{ $ assume $}\\UnaryInfC{$ x^{P} \\in C_{1} \\vdash_{} x^{P} \\in C_{1} $}\\end{scprooftree}"
        );
    }

    #[test]
    fn weights_are_subscripted() {
        let j: Judgement = "a ^ k @ 0.2 in A".parse().unwrap();
        assert_eq!(latex_judgement(&j, ClaimStyle::Full), "a^{k}_{0.2} \\in A");
    }
}
