use crate::claim::Claim;
use crate::error::KernelError;
use crate::judgement::Judgement;
use crate::kernel::{Kernel, ProofTree, RuleInstance};

use super::latex::latex_evidence;
use super::{ensure_valid, Lexicon};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NlFormat {
    /// Nested `itemize` environments.
    #[default]
    Latex,
    /// Nested `-` bullets.
    Markdown,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NlOptions {
    pub lexicon: Lexicon,
    pub format: NlFormat,
}

fn claim_text(c: &Claim, lex: &Lexicon) -> String {
    let bin = |l: &Claim, op: &str, r: &Claim| format!("({} {op} {})", claim_text(l, lex), claim_text(r, lex));
    match c {
        Claim::Atomic(name) => lex.claim(name).to_string(),
        Claim::Bottom => "absurdity".into(),
        Claim::And(l, r) => bin(l, "and", r),
        Claim::Or(l, r) => bin(l, "or", r),
        Claim::Implies(l, r) => bin(l, "implies", r),
    }
}

fn judgement_text(j: &Judgement, lex: &Lexicon) -> String {
    let mut s = format!(
        "{} is supported by ${}$ which {} uses",
        claim_text(&j.claim, lex),
        latex_evidence(&j.evidence),
        lex.actor(j.actor.as_str())
    );
    if !j.weight.is_one() {
        s.push_str(&format!(" with weight {}", j.weight));
    }
    s
}

/// `a`, `a, and b`, `a, b, and c`.
fn list_join(items: &[String]) -> String {
    match items {
        [] => String::new(),
        [one] => one.clone(),
        [init @ .., last] => format!("{}, and {last}", init.join(", ")),
    }
}

fn justification(t: &ProofTree, lex: &Lexicon) -> String {
    match &t.instance {
        RuleInstance::Assume { .. } => "by assumption.".into(),
        RuleInstance::BotElim { .. } => "by a logical rule for absurdity.".into(),
        RuleInstance::AndIntro
        | RuleInstance::AndElim1
        | RuleInstance::AndElim2
        | RuleInstance::AndElimSplit { .. } => "by a logical rule for 'and'.".into(),
        RuleInstance::OrIntro1 { .. }
        | RuleInstance::OrIntro2 { .. }
        | RuleInstance::OrElim1
        | RuleInstance::OrElim2
        | RuleInstance::OrElimCases { .. } => "by a logical rule for 'or'.".into(),
        RuleInstance::ImplIntro { .. } | RuleInstance::ImplElim { .. } => "by a logical rule for implication.".into(),
        RuleInstance::Trust {
            truster,
            trusted,
            weight,
            ..
        } => format!(
            "because {} trusts {} (weight {weight}).",
            lex.actor(truster.as_str()),
            lex.actor(trusted.as_str())
        ),
    }
}

struct Writer<'a> {
    out: String,
    format: NlFormat,
    lex: &'a Lexicon,
}

impl Writer<'_> {
    fn item(&mut self, indent: usize, text: &str) {
        let pad = " ".repeat(indent);
        match self.format {
            NlFormat::Latex => self.out.push_str(&format!("{pad}\\item {text}\n")),
            NlFormat::Markdown => self.out.push_str(&format!("{pad}- {text}\n")),
        }
    }

    fn open(&mut self, indent: usize) {
        if self.format == NlFormat::Latex {
            self.out.push_str(&format!("{}\\begin{{itemize}}\n", " ".repeat(indent)));
        }
    }

    fn close(&mut self, indent: usize) {
        if self.format == NlFormat::Latex {
            self.out.push_str(&format!("{}\\end{{itemize}}\n", " ".repeat(indent)));
        }
    }

    fn node(&mut self, t: &ProofTree, indent: usize) {
        let ctx: Vec<String> = t
            .conclusion
            .assumptions
            .iter()
            .map(|j| judgement_text(j, self.lex))
            .collect();
        let mut head = String::new();
        if !ctx.is_empty() {
            head.push_str(&format!("Assuming {} then ", list_join(&ctx)));
        }
        head.push_str(&judgement_text(&t.conclusion.conclusion, self.lex));
        head.push_str(", because");
        self.item(indent, &head);
        let inner = indent + 2;
        self.open(inner);
        match &t.instance {
            RuleInstance::Assume { judgement } => {
                let text = format!("{} is a veracity claim.", claim_text(&judgement.claim, self.lex));
                self.item(inner, &text);
            }
            _ => {
                for p in &t.premises {
                    self.node(p, inner);
                }
            }
        }
        self.close(inner);
        let just = justification(t, self.lex);
        self.item(indent, &just);
    }
}

/// Natural-language outline of a checked tree. Trust edges are taken as cited.
pub fn render_nl(t: &ProofTree, opts: &NlOptions) -> Result<String, KernelError> {
    ensure_valid(None, t)?;
    Ok(nl_unchecked(t, opts))
}

pub fn render_nl_with(kernel: &Kernel, t: &ProofTree, opts: &NlOptions) -> Result<String, KernelError> {
    ensure_valid(Some(kernel), t)?;
    Ok(nl_unchecked(t, opts))
}

fn nl_unchecked(t: &ProofTree, opts: &NlOptions) -> String {
    let mut w = Writer {
        out: String::new(),
        format: opts.format,
        lex: &opts.lexicon,
    };
    match opts.format {
        NlFormat::Latex => {
            w.out.push_str("\\begin{itemize}\n");
            w.node(t, 2);
            w.close(2);
        }
        NlFormat::Markdown => w.node(t, 0),
    }
    w.out
}
