//! Python module `veracity`: parse, build, check, search and render proofs.

use std::collections::BTreeMap;

use pyo3::prelude::*;
use pyo3::types::PyDict;
use veracity_core::render::{render_latex_with, render_nl_with};
use veracity_core::syntax::{parse_trust_relations, print_config, print_trust};
use veracity_core::{
    best_trust, compare_chain_star, normalize, parse_config, parse_evidence, parse_machine, path_weight,
    render_machine, ActorId, ChainStar, CheckReport, Claim, ClaimStyle, ErrorCode, Judgement, Kernel, KernelError,
    LatexOptions, Lexicon, NlFormat, NlOptions, ParseError, ProofTree, RuleInstance, RuleName, StepConfig,
    TrustError, TrustRelation, Weight,
};

mod exceptions {
    use pyo3::create_exception;
    use pyo3::exceptions::PyException;

    create_exception!(veracity, VeracityError, PyException, "Base class of every error raised here.");
    create_exception!(veracity, ParseError, VeracityError, "Malformed input text.");
    create_exception!(veracity, KernelError, VeracityError, "A rule application the kernel rejects.");
    create_exception!(veracity, TrustError, VeracityError, "A missing edge or broken trust path.");
}

use exceptions::{
    KernelError as VeracityKernelError, ParseError as VeracityParseError, TrustError as VeracityTrustError,
    VeracityError,
};

/// Raises `E` with a `code` attribute holding the error code name.
fn raise<E: pyo3::type_object::PyTypeInfo>(code: impl ToString, message: impl ToString) -> PyErr {
    let err = PyErr::new::<E, _>(message.to_string());
    Python::attach(|py| {
        let _ = err.value(py).setattr("code", code.to_string());
    });
    err
}

fn parse_err(e: ParseError) -> PyErr {
    raise::<VeracityParseError>(e.code, e)
}

fn kernel_err(e: KernelError) -> PyErr {
    match &e {
        KernelError::InvalidTree(report) => match report.violations.first() {
            Some(v) => raise::<VeracityKernelError>(v.code, format!("{}: {}", v.path, v.message)),
            None => raise::<VeracityKernelError>(e.code(), e),
        },
        _ => raise::<VeracityKernelError>(e.code(), e),
    }
}

fn trust_err(e: TrustError) -> PyErr {
    raise::<VeracityTrustError>(ErrorCode::UnknownTrustEdge, e)
}

fn actor(name: &str) -> PyResult<ActorId> {
    ActorId::new(name).map_err(|e| raise::<VeracityParseError>(ErrorCode::ParseError, e))
}

#[pyclass(name = "Claim", module = "veracity", skip_from_py_object, frozen, eq, hash, str)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyClaim(Claim);

impl std::fmt::Display for PyClaim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl PyClaim {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyClaim).map_err(parse_err)
    }

    fn __repr__(&self) -> String {
        format!("Claim({:?})", self.0.to_string())
    }
}

#[pyclass(name = "Weight", module = "veracity", skip_from_py_object, frozen, eq, ord, hash, str)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyWeight(Weight);

impl std::fmt::Display for PyWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl PyWeight {
    /// Accepts `0.5`, `1/3` or `1`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse()
            .map(PyWeight)
            .map_err(|e| raise::<VeracityParseError>(ErrorCode::WeightOutOfRange, e))
    }

    #[getter]
    fn fraction(&self) -> String {
        self.0.to_fraction_string()
    }

    /// Exact decimal form, or `None` when the expansion does not terminate.
    #[getter]
    fn decimal(&self) -> Option<String> {
        self.0.to_decimal_string()
    }

    fn __float__(&self) -> f64 {
        self.0.to_f64()
    }

    fn __mul__(&self, other: PyRef<'_, PyWeight>) -> PyWeight {
        PyWeight(self.0.mul(&other.0))
    }

    fn __repr__(&self) -> String {
        format!("Weight({:?})", self.0.to_fraction_string())
    }
}

#[pyclass(name = "Judgement", module = "veracity", skip_from_py_object, frozen, eq, hash, str)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyJudgement(Judgement);

impl std::fmt::Display for PyJudgement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl PyJudgement {
    /// `e ^ actor [@ weight] in claim`
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyJudgement).map_err(parse_err)
    }

    #[getter]
    fn evidence(&self) -> String {
        self.0.evidence.to_string()
    }

    #[getter]
    fn actor(&self) -> String {
        self.0.actor.to_string()
    }

    #[getter]
    fn weight(&self) -> PyWeight {
        PyWeight(self.0.weight.clone())
    }

    #[getter]
    fn claim(&self) -> PyClaim {
        PyClaim(self.0.claim.clone())
    }

    fn __repr__(&self) -> String {
        format!("Judgement({:?})", self.0.to_string())
    }
}

/// A judgement given either as text or as a `Judgement`.
#[derive(FromPyObject)]
enum JudgementArg<'py> {
    Object(PyRef<'py, PyJudgement>),
    Text(String),
}

impl JudgementArg<'_> {
    fn get(&self) -> PyResult<Judgement> {
        match self {
            JudgementArg::Object(j) => Ok(j.0.clone()),
            JudgementArg::Text(s) => s.parse().map_err(parse_err),
        }
    }
}

#[pyclass(name = "TrustRelation", module = "veracity", skip_from_py_object, str)]
#[derive(Clone)]
struct PyTrustRelation(TrustRelation);

impl std::fmt::Display for PyTrustRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&print_trust(&self.0))
    }
}

#[pymethods]
impl PyTrustRelation {
    #[new]
    fn new(name: &str) -> Self {
        PyTrustRelation(TrustRelation::new(name))
    }

    /// Parses a trust file declaring exactly one relation.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        veracity_core::parse_trust(text).map(PyTrustRelation).map_err(parse_err)
    }

    /// Parses a trust file with any number of relations.
    #[staticmethod]
    fn parse_all(text: &str) -> PyResult<Vec<Self>> {
        parse_trust_relations(text)
            .map(|rs| rs.into_iter().map(PyTrustRelation).collect())
            .map_err(parse_err)
    }

    #[getter]
    fn name(&self) -> String {
        self.0.name.clone()
    }

    fn add_edge(&mut self, truster: &str, trusted: &str, weight: &str) -> PyResult<()> {
        let w = PyWeight::new(weight)?.0;
        self.0.add_edge(actor(truster)?, actor(trusted)?, w).map_err(trust_err)
    }

    /// `(truster, trusted, weight)` triples in file order.
    fn edges(&self) -> Vec<(String, String, PyWeight)> {
        self.0
            .edges()
            .map(|e| (e.truster.to_string(), e.trusted.to_string(), PyWeight(e.weight)))
            .collect()
    }

    fn weight(&self, truster: &str, trusted: &str) -> PyResult<Option<PyWeight>> {
        Ok(self.0.weight(&actor(truster)?, &actor(trusted)?).map(PyWeight))
    }

    /// Highest-weight path as `(weight, [actors])`, or `None` if unreachable.
    fn best(&self, source: &str, target: &str) -> PyResult<Option<(PyWeight, Vec<String>)>> {
        let found = best_trust(&self.0, &actor(source)?, &actor(target)?);
        Ok(found.map(|(w, path)| (PyWeight(w), path.iter().map(ToString::to_string).collect())))
    }

    fn path_weight(&self, path: Vec<String>) -> PyResult<PyWeight> {
        let actors = path.iter().map(|s| actor(s)).collect::<PyResult<Vec<_>>>()?;
        path_weight(&self.0, &actors).map(PyWeight).map_err(trust_err)
    }

    /// The judgement as held by `truster`, who trusts its actor.
    fn apply(&self, judgement: JudgementArg<'_>, truster: &str) -> PyResult<PyJudgement> {
        veracity_core::apply_trust(&judgement.get()?, &self.0, &actor(truster)?)
            .map(PyJudgement)
            .map_err(trust_err)
    }

    fn __repr__(&self) -> String {
        format!("TrustRelation({:?}, edges={})", self.0.name, self.0.edge_count())
    }
}

#[pyclass(name = "Violation", module = "veracity", frozen, get_all)]
struct PyViolation {
    path: String,
    code: String,
    message: String,
}

#[pymethods]
impl PyViolation {
    fn __repr__(&self) -> String {
        format!("Violation({:?}, {}, {:?})", self.path, self.code, self.message)
    }
}

#[pyclass(name = "CheckReport", module = "veracity", frozen)]
struct PyCheckReport(CheckReport);

#[pymethods]
impl PyCheckReport {
    #[getter]
    fn ok(&self) -> bool {
        self.0.ok
    }

    #[getter]
    fn violations(&self) -> Vec<PyViolation> {
        self.0
            .violations
            .iter()
            .map(|v| PyViolation {
                path: v.path.clone(),
                code: v.code.to_string(),
                message: v.message.clone(),
            })
            .collect()
    }

    fn __bool__(&self) -> bool {
        self.0.ok
    }

    fn __repr__(&self) -> String {
        format!("CheckReport(ok={}, violations={})", self.0.ok, self.0.violations.len())
    }
}

fn kernel_of(trust: Option<Vec<PyRef<'_, PyTrustRelation>>>) -> Kernel {
    Kernel::with_relations(trust.unwrap_or_default().iter().map(|r| r.0.clone()))
}

#[pyclass(name = "ProofTree", module = "veracity", skip_from_py_object, frozen, eq)]
#[derive(Clone, PartialEq)]
struct PyProofTree(ProofTree);

#[pymethods]
impl PyProofTree {
    /// Reads the JSON tree format.
    #[staticmethod]
    fn from_machine(text: &str) -> PyResult<Self> {
        parse_machine(text).map(PyProofTree).map_err(parse_err)
    }

    fn to_machine(&self) -> String {
        render_machine(&self.0)
    }

    #[getter]
    fn judgement(&self) -> PyJudgement {
        PyJudgement(self.0.judgement().clone())
    }

    /// Open assumptions, in context order.
    #[getter]
    fn assumptions(&self) -> Vec<PyJudgement> {
        self.0.conclusion.assumptions.iter().cloned().map(PyJudgement).collect()
    }

    #[getter]
    fn sequent(&self) -> String {
        self.0.conclusion.to_string()
    }

    #[getter]
    fn rule(&self) -> String {
        self.0.instance.name().to_string()
    }

    #[getter]
    fn premises(&self) -> Vec<PyProofTree> {
        self.0.premises.iter().cloned().map(PyProofTree).collect()
    }

    fn node_count(&self) -> usize {
        self.0.node_count()
    }

    fn depth(&self) -> usize {
        self.0.depth()
    }

    #[pyo3(signature = (trust=None))]
    fn check(&self, trust: Option<Vec<PyRef<'_, PyTrustRelation>>>) -> PyCheckReport {
        PyCheckReport(kernel_of(trust).check(&self.0))
    }

    /// A `scprooftree` derivation. `style` is `"full"` or `"bare"`.
    #[pyo3(signature = (scale="0.8", style="full", trust=None))]
    fn latex(&self, scale: &str, style: &str, trust: Option<Vec<PyRef<'_, PyTrustRelation>>>) -> PyResult<String> {
        let claim_style = match style {
            "full" => ClaimStyle::Full,
            "bare" => ClaimStyle::Bare,
            other => return Err(raise::<VeracityError>("BadArgument", format!("unknown style `{other}`"))),
        };
        let opts = LatexOptions {
            scale: scale.into(),
            claim_style,
        };
        render_latex_with(&self.kernel_for(trust), &self.0, &opts).map_err(kernel_err)
    }

    /// Natural-language outline. `lexicon` maps `actors` and `claims` to display names.
    #[pyo3(signature = (lexicon=None, markdown=false, trust=None))]
    fn nl(
        &self,
        lexicon: Option<BTreeMap<String, BTreeMap<String, String>>>,
        markdown: bool,
        trust: Option<Vec<PyRef<'_, PyTrustRelation>>>,
    ) -> PyResult<String> {
        let mut lex = lexicon.unwrap_or_default();
        let opts = NlOptions {
            lexicon: Lexicon {
                actors: lex.remove("actors").unwrap_or_default(),
                claims: lex.remove("claims").unwrap_or_default(),
            },
            format: if markdown { NlFormat::Markdown } else { NlFormat::Latex },
        };
        render_nl_with(&self.kernel_for(trust), &self.0, &opts).map_err(kernel_err)
    }

    fn __str__(&self) -> String {
        self.0.conclusion.to_string()
    }

    fn __repr__(&self) -> String {
        format!("ProofTree({:?}, nodes={})", self.0.conclusion.to_string(), self.0.node_count())
    }
}

impl PyProofTree {
    /// Without relations, renderers accept the edges the tree cites.
    fn kernel_for(&self, trust: Option<Vec<PyRef<'_, PyTrustRelation>>>) -> Kernel {
        match trust {
            Some(rels) => kernel_of(Some(rels)),
            None => veracity_core::render::kernel_from_cited_edges(&self.0),
        }
    }
}

/// Builds proof trees one rule at a time.
#[pyclass(name = "Kernel", module = "veracity", frozen)]
struct PyKernel(Kernel);

#[pymethods]
impl PyKernel {
    #[new]
    #[pyo3(signature = (trust=None))]
    fn new(trust: Option<Vec<PyRef<'_, PyTrustRelation>>>) -> Self {
        PyKernel(kernel_of(trust))
    }

    /// Applies `rule` to `premises`. Rule parameters are keyword arguments given
    /// as text, e.g. `apply("ImplIntro", [t], var="x", antecedent="A")`.
    #[pyo3(signature = (rule, premises=Vec::new(), **params))]
    fn apply(
        &self,
        rule: &str,
        premises: Vec<PyRef<'_, PyProofTree>>,
        params: Option<&Bound<'_, PyDict>>,
    ) -> PyResult<PyProofTree> {
        let name: RuleName = rule
            .parse()
            .map_err(|e| raise::<VeracityError>("UnknownRule", e))?;
        let mut obj = serde_json::Map::new();
        obj.insert("rule".into(), name.to_string().into());
        if let Some(params) = params.filter(|p| !p.is_empty()) {
            let mut p = serde_json::Map::new();
            for (k, v) in params.iter() {
                p.insert(k.str()?.to_string(), v.str()?.to_string().into());
            }
            obj.insert("params".into(), p.into());
        }
        let instance: RuleInstance = serde_json::from_value(obj.into())
            .map_err(|e| raise::<VeracityParseError>(ErrorCode::ParseError, format!("{name}: {e}")))?;
        let premises = premises.iter().map(|p| p.0.clone()).collect();
        self.0.apply(instance, premises).map(PyProofTree).map_err(kernel_err)
    }

    /// A one-node proof of `judgement` from itself.
    fn assume(&self, judgement: JudgementArg<'_>) -> PyResult<PyProofTree> {
        let instance = RuleInstance::Assume {
            judgement: judgement.get()?,
        };
        self.0.apply(instance, Vec::new()).map(PyProofTree).map_err(kernel_err)
    }

    fn check(&self, tree: PyRef<'_, PyProofTree>) -> PyCheckReport {
        PyCheckReport(self.0.check(&tree.0))
    }
}

/// Search settings, read from the `.vcfg` format.
#[pyclass(name = "Config", module = "veracity", skip_from_py_object, str)]
#[derive(Clone)]
struct PyConfig(StepConfig);

impl std::fmt::Display for PyConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&print_config(&self.0))
    }
}

#[pymethods]
impl PyConfig {
    #[new]
    #[pyo3(signature = (text=None))]
    fn new(text: Option<&str>) -> PyResult<Self> {
        match text {
            Some(t) => parse_config(t).map(PyConfig).map_err(parse_err),
            None => Ok(PyConfig(StepConfig::default())),
        }
    }

    #[getter]
    fn get_depth(&self) -> usize {
        self.0.depth
    }

    #[setter]
    fn set_depth(&mut self, depth: usize) {
        self.0.depth = depth;
    }

    #[getter]
    fn get_max_proofs(&self) -> usize {
        self.0.max_proofs
    }

    #[setter]
    fn set_max_proofs(&mut self, n: usize) {
        self.0.max_proofs = n;
    }

    fn add_assumable(&mut self, judgement: JudgementArg<'_>) -> PyResult<()> {
        self.0.assumables.push(judgement.get()?);
        Ok(())
    }

    fn add_trust(&mut self, relation: PyRef<'_, PyTrustRelation>) {
        self.0.trust.push(relation.0.clone());
    }

    #[getter]
    fn rules(&self) -> Vec<String> {
        self.0.rules.iter().map(ToString::to_string).collect()
    }
}

/// Every proof of `goal` within the configured depth, shallowest first. The
/// goal's evidence and weight are ignored.
#[pyfunction]
#[pyo3(signature = (goal, config=None))]
fn search(py: Python<'_>, goal: JudgementArg<'_>, config: Option<PyRef<'_, PyConfig>>) -> PyResult<Vec<PyProofTree>> {
    let goal = goal.get()?;
    let cfg = config.map(|c| c.0.clone()).unwrap_or_default();
    let found = py.detach(move || veracity_core::search(&cfg, &goal));
    Ok(found.into_iter().map(PyProofTree).collect())
}

/// Normal form of an evidence term, printed.
#[pyfunction]
#[pyo3(signature = (evidence, fuel=10_000))]
fn normalize_evidence(evidence: &str, fuel: usize) -> PyResult<String> {
    let e = parse_evidence(evidence).map_err(parse_err)?;
    normalize(&e, fuel)
        .map(|n| n.to_string())
        .map_err(|err| raise::<VeracityError>("NormalizeError", err))
}

/// `"chain"`, `"star"` or `"equal"`: which of a chain of edge weights and a single
/// direct edge conveys more trust.
#[pyfunction]
fn chain_or_star(chain: Vec<String>, star: &str) -> PyResult<&'static str> {
    let chain = chain.iter().map(|w| PyWeight::new(w).map(|p| p.0)).collect::<PyResult<Vec<_>>>()?;
    Ok(match compare_chain_star(&chain, &PyWeight::new(star)?.0) {
        ChainStar::ChainBetter => "chain",
        ChainStar::StarBetter => "star",
        ChainStar::Equal => "equal",
    })
}

#[pymodule]
fn veracity(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("VeracityError", py.get_type::<VeracityError>())?;
    m.add("ParseError", py.get_type::<VeracityParseError>())?;
    m.add("KernelError", py.get_type::<VeracityKernelError>())?;
    m.add("TrustError", py.get_type::<VeracityTrustError>())?;
    m.add_class::<PyClaim>()?;
    m.add_class::<PyWeight>()?;
    m.add_class::<PyJudgement>()?;
    m.add_class::<PyTrustRelation>()?;
    m.add_class::<PyViolation>()?;
    m.add_class::<PyCheckReport>()?;
    m.add_class::<PyProofTree>()?;
    m.add_class::<PyKernel>()?;
    m.add_class::<PyConfig>()?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add_function(wrap_pyfunction!(normalize_evidence, m)?)?;
    m.add_function(wrap_pyfunction!(chain_or_star, m)?)?;
    Ok(())
}
