//! Interactive proof sessions over HTTP.
//!
//! | method | path                                   | body / query                         |
//! |--------|----------------------------------------|--------------------------------------|
//! | POST   | `/sessions`                            | `{goal, config?, lexicon?}`          |
//! | GET    | `/sessions/{id}`                       |                                      |
//! | GET    | `/sessions/{id}/holes`                 |                                      |
//! | GET    | `/sessions/{id}/holes/{h}/rules`       |                                      |
//! | POST   | `/sessions/{id}/holes/{h}/apply`       | `{candidate, binders?}`              |
//! | POST   | `/sessions/{id}/undo`                  |                                      |
//! | GET    | `/sessions/{id}/export`                | `?format=latex\|nl\|machine&scale=&style=` |
//! | POST   | `/search`                              | `{goal, config?, format?, scale?}`   |
//!
//! Holes are addressed by path (`root`, `root.0.1`); candidates by their position
//! in the rule list for that hole. `config` is the text of a `.vcfg` file.

mod problem;
mod views;

use std::collections::HashMap;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::{Arc, RwLock};

use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::{json, Value};
use veracity_core::kernel::{parse_path, path_string};
use veracity_core::render::{render_latex_with, render_nl_with};
use veracity_core::search::rename_binders;
use veracity_core::{
    parse_config, parse_judgement, render_machine, step, ClaimStyle, EvidenceVar, Goal, Judgement, LatexOptions,
    Lexicon, NlFormat, NlOptions, PartialProof, ProofTree, StepConfig,
};

pub use problem::Problem;
use views::{node_view, CandidateView, HoleView, SessionView};

/// One interactive construction: the goal, what search steps may use, the tree
/// so far and every earlier state.
#[derive(Debug, Clone)]
pub struct Session {
    pub id: String,
    pub goal: Judgement,
    pub config: StepConfig,
    pub lexicon: Lexicon,
    pub current: PartialProof,
    pub history: Vec<PartialProof>,
}

impl Session {
    fn view(&self) -> SessionView {
        let kernel = self.config.kernel();
        SessionView {
            id: self.id.clone(),
            goal: self.goal.to_string(),
            complete: self.current.is_complete(),
            holes: holes(&self.current),
            history: self.history.len(),
            tree: node_view(&self.current, &kernel, &mut Vec::new()),
        }
    }

    fn hole_goal(&self, hole: &str) -> Result<(Vec<usize>, Goal), Problem> {
        let missing = || Problem::not_found("UnknownHole", format!("no hole at `{hole}`"), hole);
        let path = parse_path(hole).ok_or_else(missing)?;
        match self.current.at(&path) {
            Some(PartialProof::Hole(g)) => Ok((path, g.clone())),
            _ => Err(missing()),
        }
    }

    fn finished(&self) -> Result<ProofTree, Problem> {
        self.current
            .to_proof_tree(&self.config.kernel())
            .map_err(|e| Problem::build(&e))
    }
}

fn holes(p: &PartialProof) -> Vec<HoleView> {
    p.holes()
        .into_iter()
        .map(|(path, g)| HoleView {
            id: path_string(&path),
            goal: g.into(),
        })
        .collect()
}

type SessionRef = Arc<RwLock<Session>>;

#[derive(Clone, Default)]
pub struct AppState {
    sessions: Arc<RwLock<HashMap<String, SessionRef>>>,
}

impl AppState {
    fn session(&self, id: &str) -> Result<SessionRef, Problem> {
        self.sessions
            .read()
            .expect("session map lock")
            .get(id)
            .cloned()
            .ok_or_else(|| Problem::not_found("UnknownSession", format!("no session `{id}`"), format!("/sessions/{id}")))
    }
}

pub fn router() -> Router {
    router_with(AppState::default())
}

pub fn router_with(state: AppState) -> Router {
    Router::new()
        .route("/sessions", post(create_session))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/holes", get(get_holes))
        .route("/sessions/{id}/holes/{hole}/rules", get(get_rules))
        .route("/sessions/{id}/holes/{hole}/apply", post(apply))
        .route("/sessions/{id}/undo", post(undo))
        .route("/sessions/{id}/export", get(export))
        .route("/search", post(search))
        .with_state(state)
}

/// Serves the API, plus static files from `assets` for any other path.
pub async fn serve(addr: SocketAddr, assets: Option<PathBuf>) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    serve_on(listener, assets).await
}

pub async fn serve_on(listener: tokio::net::TcpListener, assets: Option<PathBuf>) -> std::io::Result<()> {
    let mut app = router();
    if let Some(dir) = assets {
        app = app.fallback_service(tower_http::services::ServeDir::new(dir));
    }
    axum::serve(listener, app).await
}

fn parse_body<T: serde::de::DeserializeOwned>(body: &[u8]) -> Result<T, Problem> {
    serde_json::from_slice(body).map_err(|e| Problem::new(StatusCode::BAD_REQUEST, "BadRequest", e.to_string(), "body"))
}

fn goal_and_config(goal: &str, config: Option<&str>) -> Result<(Judgement, StepConfig), Problem> {
    let goal = parse_judgement(goal).map_err(|e| Problem::parse("goal", &e))?;
    let config = match config {
        Some(text) => parse_config(text).map_err(|e| Problem::parse("config", &e))?,
        None => StepConfig::default(),
    };
    Ok((goal, config))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CreateSession {
    goal: String,
    config: Option<String>,
    #[serde(default)]
    lexicon: Lexicon,
}

async fn create_session(State(state): State<AppState>, body: axum::body::Bytes) -> Result<Response, Problem> {
    let req: CreateSession = parse_body(&body)?;
    let (goal, config) = goal_and_config(&req.goal, req.config.as_deref())?;
    let session = Session {
        id: uuid::Uuid::new_v4().simple().to_string(),
        current: PartialProof::Hole(Goal::from_judgement(&goal)),
        goal,
        config,
        lexicon: req.lexicon,
        history: Vec::new(),
    };
    let view = session.view();
    state
        .sessions
        .write()
        .expect("session map lock")
        .insert(session.id.clone(), Arc::new(RwLock::new(session)));
    Ok((StatusCode::CREATED, Json(view)).into_response())
}

async fn get_session(State(state): State<AppState>, Path(id): Path<String>) -> Result<Json<SessionView>, Problem> {
    let s = state.session(&id)?;
    let view = s.read().expect("session lock").view();
    Ok(Json(view))
}

async fn get_holes(State(state): State<AppState>, Path(id): Path<String>) -> Result<Json<Vec<HoleView>>, Problem> {
    let s = state.session(&id)?;
    let h = holes(&s.read().expect("session lock").current);
    Ok(Json(h))
}

async fn get_rules(
    State(state): State<AppState>,
    Path((id, hole)): Path<(String, String)>,
) -> Result<Json<Vec<CandidateView>>, Problem> {
    let s = state.session(&id)?;
    let s = s.read().expect("session lock");
    let (_, goal) = s.hole_goal(&hole)?;
    let rules = step(&s.config, &goal)
        .iter()
        .enumerate()
        .map(|(i, c)| CandidateView::new(i, c))
        .collect();
    Ok(Json(rules))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CandidateRef {
    Index(usize),
    Id(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ApplyRequest {
    candidate: CandidateRef,
    /// Names for the variables the candidate binds, replacing the generated ones.
    #[serde(default)]
    binders: Option<Vec<String>>,
}

async fn apply(
    State(state): State<AppState>,
    Path((id, hole)): Path<(String, String)>,
    body: axum::body::Bytes,
) -> Result<Json<SessionView>, Problem> {
    let req: ApplyRequest = parse_body(&body)?;
    let s = state.session(&id)?;
    let mut s = s.write().expect("session lock");
    let (path, goal) = s.hole_goal(&hole)?;
    let candidates = step(&s.config, &goal);
    let index = match &req.candidate {
        CandidateRef::Index(i) => Some(*i),
        CandidateRef::Id(text) => text.parse().ok(),
    };
    let mut chosen = index.and_then(|i| candidates.get(i)).cloned().ok_or_else(|| {
        Problem::not_found("UnknownCandidate", format!("hole `{hole}` has {} candidates", candidates.len()), &hole)
    })?;
    if let Some(names) = &req.binders {
        let vars = names
            .iter()
            .map(|n| EvidenceVar::new(n.as_str()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Problem::new(StatusCode::BAD_REQUEST, "InvalidBinders", e.to_string(), "binders"))?;
        chosen = rename_binders(&chosen, &vars)
            .map_err(|m| Problem::new(StatusCode::BAD_REQUEST, "InvalidBinders", m, "binders"))?;
    }
    let mut next = s.current.clone();
    next.fill(&path, chosen);
    if next.is_complete() {
        // Never accept a finished tree the kernel would reject.
        next.to_proof_tree(&s.config.kernel()).map_err(|e| Problem::build(&e))?;
    }
    let prev = std::mem::replace(&mut s.current, next);
    s.history.push(prev);
    Ok(Json(s.view()))
}

async fn undo(State(state): State<AppState>, Path(id): Path<String>) -> Result<Json<SessionView>, Problem> {
    let s = state.session(&id)?;
    let mut s = s.write().expect("session lock");
    let prev = s
        .history
        .pop()
        .ok_or_else(|| Problem::new(StatusCode::CONFLICT, "NothingToUndo", "already at the initial state", "root"))?;
    s.current = prev;
    Ok(Json(s.view()))
}

#[derive(Deserialize, Default)]
struct RenderQuery {
    format: Option<String>,
    scale: Option<String>,
    style: Option<String>,
    nl: Option<String>,
}

/// Rendered text and its content type.
fn render(
    tree: &ProofTree,
    config: &StepConfig,
    lexicon: &Lexicon,
    q: &RenderQuery,
) -> Result<(String, &'static str), Problem> {
    let kernel = config.kernel();
    let bad = |field: &str, value: &str| {
        Problem::new(StatusCode::BAD_REQUEST, "BadRequest", format!("unsupported {field} `{value}`"), field)
    };
    match q.format.as_deref().unwrap_or("latex") {
        "latex" => {
            let claim_style = match q.style.as_deref().unwrap_or("full") {
                "full" => ClaimStyle::Full,
                "bare" => ClaimStyle::Bare,
                other => return Err(bad("style", other)),
            };
            let opts = LatexOptions {
                scale: q.scale.clone().unwrap_or_else(|| "0.8".into()),
                claim_style,
            };
            let text = render_latex_with(&kernel, tree, &opts).map_err(|e| Problem::kernel(&e, "root"))?;
            Ok((text, "text/plain; charset=utf-8"))
        }
        "nl" => {
            let format = match q.nl.as_deref().unwrap_or("latex") {
                "latex" => NlFormat::Latex,
                "markdown" => NlFormat::Markdown,
                other => return Err(bad("nl", other)),
            };
            let opts = NlOptions {
                lexicon: lexicon.clone(),
                format,
            };
            let text = render_nl_with(&kernel, tree, &opts).map_err(|e| Problem::kernel(&e, "root"))?;
            Ok((text, "text/plain; charset=utf-8"))
        }
        "machine" => {
            let report = kernel.check(tree);
            if !report.ok {
                return Err(Problem::kernel(&veracity_core::KernelError::InvalidTree(Box::new(report)), "root"));
            }
            Ok((render_machine(tree), "application/json"))
        }
        other => Err(bad("format", other)),
    }
}

async fn export(
    State(state): State<AppState>,
    Path(id): Path<String>,
    Query(q): Query<RenderQuery>,
) -> Result<Response, Problem> {
    let s = state.session(&id)?;
    let s = s.read().expect("session lock");
    let tree = s.finished()?;
    let (text, content_type) = render(&tree, &s.config, &s.lexicon, &q)?;
    Ok(([(header::CONTENT_TYPE, content_type)], text).into_response())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SearchRequest {
    goal: String,
    config: Option<String>,
    format: Option<String>,
    scale: Option<String>,
    style: Option<String>,
}

async fn search(body: axum::body::Bytes) -> Result<Json<Value>, Problem> {
    let req: SearchRequest = parse_body(&body)?;
    let (goal, config) = goal_and_config(&req.goal, req.config.as_deref())?;
    let (cfg, g) = (config.clone(), goal.clone());
    let proofs = tokio::task::spawn_blocking(move || veracity_core::search(&cfg, &g))
        .await
        .map_err(|e| Problem::new(StatusCode::INTERNAL_SERVER_ERROR, "Internal", e.to_string(), "search"))?;
    let query = RenderQuery {
        format: req.format.clone(),
        scale: req.scale,
        style: req.style,
        nl: None,
    };
    let mut out = Vec::with_capacity(proofs.len());
    for t in &proofs {
        let mut entry = json!({ "judgement": t.judgement().to_string(), "sequent": t.conclusion.to_string() });
        if req.format.is_some() {
            let (text, _) = render(t, &config, &Lexicon::default(), &query)?;
            entry["rendering"] = Value::String(text);
        }
        out.push(entry);
    }
    Ok(Json(json!({ "goal": goal.to_string(), "count": proofs.len(), "proofs": out })))
}
