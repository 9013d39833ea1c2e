use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;
use veracity_service::{router_with, AppState};

const THREE_CLAIMS_GOAL: &str = "e ^ P in C3 -> C2 -> C1 -> (C1 /\\ C2) /\\ C3";

fn golden(name: &str) -> String {
    let path = format!("{}/../core/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

struct Client {
    app: Router,
}

impl Client {
    fn new() -> Self {
        Client {
            app: router_with(AppState::default()),
        }
    }

    async fn send(&self, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, String) {
        let req = Request::builder().method(method).uri(uri);
        let req = match body {
            Some(b) => req
                .header("content-type", "application/json")
                .body(Body::from(b.to_string()))
                .unwrap(),
            None => req.body(Body::empty()).unwrap(),
        };
        let res = self.app.clone().oneshot(req).await.unwrap();
        let status = res.status();
        let bytes = res.into_body().collect().await.unwrap().to_bytes();
        (status, String::from_utf8(bytes.to_vec()).unwrap())
    }

    async fn json(&self, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
        let (status, text) = self.send(method, uri, body).await;
        (status, serde_json::from_str(&text).unwrap_or(Value::String(text)))
    }

    async fn create(&self, body: Value) -> String {
        let (status, v) = self.json("POST", "/sessions", Some(body)).await;
        assert_eq!(status, StatusCode::CREATED, "{v}");
        v["id"].as_str().unwrap().to_string()
    }

    /// Picks a candidate the way a user would: by rule name, and for `Assume`
    /// by the judgement it assumes.
    async fn apply(&self, id: &str, hole: &str, rule: &str, detail: Option<&str>, binders: &[&str]) -> Value {
        let (status, rules) = self.json("GET", &format!("/sessions/{id}/holes/{hole}/rules"), None).await;
        assert_eq!(status, StatusCode::OK, "{rules}");
        let pick = rules
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["rule"] == rule && detail.is_none_or(|d| c["params"]["judgement"] == d))
            .unwrap_or_else(|| panic!("no {rule} candidate at {hole}: {rules}"));
        let mut body = json!({ "candidate": pick["id"] });
        if !binders.is_empty() {
            body["binders"] = json!(binders);
        }
        let (status, v) = self.json("POST", &format!("/sessions/{id}/holes/{hole}/apply"), Some(body)).await;
        assert_eq!(status, StatusCode::OK, "{v}");
        v
    }
}

async fn build_three_claims(c: &Client, id: &str) -> Value {
    c.apply(id, "root", "ImplIntro", None, &["z"]).await;
    c.apply(id, "root.0", "ImplIntro", None, &["y"]).await;
    c.apply(id, "root.0.0", "ImplIntro", None, &["x"]).await;
    c.apply(id, "root.0.0.0", "AndIntro", None, &[]).await;
    c.apply(id, "root.0.0.0.0", "AndIntro", None, &[]).await;
    c.apply(id, "root.0.0.0.0.0", "Assume", Some("?x ^ P in C1"), &[]).await;
    c.apply(id, "root.0.0.0.0.1", "Assume", Some("?y ^ P in C2"), &[]).await;
    c.apply(id, "root.0.0.0.1", "Assume", Some("?z ^ P in C3"), &[]).await
}

fn three_claims_lexicon() -> Value {
    json!({
        "actors": { "P": "Penelope" },
        "claims": { "C1": "claim 1", "C2": "claim 2", "C3": "claim 3" }
    })
}

#[tokio::test]
async fn rebuild_by_hand_exports_the_golden_derivation() {
    let c = Client::new();
    let id = c.create(json!({ "goal": THREE_CLAIMS_GOAL, "lexicon": three_claims_lexicon() })).await;
    let done = build_three_claims(&c, &id).await;
    assert_eq!(done["complete"], true);
    assert_eq!(done["history"], 8);
    assert!(done["holes"].as_array().unwrap().is_empty());
    assert_eq!(done["tree"]["conclusion"], "|- \\z. \\y. \\x. ((x, y), z) ^ P in C3 -> C2 -> C1 -> C1 /\\ C2 /\\ C3");

    let (status, tex) = c.send("GET", &format!("/sessions/{id}/export?format=latex"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(tex, golden("three_claims.tex").trim_end());

    let (status, nl) = c.send("GET", &format!("/sessions/{id}/export?format=nl"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(nl, golden("three_claims_nl.tex"));

    let (status, doc) = c.send("GET", &format!("/sessions/{id}/export?format=machine"), None).await;
    assert_eq!(status, StatusCode::OK);
    let tree = veracity_core::parse_machine(&doc).unwrap();
    assert!(veracity_core::check(&tree).ok);
}

#[tokio::test]
async fn session_starts_with_one_hole() {
    let c = Client::new();
    let id = c.create(json!({ "goal": THREE_CLAIMS_GOAL })).await;
    let (status, v) = c.json("GET", &format!("/sessions/{id}/holes"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(v, json!([{ "id": "root", "goal": { "actor": "P", "claim": "C3 -> C2 -> C1 -> C1 /\\ C2 /\\ C3", "hypotheses": [] } }]));
    let (_, rules) = c.json("GET", &format!("/sessions/{id}/holes/root/rules"), None).await;
    assert!(rules.as_array().unwrap().iter().any(|r| r["rule"] == "ImplIntro"));
}

#[tokio::test]
async fn assumable_claims_offer_assume() {
    let c = Client::new();
    let id = c
        .create(json!({ "goal": "e ^ a1 in C", "config": "assume:\n  e ^ a1 in C\n" }))
        .await;
    let (_, rules) = c.json("GET", &format!("/sessions/{id}/holes/root/rules"), None).await;
    assert_eq!(rules[0]["rule"], "Assume");
    assert_eq!(rules[0]["params"]["judgement"], "e ^ a1 in C");
}

#[tokio::test]
async fn bottom_with_empty_config_has_no_candidates() {
    let c = Client::new();
    let id = c.create(json!({ "goal": "e ^ P in _|_" })).await;
    let (status, rules) = c.json("GET", &format!("/sessions/{id}/holes/root/rules"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(rules, json!([]));
}

#[tokio::test]
async fn undo_restores_the_exact_state() {
    let c = Client::new();
    let id = c.create(json!({ "goal": THREE_CLAIMS_GOAL })).await;
    let (_, before) = c.send("GET", &format!("/sessions/{id}"), None).await;
    c.apply(&id, "root", "ImplIntro", None, &["z"]).await;
    let (status, _) = c.send("POST", &format!("/sessions/{id}/undo"), None).await;
    assert_eq!(status, StatusCode::OK);
    let (_, after) = c.send("GET", &format!("/sessions/{id}"), None).await;
    assert_eq!(before, after);
    let (status, v) = c.json("POST", &format!("/sessions/{id}/undo"), None).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(v["code"], "NothingToUndo");
}

#[tokio::test]
async fn undo_walks_back_through_a_whole_proof() {
    let c = Client::new();
    let id = c.create(json!({ "goal": THREE_CLAIMS_GOAL })).await;
    let (_, initial) = c.send("GET", &format!("/sessions/{id}"), None).await;
    build_three_claims(&c, &id).await;
    for _ in 0..8 {
        let (status, _) = c.send("POST", &format!("/sessions/{id}/undo"), None).await;
        assert_eq!(status, StatusCode::OK);
    }
    let (_, now) = c.send("GET", &format!("/sessions/{id}"), None).await;
    assert_eq!(now, initial);
}

#[tokio::test]
async fn export_needs_a_complete_proof() {
    let c = Client::new();
    let id = c.create(json!({ "goal": THREE_CLAIMS_GOAL })).await;
    c.apply(&id, "root", "ImplIntro", None, &[]).await;
    let (status, v) = c.json("GET", &format!("/sessions/{id}/export?format=latex"), None).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(v["code"], "Incomplete");
    assert!(v.get("message").is_some() && v.get("path").is_some());
}

#[tokio::test]
async fn bad_goals_are_rejected_with_diagnostics() {
    let c = Client::new();
    let (status, v) = c.json("POST", "/sessions", Some(json!({ "goal": "e ^ P in (A /\\" }))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["code"], "ParseError");
    assert_eq!(v["path"], "goal");

    let (status, v) = c.json("POST", "/sessions", Some(json!({ "goal": "e ^ P @ 1.5 in A" }))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["code"], "WeightOutOfRange");

    let (status, v) = c
        .json("POST", "/sessions", Some(json!({ "goal": "e ^ P in A", "config": "depth: 0\n" })))
        .await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["path"], "config");

    let (status, v) = c.json("POST", "/sessions", Some(json!({ "goal": "e ^ P in A", "extra": 1 }))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["code"], "BadRequest");
}

#[tokio::test]
async fn unknown_ids_are_404() {
    let c = Client::new();
    let (status, v) = c.json("GET", "/sessions/nope", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(v["code"], "UnknownSession");

    let id = c.create(json!({ "goal": THREE_CLAIMS_GOAL })).await;
    let (status, v) = c.json("GET", &format!("/sessions/{id}/holes/root.3/rules"), None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(v["code"], "UnknownHole");

    let (status, v) = c
        .json("POST", &format!("/sessions/{id}/holes/root/apply"), Some(json!({ "candidate": 99 })))
        .await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(v["code"], "UnknownCandidate");

    // Filled positions are no longer holes.
    c.apply(&id, "root", "ImplIntro", None, &[]).await;
    let (status, _) = c.json("GET", &format!("/sessions/{id}/holes/root/rules"), None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn binder_names_are_validated() {
    let c = Client::new();
    let id = c.create(json!({ "goal": THREE_CLAIMS_GOAL })).await;
    let (status, v) = c
        .json(
            "POST",
            &format!("/sessions/{id}/holes/root/apply"),
            Some(json!({ "candidate": "0", "binders": ["a", "b"] })),
        )
        .await;
    assert_eq!(status, StatusCode::BAD_REQUEST, "{v}");
    assert_eq!(v["code"], "InvalidBinders");
}

#[tokio::test(flavor = "multi_thread", worker_threads = 4)]
async fn concurrent_applies_to_one_hole_serialise() {
    let c = std::sync::Arc::new(Client::new());
    let id = c.create(json!({ "goal": "e ^ P in A /\\ B" })).await;
    let mut tasks = Vec::new();
    for _ in 0..16 {
        let (c, id) = (c.clone(), id.clone());
        tasks.push(tokio::spawn(async move {
            c.send("POST", &format!("/sessions/{id}/holes/root/apply"), Some(json!({ "candidate": 0 })))
                .await
                .0
        }));
    }
    let mut ok = 0;
    for t in tasks {
        match t.await.unwrap() {
            StatusCode::OK => ok += 1,
            s => assert_eq!(s, StatusCode::NOT_FOUND),
        }
    }
    assert_eq!(ok, 1);
    let (_, v) = c.json("GET", &format!("/sessions/{id}"), None).await;
    assert_eq!(v["history"], 1);
}

#[tokio::test]
async fn stateless_search_finds_the_four_proofs() {
    let c = Client::new();
    let body = json!({
        "goal": "e ^ a1 in (C /\\ C) /\\ (C /\\ C)",
        "config": "assume:\n  e ^ a1 in C\n  e ^ a1 in C /\\ C\nrules: Assume, AndIntro\ndepth: 3\n",
        "format": "latex",
        "style": "bare",
        "scale": "0.8",
    });
    let (status, v) = c.json("POST", "/search", Some(body)).await;
    assert_eq!(status, StatusCode::OK, "{v}");
    assert_eq!(v["count"], 4);
    let proofs = v["proofs"].as_array().unwrap();
    assert_eq!(proofs[1]["rendering"].as_str().unwrap(), golden("quad_2.tex").trim_end());
    let evidence: Vec<&str> = proofs.iter().map(|p| p["judgement"].as_str().unwrap()).collect();
    assert_eq!(
        evidence,
        [
            "(e, e) ^ a1 in C /\\ C /\\ (C /\\ C)",
            "((e, e), e) ^ a1 in C /\\ C /\\ (C /\\ C)",
            "(e, (e, e)) ^ a1 in C /\\ C /\\ (C /\\ C)",
            "((e, e), (e, e)) ^ a1 in C /\\ C /\\ (C /\\ C)",
        ]
    );
}

#[tokio::test]
async fn search_reports_parse_errors() {
    let c = Client::new();
    let (status, v) = c
        .json("POST", "/search", Some(json!({ "goal": "e ^ P in A", "config": "rules: Frobnicate\n" })))
        .await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(v["path"], "config");
}

#[tokio::test]
async fn trust_sessions_use_the_configured_relation() {
    let c = Client::new();
    let id = c
        .create(json!({
            "goal": "e ^ k in A",
            "config": "assume:\n  a ^ m in A\ntrust:\n  relation T\n  k T[0.5] l\n  l T[0.4] m\n",
        }))
        .await;
    c.apply(&id, "root", "Trust", None, &[]).await;
    c.apply(&id, "root.0", "Trust", None, &[]).await;
    let v = c.apply(&id, "root.0.0", "Assume", Some("a ^ m in A"), &[]).await;
    assert_eq!(v["tree"]["conclusion"], "a ^ m in A |- a ^ k @ 0.2 in A");
    let (_, tex) = c.send("GET", &format!("/sessions/{id}/export?format=latex"), None).await;
    assert_eq!(tex, golden("trust_chain.tex").trim_end());
}
