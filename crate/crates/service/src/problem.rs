use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use serde::Serialize;
use veracity_core::search::IncompleteOrInvalid;
use veracity_core::{KernelError, ParseError};

/// Error body: `{code, message, path}`. `path` names the request field, hole or
/// proof node the error is about.
#[derive(Debug, Clone, Serialize)]
pub struct Problem {
    #[serde(skip)]
    pub status: StatusCode,
    pub code: String,
    pub message: String,
    pub path: String,
}

impl Problem {
    pub fn new(status: StatusCode, code: impl Into<String>, message: impl Into<String>, path: impl Into<String>) -> Self {
        Problem {
            status,
            code: code.into(),
            message: message.into(),
            path: path.into(),
        }
    }

    pub fn parse(field: &str, e: &ParseError) -> Self {
        Problem::new(StatusCode::BAD_REQUEST, e.code.to_string(), e.to_string(), field)
    }

    pub fn not_found(code: &str, message: impl Into<String>, path: impl Into<String>) -> Self {
        Problem::new(StatusCode::NOT_FOUND, code, message, path)
    }

    pub fn kernel(e: &KernelError, path: &str) -> Self {
        match e {
            KernelError::InvalidTree(report) => match report.violations.first() {
                Some(v) => Problem::new(StatusCode::UNPROCESSABLE_ENTITY, v.code.to_string(), &v.message, &v.path),
                None => Problem::new(StatusCode::UNPROCESSABLE_ENTITY, e.code().to_string(), e.to_string(), path),
            },
            _ => Problem::new(StatusCode::UNPROCESSABLE_ENTITY, e.code().to_string(), e.to_string(), path),
        }
    }

    pub fn build(e: &IncompleteOrInvalid) -> Self {
        match e {
            IncompleteOrInvalid::Incomplete => {
                Problem::new(StatusCode::CONFLICT, "Incomplete", "the proof still has holes", "root")
            }
            IncompleteOrInvalid::Invalid(k) => Problem::kernel(k, "root"),
        }
    }
}

impl IntoResponse for Problem {
    fn into_response(self) -> Response {
        let body = serde_json::to_string(&self).expect("problems serialise");
        (self.status, [(header::CONTENT_TYPE, "application/problem+json")], body).into_response()
    }
}
