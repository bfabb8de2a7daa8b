use std::time::Duration;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use regsel::service::{router, AppState};
use serde_json::{json, Value};
use tower::ServiceExt;

fn state() -> AppState {
    AppState::new(Duration::from_secs(3600), None)
}

async fn call(state: &AppState, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder().method(method).uri(uri).header("content-type", "application/json");
    let req = req.body(body.map_or_else(Body::empty, |b| Body::from(b.to_string()))).unwrap();
    let resp = router(state.clone()).oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = if bytes.is_empty() { Value::Null } else { serde_json::from_slice(&bytes).unwrap() };
    (status, value)
}

async fn new_session(state: &AppState, board: Value) -> String {
    let (status, body) = call(state, "POST", "/api/v1/session", Some(board)).await;
    assert_eq!(status, StatusCode::CREATED, "{body}");
    body["id"].as_str().unwrap().to_string()
}

#[tokio::test]
async fn play_a_trefoil_to_the_end_by_hints() {
    let s = state();
    let id = new_session(&s, json!({ "diagram": "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]", "lamps": { "0": 0 } })).await;
    let (_, board) = call(&s, "GET", &format!("/api/v1/session/{id}"), None).await;
    assert_eq!(board["kind"], "link");
    assert_eq!(board["regions"], 5);
    assert_eq!(board["lamps"], json!([0, 1, 1]));
    assert_eq!(board["layout"].as_array().unwrap().len(), 5);

    for _ in 0..5 {
        let (status, hint) = call(&s, "GET", &format!("/api/v1/session/{id}/hint"), None).await;
        assert_eq!(status, StatusCode::OK);
        assert_eq!(hint["solvable"], true);
        let Some(region) = hint["region"].as_u64() else { break };
        let (status, after) = call(&s, "POST", &format!("/api/v1/session/{id}/move"), Some(json!({ "region": region }))).await;
        assert_eq!(status, StatusCode::OK);
        if after["cleared"] == true {
            break;
        }
    }
    let (_, board) = call(&s, "GET", &format!("/api/session/{id}"), None).await;
    assert_eq!(board["cleared"], true);
    assert_eq!(board["lamps"], json!([1, 1, 1]));
}

#[tokio::test]
async fn unsolvable_board_hints_with_a_certificate() {
    let s = state();
    let id = new_session(&s, json!({ "fixture": "unsolvable_diamond" })).await;
    let (status, hint) = call(&s, "GET", &format!("/api/v1/session/{id}/hint"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(hint["solvable"], false);
    assert!(!hint["certificate"].as_array().unwrap().is_empty());
}

#[tokio::test]
async fn errors_carry_stable_codes() {
    let s = state();
    let (status, body) = call(&s, "GET", "/api/v1/session/nope", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(body["error"]["code"], "unknown_session");

    let (status, body) = call(&s, "POST", "/api/v1/session", Some(json!({ "diagram": "X[1,2,3]" }))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(body["error"]["code"], "parse_error");

    let (status, body) = call(&s, "POST", "/api/v1/session", Some(json!({ "fixture": "knot_99_1" }))).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(body["error"]["code"], "unknown_fixture");

    let req = Request::builder().method("POST").uri("/api/v1/session").body(Body::from("{not json")).unwrap();
    let resp = router(s.clone()).oneshot(req).await.unwrap();
    assert_eq!(resp.status(), StatusCode::BAD_REQUEST);

    let id = new_session(&s, json!({ "fixture": "knot_3_1" })).await;
    let (status, body) = call(&s, "POST", &format!("/api/v1/session/{id}/move"), Some(json!({ "region": 99 }))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(body["error"]["code"], "unknown_region");
}

#[tokio::test]
async fn delete_removes_the_session() {
    let s = state();
    let id = new_session(&s, json!({ "fixture": "link_hopf" })).await;
    assert_eq!(s.session_count(), 1);
    let (status, _) = call(&s, "DELETE", &format!("/api/v1/session/{id}"), None).await;
    assert_eq!(status, StatusCode::NO_CONTENT);
    let (status, _) = call(&s, "GET", &format!("/api/v1/session/{id}"), None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
}

#[tokio::test]
async fn idle_sessions_expire() {
    let s = AppState::new(Duration::ZERO, None);
    new_session(&s, json!({ "fixture": "knot_3_1" })).await;
    std::thread::sleep(Duration::from_millis(5));
    s.expire();
    assert_eq!(s.session_count(), 0);
}

#[tokio::test]
async fn snapshot_round_trip_replays_history() {
    let s = state();
    let id = new_session(&s, json!({ "fixture": "knot_4_1" })).await;
    call(&s, "POST", &format!("/api/v1/session/{id}/move"), Some(json!({ "region": 2 }))).await;
    let (_, before) = call(&s, "GET", &format!("/api/v1/session/{id}"), None).await;

    let restored = state();
    restored.restore(s.snapshot()).unwrap();
    let (_, after) = call(&restored, "GET", &format!("/api/v1/session/{id}"), None).await;
    assert_eq!(before["lamps"], after["lamps"]);
    assert_eq!(after["history"], json!([2]));
}

#[tokio::test]
async fn stateless_analyze() {
    let s = state();
    let (status, r) = call(&s, "GET", "/api/v1/analyze?fixture=seven_lamp_system", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(r["per_site"][0]["changeable"]["solvable"], false);

    let board = json!({ "diagram": "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]" }).to_string();
    let uri = format!("/api/analyze?board={}", urlencode(&board));
    let (status, r) = call(&s, "GET", &uri, None).await;
    assert_eq!(status, StatusCode::OK, "{r}");
    assert_eq!(r["kind"], "link");
    assert_eq!(r["tangle"]["components"].as_array().unwrap().len(), 1);

    let (status, r) = call(&s, "POST", "/api/v1/analyze", Some(json!({ "fixture": "kite_vertex" }))).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(r["foldability"]["pass"], false);

    let (status, r) = call(&s, "GET", "/api/v1/analyze", None).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(r["error"]["code"], "missing_board");
}

fn urlencode(s: &str) -> String {
    s.bytes()
        .map(|b| match b {
            b'A'..=b'Z' | b'a'..=b'z' | b'0'..=b'9' | b'-' | b'_' | b'.' => (b as char).to_string(),
            _ => format!("%{b:02X}"),
        })
        .collect()
}
