//! Driving the HTTP API in-process: create a session, ask for hints and
//! follow them until every lamp is on.

use std::time::Duration;

use axum::body::Body;
use axum::http::Request;
use http_body_util::BodyExt;
use regsel::service::{router, AppState};
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(state: &AppState, method: &str, uri: &str, body: Value) -> Value {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(Body::from(body.to_string()))
        .unwrap();
    let resp = router(state.clone()).oneshot(req).await.unwrap();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    serde_json::from_slice(&bytes).unwrap_or(Value::Null)
}

#[tokio::main]
async fn main() {
    let state = AppState::new(Duration::from_secs(600), None);
    let board = json!({ "diagram": "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]", "lamps": { "1": 0 } });
    let session = call(&state, "POST", "/api/v1/session", board).await;
    let id = session["id"].as_str().unwrap().to_string();
    println!("session {id}: lamps {}", session["lamps"]);

    loop {
        let hint = call(&state, "GET", &format!("/api/v1/session/{id}/hint"), Value::Null).await;
        let Some(region) = hint["region"].as_u64() else { break };
        let after = call(&state, "POST", &format!("/api/v1/session/{id}/move"), json!({ "region": region })).await;
        println!("region {region} -> lamps {}", after["lamps"]);
        if after["cleared"] == true {
            println!("all lamps on");
            break;
        }
    }
}
