//! HTTP session service for interactive play.
//!
//! Routes live under `/api/v1`, mirrored at `/api`. Every payload is JSON
//! and every failure is `{"error": {"code", "message"}}` with a stable code.
//! Sessions are held in memory, expire after an idle period and can be
//! written to a snapshot file on shutdown.

use std::collections::HashMap;
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use axum::body::Bytes;
use axum::extract::{Path as UrlPath, Query, State};
use axum::http::{header, StatusCode, Uri};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::{analyze, AnalysisReport};
use crate::diagram::{BoardFile, BoardSource, LampBoard};
use crate::error::Error;
use crate::fixtures;
use crate::game::GameInstance;
use crate::layout::{region_outlines, RegionOutline};

pub const DEFAULT_IDLE: Duration = Duration::from_secs(24 * 60 * 60);
pub const DEFAULT_PORT: u16 = 8080;

#[derive(Clone, Debug)]
pub struct ServiceConfig {
    pub port: u16,
    pub static_dir: Option<PathBuf>,
    pub idle: Duration,
    pub snapshot: Option<PathBuf>,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig { port: DEFAULT_PORT, static_dir: None, idle: DEFAULT_IDLE, snapshot: None }
    }
}

struct Session {
    initial: LampBoard,
    game: GameInstance,
    created: u64,
    updated: u64,
    touched: Instant,
}

fn unix_now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

impl Session {
    fn new(board: LampBoard) -> Self {
        let now = unix_now();
        Session { game: GameInstance::new(board.clone()), initial: board, created: now, updated: now, touched: Instant::now() }
    }
}

#[derive(Clone)]
pub struct AppState {
    sessions: Arc<RwLock<HashMap<String, Arc<Mutex<Session>>>>>,
    idle: Duration,
    static_dir: Option<PathBuf>,
}

impl AppState {
    pub fn new(idle: Duration, static_dir: Option<PathBuf>) -> Self {
        AppState { sessions: Arc::default(), idle, static_dir }
    }

    fn session(&self, id: &str) -> Result<Arc<Mutex<Session>>, ApiError> {
        self.expire();
        self.sessions
            .read()
            .expect("session table")
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, "unknown_session", format!("no session {id}")))
    }

    /// Drops sessions idle for longer than the configured period.
    pub fn expire(&self) {
        let idle = self.idle;
        self.sessions
            .write()
            .expect("session table")
            .retain(|_, s| s.lock().is_ok_and(|s| s.touched.elapsed() <= idle));
    }

    pub fn session_count(&self) -> usize {
        self.sessions.read().expect("session table").len()
    }

    /// Saved sessions: the initial board and the moves played since.
    pub fn snapshot(&self) -> Snapshot {
        let sessions = self.sessions.read().expect("session table");
        let mut saved: Vec<SavedSession> = sessions
            .iter()
            .map(|(id, s)| {
                let s = s.lock().expect("session");
                SavedSession {
                    id: id.clone(),
                    board: s.initial.to_file(),
                    history: s.game.history().to_vec(),
                    created: s.created,
                    updated: s.updated,
                }
            })
            .collect();
        saved.sort_by(|a, b| a.id.cmp(&b.id));
        Snapshot { sessions: saved }
    }

    /// Restores sessions by replaying their histories.
    pub fn restore(&self, snapshot: Snapshot) -> crate::Result<()> {
        let mut table = self.sessions.write().expect("session table");
        for saved in snapshot.sessions {
            let initial = saved.board.into_board()?;
            let mut game = GameInstance::new(initial.clone());
            for &r in &saved.history {
                game = game.apply_rcc(r)?;
            }
            let session = Session { initial, game, created: saved.created, updated: saved.updated, touched: Instant::now() };
            table.insert(saved.id, Arc::new(Mutex::new(session)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SavedSession {
    pub id: String,
    pub board: BoardFile,
    pub history: Vec<usize>,
    pub created: u64,
    pub updated: u64,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Snapshot {
    pub sessions: Vec<SavedSession>,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    code: &'static str,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, code: &'static str, message: impl Into<String>) -> Self {
        ApiError { status, code, message: message.into() }
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownRegion(_) => "unknown_region",
            Error::UnknownSite(_) => "unknown_site",
            Error::Parse { .. } => "parse_error",
            _ => "invalid_board",
        };
        let status = if code == "invalid_board" { StatusCode::UNPROCESSABLE_ENTITY } else { StatusCode::BAD_REQUEST };
        ApiError::new(status, code, e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({ "error": { "code": self.code, "message": self.message } }))).into_response()
    }
}

type ApiResult<T> = Result<T, ApiError>;

fn parse_json<T: serde::de::DeserializeOwned>(body: &[u8]) -> ApiResult<T> {
    serde_json::from_slice(body).map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "invalid_json", e.to_string()))
}

/// Bundled boards by name: PD and FOLD fixtures plus the two lamp boards.
pub fn fixture_board(name: &str) -> Option<LampBoard> {
    match name {
        "seven_lamp_system" => Some(fixtures::seven_lamp_board()),
        "unsolvable_diamond" => Some(fixtures::unsolvable_diamond_board()),
        "lamp_linking_diamond" => Some(fixtures::lamp_linking_board()),
        _ if fixtures::pd_text(name).is_some() => Some(LampBoard::new(BoardSource::Link(fixtures::link(name)))),
        _ if fixtures::fold_text(name).is_some() => Some(LampBoard::new(BoardSource::Pattern(fixtures::pattern(name)))),
        _ => None,
    }
}

/// A board file, or `{"fixture": name}`.
fn board_from_value(value: Value) -> ApiResult<LampBoard> {
    if let Some(name) = value.get("fixture").and_then(Value::as_str) {
        return fixture_board(name)
            .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, "unknown_fixture", format!("no fixture {name}")));
    }
    if value.get("diagram").is_none() {
        return Err(ApiError::new(StatusCode::BAD_REQUEST, "missing_board", "expected `diagram` or `fixture`"));
    }
    let file: BoardFile = serde_json::from_value(value)
        .map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "invalid_json", e.to_string()))?;
    Ok(file.into_board()?)
}

#[derive(Serialize)]
struct BoardView {
    id: String,
    kind: &'static str,
    /// Map vertex per lamp site; site ids for matrix boards.
    sites: Vec<usize>,
    regions: usize,
    lamps: Vec<u8>,
    history: Vec<usize>,
    cleared: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    layout: Option<Vec<RegionOutline>>,
    created: u64,
    updated: u64,
}

fn lamp_bits(game: &GameInstance) -> Vec<u8> {
    game.lamps().to_bools().into_iter().map(u8::from).collect()
}

fn view(id: &str, s: &Session) -> BoardView {
    let board = s.game.board();
    BoardView {
        id: id.to_string(),
        kind: match board.source() {
            BoardSource::Link(_) => "link",
            BoardSource::Pattern(_) => "pattern",
            BoardSource::Matrix(_) => "matrix",
        },
        sites: board.lamp_sites().to_vec(),
        regions: s.game.num_regions(),
        lamps: lamp_bits(&s.game),
        history: s.game.history().to_vec(),
        cleared: s.game.is_cleared(),
        layout: region_outlines(board.source()),
        created: s.created,
        updated: s.updated,
    }
}

async fn create_session(State(state): State<AppState>, body: Bytes) -> ApiResult<Response> {
    let board = board_from_value(parse_json(&body)?)?;
    let session = Session::new(board);
    let id = uuid::Uuid::new_v4().simple().to_string();
    let body = view(&id, &session);
    state.sessions.write().expect("session table").insert(id, Arc::new(Mutex::new(session)));
    Ok((StatusCode::CREATED, Json(body)).into_response())
}

async fn get_session(State(state): State<AppState>, UrlPath(id): UrlPath<String>) -> ApiResult<Response> {
    let s = state.session(&id)?;
    let mut s = s.lock().expect("session");
    s.touched = Instant::now();
    Ok(Json(view(&id, &s)).into_response())
}

async fn delete_session(State(state): State<AppState>, UrlPath(id): UrlPath<String>) -> ApiResult<StatusCode> {
    state.session(&id)?;
    state.sessions.write().expect("session table").remove(&id);
    Ok(StatusCode::NO_CONTENT)
}

#[derive(Deserialize)]
struct MoveRequest {
    region: usize,
}

async fn play_move(State(state): State<AppState>, UrlPath(id): UrlPath<String>, body: Bytes) -> ApiResult<Response> {
    let req: MoveRequest = parse_json(&body)?;
    let s = state.session(&id)?;
    let mut s = s.lock().expect("session");
    s.game = s.game.apply_rcc(req.region)?;
    s.updated = unix_now();
    s.touched = Instant::now();
    Ok(Json(json!({
        "lamps": lamp_bits(&s.game),
        "cleared": s.game.is_cleared(),
        "history": s.game.history(),
    }))
    .into_response())
}

async fn hint(State(state): State<AppState>, UrlPath(id): UrlPath<String>) -> ApiResult<Response> {
    let s = state.session(&id)?;
    let mut s = s.lock().expect("session");
    s.touched = Instant::now();
    let verdict = s.game.solve_game()?;
    let body = match (verdict.witness(), verdict.certificate()) {
        (Some(x), _) => {
            let regions: Vec<usize> = x.ones().collect();
            json!({ "solvable": true, "region": regions.first(), "regions": regions })
        }
        (_, Some(c)) => json!({ "solvable": false, "certificate": c.ones().collect::<Vec<_>>() }),
        _ => unreachable!("a verdict is one or the other"),
    };
    Ok(Json(body).into_response())
}

#[derive(Deserialize)]
struct AnalyzeQuery {
    fixture: Option<String>,
    board: Option<String>,
}

fn analysis(board: &LampBoard) -> ApiResult<Json<AnalysisReport>> {
    Ok(Json(analyze(board)?))
}

async fn analyze_get(Query(q): Query<AnalyzeQuery>) -> ApiResult<Json<AnalysisReport>> {
    let value = match (q.fixture, q.board) {
        (Some(name), _) => json!({ "fixture": name }),
        (None, Some(text)) => parse_json(text.as_bytes())?,
        (None, None) => {
            return Err(ApiError::new(StatusCode::BAD_REQUEST, "missing_board", "pass `fixture` or `board`"))
        }
    };
    analysis(&board_from_value(value)?)
}

async fn analyze_post(body: Bytes) -> ApiResult<Json<AnalysisReport>> {
    analysis(&board_from_value(parse_json(&body)?)?)
}

async fn list_fixtures() -> Json<Value> {
    let mut names: Vec<&str> = fixtures::pd_names().chain(fixtures::fold_names()).collect();
    names.extend(["seven_lamp_system", "unsolvable_diamond", "lamp_linking_diamond"]);
    Json(json!({ "fixtures": names }))
}

fn content_type(path: &Path) -> &'static str {
    match path.extension().and_then(|e| e.to_str()) {
        Some("html") => "text/html; charset=utf-8",
        Some("js") | Some("mjs") => "text/javascript",
        Some("css") => "text/css",
        Some("json") => "application/json",
        Some("svg") => "image/svg+xml",
        Some("png") => "image/png",
        Some("wasm") => "application/wasm",
        _ => "application/octet-stream",
    }
}

async fn static_file(State(state): State<AppState>, uri: Uri) -> Response {
    let not_found = || ApiError::new(StatusCode::NOT_FOUND, "not_found", format!("nothing at {}", uri.path())).into_response();
    let Some(root) = &state.static_dir else { return not_found() };
    let rel = uri.path().trim_start_matches('/');
    if rel.split('/').any(|part| part == "..") || rel.starts_with("api/") {
        return not_found();
    }
    let mut path = root.join(if rel.is_empty() { "index.html" } else { rel });
    if path.is_dir() {
        path = path.join("index.html");
    }
    match tokio::fs::read(&path).await {
        Ok(bytes) => ([(header::CONTENT_TYPE, content_type(&path))], bytes).into_response(),
        Err(_) => not_found(),
    }
}

fn api() -> Router<AppState> {
    Router::new()
        .route("/session", post(create_session))
        .route("/session/:id", get(get_session).delete(delete_session))
        .route("/session/:id/move", post(play_move))
        .route("/session/:id/hint", get(hint))
        .route("/analyze", get(analyze_get).post(analyze_post))
        .route("/fixtures", get(list_fixtures))
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .nest("/api/v1", api())
        .nest("/api", api())
        .fallback(static_file)
        .with_state(state)
}

/// Runs until interrupted, then writes the snapshot if one is configured.
pub async fn serve(config: ServiceConfig) -> std::io::Result<()> {
    let state = AppState::new(config.idle, config.static_dir.clone());
    if let Some(path) = config.snapshot.as_ref().filter(|p| p.exists()) {
        let text = std::fs::read_to_string(path)?;
        let snapshot: Snapshot = serde_json::from_str(&text)
            .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
        state.restore(snapshot).map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
    }
    let sweeper = state.clone();
    tokio::spawn(async move {
        let mut tick = tokio::time::interval(Duration::from_secs(60));
        loop {
            tick.tick().await;
            sweeper.expire();
        }
    });
    let listener = tokio::net::TcpListener::bind(SocketAddr::from(([0, 0, 0, 0], config.port))).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(state.clone()))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    if let Some(path) = &config.snapshot {
        let text = serde_json::to_string_pretty(&state.snapshot()).expect("snapshot serializes");
        std::fs::write(path, text)?;
    }
    Ok(())
}
