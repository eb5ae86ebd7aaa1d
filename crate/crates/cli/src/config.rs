//! Run configuration with the precedence flags > `QBRACKET_CONFIG` file >
//! built-in defaults.

use std::path::PathBuf;

use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Optional JSON config file pointed to by the `QBRACKET_CONFIG` env var:
/// `{"order": 50, "tol": 1e-8, "y_floor": 0.05, "format": "json",
///   "output": "report.json"}` (all fields optional).
#[derive(Debug, Default, Deserialize)]
pub struct FileConfig {
    pub order: Option<usize>,
    pub tol: Option<f64>,
    pub y_floor: Option<f64>,
    pub format: Option<String>,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub order: usize,
    /// Explicit tolerance; suites fall back to their documented defaults.
    pub tol: Option<f64>,
    pub y_floor: f64,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order: 50,
            tol: None,
            y_floor: 0.05,
            format: Format::Text,
            output: None,
        }
    }
}

pub fn load_file_config() -> Result<FileConfig, String> {
    let Some(path) = std::env::var_os("QBRACKET_CONFIG") else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| format!("cannot read QBRACKET_CONFIG {path:?}: {e}"))?;
    serde_json::from_str(&text).map_err(|e| format!("bad config {path:?}: {e}"))
}

/// Merge, with explicit flags winning over the file and the file over
/// defaults.
pub fn resolve(
    file: FileConfig,
    order_flag: Option<usize>,
    tol_flag: Option<f64>,
    y_floor_flag: Option<f64>,
    format_flag: Option<Format>,
    output_flag: Option<PathBuf>,
) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::default();
    if let Some(o) = file.order {
        cfg.order = o;
    }
    if let Some(t) = file.tol {
        cfg.tol = Some(t);
    }
    if let Some(y) = file.y_floor {
        cfg.y_floor = y;
    }
    if let Some(f) = &file.format {
        cfg.format = match f.as_str() {
            "text" => Format::Text,
            "json" => Format::Json,
            "csv" => Format::Csv,
            other => return Err(format!("bad format {other:?} in config file")),
        };
    }
    if file.output.is_some() {
        cfg.output = file.output;
    }
    if let Some(o) = order_flag {
        cfg.order = o;
    }
    if let Some(t) = tol_flag {
        cfg.tol = Some(t);
    }
    if let Some(y) = y_floor_flag {
        cfg.y_floor = y;
    }
    if let Some(f) = format_flag {
        cfg.format = f;
    }
    if output_flag.is_some() {
        cfg.output = output_flag;
    }
    if cfg.order == 0 {
        return Err("order must be at least 1".into());
    }
    if let Some(t) = cfg.tol {
        if !(t > 0.0) {
            return Err("tol must be positive".into());
        }
    }
    Ok(cfg)
}
