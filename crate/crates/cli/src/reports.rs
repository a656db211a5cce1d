//! Report files: versioned JSON envelopes and plot-ready CSV tables, written
//! atomically (temp file + rename).

use crate::args::{Format, OutputArgs};
use serde_json::{json, Value};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

pub const SCHEMA_VERSION: u32 = 1;

pub struct ReportWriter {
    out_dir: PathBuf,
    format: Format,
}

impl ReportWriter {
    pub fn from_output(args: &OutputArgs) -> Result<Self, String> {
        let out_dir = args
            .out
            .clone()
            .or_else(|| std::env::var_os("HAMVERIFY_OUT").map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from("hamverify-out"));
        fs::create_dir_all(&out_dir)
            .map_err(|e| format!("cannot create output dir {}: {e}", out_dir.display()))?;
        Ok(ReportWriter {
            out_dir,
            format: args.format,
        })
    }

    pub fn dir(&self) -> &Path {
        &self.out_dir
    }

    pub fn wants_json(&self) -> bool {
        matches!(self.format, Format::Json | Format::Both)
    }

    pub fn wants_csv(&self) -> bool {
        matches!(self.format, Format::Csv | Format::Both)
    }

    pub fn write_json(&self, name: &str, value: &Value) -> Result<PathBuf, String> {
        let path = self.out_dir.join(format!("{name}.json"));
        let mut text = serde_json::to_string_pretty(value).expect("serializable");
        text.push('\n');
        atomic_write(&path, text.as_bytes()).map_err(|e| format!("{}: {e}", path.display()))?;
        Ok(path)
    }

    pub fn write_csv(&self, name: &str, header: &str, rows: &[String]) -> Result<PathBuf, String> {
        let path = self.out_dir.join(format!("{name}.csv"));
        let mut text = String::with_capacity(rows.len() * 32 + header.len() + 1);
        text.push_str(header);
        text.push('\n');
        for r in rows {
            text.push_str(r);
            text.push('\n');
        }
        atomic_write(&path, text.as_bytes()).map_err(|e| format!("{}: {e}", path.display()))?;
        Ok(path)
    }
}

fn atomic_write(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

/// Standard envelope around a command's payload. Every field except
/// `timestamp` is a pure function of the config.
pub fn envelope(command: &str, seed: Option<u64>, input: &Value, pass: bool, results: Value) -> Value {
    let timestamp = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs_f64())
        .unwrap_or(0.0);
    json!({
        "schema": SCHEMA_VERSION,
        "command": command,
        "timestamp": timestamp,
        "seed": seed,
        "input": input,
        "pass": pass,
        "results": results,
    })
}

pub fn fmt_f64(v: f64) -> String {
    format!("{v:.17e}")
}
