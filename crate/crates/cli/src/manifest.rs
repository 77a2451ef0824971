//! Provenance record written next to every output artifact.

use std::path::Path;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct InputHash {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// Every flag of the command after defaults were applied.
    pub flags: serde_json::Value,
    /// Command line as given.
    pub argv: Vec<String>,
    pub seed: Option<u64>,
    pub threads: usize,
    pub started_unix_ms: u128,
    pub elapsed_ms: f64,
    pub inputs: Vec<InputHash>,
    #[serde(skip)]
    clock: Option<Instant>,
}

impl RunManifest {
    pub fn start(command: &str, flags: serde_json::Value, seed: Option<u64>, threads: usize) -> Self {
        let started_unix_ms = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_millis())
            .unwrap_or(0);
        Self {
            tool: env!("CARGO_BIN_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            flags,
            argv: std::env::args().skip(1).collect(),
            seed,
            threads,
            started_unix_ms,
            elapsed_ms: 0.0,
            inputs: Vec::new(),
            clock: Some(Instant::now()),
        }
    }

    pub fn add_input(&mut self, path: &Path, bytes: &[u8]) {
        self.inputs.push(InputHash {
            path: path.display().to_string(),
            sha256: format!("{:x}", Sha256::digest(bytes)),
        });
    }

    /// Stamps the elapsed time; call right before writing.
    pub fn finish(&mut self) {
        if let Some(t) = self.clock {
            self.elapsed_ms = t.elapsed().as_secs_f64() * 1e3;
        }
    }
}
