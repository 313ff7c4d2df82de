//! On-disk cache for evaluated Hessians and catalecticants.
//!
//! Entries are keyed by `(n, k, d, strategy)` and stored as the exact JSON
//! matrix form, so a hit reproduces the computation bit for bit. Unreadable
//! or stale files are treated as misses and overwritten.

use std::fs;
use std::path::PathBuf;

use matchlef::ExactMatrix;

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>, no_cache: bool) -> Self {
        Cache {
            dir: if no_cache { None } else { dir },
        }
    }

    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    /// Loads the matrix stored under `key`, or computes and stores it.
    pub fn matrix(&self, key: &str, compute: impl FnOnce() -> ExactMatrix) -> ExactMatrix {
        let Some(dir) = &self.dir else {
            return compute();
        };
        let path = dir.join(format!("{key}.json"));
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(matrix) = ExactMatrix::from_json_str(&text) {
                return matrix;
            }
        }
        let matrix = compute();
        if fs::create_dir_all(dir).is_ok() {
            let _ = fs::write(&path, matrix.to_json_string());
        }
        matrix
    }
}
