//! Content-addressed result cache for window matrices.
//!
//! Entries are keyed by (m, n, window bounds, matrix kind, crate version)
//! and stored as JSON files named by the SHA-256 of the canonical key.
//! Loading revalidates the content (window enumeration, unit diagonal,
//! triangularity) before trusting it; anything that fails validation is
//! ignored with a warning and recomputed. Stores write to a temporary file
//! and rename, so a reader never sees a half-written entry.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use kacmod::kl::TriangularQMatrix;
use kacmod::weight::{enumerate_interval, IntegralWeight};

#[derive(Debug, Clone, Serialize)]
pub struct CacheKey<'a> {
    pub m: usize,
    pub n: usize,
    pub lo: &'a IntegralWeight,
    pub hi: &'a IntegralWeight,
    pub kind: &'static str,
    pub version: &'static str,
}

impl CacheKey<'_> {
    fn file_name(&self) -> String {
        let canonical = serde_json::to_vec(self).expect("cache keys always serialize");
        let digest = Sha256::digest(&canonical);
        format!("{}.json", hex::encode(digest))
    }
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> std::io::Result<Cache> {
        fs::create_dir_all(dir)?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    pub fn load_matrix(&self, key: &CacheKey, window_cap: usize) -> Option<TriangularQMatrix> {
        let path = self.dir.join(key.file_name());
        let bytes = match fs::read(&path) {
            Ok(bytes) => bytes,
            Err(_) => return None,
        };
        let matrix: TriangularQMatrix = match serde_json::from_slice(&bytes) {
            Ok(m) => m,
            Err(err) => {
                eprintln!(
                    "warning: ignoring unreadable cache entry {}: {err}",
                    path.display()
                );
                return None;
            }
        };
        let expected_window = match enumerate_interval(key.lo, key.hi, true, window_cap) {
            Ok(w) => w,
            Err(_) => return None,
        };
        if matrix.window() != expected_window.as_slice() {
            eprintln!(
                "warning: ignoring cache entry {} with a stale window",
                path.display()
            );
            return None;
        }
        if let Err(err) = matrix.validate_unitriangular() {
            eprintln!(
                "warning: ignoring invalid cache entry {}: {err}",
                path.display()
            );
            return None;
        }
        Some(matrix)
    }

    pub fn store_matrix(&self, key: &CacheKey, matrix: &TriangularQMatrix) -> std::io::Result<()> {
        let path = self.dir.join(key.file_name());
        let tmp = self
            .dir
            .join(format!(".{}.tmp.{}", key.file_name(), std::process::id()));
        let bytes = serde_json::to_vec(matrix)
            .map_err(|err| std::io::Error::new(std::io::ErrorKind::InvalidData, err))?;
        {
            let mut file = fs::File::create(&tmp)?;
            file.write_all(&bytes)?;
            file.sync_all()?;
        }
        fs::rename(&tmp, &path)
    }
}
