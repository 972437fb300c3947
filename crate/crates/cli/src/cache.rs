//! Content-addressed certificate cache: one JSON file per key, no daemon.
//!
//! Keys hash the canonical facet encoding of the complex together with the
//! operation name and the budget that bounded the search. Cache hits carrying
//! a certificate are replay-verified before they are trusted; a corrupt or
//! non-verifying entry triggers recomputation with a warning.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

use momac::SimplicialComplex;

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// Cache directory from `--cache-dir` or the `MOMAC_CACHE_DIR`
    /// environment variable; caching is off when neither is set.
    pub fn from_settings(flag: Option<&Path>) -> Option<Cache> {
        let dir = flag
            .map(|p| p.to_path_buf())
            .or_else(|| std::env::var_os("MOMAC_CACHE_DIR").map(PathBuf::from))?;
        Some(Cache { dir })
    }

    pub fn key(complex: &SimplicialComplex, operation: &str, budget_tag: u64) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!("{:x};", complex.ground_set().bits()));
        for f in complex.facets() {
            hasher.update(format!("{:x},", f.bits()));
        }
        hasher.update(operation);
        hasher.update(budget_tag.to_le_bytes());
        let digest = hasher.finalize();
        let hex: String = digest.iter().map(|b| format!("{:02x}", b)).collect();
        format!("{}-{}", operation, &hex[..32])
    }

    fn path_for(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", key))
    }

    /// Load an entry and run its validator; invalid or unreadable entries
    /// are dropped with a warning on stderr.
    pub fn load<T, F>(&self, key: &str, validate: F) -> Option<T>
    where
        T: DeserializeOwned,
        F: FnOnce(&T) -> bool,
    {
        let path = self.path_for(key);
        let text = fs::read_to_string(&path).ok()?;
        match serde_json::from_str::<T>(&text) {
            Ok(value) if validate(&value) => Some(value),
            Ok(_) => {
                eprintln!(
                    "warning: cache entry {} failed replay verification; recomputing",
                    path.display()
                );
                None
            }
            Err(err) => {
                eprintln!(
                    "warning: corrupt cache entry {} ({}); recomputing",
                    path.display(),
                    err
                );
                None
            }
        }
    }

    pub fn store<T: Serialize>(&self, key: &str, value: &T) {
        if let Err(err) = fs::create_dir_all(&self.dir).and_then(|_| {
            fs::write(
                self.path_for(key),
                serde_json::to_string_pretty(value).expect("serializable cache value"),
            )
        }) {
            eprintln!("warning: could not write cache entry {}: {}", key, err);
        }
    }
}
