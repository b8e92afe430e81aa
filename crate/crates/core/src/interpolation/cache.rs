use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::polyring::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    G,
    E,
    Gprime,
    Gplus,
    R,
    Rprime,
    O,
}

impl Family {
    pub fn from_name(s: &str) -> Option<Family> {
        Some(match s {
            "G" => Family::G,
            "E" => Family::E,
            "Gprime" => Family::Gprime,
            "Gplus" => Family::Gplus,
            "R" => Family::R,
            "Rprime" => Family::Rprime,
            "O" => Family::O,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Qt,
    R,
}

/// Identifies one cached polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyKey {
    pub family: Family,
    pub variant: Kind,
    pub index: Vec<u32>,
    /// Fingerprint of the parameter values the polynomial depends on.
    pub params: String,
}

impl FamilyKey {
    fn file_name(&self) -> String {
        let text = serde_json::to_string(self).expect("keys serialize");
        format!("{}.json", hex::encode(Sha256::digest(text.as_bytes())))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub memory_entries: usize,
    pub disk_entries: usize,
    pub hits: u64,
    pub misses: u64,
    pub dir: Option<PathBuf>,
}

/// Memo table for constructed polynomials, optionally mirrored to a directory
/// of JSON files named by the hash of their key.
#[derive(Debug, Default)]
pub struct Cache {
    mem: RwLock<HashMap<FamilyKey, Arc<LaurentPoly>>>,
    dir: Option<PathBuf>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl Cache {
    pub fn new() -> Cache {
        Cache::default()
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Result<Cache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache {
            dir: Some(dir),
            ..Cache::default()
        })
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn get(&self, key: &FamilyKey) -> Option<Arc<LaurentPoly>> {
        if let Some(p) = self.mem.read().get(key) {
            return Some(p.clone());
        }
        let p = Arc::new(self.load(key)?);
        self.mem.write().insert(key.clone(), p.clone());
        Some(p)
    }

    fn load(&self, key: &FamilyKey) -> Option<LaurentPoly> {
        let path = self.dir.as_ref()?.join(key.file_name());
        let text = fs::read_to_string(path).ok()?;
        let v: serde_json::Value = serde_json::from_str(&text).ok()?;
        let stored: FamilyKey = serde_json::from_value(v.get("key")?.clone()).ok()?;
        if &stored != key {
            return None;
        }
        LaurentPoly::from_json(v.get("poly")?).ok()
    }

    pub fn insert(&self, key: FamilyKey, poly: LaurentPoly) -> Result<Arc<LaurentPoly>> {
        if let Some(dir) = &self.dir {
            let path = dir.join(key.file_name());
            let tmp = path.with_extension(format!("tmp{}", std::process::id()));
            let body = json!({"key": key, "poly": poly.to_json()});
            fs::write(&tmp, serde_json::to_vec(&body)?)?;
            fs::rename(&tmp, &path)?;
        }
        let p = Arc::new(poly);
        self.mem.write().entry(key).or_insert_with(|| p.clone());
        Ok(p)
    }

    /// Look up `key`, computing and storing it on a miss. The lock is not held
    /// while `make` runs, so `make` may itself use the cache.
    pub fn get_or_try_insert(
        &self,
        key: FamilyKey,
        make: impl FnOnce() -> Result<LaurentPoly>,
    ) -> Result<Arc<LaurentPoly>> {
        if let Some(p) = self.get(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(p);
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let poly = make()?;
        self.insert(key, poly)
    }

    fn disk_files(&self) -> Vec<PathBuf> {
        let Some(dir) = &self.dir else {
            return Vec::new();
        };
        let Ok(rd) = fs::read_dir(dir) else {
            return Vec::new();
        };
        rd.filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect()
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            memory_entries: self.mem.read().len(),
            disk_entries: self.disk_files().len(),
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            dir: self.dir.clone(),
        }
    }

    /// Drop every entry, in memory and on disk. Returns the number of files removed.
    pub fn clear(&self) -> Result<usize> {
        self.mem.write().clear();
        let files = self.disk_files();
        for f in &files {
            fs::remove_file(f)?;
        }
        Ok(files.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(i: u32) -> FamilyKey {
        FamilyKey {
            family: Family::G,
            variant: Kind::R,
            index: vec![i],
            params: "r=sym".into(),
        }
    }

    #[test]
    fn memo_and_disk_round_trip() {
        let dir = std::env::temp_dir().join(format!("binomac-cache-test-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        let c = Cache::with_dir(&dir).unwrap();
        let p = LaurentPoly::var(1, 0);
        c.get_or_try_insert(key(1), || Ok(p.clone())).unwrap();
        c.get_or_try_insert(key(1), || panic!("should hit")).unwrap();
        assert_eq!(c.stats().hits, 1);
        assert_eq!(c.stats().disk_entries, 1);

        let fresh = Cache::with_dir(&dir).unwrap();
        assert_eq!(*fresh.get(&key(1)).unwrap(), p);
        assert!(fresh.get(&key(2)).is_none());
        assert_eq!(fresh.clear().unwrap(), 1);
        assert!(fresh.get(&key(1)).is_none());
        let _ = fs::remove_dir_all(&dir);
    }
}
