//! On-disk cache of decomposition matrices, one JSON file per `(l, r)`.
//!
//! Files carry a SHA-256 checksum of their canonical payload. Anything that
//! fails to parse, has the wrong generator or key, a bad checksum, or a matrix
//! that is not unitriangular is rejected and recomputed.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

use modpart::{decomposition_matrix, partitions_of, DecompositionMatrix};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};
use crate::formats::parts;

pub const GENERATOR: &str = "llt-v1";
pub const CACHE_ENV: &str = "MODPART_CACHE_DIR";

/// Default degree cap for the LLT oracle.
pub fn degree_cap(l: usize) -> usize {
    match l {
        2 | 3 => 10,
        4 | 5 => 8,
        _ => 6,
    }
}

// Keys in alphabetical order so the serialized form has sorted keys.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CacheFile {
    checksum: String,
    cols: Vec<Vec<usize>>,
    degree: usize,
    entries: Vec<[u64; 3]>,
    generator: String,
    l: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct Payload<'a> {
    cols: &'a [Vec<usize>],
    degree: usize,
    entries: &'a [[u64; 3]],
    generator: &'a str,
    l: usize,
    rows: &'a [Vec<usize>],
}

impl CacheFile {
    fn payload(&self) -> Payload<'_> {
        Payload {
            cols: &self.cols,
            degree: self.degree,
            entries: &self.entries,
            generator: &self.generator,
            l: self.l,
            rows: &self.rows,
        }
    }

    fn digest(&self) -> String {
        let bytes = serde_json::to_vec(&self.payload()).expect("payload serializes");
        hex::encode(Sha256::digest(&bytes))
    }
}

pub fn cache_path(dir: &Path, l: usize, r: usize) -> PathBuf {
    dir.join(format!("llt-l{l}-r{r}.json"))
}

/// The file contents for `matrix`: compact JSON, sorted keys, trailing newline.
pub fn encode(matrix: &DecompositionMatrix) -> String {
    let mut file = CacheFile {
        checksum: String::new(),
        cols: matrix.cols.iter().map(parts).collect(),
        degree: matrix.r,
        entries: matrix.nonzero_entries().into_iter().map(|(i, j, v)| [i as u64, j as u64, v]).collect(),
        generator: GENERATOR.to_string(),
        l: matrix.l,
        rows: matrix.rows.iter().map(parts).collect(),
    };
    file.checksum = file.digest();
    let mut s = serde_json::to_string(&file).expect("cache file serializes");
    s.push('\n');
    s
}

fn integrity(msg: impl Into<String>) -> CliError {
    CliError::Integrity(msg.into())
}

/// Parses and validates file contents expected to hold the matrix for `(l, r)`.
pub fn decode(text: &str, l: usize, r: usize) -> Result<DecompositionMatrix> {
    let file: CacheFile =
        serde_json::from_str(text).map_err(|e| integrity(format!("malformed cache file: {e}")))?;
    if file.generator != GENERATOR {
        return Err(integrity(format!("generator {:?}, expected {GENERATOR:?}", file.generator)));
    }
    if file.l != l || file.degree != r {
        return Err(integrity(format!("file holds l={} r={}, expected l={l} r={r}", file.l, file.degree)));
    }
    if file.checksum != file.digest() {
        return Err(integrity("checksum mismatch"));
    }
    let rows: Vec<Vec<usize>> = partitions_of(r).map(|p| parts(&p)).collect();
    let cols: Vec<Vec<usize>> = partitions_of(r).filter(|p| p.is_regular(l)).map(|p| parts(&p)).collect();
    if file.rows != rows || file.cols != cols {
        return Err(integrity("row or column labels differ from the canonical order"));
    }
    let mut entries = Vec::with_capacity(file.entries.len());
    for &[i, j, v] in &file.entries {
        if v == 0 {
            return Err(integrity("zero entry stored"));
        }
        entries.push((i as usize, j as usize, v));
    }
    let matrix = DecompositionMatrix::from_entries(l, r, entries).map_err(|e| integrity(e.to_string()))?;
    matrix.check_unitriangular().map_err(|e| integrity(e.to_string()))?;
    Ok(matrix)
}

/// `Ok(None)` on a cold cache.
pub fn cache_get(dir: &Path, l: usize, r: usize) -> Result<Option<DecompositionMatrix>> {
    let path = cache_path(dir, l, r);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    decode(&text, l, r).map(Some).map_err(|e| match e {
        CliError::Integrity(msg) => integrity(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// Writes through a temporary file and a rename, so readers never see a partial file.
pub fn cache_put(dir: &Path, matrix: &DecompositionMatrix) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, matrix.l, matrix.r);
    let tmp = dir.join(format!(".llt-l{}-r{}.{}.tmp", matrix.l, matrix.r, std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(encode(matrix).as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, &path)?;
    Ok(())
}

type Key = (usize, usize);

/// Shared matrix source: memory first, then disk, then computation.
/// Concurrent readers; at most one computation per block.
pub struct MatrixStore {
    dir: Option<PathBuf>,
    memory: RwLock<HashMap<Key, Arc<DecompositionMatrix>>>,
    writers: Mutex<HashMap<Key, Arc<Mutex<()>>>>,
}

impl MatrixStore {
    pub fn in_memory() -> Self {
        MatrixStore { dir: None, memory: RwLock::default(), writers: Mutex::default() }
    }

    /// Falls back to memory only, with a warning, when `dir` cannot be created.
    pub fn new(dir: Option<PathBuf>) -> Self {
        let dir = dir.and_then(|d| match fs::create_dir_all(&d) {
            Ok(()) => Some(d),
            Err(e) => {
                log::warn!("cache directory {} unusable ({e}); using in-memory cache", d.display());
                None
            }
        });
        MatrixStore { dir, ..MatrixStore::in_memory() }
    }

    /// Directory from `MODPART_CACHE_DIR`, if set.
    pub fn from_env() -> Self {
        MatrixStore::new(std::env::var_os(CACHE_ENV).map(PathBuf::from))
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// The matrix for `(l, r)`. With `force`, skips memory and disk and recomputes.
    pub fn get(&self, l: usize, r: usize, force: bool) -> Result<Arc<DecompositionMatrix>> {
        let key = (l, r);
        if !force {
            if let Some(m) = self.memory.read().expect("cache lock").get(&key) {
                return Ok(Arc::clone(m));
            }
        }
        let gate = Arc::clone(self.writers.lock().expect("cache lock").entry(key).or_default());
        let _held = gate.lock().expect("cache lock");
        if !force {
            if let Some(m) = self.memory.read().expect("cache lock").get(&key) {
                return Ok(Arc::clone(m));
            }
            if let Some(m) = self.load(l, r) {
                return Ok(self.remember(key, m));
            }
        }
        log::info!("computing decomposition matrix l={l} r={r}");
        let m = decomposition_matrix(r, l)?;
        if let Some(dir) = &self.dir {
            if let Err(e) = cache_put(dir, &m) {
                log::warn!("could not write cache for l={l} r={r}: {e}");
            }
        }
        Ok(self.remember(key, m))
    }

    fn load(&self, l: usize, r: usize) -> Option<DecompositionMatrix> {
        let dir = self.dir.as_ref()?;
        match cache_get(dir, l, r) {
            Ok(found) => found,
            Err(e) => {
                log::warn!("{e}; recomputing");
                None
            }
        }
    }

    fn remember(&self, key: Key, m: DecompositionMatrix) -> Arc<DecompositionMatrix> {
        let m = Arc::new(m);
        self.memory.write().expect("cache lock").insert(key, Arc::clone(&m));
        m
    }
}
