//! Disk cache of character tables and seminormal generators: a versioned
//! JSON format with matrices stored as `[numerator, denominator]` string
//! pairs. Writes are atomic (temp file + rename) and byte-deterministic.

use crate::chars::CharacterTable;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::seminormal::SeminormalRep;
use crate::Q;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

pub const ENV_VAR: &str = "SHUFFLE_SPECTRA_CACHE";

/// Resolve the cache directory: explicit flag, then the environment
/// variable, then `./spectra-cache`.
pub fn resolve_dir(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Ok(p) = std::env::var(ENV_VAR) {
        if !p.is_empty() {
            return PathBuf::from(p);
        }
    }
    PathBuf::from("spectra-cache")
}

#[derive(Serialize, Deserialize)]
pub struct CharTableFile {
    pub schema: u32,
    pub n: usize,
    pub partitions: Vec<String>,
    pub class_sizes: Vec<u64>,
    pub values: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
pub struct SeminormalFile {
    pub schema: u32,
    pub n: usize,
    pub reps: Vec<SeminormalEntry>,
}

#[derive(Serialize, Deserialize)]
pub struct SeminormalEntry {
    pub lambda: String,
    pub dim: usize,
    /// One matrix per adjacent transposition, dense rows of `[num, den]`
    /// decimal strings.
    pub generators: Vec<Vec<Vec<[String; 2]>>>,
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().ok_or_else(|| Error::Cache("no parent".into()))?;
    std::fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.tmp",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("cache")
    ));
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

pub fn chartable_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("chartable_{n}.json"))
}

pub fn seminormal_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("seminormal_{n}.json"))
}

/// Build and write both cache files for `n`; returns the two paths.
pub fn build(dir: &Path, n: usize) -> Result<(PathBuf, PathBuf)> {
    let table = CharacterTable::new(n);
    let ct = CharTableFile {
        schema: 1,
        n,
        partitions: table.partitions.iter().map(|p| p.to_string()).collect(),
        class_sizes: table.class_sizes.clone(),
        values: table.values.clone(),
    };
    let ct_path = chartable_path(dir, n);
    write_atomic(&ct_path, &serde_json::to_string_pretty(&ct)?)?;

    let reps = partitions_of(n)
        .iter()
        .map(|lam| {
            let rep = SeminormalRep::new(lam);
            let generators = rep
                .gens
                .iter()
                .map(|g| {
                    // densify each sparse generator
                    let mut dense = vec![vec![[String::from("0"), String::from("1")]; rep.dim]; rep.dim];
                    for (c, col) in g.cols.iter().enumerate() {
                        for (r, coeff) in col {
                            dense[*r][c] = [coeff.numer().to_string(), coeff.denom().to_string()];
                        }
                    }
                    dense
                })
                .collect();
            SeminormalEntry {
                lambda: lam.to_string(),
                dim: rep.dim,
                generators,
            }
        })
        .collect();
    let sn = SeminormalFile { schema: 1, n, reps };
    let sn_path = seminormal_path(dir, n);
    write_atomic(&sn_path, &serde_json::to_string_pretty(&sn)?)?;
    Ok((ct_path, sn_path))
}

/// Decode a character table file, validating the schema and shape.
pub fn decode_chartable(contents: &str) -> Result<CharTableFile> {
    let file: CharTableFile = serde_json::from_str(contents)?;
    if file.schema != 1 {
        return Err(Error::Cache(format!("unsupported schema {}", file.schema)));
    }
    let count = file.partitions.len();
    if file.class_sizes.len() != count
        || file.values.len() != count
        || file.values.iter().any(|row| row.len() != count)
    {
        return Err(Error::Cache("ragged character table".into()));
    }
    for p in &file.partitions {
        let parsed: Partition = p.parse()?;
        if parsed.sum() != file.n {
            return Err(Error::Cache(format!("{p} is not a partition of {}", file.n)));
        }
    }
    Ok(file)
}

/// Decode a seminormal cache file, validating schema, dimensions and that
/// every entry parses as an exact rational.
pub fn decode_seminormal(contents: &str) -> Result<SeminormalFile> {
    let file: SeminormalFile = serde_json::from_str(contents)?;
    if file.schema != 1 {
        return Err(Error::Cache(format!("unsupported schema {}", file.schema)));
    }
    for entry in &file.reps {
        let lam: Partition = entry.lambda.parse()?;
        if lam.sum() != file.n {
            return Err(Error::Cache(format!(
                "{} is not a partition of {}",
                entry.lambda, file.n
            )));
        }
        if entry.generators.len() != file.n.saturating_sub(1) {
            return Err(Error::Cache("wrong generator count".into()));
        }
        for g in &entry.generators {
            if g.len() != entry.dim || g.iter().any(|row| row.len() != entry.dim) {
                return Err(Error::Cache("ragged generator matrix".into()));
            }
            for row in g {
                for [num, den] in row {
                    let n: crate::Z = num
                        .parse()
                        .map_err(|_| Error::Cache(format!("bad numerator {num}")))?;
                    let d: crate::Z = den
                        .parse()
                        .map_err(|_| Error::Cache(format!("bad denominator {den}")))?;
                    if d == crate::Z::from(0) {
                        return Err(Error::Cache("zero denominator".into()));
                    }
                    let _ = Q::new(n, d);
                }
            }
        }
    }
    Ok(file)
}

pub struct CacheEntryInfo {
    pub lambda: String,
    pub dim: usize,
}

/// List the representations recorded for `n`.
pub fn inspect(dir: &Path, n: usize) -> Result<Vec<CacheEntryInfo>> {
    let contents = std::fs::read_to_string(seminormal_path(dir, n))?;
    let file = decode_seminormal(&contents)?;
    Ok(file
        .reps
        .iter()
        .map(|e| CacheEntryInfo {
            lambda: e.lambda.clone(),
            dim: e.dim,
        })
        .collect())
}

/// Remove every cache file in the directory.
pub fn clear(dir: &Path) -> Result<usize> {
    let mut removed = 0;
    if !dir.exists() {
        return Ok(0);
    }
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("");
        if (name.starts_with("chartable_") || name.starts_with("seminormal_"))
            && name.ends_with(".json")
        {
            std::fs::remove_file(&path)?;
            removed += 1;
        }
    }
    Ok(removed)
}
