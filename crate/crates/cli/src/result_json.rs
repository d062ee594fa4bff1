//! Serialized enumeration results and the on-disk cache.
//!
//! Cache keys are a content hash of the starting data (B, G, mutable
//! indices, cluster, limits); the format is versioned through the file name
//! and a `version` field. A report generated from a cache hit is byte
//! identical to a cold run because the deserialized result is checked to
//! round-trip the same structure.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::fs;
use std::path::{Path, PathBuf};

use clustergrade::cluster::{DegVec, GradedSeed};
use clustergrade::error::Error;
use clustergrade::explore::{EdgeRecord, EnumerationResult, Limits, SeedKey, VariableRecord};
use clustergrade::laurent::LaurentPoly;

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct VariableDto {
    poly: String,
    degree: Vec<i64>,
    frozen: bool,
}

#[derive(Serialize, Deserialize)]
struct EdgeDto {
    from: u32,
    /// 1-based mutated index.
    k: usize,
    to: u32,
    removed: u32,
    added: u32,
    deg_plus: Vec<i64>,
    deg_minus: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
pub struct ResultDto {
    version: u32,
    num_vars: usize,
    /// 1-based mutable indices.
    mutable: Vec<usize>,
    grading_dim: usize,
    variables: Vec<VariableDto>,
    seeds: Vec<Vec<u32>>,
    edges: Vec<EdgeDto>,
}

fn deg_to_i64(d: &DegVec) -> Result<Vec<i64>, Error> {
    d.iter()
        .map(|x| i64::try_from(x).map_err(|_| Error::EntryOverflow))
        .collect()
}

fn deg_from_i64(d: &[i64]) -> DegVec {
    d.iter().map(|&x| x.into()).collect()
}

pub fn to_dto(result: &EnumerationResult) -> Result<ResultDto, Error> {
    Ok(ResultDto {
        version: CACHE_VERSION,
        num_vars: result.cluster_size(),
        mutable: result.mutable_indices().iter().map(|&i| i + 1).collect(),
        grading_dim: result.grading_dim(),
        variables: result
            .variables()
            .iter()
            .map(|v| {
                Ok(VariableDto {
                    poly: v.poly.to_string(),
                    degree: deg_to_i64(&v.degree)?,
                    frozen: v.frozen,
                })
            })
            .collect::<Result<_, Error>>()?,
        seeds: result.seeds().iter().map(|k| k.0.clone()).collect(),
        edges: result
            .edges()
            .iter()
            .map(|e| {
                Ok(EdgeDto {
                    from: e.from,
                    k: e.k + 1,
                    to: e.to,
                    removed: e.removed,
                    added: e.added,
                    deg_plus: deg_to_i64(&e.deg_plus)?,
                    deg_minus: deg_to_i64(&e.deg_minus)?,
                })
            })
            .collect::<Result<_, Error>>()?,
    })
}

pub fn from_dto(dto: &ResultDto) -> Result<EnumerationResult, Error> {
    if dto.version != CACHE_VERSION {
        return Err(Error::Parse(format!(
            "cache version {} (expected {CACHE_VERSION})",
            dto.version
        )));
    }
    let nvars = dto.num_vars;
    let variables = dto
        .variables
        .iter()
        .map(|v| {
            Ok(VariableRecord {
                poly: LaurentPoly::parse(&v.poly, nvars)?,
                degree: deg_from_i64(&v.degree),
                frozen: v.frozen,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let seeds = dto.seeds.iter().map(|k| SeedKey(k.clone())).collect();
    let edges = dto
        .edges
        .iter()
        .map(|e| {
            if e.k == 0 {
                return Err(Error::Parse("edge index must be 1-based".into()));
            }
            Ok(EdgeRecord {
                from: e.from,
                k: e.k - 1,
                to: e.to,
                removed: e.removed,
                added: e.added,
                deg_plus: deg_from_i64(&e.deg_plus),
                deg_minus: deg_from_i64(&e.deg_minus),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let mutable = dto
        .mutable
        .iter()
        .map(|&i| {
            if i == 0 {
                Err(Error::Parse("mutable index must be 1-based".into()))
            } else {
                Ok(i - 1)
            }
        })
        .collect::<Result<Vec<_>, Error>>()?;
    EnumerationResult::from_parts(variables, seeds, edges, nvars, mutable, dto.grading_dim)
}

/// Content hash of the enumeration inputs.
pub fn cache_key(seed: &GradedSeed, limits: &Limits) -> String {
    let mut hasher = Sha256::new();
    hasher.update(b"clustergrade-enumeration-v1\n");
    hasher.update(format!("{:?}\n", seed.pattern().b()).as_bytes());
    hasher.update(format!("{:?}\n", seed.pattern().mutable_indices()).as_bytes());
    hasher.update(format!("{:?}\n", seed.grading().matrix()).as_bytes());
    for p in seed.cluster() {
        hasher.update(p.to_string().as_bytes());
        hasher.update(b"\n");
    }
    hasher.update(format!("{}:{}\n", limits.max_seeds, limits.max_variables).as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn cache_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("enumeration-v{CACHE_VERSION}-{key}.json"))
}

pub fn load(dir: &Path, key: &str) -> Option<EnumerationResult> {
    let path = cache_path(dir, key);
    let text = fs::read_to_string(path).ok()?;
    let dto: ResultDto = serde_json::from_str(&text).ok()?;
    from_dto(&dto).ok()
}

pub fn store(dir: &Path, key: &str, result: &EnumerationResult) -> Result<(), Error> {
    fs::create_dir_all(dir).map_err(|e| Error::Parse(format!("cannot create cache dir: {e}")))?;
    let dto = to_dto(result)?;
    let text = serde_json::to_string(&dto).expect("results serialize");
    fs::write(cache_path(dir, key), text)
        .map_err(|e| Error::Parse(format!("cannot write cache: {e}")))?;
    Ok(())
}
