//! The seed file schema: variables, mutable indices (1-based), the exchange
//! matrix B, the grading G, and the cluster as canonical Laurent strings.
//! Integers are plain JSON numbers; arbitrary precision stays internal.

use serde::{Deserialize, Serialize};

use clustergrade::cluster::{ExchangePattern, GradedSeed, GradingMatrix};
use clustergrade::error::Error;
use clustergrade::laurent::LaurentPoly;
use clustergrade::zlinalg::IntMatrix;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SeedFile {
    pub variables: Vec<String>,
    /// 1-based indices of the mutable variables.
    pub mutable: Vec<usize>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    #[serde(rename = "G")]
    pub g: Vec<Vec<i64>>,
    pub cluster: Vec<String>,
}

pub fn emit(seed: &GradedSeed, names: &[String]) -> Result<SeedFile, Error> {
    let r = seed.num_vars();
    if names.len() != r {
        return Err(Error::DimensionMismatch(format!(
            "{} names for {r} variables",
            names.len()
        )));
    }
    Ok(SeedFile {
        variables: names.to_vec(),
        mutable: seed
            .pattern()
            .mutable_indices()
            .iter()
            .map(|&i| i + 1)
            .collect(),
        b: seed.pattern().b().to_i64_rows()?,
        g: seed.grading().matrix().to_i64_rows()?,
        cluster: seed.cluster().iter().map(|p| p.to_string()).collect(),
    })
}

/// Default variable names: `x1..xr` with frozen slots beyond the mutable
/// block following the same scheme.
pub fn default_names(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("x{i}")).collect()
}

pub fn parse(file: &SeedFile) -> Result<GradedSeed, Error> {
    let r = file.b.len();
    if file.variables.len() != r || file.cluster.len() != r || file.g.len() != r {
        return Err(Error::Parse(format!(
            "inconsistent seed file: {} variables, {} B rows, {} G rows, {} cluster entries",
            file.variables.len(),
            r,
            file.g.len(),
            file.cluster.len()
        )));
    }
    let b = IntMatrix::from_rows(&file.b);
    let mut mutable: Vec<usize> = Vec::with_capacity(file.mutable.len());
    for &i in &file.mutable {
        if i == 0 || i > r {
            return Err(Error::Parse(format!(
                "mutable index {i} out of range 1..={r}"
            )));
        }
        mutable.push(i - 1);
    }
    let pattern = ExchangePattern::new(b, mutable)?;
    let grading = GradingMatrix::new(&pattern, IntMatrix::from_rows(&file.g))?;
    let cluster = file
        .cluster
        .iter()
        .map(|s| LaurentPoly::parse(s, r))
        .collect::<Result<Vec<_>, _>>()?;
    GradedSeed::from_parts(cluster, pattern, grading)
}

pub fn to_string_pretty(file: &SeedFile) -> String {
    serde_json::to_string_pretty(file).expect("seed files serialize") + "\n"
}

pub fn from_str(s: &str) -> Result<SeedFile, Error> {
    serde_json::from_str(s).map_err(|e| Error::Parse(format!("seed JSON: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clustergrade::roots::bipartite_seed;

    #[test]
    fn round_trip_is_identity() {
        for name in ["A2", "A3", "B3", "D4"] {
            let seed = bipartite_seed(name.parse().unwrap());
            let file = emit(&seed, &default_names(seed.num_vars())).unwrap();
            let text = to_string_pretty(&file);
            let parsed_file = from_str(&text).unwrap();
            assert_eq!(parsed_file, file);
            let parsed = parse(&parsed_file).unwrap();
            assert_eq!(&parsed, &seed, "{name}");
        }
    }

    #[test]
    fn bad_files_are_rejected() {
        let seed = bipartite_seed("A2".parse().unwrap());
        let mut file = emit(&seed, &default_names(2)).unwrap();
        file.mutable = vec![0, 2];
        assert!(parse(&file).is_err());
        let mut file2 = emit(&seed, &default_names(2)).unwrap();
        file2.g = vec![vec![1], vec![1]];
        assert!(parse(&file2).is_err(), "non-grading G must be rejected");
    }
}
