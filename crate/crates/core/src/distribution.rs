//! Degree distributions: multisets of degree vectors with counts.

use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

use crate::cluster::{deg_to_string, DegVec};
use crate::zlinalg::IntMatrix;

/// Map from degree vectors in Z^d to the number of cluster variables of
/// that degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeDistribution {
    counts: BTreeMap<DegVec, usize>,
}

impl DegreeDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, degree: DegVec, count: usize) {
        if count > 0 {
            *self.counts.entry(degree).or_insert(0) += count;
        }
    }

    pub fn add(&mut self, degree: DegVec) {
        *self.counts.entry(degree).or_insert(0) += 1;
    }

    pub fn count(&self, degree: &[BigInt]) -> usize {
        self.counts.get(degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DegVec, usize)> {
        self.counts.iter().map(|(d, &c)| (d, c))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Balanced: for every degree d, as many variables of degree d as of -d.
    pub fn is_balanced(&self) -> bool {
        self.counts.iter().all(|(d, &c)| {
            let neg: DegVec = d.iter().map(|x| -x).collect();
            self.count(&neg) == c
        })
    }

    /// Push degrees through a change of basis: each degree row vector `d`
    /// becomes `d * m`.
    pub fn apply_basis_change(&self, m: &IntMatrix) -> DegreeDistribution {
        let mut out = DegreeDistribution::new();
        for (d, c) in self.iter() {
            assert_eq!(d.len(), m.rows(), "degree dimension mismatch");
            let mapped: DegVec = (0..m.cols())
                .map(|j| {
                    let mut acc = BigInt::from(0);
                    for (i, di) in d.iter().enumerate() {
                        acc += di * m.get(i, j);
                    }
                    acc
                })
                .collect();
            out.insert(mapped, c);
        }
        out
    }

    /// Flip the sign of every degree vector.
    pub fn negate(&self) -> DegreeDistribution {
        let mut out = DegreeDistribution::new();
        for (d, c) in self.iter() {
            out.insert(d.iter().map(|x| -x).collect(), c);
        }
        out
    }

    /// CSV rendering with header `degree,count`; degree vectors are
    /// bracketed and comma-joined, so the field is always quoted.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("degree,count\n");
        for (d, c) in self.iter() {
            s.push_str(&format!("\"{}\",{}\n", deg_to_string(d), c));
        }
        s
    }
}

impl fmt::Display for DegreeDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write!(f, "{{")?;
        for (d, c) in self.iter() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{}: {}", deg_to_string(d), c)?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<DegVec> for DegreeDistribution {
    fn from_iter<T: IntoIterator<Item = DegVec>>(iter: T) -> Self {
        let mut d = DegreeDistribution::new();
        for v in iter {
            d.add(v);
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: &[i64]) -> DegVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn balance() {
        let mut dist = DegreeDistribution::new();
        dist.insert(d(&[1]), 6);
        dist.insert(d(&[0]), 8);
        dist.insert(d(&[-1]), 6);
        assert!(dist.is_balanced());
        assert_eq!(dist.total(), 20);

        let mut bad = DegreeDistribution::new();
        bad.insert(d(&[1]), 1);
        assert!(!bad.is_balanced());

        assert!(DegreeDistribution::new().is_balanced());
    }

    #[test]
    fn basis_change_and_negation() {
        let mut dist = DegreeDistribution::new();
        dist.insert(d(&[1]), 2);
        dist.insert(d(&[-1]), 3);
        let m = IntMatrix::from_rows(&[vec![-2]]);
        let pushed = dist.apply_basis_change(&m);
        assert_eq!(pushed.count(&d(&[-2])), 2);
        assert_eq!(pushed.count(&d(&[2])), 3);
        assert_eq!(dist.negate().count(&d(&[-1])), 2);
    }

    #[test]
    fn csv_is_quoted_and_sorted() {
        let mut dist = DegreeDistribution::new();
        dist.insert(d(&[0, 1]), 2);
        dist.insert(d(&[-1, 0]), 1);
        assert_eq!(dist.to_csv(), "degree,count\n\"[-1,0]\",1\n\"[0,1]\",2\n");
    }
}
