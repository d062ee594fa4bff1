//! Finite-type data: Cartan matrices, bipartite initial seeds, positive
//! roots, the degree formula for denominator vectors, and the closed-form
//! degree distributions.
//!
//! Vertex numbering follows the Dynkin diagram conventions used throughout
//! the exchange-matrix displays: types A, B, C, F and G are chains
//! `1 - 2 - ... - n` with the short/long asymmetry at the far end; in type D
//! the fork vertices `n-1` and `n` hang off `n-2`; in the E family vertex
//! `n` hangs off vertex 3 of the chain `1 - ... - (n-1)`.

use num_bigint::BigInt;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::cluster::{DegVec, ExchangePattern, GradedSeed, GradingMatrix};
use crate::distribution::DegreeDistribution;
use crate::error::Error;
use crate::zlinalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A finite Dynkin type such as `A5`, `B3` or `E7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(Error::InvalidDynkin(format!("{family:?}{rank}")))
        }
    }

    /// Classical number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Positive roots plus negative simples: the index set for the cluster
    /// variables of the coefficient-free algebra of this type.
    pub fn almost_positive_count(&self) -> usize {
        self.positive_root_count() + self.rank
    }

    /// Edges of the Dynkin diagram (unordered, 0-based).
    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let mut e: Vec<(usize, usize)> = match self.family {
            Family::D => (0..n - 3).map(|i| (i, i + 1)).collect(),
            Family::E => (0..n - 2).map(|i| (i, i + 1)).collect(),
            _ => (0..n - 1).map(|i| (i, i + 1)).collect(),
        };
        match self.family {
            Family::D => {
                e.push((n - 3, n - 2));
                e.push((n - 3, n - 1));
            }
            Family::E => e.push((2, n - 1)),
            _ => {}
        }
        e
    }

    /// Whether vertex `i` (0-based) is a source in the bipartite orientation.
    fn is_source(&self, i: usize) -> bool {
        let n = self.rank;
        match self.family {
            Family::D => {
                if i >= n - 2 {
                    // The fork vertices take the class opposite to n-2.
                    (n - 2) % 2 == 0
                } else {
                    i % 2 == 0
                }
            }
            Family::E => {
                if i == n - 1 {
                    // Attached to vertex 3 of the chain, which is a source.
                    false
                } else {
                    i % 2 == 0
                }
            }
            _ => i % 2 == 0,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::InvalidDynkin(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidDynkin(s.to_string()))?;
        DynkinType::new(fam, rank)
    }
}

/// Standard Cartan matrix: 2 on the diagonal, with the asymmetric corner
/// entries of types B, C, F and G placed per the diagram conventions above.
pub fn cartan_matrix(t: DynkinType) -> IntMatrix {
    let n = t.rank;
    let mut a = IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            BigInt::from(2)
        } else {
            BigInt::from(0)
        }
    });
    for (i, j) in t.edges() {
        a.set(i, j, BigInt::from(-1));
        a.set(j, i, BigInt::from(-1));
    }
    match t.family {
        // a_{n,n-1} = -2: the short root sits at vertex n.
        Family::B => a.set(n - 1, n - 2, BigInt::from(-2)),
        // a_{n-1,n} = -2: the long root sits at vertex n.
        Family::C => a.set(n - 2, n - 1, BigInt::from(-2)),
        // F4: double bond in the middle.
        Family::F => a.set(1, 2, BigInt::from(-2)),
        // G2: triple bond.
        Family::G => a.set(1, 0, BigInt::from(-3)),
        _ => {}
    }
    a
}

/// Bipartite exchange matrix whose Cartan companion is `cartan_matrix(t)`:
/// rows of sources are nonnegative, rows of sinks nonpositive.
pub fn bipartite_pattern(t: DynkinType) -> ExchangePattern {
    let a = cartan_matrix(t);
    let n = t.rank;
    let b = IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            BigInt::from(0)
        } else {
            let mag = -a.get(i, j);
            if t.is_source(i) {
                mag
            } else {
                -mag
            }
        }
    });
    let pattern = ExchangePattern::square(b).expect("bipartite pattern is valid");
    debug_assert!(pattern.is_bipartite());
    debug_assert_eq!(pattern.cartan_companion(), a);
    pattern
}

/// The bipartite initial seed of type `t`, carrying its standard grading.
pub fn bipartite_seed(t: DynkinType) -> GradedSeed {
    GradedSeed::initial_standard(bipartite_pattern(t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootKind {
    Positive,
    NegativeSimple,
}

/// A root written in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
    kind: RootKind,
}

impl Root {
    pub fn positive(coeffs: Vec<i64>) -> Result<Self, Error> {
        if coeffs.iter().any(|&c| c < 0) || coeffs.iter().all(|&c| c == 0) {
            return Err(Error::Internal(format!("not a positive root: {coeffs:?}")));
        }
        Ok(Root {
            coeffs,
            kind: RootKind::Positive,
        })
    }

    pub fn negative_simple(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0i64; rank];
        coeffs[i] = -1;
        Root {
            coeffs,
            kind: RootKind::NegativeSimple,
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }
}

/// All positive roots of `t`, generated by closing the simple roots under
/// the simple reflections `s_i(beta) = beta - <beta, alpha_i^vee> alpha_i`.
///
/// The output is sorted by height and then lexicographically, so it is
/// deterministic.
pub fn positive_roots(t: DynkinType) -> Vec<Root> {
    let a = cartan_matrix(t);
    let n = t.rank;
    let a64: Vec<Vec<i64>> = a.to_i64_rows().expect("Cartan entries are small");
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut work: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone());
        work.push(e);
    }
    while let Some(beta) = work.pop() {
        for i in 0..n {
            // <beta, alpha_i^vee> = sum_j a_{ij} beta_j
            let pairing: i64 = (0..n).map(|j| a64[i][j] * beta[j]).sum();
            let mut refl = beta.clone();
            refl[i] -= pairing;
            if refl.iter().all(|&c| c >= 0)
                && refl.iter().any(|&c| c > 0)
                && seen.insert(refl.clone())
            {
                work.push(refl);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    roots
        .into_iter()
        .map(|coeffs| Root {
            coeffs,
            kind: RootKind::Positive,
        })
        .collect()
}

/// Degree of the cluster variable indexed by `alpha`: `-alpha G` for a
/// positive root, and `+G_i` for the negative simple `-alpha_i`.
pub fn degree_of_root(alpha: &Root, grading: &GradingMatrix) -> Result<DegVec, Error> {
    if alpha.coeffs.len() != grading.rows() {
        return Err(Error::DimensionMismatch(format!(
            "root of rank {}, grading with {} rows",
            alpha.coeffs.len(),
            grading.rows()
        )));
    }
    let g = grading.matrix();
    let d = g.cols();
    Ok((0..d)
        .map(|j| {
            let mut acc = BigInt::from(0);
            for (i, &ci) in alpha.coeffs.iter().enumerate() {
                if ci != 0 {
                    acc -= g.get(i, j) * BigInt::from(ci);
                }
            }
            acc
        })
        .collect())
}

fn deg1(v: i64) -> DegVec {
    vec![BigInt::from(v)]
}

fn deg2(a: i64, b: i64) -> DegVec {
    vec![BigInt::from(a), BigInt::from(b)]
}

/// Whether the coefficient-free algebra of type `t` admits only the zero
/// grading (the bipartite exchange matrix has full rank).
pub fn is_zero_grading_type(t: DynkinType) -> bool {
    match t.family {
        Family::A | Family::B | Family::C => t.rank % 2 == 0,
        Family::D => false,
        Family::E => t.rank != 7,
        Family::F | Family::G => true,
    }
}

/// The published closed-form degree distributions, instantiated per type.
///
/// These are claims to be checked against enumeration, not ground truth: in
/// type B the stated counts do not even sum to the almost-positive-root
/// total, and the enumeration oracle is the arbiter.
pub fn closed_form_distribution(t: DynkinType) -> DegreeDistribution {
    let n = t.rank as i64;
    let mut dist = DegreeDistribution::new();
    if is_zero_grading_type(t) {
        // Zero grading: all variables in degree zero of the empty grading.
        dist.insert(Vec::new(), t.almost_positive_count());
        return dist;
    }
    match t.family {
        Family::A => {
            dist.insert(deg1(1), ((n + 1) * (n + 3) / 8) as usize);
            dist.insert(deg1(0), ((n - 1) * (n + 3) / 4) as usize);
            dist.insert(deg1(-1), ((n + 1) * (n + 3) / 8) as usize);
        }
        Family::B => {
            dist.insert(deg1(2), ((n + 1) * (n - 1) / 4) as usize);
            dist.insert(deg1(1), ((n + 1) / 2) as usize);
            dist.insert(deg1(0), ((n + 1) * (n - 1) / 4) as usize);
            dist.insert(deg1(-1), ((n + 1) / 2) as usize);
            dist.insert(deg1(-2), ((n + 1) * (n - 1) / 4) as usize);
        }
        Family::C => {
            let q = (n + 1) / 2;
            dist.insert(deg1(1), (q * q) as usize);
            dist.insert(deg1(0), ((n + 1) * (n - 1) / 2) as usize);
            dist.insert(deg1(-1), (q * q) as usize);
        }
        Family::D => {
            if n % 2 == 1 {
                dist.insert(deg1(1), n as usize);
                dist.insert(deg1(0), (n * (n - 2)) as usize);
                dist.insert(deg1(-1), n as usize);
            } else {
                let half = (n / 2) as usize;
                let quarter = ((n * n - 2 * n) / 4) as usize;
                dist.insert(deg2(-1, 0), quarter);
                dist.insert(deg2(-1, 1), half);
                dist.insert(deg2(0, -1), half);
                dist.insert(deg2(0, 0), 2 * quarter);
                dist.insert(deg2(0, 1), half);
                dist.insert(deg2(1, -1), half);
                dist.insert(deg2(1, 0), quarter);
            }
        }
        Family::E => {
            dist.insert(deg1(1), 15);
            dist.insert(deg1(0), 40);
            dist.insert(deg1(-1), 15);
        }
        Family::F | Family::G => unreachable!("covered by the zero-grading branch"),
    }
    dist
}

/// The kernel vectors in the basis the closed-form distributions are stated
/// in, for the types where they are printed explicitly (A odd, D).
///
/// Used to align the canonical standard grading with the closed-form tables
/// through an integral change of basis. `None` for the other types.
pub fn closed_form_grading(t: DynkinType) -> Option<IntMatrix> {
    let n = t.rank;
    match (t.family, n % 2) {
        (Family::A, 1) => {
            let mut g = IntMatrix::zero(n, 1);
            for i in 0..n {
                let v = match (i + 1) % 4 {
                    1 => 1,
                    3 => -1,
                    _ => 0,
                };
                g.set(i, 0, BigInt::from(v));
            }
            Some(g)
        }
        (Family::D, 1) => {
            let mut g = IntMatrix::zero(n, 1);
            g.set(n - 2, 0, BigInt::from(1));
            g.set(n - 1, 0, BigInt::from(-1));
            Some(g)
        }
        (Family::D, 0) => {
            let mut g = IntMatrix::zero(n, 2);
            for i in 0..n - 2 {
                let v = match (i + 1) % 4 {
                    1 => 1,
                    3 => -1,
                    _ => 0,
                };
                g.set(i, 0, BigInt::from(v));
            }
            if n % 4 == 0 {
                g.set(n - 2, 0, BigInt::from(-1));
                g.set(n - 2, 1, BigInt::from(1));
                g.set(n - 1, 1, BigInt::from(-1));
            } else {
                g.set(n - 2, 0, BigInt::from(1));
                g.set(n - 2, 1, BigInt::from(-1));
                g.set(n - 1, 1, BigInt::from(1));
            }
            Some(g)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::degree;
    use crate::cluster::standard_grading;

    fn t(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn type_parsing_and_validation() {
        assert_eq!(t("A5"), DynkinType::new(Family::A, 5).unwrap());
        assert_eq!(t("e7").to_string(), "E7");
        assert!("E9".parse::<DynkinType>().is_err());
        assert!("D3".parse::<DynkinType>().is_err());
        assert!("F5".parse::<DynkinType>().is_err());
        assert!("H3".parse::<DynkinType>().is_err());
        assert!("A0".parse::<DynkinType>().is_err());
    }

    #[test]
    fn cartan_matrices_match_the_displays() {
        assert_eq!(
            cartan_matrix(t("B3")),
            IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]])
        );
        assert_eq!(
            cartan_matrix(t("C3")),
            IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]])
        );
        assert_eq!(
            cartan_matrix(t("A2")),
            IntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]])
        );
    }

    #[test]
    fn bipartite_exchange_matrices_match_the_displays() {
        assert_eq!(
            bipartite_pattern(t("B3")).b(),
            &IntMatrix::from_rows(&[vec![0, 1, 0], vec![-1, 0, -1], vec![0, 2, 0]])
        );
        assert_eq!(
            bipartite_pattern(t("C3")).b(),
            &IntMatrix::from_rows(&[vec![0, 1, 0], vec![-1, 0, -2], vec![0, 1, 0]])
        );
        assert_eq!(
            bipartite_pattern(t("A3")).b(),
            &IntMatrix::from_rows(&[vec![0, 1, 0], vec![-1, 0, -1], vec![0, 1, 0]])
        );
        // Even rank flips the signs of the final rows relative to the odd
        // display: the last row becomes a sink row.
        assert_eq!(
            bipartite_pattern(t("B4")).b(),
            &IntMatrix::from_rows(&[
                vec![0, 1, 0, 0],
                vec![-1, 0, -1, 0],
                vec![0, 1, 0, 1],
                vec![0, 0, -2, 0],
            ])
        );
        for name in ["A4", "B5", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let ty = t(name);
            let p = bipartite_pattern(ty);
            assert!(p.is_bipartite(), "{name} not bipartite");
            assert_eq!(p.cartan_companion(), cartan_matrix(ty), "{name} companion");
        }
    }

    #[test]
    fn standard_gradings_of_small_types() {
        // A4: full rank, empty grading.
        assert_eq!(standard_grading(&bipartite_pattern(t("A4"))).dim(), 0);
        // A5: one kernel vector.
        assert_eq!(
            standard_grading(&bipartite_pattern(t("A5"))).matrix(),
            &IntMatrix::from_rows(&[vec![1], vec![0], vec![-1], vec![0], vec![1]])
        );
        // E7 has corank one.
        assert_eq!(standard_grading(&bipartite_pattern(t("E7"))).dim(), 1);
        // D4: two-dimensional standard grading spanning the same lattice as
        // the closed-form vectors.
        let p = bipartite_pattern(t("D4"));
        let std = standard_grading(&p);
        assert_eq!(std.dim(), 2);
        let published = GradingMatrix::new(&p, closed_form_grading(t("D4")).unwrap()).unwrap();
        let m = crate::cluster::change_of_basis(&std, &published).unwrap();
        assert!(
            m.det().magnitude() == &1u32.into(),
            "bases span the same lattice"
        );
    }

    #[test]
    fn full_rank_types_have_no_grading() {
        for name in ["A2", "A4", "A6", "B2", "B4", "C4", "E6", "E8", "F4", "G2"] {
            let p = bipartite_pattern(t(name));
            assert_eq!(standard_grading(&p).dim(), 0, "{name} should be full rank");
            assert!(is_zero_grading_type(t(name)));
        }
        for name in ["A5", "B3", "C3", "D4", "D5", "E7"] {
            assert!(!is_zero_grading_type(t(name)));
        }
    }

    #[test]
    fn positive_root_counts() {
        for (name, count) in [
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ] {
            let ty = t(name);
            let roots = positive_roots(ty);
            assert_eq!(roots.len(), count, "{name}");
            assert_eq!(roots.len(), ty.positive_root_count(), "{name} closed form");
            // No duplicates, all positive.
            let set: BTreeSet<_> = roots.iter().map(|r| r.coeffs().to_vec()).collect();
            assert_eq!(set.len(), roots.len());
        }
    }

    #[test]
    fn a3_positive_roots_are_consecutive_sums() {
        let roots = positive_roots(t("A3"));
        let expect: BTreeSet<Vec<i64>> = [
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 0],
            vec![0, 1, 1],
            vec![1, 1, 1],
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Vec<i64>> = roots.iter().map(|r| r.coeffs().to_vec()).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn b2_positive_roots() {
        let got: BTreeSet<Vec<i64>> = positive_roots(t("B2"))
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        let expect: BTreeSet<Vec<i64>> = [vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]
            .into_iter()
            .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn degree_of_root_examples() {
        let p = bipartite_pattern(t("A5"));
        let g = standard_grading(&p);
        // alpha_1 + alpha_2 + alpha_3 pairs to zero.
        let alpha = Root::positive(vec![1, 1, 1, 0, 0]).unwrap();
        assert_eq!(degree_of_root(&alpha, &g).unwrap(), vec![BigInt::from(0)]);
        // X[alpha_1] and X[-alpha_1] have opposite degrees.
        let a1 = Root::positive(vec![1, 0, 0, 0, 0]).unwrap();
        assert_eq!(degree_of_root(&a1, &g).unwrap(), vec![BigInt::from(-1)]);
        let neg = Root::negative_simple(5, 0);
        assert_eq!(degree_of_root(&neg, &g).unwrap(), vec![BigInt::from(1)]);

        // Zero grading: everything in degree zero.
        let z = GradingMatrix::zero(5);
        for r in positive_roots(t("A5")) {
            assert_eq!(degree_of_root(&r, &z).unwrap(), vec![BigInt::from(0)]);
        }

        // Linearity in alpha: degree(a + b) = degree(a) + degree(b).
        let b = Root::positive(vec![0, 1, 1, 1, 0]).unwrap();
        let sum = Root::positive(vec![1, 1, 1, 1, 0]).unwrap();
        let da = degree_of_root(&a1, &g).unwrap();
        let db = degree_of_root(&b, &g).unwrap();
        let ds = degree_of_root(&sum, &g).unwrap();
        assert_eq!(ds[0], &da[0] + &db[0]);
    }

    #[test]
    fn closed_form_distributions_instantiate() {
        let a5 = closed_form_distribution(t("A5"));
        assert_eq!(a5.count(&deg1(1)), 6);
        assert_eq!(a5.count(&deg1(0)), 8);
        assert_eq!(a5.count(&deg1(-1)), 6);
        assert_eq!(a5.total(), 20);

        let d4 = closed_form_distribution(t("D4"));
        assert_eq!(d4.count(&deg2(0, 0)), 4);
        assert_eq!(d4.count(&deg2(-1, 1)), 2);
        assert_eq!(d4.count(&deg2(1, 1)), 0);
        assert_eq!(d4.total(), 16);

        let e7 = closed_form_distribution(t("E7"));
        assert_eq!(e7.count(&deg1(1)), 15);
        assert_eq!(e7.count(&deg1(0)), 40);
        assert_eq!(e7.total(), 70);

        // Cardinality agrees with the almost-positive-root count for the
        // types where the closed forms are consistent...
        for name in ["A1", "A3", "A5", "A7", "C3", "C5", "D4", "D5", "D6", "E7"] {
            let ty = t(name);
            assert_eq!(
                closed_form_distribution(ty).total(),
                ty.almost_positive_count(),
                "{name}"
            );
        }
        // ...and is EXPECTED to disagree in type B: the stated counts sum to
        // (3n+1)(n+1)/4, not n^2 + n. The discrepancy must be flagged, never
        // silently accepted.
        for n in [3usize, 5, 7] {
            let ty = DynkinType::new(Family::B, n).unwrap();
            let stated = closed_form_distribution(ty).total();
            assert_eq!(stated, (3 * n + 1) * (n + 1) / 4);
            assert_ne!(stated, ty.almost_positive_count(), "B{n} must mismatch");
        }
    }

    #[test]
    fn initial_cluster_is_homogeneous() {
        let seed = bipartite_seed(t("A5"));
        for (i, x) in seed.cluster().iter().enumerate() {
            let d = degree(x, seed.grading()).unwrap();
            assert_eq!(d, seed.grading().row_degree(i));
        }
    }
}
