//! Homogenisation: extending a seed with frozen coefficients so that an
//! arbitrary integer degree assignment becomes a genuine grading.
//!
//! Two constructions. The block construction stacks `-G^T B` under `B` and
//! the identity under `G`, fixing inhomogeneity one degree coordinate at a
//! time with one new coefficient each. The principal-coefficients
//! construction extends `B` by a signed identity, one new coefficient per
//! mutable variable, and solves for the degree rows that homogenise each
//! exchange column. Either way `B_hom^T G_hom = 0` holds by construction
//! and is asserted.

use num_bigint::BigInt;
use rand::Rng;

use crate::cluster::{ExchangePattern, GradedSeed, GradingMatrix};
use crate::error::Error;
use crate::explore::{enumerate, EnumerationResult, Limits};
use crate::laurent::LaurentPoly;
use crate::zlinalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomogenisationMethod {
    /// Stack `-G^T B` below `B`: one frozen variable per degree coordinate.
    Lemma,
    /// Principal coefficients: one frozen variable per mutable index.
    Principal,
}

/// A homogenised seed together with the indices of the frozen variables the
/// construction introduced.
#[derive(Clone, Debug)]
pub struct HomogenisedSeed {
    pub seed: GradedSeed,
    pub added_indices: Vec<usize>,
    pub method: HomogenisationMethod,
}

fn assert_grading(pattern: &ExchangePattern, g: IntMatrix) -> Result<GradingMatrix, Error> {
    GradingMatrix::new(pattern, g)
        .map_err(|e| Error::Internal(format!("homogenisation failed to produce a grading: {e}")))
}

/// Extend `(B, g)` to a graded seed with cluster `(X_1..X_r, h_1..h_d)`,
/// pattern `B` over `-g^T B` (new rows frozen) and grading `g` over the
/// d-by-d identity. `g` need not satisfy the grading condition; that is the
/// point. With `d = 0` the seed is returned unchanged.
pub fn homogenise(pattern: &ExchangePattern, g: &IntMatrix) -> Result<HomogenisedSeed, Error> {
    let r = pattern.num_vars();
    if g.rows() != r {
        return Err(Error::DimensionMismatch(format!(
            "degree matrix has {} rows, pattern has {r} variables",
            g.rows()
        )));
    }
    let d = g.cols();
    let correction = g.transpose().mul(pattern.b()).neg();
    let b_hom = pattern.b().vstack(&correction);
    let g_hom = g.vstack(&IntMatrix::identity(d));
    let new_pattern = ExchangePattern::new(b_hom, pattern.mutable_indices().to_vec())?;
    let grading = assert_grading(&new_pattern, g_hom)?;
    let seed = GradedSeed::initial(new_pattern, grading)?;
    Ok(HomogenisedSeed {
        seed,
        added_indices: (r..r + d).collect(),
        method: HomogenisationMethod::Lemma,
    })
}

/// Extend a square pattern by principal coefficients with the given sign
/// (`+1` appends the identity, `-1` its negative) and give the i-th new
/// variable whatever degree row homogenises the i-th exchange column:
/// `W = -D B^T g` for the signed identity `D`.
pub fn principal_homogenise(
    pattern: &ExchangePattern,
    g: &IntMatrix,
    sign: i8,
) -> Result<HomogenisedSeed, Error> {
    if !pattern.is_square() {
        return Err(Error::InvalidPattern(
            "principal coefficients need a square pattern".into(),
        ));
    }
    let r = pattern.num_vars();
    if g.rows() != r {
        return Err(Error::DimensionMismatch(format!(
            "degree matrix has {} rows, pattern has {r} variables",
            g.rows()
        )));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::Parse(format!("sign must be +1 or -1, got {sign}")));
    }
    let ident = IntMatrix::identity(r);
    let signed = if sign == 1 {
        ident.clone()
    } else {
        ident.neg()
    };
    let b_hom = pattern.b().vstack(&signed);
    let correction = signed.mul(&pattern.b().transpose().mul(g)).neg();
    let g_hom = g.vstack(&correction);
    let new_pattern = ExchangePattern::new(b_hom, pattern.mutable_indices().to_vec())?;
    let grading = assert_grading(&new_pattern, g_hom)?;
    let seed = GradedSeed::initial(new_pattern, grading)?;
    Ok(HomogenisedSeed {
        seed,
        added_indices: (r..2 * r).collect(),
        method: HomogenisationMethod::Principal,
    })
}

#[derive(Clone, Debug, Default)]
pub struct QuotientReport {
    pub original_variables: usize,
    pub homogenised_variables: usize,
    pub mismatches: Vec<String>,
}

impl QuotientReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Check that setting every added coefficient to 1 in the homogenised
/// algebra recovers exactly the mutable variable set of the original
/// algebra. Both sides are enumerated within `limits`.
pub fn quotient_recovers(
    original: &GradedSeed,
    hom: &HomogenisedSeed,
    limits: &Limits,
) -> Result<QuotientReport, Error> {
    let r = original.num_vars();
    if hom.added_indices.iter().any(|&i| i < r)
        || hom.seed.num_vars() != r + hom.added_indices.len()
    {
        return Err(Error::DimensionMismatch(
            "homogenised seed does not extend the original".into(),
        ));
    }
    let orig = enumerate(original, limits)?;
    let extended = enumerate(&hom.seed, limits)?;
    let specialize = |result: &EnumerationResult, keep: usize| -> Vec<LaurentPoly> {
        let mut polys: Vec<LaurentPoly> = result
            .variables()
            .iter()
            .filter(|v| !v.frozen)
            .map(|v| v.poly.substitute_ones_beyond(keep))
            .collect();
        polys.sort_unstable();
        polys.dedup();
        polys
    };
    let original_set = specialize(&orig, r);
    let specialized = specialize(&extended, r);

    let mut report = QuotientReport {
        original_variables: original_set.len(),
        homogenised_variables: specialized.len(),
        mismatches: Vec::new(),
    };
    for p in &original_set {
        if specialized.binary_search(p).is_err() {
            report
                .mismatches
                .push(format!("missing from homogenised algebra: {p}"));
        }
    }
    for p in &specialized {
        if original_set.binary_search(p).is_err() {
            report
                .mismatches
                .push(format!("extra in homogenised algebra: {p}"));
        }
    }
    Ok(report)
}

/// Random test fixtures: skew-symmetrizable integer matrices with bounded
/// entries and arbitrary degree assignments.
pub mod fixtures {
    use super::*;

    /// Random square skew-symmetrizable pattern of rank `r` with entries in
    /// [-2, 2]: pick a positive diagonal `D` with entries in {1, 2} and
    /// integers `t_ij`, then set `b_ij = t_ij * lcm(d_i, d_j) / d_i`, which
    /// makes `D B` skew-symmetric.
    pub fn random_pattern(rng: &mut impl Rng, r: usize) -> ExchangePattern {
        assert!(r >= 1);
        let d: Vec<i64> = (0..r).map(|_| rng.gen_range(1..=2)).collect();
        let mut b = IntMatrix::zero(r, r);
        for i in 0..r {
            for j in i + 1..r {
                let t: i64 = rng.gen_range(-1..=1);
                if t == 0 {
                    continue;
                }
                let lcm = num_integer::lcm(d[i], d[j]);
                b.set(i, j, BigInt::from(t * (lcm / d[i])));
                b.set(j, i, BigInt::from(-t * (lcm / d[j])));
            }
        }
        ExchangePattern::square(b).expect("construction is skew-symmetrizable")
    }

    /// Random degree assignment with entries in [-2, 2].
    pub fn random_degree_matrix(rng: &mut impl Rng, r: usize, d: usize) -> IntMatrix {
        IntMatrix::from_fn(r, d, |_, _| BigInt::from(rng.gen_range(-2i64..=2)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::standard_grading;
    use crate::roots::bipartite_pattern;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn a2() -> ExchangePattern {
        bipartite_pattern("A2".parse().unwrap())
    }

    #[test]
    fn lemma_homogenisation_of_a2() {
        let g = IntMatrix::from_rows(&[vec![1], vec![0]]);
        let hom = homogenise(&a2(), &g).unwrap();
        assert_eq!(
            hom.seed.pattern().b(),
            &IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0], vec![0, -1]])
        );
        assert_eq!(
            hom.seed.grading().matrix(),
            &IntMatrix::from_rows(&[vec![1], vec![0], vec![1]])
        );
        assert_eq!(hom.added_indices, vec![2]);
        assert!(!hom.seed.pattern().is_mutable(2));
    }

    #[test]
    fn lemma_homogenisation_when_g_is_already_a_grading() {
        // Added rows are zero: degree-carrying but disconnected coefficients.
        let p3 = bipartite_pattern("A3".parse().unwrap());
        let g = standard_grading(&p3);
        let hom = homogenise(&p3, g.matrix()).unwrap();
        for c in 0..3 {
            assert_eq!(hom.seed.pattern().b().get(3, c), &BigInt::from(0));
        }
    }

    #[test]
    fn linear_a4_gains_one_coefficient_vertex() {
        // Linear orientation, alternating degree assignment: one new frozen
        // vertex attached to vertex 1, extended grading (0,1,0,1 | 1).
        let b = IntMatrix::from_rows(&[
            vec![0, 1, 0, 0],
            vec![-1, 0, 1, 0],
            vec![0, -1, 0, 1],
            vec![0, 0, -1, 0],
        ]);
        let lin = ExchangePattern::square(b).unwrap();
        let g = IntMatrix::from_rows(&[vec![0], vec![1], vec![0], vec![1]]);
        let hom = homogenise(&lin, &g).unwrap();
        assert_eq!(
            hom.seed.pattern().b().row(4),
            &[
                BigInt::from(1),
                BigInt::from(0),
                BigInt::from(0),
                BigInt::from(0)
            ]
        );
        assert_eq!(
            hom.seed.grading().matrix(),
            &IntMatrix::from_rows(&[vec![0], vec![1], vec![0], vec![1], vec![1]])
        );
    }

    #[test]
    fn principal_homogenisation_of_a2() {
        let zero = IntMatrix::zero(2, 0);
        let hom = principal_homogenise(&a2(), &zero, 1).unwrap();
        assert_eq!(
            hom.seed.pattern().b(),
            &IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0], vec![1, 0], vec![0, 1]])
        );
        // The grading space of the extended pattern is two-dimensional with
        // the canonical kernel basis (1,0,0,-1), (0,1,1,0).
        let std = standard_grading(hom.seed.pattern());
        assert_eq!(
            std.matrix(),
            &IntMatrix::from_rows(&[vec![1, 0], vec![0, 1], vec![0, 1], vec![-1, 0]])
        );
    }

    #[test]
    fn principal_degree_rows_solve_the_columns() {
        // Linear A3 with g = (1,0,0): correction rows -(B^T g) per column.
        let b = IntMatrix::from_rows(&[vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]);
        let lin = ExchangePattern::square(b).unwrap();
        let g = IntMatrix::from_rows(&[vec![1], vec![0], vec![0]]);
        let hom = principal_homogenise(&lin, &g, 1).unwrap();
        assert_eq!(
            hom.seed.grading().matrix(),
            &IntMatrix::from_rows(&[vec![1], vec![0], vec![0], vec![0], vec![-1], vec![0]])
        );
        // g already a grading: all-zero correction rows.
        let p3 = bipartite_pattern("A3".parse().unwrap());
        let std = standard_grading(&p3);
        let hom = principal_homogenise(&p3, std.matrix(), 1).unwrap();
        for i in 3..6 {
            assert_eq!(hom.seed.grading().matrix().get(i, 0), &BigInt::from(0));
        }
        // The negative-identity sign choice also yields a grading.
        let hom_neg = principal_homogenise(&lin, &g, -1).unwrap();
        assert_eq!(hom_neg.seed.grading().matrix().row(4), &[BigInt::from(1)]);
    }

    #[test]
    fn quotients_recover_the_original_algebra() {
        let limits = Limits {
            max_seeds: 10_000,
            max_variables: 1_000,
        };
        let pattern = a2();
        let seed = GradedSeed::initial_standard(pattern.clone());

        let g = IntMatrix::from_rows(&[vec![1], vec![0]]);
        let lemma = homogenise(&pattern, &g).unwrap();
        let report = quotient_recovers(&seed, &lemma, &limits).unwrap();
        assert!(report.is_ok(), "{:?}", report.mismatches);
        assert_eq!(report.original_variables, 5);

        let principal = principal_homogenise(&pattern, &g, 1).unwrap();
        let report = quotient_recovers(&seed, &principal, &limits).unwrap();
        assert!(report.is_ok(), "{:?}", report.mismatches);

        // Trivial homogenisation (already a grading) also recovers.
        let p3 = bipartite_pattern("A3".parse().unwrap());
        let seed3 = GradedSeed::initial_standard(p3.clone());
        let hom3 = homogenise(&p3, standard_grading(&p3).matrix()).unwrap();
        let report = quotient_recovers(&seed3, &hom3, &limits).unwrap();
        assert!(report.is_ok(), "{:?}", report.mismatches);
    }

    #[test]
    fn random_fixtures_are_skew_symmetrizable_and_homogenise() {
        let mut rng = ChaCha8Rng::seed_from_u64(20240917);
        for _ in 0..50 {
            let r = rng.gen_range(1..=5);
            let d = rng.gen_range(1..=2);
            let pattern = fixtures::random_pattern(&mut rng, r);
            let g = fixtures::random_degree_matrix(&mut rng, r, d);
            // Constructors assert B_hom^T G_hom = 0; reaching here is the test.
            let lemma = homogenise(&pattern, &g).unwrap();
            assert_eq!(lemma.seed.num_vars(), r + d);
            let prin = principal_homogenise(&pattern, &g, 1).unwrap();
            assert_eq!(prin.seed.num_vars(), 2 * r);
        }
    }
}
