//! Cross-module invariants on the enumeration oracle.

use num_bigint::BigInt;

use clustergrade::cluster::{change_of_basis, standard_grading, GradedSeed, GradingMatrix};
use clustergrade::explore::{distribution, enumerate, Limits};
use clustergrade::roots::{bipartite_pattern, bipartite_seed, DynkinType};
use clustergrade::zlinalg::IntMatrix;

/// Enumerated totals equal the almost-positive-root counts across the small
/// finite types (the heavier E types are covered by the acceptance suite).
#[test]
fn totals_match_almost_positive_root_counts() {
    let limits = Limits::default();
    for name in [
        "A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4", "B5", "C3", "C5", "D4", "D5",
        "D6",
    ] {
        let t: DynkinType = name.parse().unwrap();
        let result = enumerate(&bipartite_seed(t), &limits).unwrap();
        assert_eq!(
            result.mutable_variable_count(),
            t.almost_positive_count(),
            "{name}"
        );
        assert!(distribution(&result).is_balanced(), "{name} balanced");
    }
}

/// The change-of-basis law: enumerating with H = G M yields the
/// G-distribution pushed through M, including a genuinely 2-dimensional
/// case.
#[test]
fn change_of_basis_law() {
    // One-dimensional: A5 with a scalar multiple.
    let t: DynkinType = "A5".parse().unwrap();
    let pattern = bipartite_pattern(t);
    let std = standard_grading(&pattern);
    let m = IntMatrix::from_rows(&[vec![2]]);
    let h = GradingMatrix::new(&pattern, std.matrix().mul(&m)).unwrap();
    let base = distribution(
        &enumerate(
            &GradedSeed::initial(pattern.clone(), std).unwrap(),
            &Limits::default(),
        )
        .unwrap(),
    );
    let pushed = distribution(
        &enumerate(
            &GradedSeed::initial(pattern, h).unwrap(),
            &Limits::default(),
        )
        .unwrap(),
    );
    assert_eq!(base.apply_basis_change(&m), pushed);

    // Two-dimensional: D4 with a unimodular mix and a rank-dropping map.
    let t: DynkinType = "D4".parse().unwrap();
    let pattern = bipartite_pattern(t);
    let std = standard_grading(&pattern);
    for m in [
        IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]),
        IntMatrix::from_rows(&[vec![1], vec![1]]),
    ] {
        let h = GradingMatrix::new(&pattern, std.matrix().mul(&m)).unwrap();
        let base = distribution(
            &enumerate(
                &GradedSeed::initial(pattern.clone(), std.clone()).unwrap(),
                &Limits::default(),
            )
            .unwrap(),
        );
        let pushed = distribution(
            &enumerate(
                &GradedSeed::initial(pattern.clone(), h).unwrap(),
                &Limits::default(),
            )
            .unwrap(),
        );
        assert_eq!(base.apply_basis_change(&m), pushed);
        // M itself is recoverable from the two gradings when it is square.
        if m.rows() == m.cols() {
            let h2 = GradingMatrix::new(&pattern, std.matrix().mul(&m)).unwrap();
            assert_eq!(change_of_basis(&std, &h2).unwrap(), m);
        }
    }
}

/// Enumerating with the zero grading puts all mass at the zero vector.
#[test]
fn zero_grading_distribution_is_concentrated() {
    let pattern = bipartite_pattern("A3".parse().unwrap());
    let n = pattern.num_vars();
    let seed = GradedSeed::initial(pattern, GradingMatrix::zero(n)).unwrap();
    let result = enumerate(&seed, &Limits::default()).unwrap();
    let dist = distribution(&result);
    assert_eq!(dist.count(&[BigInt::from(0)]), 9);
    assert_eq!(dist.total(), 9);
}

/// Regenerates the B3 distribution golden when blessed; otherwise checked
/// by the acceptance suite.
#[test]
fn bless_b3_distribution_golden() {
    if std::env::var("BLESS_GOLDEN").is_err() {
        return;
    }
    let result = enumerate(&bipartite_seed("B3".parse().unwrap()), &Limits::default()).unwrap();
    let csv = distribution(&result).to_csv();
    let path = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden/b3_distribution.csv");
    std::fs::write(path, csv).unwrap();
}

/// Standard stays standard: after any mutation sequence the grading columns
/// are again a lattice basis of the kernel of the transposed pattern.
#[test]
fn standard_gradings_stay_standard_under_mutation() {
    use clustergrade::cluster::mutate_seed;
    use clustergrade::zlinalg::{kernel_basis, solve_exact};
    use rand::{Rng, SeedableRng};

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
    for name in ["A3", "A5", "B3", "D4"] {
        let mut seed = bipartite_seed(name.parse().unwrap());
        let n = seed.num_vars();
        for _ in 0..12 {
            seed = mutate_seed(&seed, rng.gen_range(0..n)).unwrap();
            let kernel = kernel_basis(&seed.pattern().b().transpose());
            let g = seed.grading().matrix();
            // Same lattice: each basis solves integrally in the other.
            assert!(
                solve_exact(&kernel, g).is_some(),
                "{name}: G not in kernel lattice"
            );
            assert!(
                solve_exact(g, &kernel).is_some(),
                "{name}: kernel not in G lattice"
            );
        }
    }
}
