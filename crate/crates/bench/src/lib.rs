//! Shared fixtures for the benchmark targets.

use clustergrade::cluster::{mutate_seed, GradedSeed};
use clustergrade::roots::bipartite_seed;

/// A seed a few mutations deep, so benchmarks exercise non-monomial
/// arithmetic.
pub fn walked_seed(type_name: &str, walk: &[usize]) -> GradedSeed {
    let mut seed = bipartite_seed(type_name.parse().expect("valid type"));
    for &k in walk {
        seed = mutate_seed(&seed, k).expect("valid mutation");
    }
    seed
}
