//! Edge-transitive circulants of prime order: edge-orbit computation against the
//! multiplicative coset test.

use serde::Serialize;

use crate::cayley::ConnectionSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::is_edge_transitive;
use crate::walks::is_prime;

pub const CHAO_PRIME_LIMIT: usize = 17;

/// Whether `set` (a subset of `Z_p \ {0}`) is a coset `H z` of a subgroup `H` of
/// the multiplicative group: `set * z^-1` must be closed under multiplication.
pub fn is_multiplicative_coset(set: &[usize], p: usize) -> bool {
    let Some(&z) = set.iter().min() else {
        return false;
    };
    if set.iter().any(|&s| s % p == 0) {
        return false;
    }
    let z_inv = (1..p).find(|&y| y * z % p == 1).expect("p is prime");
    let mut h: Vec<usize> = set.iter().map(|&s| s * z_inv % p).collect();
    h.sort_unstable();
    h.iter()
        .all(|&a| h.iter().all(|&b| h.binary_search(&(a * b % p)).is_ok()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChaoInstance {
    #[serde(rename = "S")]
    pub set: Vec<usize>,
    pub edge_transitive: bool,
    pub coset: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChaoReport {
    pub p: usize,
    /// Symmetric subsets enumerated, including the empty one.
    pub enumerated: usize,
    pub instances: Vec<ChaoInstance>,
    pub disagreements: Vec<ChaoInstance>,
}

impl ChaoReport {
    pub fn holds(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compares edge-transitivity of `Cay(Z_p; S)` with the coset test for every
/// non-empty symmetric `S` in `Z_p \ {0}`.
pub fn chao_check(p: usize) -> Result<ChaoReport> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not an odd prime")));
    }
    if p > CHAO_PRIME_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "p = {p} exceeds the supported limit {CHAO_PRIME_LIMIT}"
        )));
    }
    let group = FiniteGroup::abelian(&[p])?;
    let half = (p - 1) / 2;
    let enumerated = 1usize << half;
    let mut instances = Vec::new();
    for mask in 1..enumerated {
        let mut members: Vec<usize> = (0..half)
            .filter(|b| mask >> b & 1 == 1)
            .flat_map(|b| [b + 1, p - b - 1])
            .collect();
        members.sort_unstable();
        let set = ConnectionSet::new(&group, members.iter().copied())?;
        let graph = set.cayley_graph();
        instances.push(ChaoInstance {
            edge_transitive: is_edge_transitive(&graph),
            coset: is_multiplicative_coset(&members, p),
            set: members,
        });
    }
    let disagreements = instances
        .iter()
        .filter(|i| i.edge_transitive != i.coset)
        .cloned()
        .collect();
    Ok(ChaoReport {
        p,
        enumerated,
        instances,
        disagreements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ColoredGraph;

    fn circulant(p: usize, set: &[usize]) -> ColoredGraph {
        let g = FiniteGroup::abelian(&[p]).unwrap();
        ConnectionSet::new(&g, set.iter().copied())
            .unwrap()
            .cayley_graph()
    }

    #[test]
    fn order_four_subgroup_mod_13() {
        assert!(is_multiplicative_coset(&[1, 5, 8, 12], 13));
        assert!(is_edge_transitive(&circulant(13, &[1, 5, 8, 12])));
    }

    #[test]
    fn z7_two_pairs() {
        assert!(!is_multiplicative_coset(&[1, 2, 5, 6], 7));
        assert!(!is_edge_transitive(&circulant(7, &[1, 2, 5, 6])));
    }

    #[test]
    fn complete_graph_is_full_group() {
        assert!(is_multiplicative_coset(&[1, 2, 3, 4], 5));
        assert!(is_edge_transitive(&circulant(5, &[1, 2, 3, 4])));
    }

    #[test]
    fn non_subgroup_coset() {
        // {2, 5} = 2 * {1, 6} in Z_7^x
        assert!(is_multiplicative_coset(&[2, 5], 7));
        assert!(!is_multiplicative_coset(&[], 7));
    }

    #[test]
    fn bad_primes() {
        assert!(chao_check(9).is_err());
        assert!(chao_check(2).is_err());
        assert!(chao_check(19).is_err());
    }

    #[test]
    fn p7_agrees() {
        let r = chao_check(7).unwrap();
        assert_eq!(r.enumerated, 8);
        assert_eq!(r.instances.len(), 7);
        assert!(r.holds());
    }
}
