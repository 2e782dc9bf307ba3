//! Exact walk counting and the walk-count characterisation of `Cay(G; pS)`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::cayley::ConnectionSet;
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

/// Number of length-`len` walks from `from` to each vertex.
/// Colours are ignored and a loop is one step.
pub fn walk_counts_from(graph: &ColoredGraph, from: usize, len: usize) -> Result<Vec<BigUint>> {
    let n = graph.vertex_count();
    if from >= n {
        return Err(Error::InvalidVertex { vertex: from, n });
    }
    let mut counts = vec![BigUint::zero(); n];
    counts[from] = BigUint::from(1u32);
    for _ in 0..len {
        let mut next = vec![BigUint::zero(); n];
        for (x, slot) in next.iter_mut().enumerate() {
            for &(y, _) in graph.adj(x) {
                *slot += &counts[y];
            }
        }
        counts = next;
    }
    Ok(counts)
}

/// Exact number of walks of length `len >= 1` from `v` to `w`.
pub fn walk_count(graph: &ColoredGraph, v: usize, w: usize, len: usize) -> Result<BigUint> {
    if len == 0 {
        return Err(Error::InvalidParameter(
            "walk length must be at least 1".into(),
        ));
    }
    if w >= graph.vertex_count() {
        return Err(Error::InvalidVertex {
            vertex: w,
            n: graph.vertex_count(),
        });
    }
    Ok(walk_counts_from(graph, v, len)?.swap_remove(w))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkModReport {
    pub p: usize,
    pub pairs_checked: usize,
    /// `(v, w, walk count mod p, adjacent in Cay(G; pS))` for each disagreement.
    pub violations: Vec<(usize, usize, BigUint, bool)>,
    /// Pairs where the count is not congruent to the multiplicity of `w - v` in `pS`.
    pub congruence_failures: Vec<(usize, usize)>,
}

impl WalkModReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.congruence_failures.is_empty()
    }
}

pub fn is_prime(p: usize) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// For every pair `(v, w)`, compares "the number of length-`p` walks in
/// `Cay(G; S)` is non-zero mod `p`" with adjacency in `Cay(G; pS)`.
///
/// In the group ring over `F_p`, `(sum S)^p = sum of s^p`, so the count is
/// congruent to the number of `s` with `w = s^p v`. The equivalence is exact
/// unless some element of `pS` is hit a positive multiple of `p` times, which
/// is refused. Both the congruence and the equivalence are checked.
pub fn walk_count_mod_check(set: &ConnectionSet<'_>, p: usize) -> Result<WalkModReport> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let group = set.group();
    if !group.is_abelian() {
        return Err(Error::Precondition(
            "walk-count check needs an abelian group".into(),
        ));
    }
    let mut multiplicity: BTreeMap<usize, usize> = BTreeMap::new();
    for s in set.members() {
        *multiplicity.entry(group.pow(s, p as i64)).or_default() += 1;
    }
    if let Some((&g, &m)) = multiplicity.iter().find(|(_, &m)| m % p == 0) {
        return Err(Error::Precondition(format!(
            "{} is {p}s for {m} elements s of the connection set",
            group.name(g)
        )));
    }
    let base = set.uncolored().cayley_graph();
    let scaled = set.uncolored().scaled(p as i64).cayley_graph();
    let modulus = BigUint::from(p);
    let n = group.order();
    let mut violations = Vec::new();
    let mut congruence_failures = Vec::new();
    for v in 0..n {
        let counts = walk_counts_from(&base, v, p)?;
        for (w, count) in counts.into_iter().enumerate() {
            let residue = count % &modulus;
            // w = t v  with  t = w v^-1
            let t = group.op(w, group.inverse_of(v));
            let expected = multiplicity.get(&t).copied().unwrap_or(0) % p;
            if residue != BigUint::from(expected) {
                congruence_failures.push((v, w));
            }
            let adjacent = scaled.has_edge(v, w);
            if residue.is_zero() == adjacent {
                violations.push((v, w, residue, adjacent));
            }
        }
    }
    Ok(WalkModReport {
        p,
        pairs_checked: n * n,
        violations,
        congruence_failures,
    })
}
