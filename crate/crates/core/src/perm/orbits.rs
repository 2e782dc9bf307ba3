use std::collections::BTreeMap;

use itertools::Itertools;
use petgraph::unionfind::UnionFind;

use super::{automorphism_group, PermGroup, Permutation};
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

/// Largest vertex count accepted by [`naive_automorphisms`].
pub const NAIVE_LIMIT: usize = 8;

/// Orbits of the group on the edge set (loops included), each sorted, ordered by
/// smallest edge.
pub fn edge_orbits(group: &PermGroup, graph: &ColoredGraph) -> Result<Vec<Vec<(usize, usize)>>> {
    if group.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch {
            expected: graph.vertex_count(),
            got: group.degree(),
        });
    }
    let edges: Vec<(usize, usize)> = graph.edges().map(|(u, v, _)| (u, v)).collect();
    let index: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut uf: UnionFind<usize> = UnionFind::new(edges.len());
    for g in group.generators() {
        for (i, &(u, v)) in edges.iter().enumerate() {
            let (a, b) = (g.apply(u), g.apply(v));
            let j = index.get(&(a.min(b), a.max(b))).ok_or_else(|| {
                Error::Precondition(format!("generator {g} does not preserve edge ({u}, {v})"))
            })?;
            uf.union(i, *j);
        }
    }
    let mut orbits: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, &e) in edges.iter().enumerate() {
        orbits.entry(uf.find(i)).or_default().push(e);
    }
    let mut out: Vec<Vec<(usize, usize)>> = orbits.into_values().collect();
    out.sort();
    Ok(out)
}

/// True when the automorphism group acts transitively on the edges. A graph with
/// both loops and ordinary edges is never edge-transitive.
pub fn is_edge_transitive(graph: &ColoredGraph) -> bool {
    let group = automorphism_group(graph);
    edge_orbits(&group, graph)
        .expect("automorphisms preserve edges")
        .len()
        <= 1
}

/// Every automorphism, by enumerating all `n!` permutations in lexicographic order.
pub fn naive_automorphisms(graph: &ColoredGraph) -> Result<Vec<Permutation>> {
    let n = graph.vertex_count();
    if n > NAIVE_LIMIT {
        return Err(Error::Refused(format!(
            "exhaustive enumeration is limited to {NAIVE_LIMIT} vertices, graph has {n}"
        )));
    }
    Ok((0..n)
        .permutations(n)
        .filter(|p| graph.is_automorphism(p))
        .map(|p| Permutation::from_images(p).expect("itertools yields permutations"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_is_edge_transitive() {
        let c5 = ColoredGraph::cycle(5);
        let orbits = edge_orbits(&automorphism_group(&c5), &c5).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].len(), 5);
        assert!(is_edge_transitive(&c5));
    }

    #[test]
    fn path_has_two_edge_orbits() {
        let p4 = ColoredGraph::path(4);
        let orbits = edge_orbits(&automorphism_group(&p4), &p4).unwrap();
        assert_eq!(orbits, vec![vec![(0, 1), (2, 3)], vec![(1, 2)]]);
        assert!(!is_edge_transitive(&p4));
    }

    #[test]
    fn loops_form_their_own_orbit() {
        let g =
            ColoredGraph::uncolored(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!is_edge_transitive(&g));
    }

    #[test]
    fn foreign_generator_rejected() {
        let p4 = ColoredGraph::path(4);
        let bad = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let group = PermGroup::from_generators(4, vec![bad]).unwrap();
        assert!(matches!(
            edge_orbits(&group, &p4),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn naive_counts() {
        assert_eq!(
            naive_automorphisms(&ColoredGraph::cycle(3)).unwrap().len(),
            6
        );
        assert_eq!(
            naive_automorphisms(&ColoredGraph::path(4)).unwrap().len(),
            2
        );
        let square = ColoredGraph::new(4, [(0, 1, 0), (1, 2, 1), (2, 3, 0), (3, 0, 1)]).unwrap();
        assert_eq!(naive_automorphisms(&square).unwrap().len(), 4);
        assert!(matches!(
            naive_automorphisms(&ColoredGraph::cycle(9)),
            Err(Error::Refused(_))
        ));
    }
}
