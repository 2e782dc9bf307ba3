//! Backtracking search for automorphism group generators.
//!
//! The leftmost path of the individualisation–refinement tree fixes a base
//! `b_1, ..., b_k`. Levels are then processed bottom-up: at level `i`, every
//! vertex `v` of the target cell that is not yet in the orbit of `b_{i+1}` under
//! the generators found so far gets one subtree search for an automorphism that
//! fixes `b_1..b_i` and sends `b_{i+1}` to `v`. The generators collected this way
//! form a strong generating set relative to the base.

use petgraph::unionfind::UnionFind;

use super::refine::{CellShape, Partition};
use super::{PermGroup, Permutation};
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

struct Node {
    partition: Partition,
    shape: Vec<CellShape>,
}

struct Search<'a> {
    graph: &'a ColoredGraph,
    colors: Vec<usize>,
    path: Vec<Node>,
    first_leaf: Vec<usize>,
}

impl<'a> Search<'a> {
    fn node(&self, partition: Partition) -> Node {
        let shape = partition.shape(self.graph);
        Node { partition, shape }
    }

    fn leaf_map(&self, leaf: &Partition) -> Permutation {
        let mut images = vec![0; self.first_leaf.len()];
        for (k, &v) in self.first_leaf.iter().enumerate() {
            images[v] = leaf.cells[k][0];
        }
        Permutation::from_images(images).expect("leaf labelling is a bijection")
    }

    fn accept(&self, p: &Permutation) -> bool {
        self.graph.is_automorphism(p.images())
            && (0..self.colors.len()).all(|v| self.colors[p.apply(v)] == self.colors[v])
    }

    /// Looks for a leaf below `node` (at `depth`) that is the image of the first
    /// leaf under an automorphism.
    fn find_leaf(&self, node: &Node, depth: usize) -> Option<Permutation> {
        if node.partition.is_discrete() {
            let p = self.leaf_map(&node.partition);
            return self.accept(&p).then_some(p);
        }
        let target = node.partition.target_cell()?;
        let expected = &self.path[depth + 1].shape;
        for &w in &node.partition.cells[target] {
            let child = self.node(node.partition.individualize(w).refine(self.graph));
            if &child.shape != expected {
                continue;
            }
            if let Some(p) = self.find_leaf(&child, depth + 1) {
                return Some(p);
            }
        }
        None
    }
}

/// Full automorphism group of `graph` (adjacency and edge colours preserved).
pub fn automorphism_group(graph: &ColoredGraph) -> PermGroup {
    automorphism_group_with_colors(graph, None).expect("no vertex colouring given")
}

/// Automorphisms that additionally map each vertex-colour class to itself.
pub fn automorphism_group_with_colors(
    graph: &ColoredGraph,
    vertex_colors: Option<&[usize]>,
) -> Result<PermGroup> {
    let n = graph.vertex_count();
    let colors = match vertex_colors {
        Some(c) if c.len() != n => {
            return Err(Error::DegreeMismatch {
                expected: n,
                got: c.len(),
            })
        }
        Some(c) => c.to_vec(),
        None => vec![0; n],
    };
    let mut search = Search {
        graph,
        colors,
        path: Vec::new(),
        first_leaf: Vec::new(),
    };

    let root = Partition::from_colors(&search.colors).refine(graph);
    let mut base = Vec::new();
    let mut current = root;
    loop {
        let next = current.target_cell().map(|t| current.cells[t][0]);
        let node = search.node(current);
        search.path.push(node);
        match next {
            Some(v) => {
                base.push(v);
                current = search
                    .path
                    .last()
                    .unwrap()
                    .partition
                    .individualize(v)
                    .refine(graph);
            }
            None => break,
        }
    }
    search.first_leaf = search
        .path
        .last()
        .unwrap()
        .partition
        .cells
        .iter()
        .map(|c| c[0])
        .collect();

    let mut generators: Vec<Permutation> = Vec::new();
    for level in (0..base.len()).rev() {
        let b = base[level];
        let mut orbits: UnionFind<usize> = UnionFind::new(n);
        for g in &generators {
            for v in 0..n {
                orbits.union(v, g.apply(v));
            }
        }
        let mut failed: Vec<usize> = Vec::new();
        let node = &search.path[level];
        let target = node.partition.target_cell().expect("non-leaf node");
        for &v in &node.partition.cells[target] {
            if v == b || orbits.equiv(v, b) || failed.iter().any(|&f| orbits.equiv(v, f)) {
                continue;
            }
            let child = search.node(node.partition.individualize(v).refine(graph));
            let found = if child.shape == search.path[level + 1].shape {
                search.find_leaf(&child, level + 1)
            } else {
                None
            };
            match found {
                Some(p) => {
                    for x in 0..n {
                        orbits.union(x, p.apply(x));
                    }
                    generators.push(p);
                }
                None => failed.push(v),
            }
        }
    }
    PermGroup::with_base(n, generators, &base)
}
