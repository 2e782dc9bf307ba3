//! Undirected graphs with optional loops and integer edge colours.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

mod graph6;

pub use graph6::{graph6_read, graph6_write};

/// Undirected graph on vertices `0..n`. Each unordered pair carries at most one
/// edge; the colour of an edge is an integer in `0..color_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), u32>,
    adjacency: Vec<Vec<(usize, u32)>>,
    color_count: usize,
}

/// The two sides of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub part0: Vec<usize>,
    pub part1: Vec<usize>,
}

impl Bipartition {
    /// `side[v]` is 0 or 1.
    pub fn sides(&self, n: usize) -> Vec<u8> {
        let mut side = vec![0; n];
        for &v in &self.part1 {
            side[v] = 1;
        }
        side
    }
}

impl ColoredGraph {
    /// Builds a graph from edges labelled by any ordered type. Labels are replaced
    /// by their rank among the distinct labels present, so colours become `0..c`.
    pub fn from_labeled<L, I>(n: usize, edges: I) -> Result<Self>
    where
        L: Ord + Clone,
        I: IntoIterator<Item = (usize, usize, L)>,
    {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut raw: BTreeMap<(usize, usize), L> = BTreeMap::new();
        for (u, v, label) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            let key = (u.min(v), u.max(v));
            match raw.get(&key) {
                Some(existing) if *existing != label => {
                    return Err(Error::InvalidParameter(format!(
                        "edge {{{}, {}}} given twice with different colours",
                        key.0, key.1
                    )));
                }
                Some(_) => {}
                None => {
                    raw.insert(key, label);
                }
            }
        }
        let palette: BTreeSet<&L> = raw.values().collect();
        let rank: BTreeMap<&L, u32> = palette
            .into_iter()
            .enumerate()
            .map(|(i, l)| (l, i as u32))
            .collect();
        let color_count = rank.len();
        let edges: BTreeMap<(usize, usize), u32> = raw.iter().map(|(&k, l)| (k, rank[l])).collect();
        let mut adjacency = vec![Vec::new(); n];
        for (&(u, v), &c) in &edges {
            adjacency[u].push((v, c));
            if u != v {
                adjacency[v].push((u, c));
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(ColoredGraph {
            n,
            edges,
            adjacency,
            color_count,
        })
    }

    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, u32)>) -> Result<Self> {
        Self::from_labeled(n, edges)
    }

    pub fn uncolored(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::from_labeled(n, edges.into_iter().map(|(u, v)| (u, v, 0u32)))
    }

    pub fn cycle(n: usize) -> Self {
        Self::uncolored(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn path(n: usize) -> Self {
        Self::uncolored(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn complete(n: usize) -> Self {
        Self::uncolored(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("complete")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    /// Edges as `(u, v, colour)` with `u <= v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges.iter().map(|(&(u, v), &c)| (u, v, c))
    }

    pub fn edge_color(&self, u: usize, v: usize) -> Option<u32> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_color(u, v).is_some()
    }

    pub fn neighbors(&self, v: usize) -> Result<&[(usize, u32)]> {
        self.adjacency
            .get(v)
            .map(Vec::as_slice)
            .ok_or(Error::InvalidVertex {
                vertex: v,
                n: self.n,
            })
    }

    /// Unchecked neighbour list, sorted by neighbour.
    pub fn adj(&self, v: usize) -> &[(usize, u32)] {
        &self.adjacency[v]
    }

    pub fn has_loops(&self) -> bool {
        self.edges.keys().any(|&(u, v)| u == v)
    }

    /// No loops and at most one colour.
    pub fn is_simple(&self) -> bool {
        !self.has_loops() && self.color_count <= 1
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Two-colouring by breadth-first search; the smallest vertex of each component
    /// goes to `part0`. `None` when an odd cycle or a loop exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<u8>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(0);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &(w, _) in &self.adjacency[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(1 - su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (part0, part1) = (0..self.n).partition(|&v| side[v] == Some(0));
        Some(Bipartition { part0, part1 })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// All pairs `(v, w)`, `v < w`, whose coloured neighbourhoods coincide as
    /// `vertex -> colour` maps.
    pub fn twins(&self) -> Vec<(usize, usize)> {
        let mut classes: HashMap<&[(usize, u32)], Vec<usize>> = HashMap::new();
        for v in 0..self.n {
            classes
                .entry(self.adjacency[v].as_slice())
                .or_default()
                .push(v);
        }
        let mut pairs: Vec<(usize, usize)> = classes
            .values()
            .flat_map(|class| {
                class
                    .iter()
                    .enumerate()
                    .flat_map(move |(i, &v)| class[i + 1..].iter().map(move |&w| (v, w)))
            })
            .collect();
        pairs.sort_unstable();
        pairs
    }

    pub fn is_twin_free(&self) -> bool {
        self.twins().is_empty()
    }

    /// Whether `images` is a bijection preserving adjacency and edge colours.
    pub fn is_automorphism(&self, images: &[usize]) -> bool {
        if images.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &i in images {
            if i >= self.n || seen[i] {
                return false;
            }
            seen[i] = true;
        }
        self.edges
            .iter()
            .all(|(&(u, v), &c)| self.edge_color(images[u], images[v]) == Some(c))
    }

    /// The graph with vertex `v` renamed to `images[v]`.
    pub fn relabel(&self, images: &[usize]) -> Result<Self> {
        if images.len() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                got: images.len(),
            });
        }
        Self::new(
            self.n,
            self.edges().map(|(u, v, c)| (images[u], images[v], c)),
        )
    }

    /// The same graph with every edge recoloured 0.
    pub fn uncolored_shadow(&self) -> Self {
        Self::uncolored(self.n, self.edges().map(|(u, v, _)| (u, v))).expect("shadow")
    }

    pub fn to_json(&self) -> JsonGraph {
        JsonGraph {
            n: self.n,
            edges: self.edges().map(|(u, v, c)| [u, v, c as usize]).collect(),
        }
    }

    pub fn from_json(json: &JsonGraph) -> Result<Self> {
        Self::from_labeled(json.n, json.edges.iter().map(|e| (e[0], e[1], e[2])))
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let json: JsonGraph =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&json)
    }
}

/// `{"n": int, "edges": [[u, v, color], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonGraph {
    pub n: usize,
    pub edges: Vec<[usize; 3]>,
}
