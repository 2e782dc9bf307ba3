//! Ordered partitions and colour refinement.

use crate::graph::ColoredGraph;

/// Cell size plus the `(neighbour cell, edge colour)` profile shared by every
/// vertex of the cell once the partition is equitable.
pub(crate) type CellShape = (usize, Vec<(usize, u32)>);

#[derive(Debug, Clone)]
pub(crate) struct Partition {
    pub cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl Partition {
    /// Cells ordered by vertex colour value.
    pub fn from_colors(colors: &[usize]) -> Self {
        let mut values: Vec<usize> = colors.to_vec();
        values.sort_unstable();
        values.dedup();
        let mut cells = vec![Vec::new(); values.len()];
        for (v, c) in colors.iter().enumerate() {
            let idx = values.binary_search(c).unwrap();
            cells[idx].push(v);
        }
        Self::from_cells(cells, colors.len())
    }

    fn from_cells(cells: Vec<Vec<usize>>, n: usize) -> Self {
        let mut cell_of = vec![0; n];
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        Partition { cells, cell_of }
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.len() == self.cell_of.len()
    }

    /// First smallest non-singleton cell.
    pub fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|&(i, c)| (c.len(), i))
            .map(|(i, _)| i)
    }

    /// Splits `v` off its cell as a singleton placed just before the remainder.
    pub fn individualize(&self, v: usize) -> Self {
        let c = self.cell_of[v];
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend_from_slice(&self.cells[..c]);
        cells.push(vec![v]);
        cells.push(self.cells[c].iter().copied().filter(|&w| w != v).collect());
        cells.extend_from_slice(&self.cells[c + 1..]);
        Self::from_cells(cells, self.cell_of.len())
    }

    fn profile(&self, graph: &ColoredGraph, v: usize) -> Vec<(usize, u32)> {
        let mut p: Vec<(usize, u32)> = graph
            .adj(v)
            .iter()
            .map(|&(w, c)| (self.cell_of[w], c))
            .collect();
        p.sort_unstable();
        p
    }

    /// Splits cells by neighbour profile until nothing changes. New cells keep the
    /// position of their parent and are ordered by profile, so the result commutes
    /// with relabelling.
    pub fn refine(mut self, graph: &ColoredGraph) -> Self {
        loop {
            let profiles: Vec<Vec<(usize, u32)>> = (0..self.cell_of.len())
                .map(|v| self.profile(graph, v))
                .collect();
            let mut cells = Vec::with_capacity(self.cells.len());
            for cell in &self.cells {
                if cell.len() == 1 {
                    cells.push(cell.clone());
                    continue;
                }
                let mut members = cell.clone();
                members.sort_by(|&a, &b| profiles[a].cmp(&profiles[b]).then(a.cmp(&b)));
                let mut start = 0;
                for k in 1..=members.len() {
                    if k == members.len() || profiles[members[k]] != profiles[members[start]] {
                        let mut part = members[start..k].to_vec();
                        part.sort_unstable();
                        cells.push(part);
                        start = k;
                    }
                }
            }
            if cells.len() == self.cells.len() {
                return self;
            }
            self = Self::from_cells(cells, self.cell_of.len());
        }
    }

    /// Relabelling-invariant summary used to compare search-tree nodes.
    pub fn shape(&self, graph: &ColoredGraph) -> Vec<CellShape> {
        self.cells
            .iter()
            .map(|cell| (cell.len(), self.profile(graph, cell[0])))
            .collect()
    }
}
