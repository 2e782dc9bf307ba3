#![allow(dead_code)]

use cayley_stability::ColoredGraph;

/// Counts automorphisms by extending partial maps vertex by vertex, checking
/// every edge and non-edge between mapped vertices. Independent of refinement.
pub fn backtrack_count(g: &ColoredGraph) -> u64 {
    fn extend(g: &ColoredGraph, image: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let n = g.vertex_count();
        let v = image.len();
        if v == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if used[w] || g.adj(v).len() != g.adj(w).len() {
                continue;
            }
            let consistent = (0..=v).all(|u| {
                let iu = if u == v { w } else { image[u] };
                g.edge_color(u, v) == g.edge_color(iu, w)
            });
            if consistent {
                image.push(w);
                used[w] = true;
                total += extend(g, image, used);
                used[w] = false;
                image.pop();
            }
        }
        total
    }
    let n = g.vertex_count();
    extend(g, &mut Vec::with_capacity(n), &mut vec![false; n])
}

fn star(leaves: usize) -> ColoredGraph {
    ColoredGraph::uncolored(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
}

fn complete_bipartite(a: usize, b: usize) -> ColoredGraph {
    ColoredGraph::uncolored(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap()
}

fn cube() -> ColoredGraph {
    let edges = (0..8usize)
        .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
        .filter(|(u, v)| u < v);
    ColoredGraph::uncolored(8, edges).unwrap()
}

fn colored_cycle(colors: &[u32]) -> ColoredGraph {
    let n = colors.len();
    ColoredGraph::new(n, (0..n).map(|v| (v, (v + 1) % n, colors[v]))).unwrap()
}

fn with_loops(g: &ColoredGraph, at: &[usize]) -> ColoredGraph {
    let edges = g.edges().chain(at.iter().map(|&v| (v, v, 0)));
    ColoredGraph::new(g.vertex_count(), edges).unwrap()
}

/// Thirty graphs on at most eight vertices, labelled for reporting.
pub fn corpus() -> Vec<(String, ColoredGraph)> {
    let mut graphs = Vec::new();
    for n in 2..=8 {
        graphs.push((format!("P{n}"), ColoredGraph::path(n)));
    }
    for n in 3..=8 {
        graphs.push((format!("C{n}"), ColoredGraph::cycle(n)));
    }
    for leaves in 3..=7 {
        graphs.push((format!("K1,{leaves}"), star(leaves)));
    }
    graphs.push(("K4".into(), ColoredGraph::complete(4)));
    graphs.push(("K5".into(), ColoredGraph::complete(5)));
    graphs.push(("K3,3".into(), complete_bipartite(3, 3)));
    graphs.push(("Q3".into(), cube()));
    graphs.push(("C6 alternating".into(), colored_cycle(&[0, 1, 0, 1, 0, 1])));
    graphs.push(("C5 one red edge".into(), colored_cycle(&[1, 0, 0, 0, 0])));
    graphs.push((
        "C8 alternating".into(),
        colored_cycle(&[0, 1, 0, 1, 0, 1, 0, 1]),
    ));
    graphs.push((
        "C7 three colours".into(),
        colored_cycle(&[0, 1, 2, 0, 1, 2, 0]),
    ));
    graphs.push((
        "P4 looped end".into(),
        with_loops(&ColoredGraph::path(4), &[0]),
    ));
    graphs.push((
        "C5 all looped".into(),
        with_loops(&ColoredGraph::cycle(5), &[0, 1, 2, 3, 4]),
    ));
    graphs.push((
        "K4 one loop".into(),
        with_loops(&ColoredGraph::complete(4), &[2]),
    ));
    graphs.push(("K1,4 looped leaves".into(), with_loops(&star(4), &[1, 2])));
    graphs
}
