use std::collections::VecDeque;
use std::fmt;

use super::flow;
use super::UnitGraph;
use crate::exec::Exec;

/// A length that may be unbounded: diameter of a disconnected graph, girth of a forest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(u64),
    Infinite,
}

impl Extended {
    pub fn finite(self) -> Option<u64> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinite => None,
        }
    }

    pub fn is_at_most(self, bound: u64) -> bool {
        matches!(self, Extended::Finite(v) if v <= bound)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinite => f.write_str("Infinite"),
        }
    }
}

/// Structural invariants, each computed by direct search on the graph.
///
/// Conventions: a disconnected graph has infinite diameter and edge
/// connectivity 0; an acyclic graph has infinite girth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphInvariants {
    pub connected: bool,
    pub num_components: usize,
    pub diameter: Extended,
    pub bipartite: bool,
    /// Color classes (vertex indices) when bipartite; each component's smallest
    /// vertex goes in the first class.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    pub girth: Extended,
    pub min_degree: usize,
    pub edge_connectivity: u64,
}

impl GraphInvariants {
    pub(super) fn compute(g: &UnitGraph, exec: Exec) -> Self {
        let num_components = count_components(g);
        let connected = num_components == 1;
        let diameter = if connected {
            Extended::Finite(diameter(g, exec))
        } else {
            Extended::Infinite
        };
        let bipartition = two_coloring(g);
        let edge_connectivity = if connected {
            flow::edge_connectivity(g, exec)
        } else {
            0
        };
        Self {
            connected,
            num_components,
            diameter,
            bipartite: bipartition.is_some(),
            bipartition,
            girth: girth(g, exec),
            min_degree: g.min_degree(),
            edge_connectivity,
        }
    }
}

/// Breadth-first distances from `source`; `u64::MAX` marks unreachable vertices.
pub(crate) fn bfs_distances(g: &UnitGraph, source: usize) -> Vec<u64> {
    let mut dist = vec![u64::MAX; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == u64::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn count_components(g: &UnitGraph) -> usize {
    let mut seen = vec![false; g.vertex_count()];
    let mut components = 0;
    let mut stack = Vec::new();
    for start in 0..g.vertex_count() {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    components
}

/// Maximum eccentricity via BFS from every vertex. Assumes connectivity.
fn diameter(g: &UnitGraph, exec: Exec) -> u64 {
    let ecc = exec.min_over(g.vertex_count(), |s| {
        let far = bfs_distances(g, s).into_iter().max().unwrap_or(0);
        u64::MAX - far
    });
    ecc.map_or(0, |v| u64::MAX - v)
}

fn two_coloring(g: &UnitGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut color = vec![u8::MAX; g.vertex_count()];
    let mut queue = VecDeque::new();
    for start in 0..g.vertex_count() {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return None;
                }
            }
        }
    }
    let (a, b): (Vec<usize>, Vec<usize>) = (0..g.vertex_count()).partition(|&v| color[v] == 0);
    Some((a, b))
}

/// Shortest cycle length. A BFS from each root sees, for every non-tree edge
/// `(u, w)`, a closed walk of length `d(u) + d(w) + 1` through the root; the
/// minimum over all roots is exactly the girth.
fn girth(g: &UnitGraph, exec: Exec) -> Extended {
    let best = exec.min_over(g.vertex_count(), |root| shortest_cycle_through(g, root));
    match best {
        Some(v) if v != u64::MAX => Extended::Finite(v),
        _ => Extended::Infinite,
    }
}

fn shortest_cycle_through(g: &UnitGraph, root: usize) -> u64 {
    let n = g.vertex_count();
    let mut dist = vec![u64::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    let mut best = u64::MAX;
    dist[root] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        // Every cycle closed from here on has length at least 2·d(u).
        if 2 * dist[u] >= best {
            break;
        }
        for &w in g.neighbors(u) {
            if dist[w] == u64::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if parent[u] != w {
                best = best.min(dist[u] + dist[w] + 1);
            }
        }
    }
    best
}
