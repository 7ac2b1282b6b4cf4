//! Edge connectivity as `min_t maxflow(0, t)` over unit capacities.
//!
//! Each undirected edge carries flow in either direction with capacity 1, which
//! is the same network as two opposite unit arcs once opposing flow cancels.
//! Max-flow is Edmonds-Karp (shortest augmenting paths by BFS), seeded with
//! the edge-disjoint paths of length one and two.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicU64, Ordering};

use super::UnitGraph;
use crate::exec::Exec;

pub(super) fn edge_connectivity(g: &UnitGraph, exec: Exec) -> u64 {
    let n = g.vertex_count();
    if n < 2 {
        return 0;
    }
    let net = Network::new(g);
    // Upper bound shared between targets; stopping a flow at the current best
    // cannot change the minimum.
    let best = AtomicU64::new(g.degree(0) as u64);
    exec.min_over(n - 1, |i| {
        let t = i + 1;
        let bound = best.load(Ordering::Relaxed).min(g.degree(t) as u64);
        let value = net.max_flow(0, t, bound);
        best.fetch_min(value, Ordering::Relaxed);
        value
    })
    .unwrap_or(0)
}

struct Network<'a> {
    g: &'a UnitGraph,
    /// `arc_edge[v][k]` is the edge id of `(v, g.neighbors(v)[k])`.
    arc_edge: Vec<Vec<usize>>,
}

impl<'a> Network<'a> {
    fn new(g: &'a UnitGraph) -> Self {
        let mut arc_edge: Vec<Vec<usize>> = (0..g.vertex_count())
            .map(|v| vec![0; g.degree(v)])
            .collect();
        for (e, &(u, w)) in g.edges().iter().enumerate() {
            let k = g.neighbors(u).binary_search(&w).unwrap();
            arc_edge[u][k] = e;
            let k = g.neighbors(w).binary_search(&u).unwrap();
            arc_edge[w][k] = e;
        }
        Self { g, arc_edge }
    }

    /// Maximum `s → t` flow, computed only up to `bound`.
    fn max_flow(&self, s: usize, t: usize, bound: u64) -> u64 {
        let g = self.g;
        let edges = g.edges();
        // flow[e] ∈ {-1, 0, 1}, measured from the lower endpoint to the higher.
        let mut flow = vec![0i8; edges.len()];
        let push = |flow: &mut [i8], e: usize, from: usize| {
            flow[e] += if from == edges[e].0 { 1 } else { -1 };
        };
        let residual = |flow: &[i8], e: usize, from: usize| -> i8 {
            let f = if from == edges[e].0 {
                flow[e]
            } else {
                -flow[e]
            };
            1 - f
        };

        let mut value = 0u64;
        // Seed: direct edge, then one path through each common neighbor.
        if let Ok(k) = g.neighbors(s).binary_search(&t) {
            push(&mut flow, self.arc_edge[s][k], s);
            value += 1;
        }
        for (k, &w) in g.neighbors(s).iter().enumerate() {
            if value >= bound {
                return value;
            }
            if w == t {
                continue;
            }
            if let Ok(j) = g.neighbors(w).binary_search(&t) {
                push(&mut flow, self.arc_edge[s][k], s);
                push(&mut flow, self.arc_edge[w][j], w);
                value += 1;
            }
        }

        let n = g.vertex_count();
        let mut pred: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX); n];
        let mut queue = VecDeque::new();
        while value < bound {
            pred.iter_mut().for_each(|p| *p = (usize::MAX, usize::MAX));
            pred[s] = (s, usize::MAX);
            queue.clear();
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                for (k, &w) in g.neighbors(u).iter().enumerate() {
                    let e = self.arc_edge[u][k];
                    if pred[w].0 == usize::MAX && residual(&flow, e, u) > 0 {
                        pred[w] = (u, e);
                        if w == t {
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if pred[t].0 == usize::MAX {
                break;
            }
            let mut v = t;
            while v != s {
                let (u, e) = pred[v];
                push(&mut flow, e, u);
                v = u;
            }
            value += 1;
        }
        value
    }
}
