//! The unit graph G(ℤn ⊕ ℤm): vertices are ring elements, and two distinct
//! vertices are adjacent iff their sum is a unit.
//!
//! Vertex `(a, b)` has index `a·m + b`. Edges are stored as `(u, w)` with
//! `u < w`, sorted lexicographically; that order fixes the incidence matrix
//! columns and every export.

mod export;
mod flow;
mod invariants;

pub use export::{write_dot, write_edge_list, write_incidence, ExportFormat};
pub use invariants::{Extended, GraphInvariants};

use crate::error::Result;
use crate::exec::Exec;
use crate::gfmatrix::{GfMatrix, PrimeField};
use crate::ring::{euler_phi, gcd, ParityCase, RingElement, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitGraph {
    spec: RingSpec,
    vertices: Vec<RingElement>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl UnitGraph {
    pub fn build(spec: RingSpec) -> Self {
        let vertices: Vec<RingElement> = spec.elements().collect();
        let order = vertices.len();
        // Units of each component, as lookup tables.
        let unit_n: Vec<bool> = (0..spec.n()).map(|a| gcd(a, spec.n()) == 1).collect();
        let unit_m: Vec<bool> = (0..spec.m()).map(|b| gcd(b, spec.m()) == 1).collect();
        let n = spec.n() as usize;
        let m = spec.m() as usize;

        let mut adjacency = vec![Vec::new(); order];
        let mut edges = Vec::new();
        for u in 0..order {
            let (ua, ub) = (u / m, u % m);
            for w in u + 1..order {
                let (wa, wb) = (w / m, w % m);
                if unit_n[(ua + wa) % n] && unit_m[(ub + wb) % m] {
                    edges.push((u, w));
                    adjacency[u].push(w);
                    adjacency[w].push(u);
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self {
            spec,
            vertices,
            edges,
            adjacency,
        }
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn vertices(&self) -> &[RingElement] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn index_of(&self, x: RingElement) -> usize {
        (x.a * self.spec.m() + x.b) as usize
    }

    pub fn is_adjacent(&self, u: usize, w: usize) -> bool {
        self.adjacency[u].binary_search(&w).is_ok()
    }

    pub fn invariants(&self) -> GraphInvariants {
        GraphInvariants::compute(self, Exec::default())
    }

    pub fn invariants_with(&self, exec: Exec) -> GraphInvariants {
        GraphInvariants::compute(self, exec)
    }

    /// Edge connectivity by unit-capacity max-flow from vertex 0.
    pub fn edge_connectivity(&self) -> u64 {
        flow::edge_connectivity(self, Exec::default())
    }

    /// The `|V| × |E|` unoriented incidence matrix over GF(r).
    pub fn incidence_matrix(&self, r: u64) -> Result<GfMatrix> {
        let field = PrimeField::new(r)?;
        let mut h = GfMatrix::zeros(field, self.vertex_count(), self.edge_count());
        for (e, &(u, w)) in self.edges.iter().enumerate() {
            h.set(u, e, 1);
            h.set(w, e, 1);
        }
        Ok(h)
    }

    /// Checks that the parity classes of the even modulus' coordinate form a
    /// bipartition. Returns `None` unless exactly one modulus is even.
    pub fn parity_bipartition_holds(&self) -> Option<bool> {
        if self.spec.parity_case() != ParityCase::ExactlyOneEven {
            return None;
        }
        let n_even = self.spec.n() % 2 == 0;
        let side = |v: usize| {
            let x = self.vertices[v];
            if n_even {
                x.a % 2
            } else {
                x.b % 2
            }
        };
        Some(self.edges.iter().all(|&(u, w)| side(u) != side(w)))
    }
}

/// `(mn−1)φ(m)φ(n)/2` when both moduli are odd, `mnφ(m)φ(n)/2` otherwise.
pub fn edge_count_formula(spec: RingSpec) -> u64 {
    let units = euler_phi(spec.n()) * euler_phi(spec.m());
    let order = spec.order();
    match spec.parity_case() {
        ParityCase::BothOdd => (order - 1) * units / 2,
        _ => order * units / 2,
    }
}
