//! Dual minimum distance: the size of the smallest linearly dependent set of
//! generator columns.
//!
//! A minimal dependent set has no row touched exactly once, and its columns
//! are connected through shared rows. The search grows such sets from their
//! smallest column `c0`: while some touched row is covered once, only columns
//! covering the lowest such row are tried; otherwise any column sharing a row
//! with the set. Sizes are tried in increasing order, so the first dependent
//! set found is a smallest one.

use crate::exec::Exec;

use super::{LinearCode, MinDistance, UnknownReason, DEFAULT_DUAL_CAP};

/// Limits for the dependent-set search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualSearch {
    /// Largest set size tried.
    pub cap: usize,
    /// Node limit for a single `(size, c0)` subtree.
    pub node_budget: u64,
}

impl DualSearch {
    pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

    pub fn with_cap(cap: usize) -> Self {
        Self {
            cap,
            ..Self::default()
        }
    }
}

impl Default for DualSearch {
    fn default() -> Self {
        Self {
            cap: DEFAULT_DUAL_CAP,
            node_budget: Self::DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualResult {
    pub distance: MinDistance,
    /// Column indices of a smallest dependent set, when one was found.
    pub witness: Option<Vec<usize>>,
}

pub(super) fn search(code: &LinearCode, params: DualSearch, exec: Exec) -> DualResult {
    let n = code.length() as usize;
    let k = code.dimension();
    let unknown = |lower, reason| DualResult {
        distance: MinDistance::Unknown {
            lower,
            upper: k + 1,
            reason,
        },
        witness: None,
    };
    if code.dual_dimension() == 0 {
        return DualResult {
            distance: MinDistance::Unknown {
                lower: 0,
                upper: 0,
                reason: UnknownReason::ZeroCode,
            },
            witness: None,
        };
    }

    let h = code.generator();
    let mut col_rows = vec![Vec::new(); n];
    let mut row_cols = vec![Vec::new(); h.rows()];
    for (i, row) in h.row_iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != 0 {
                col_rows[j].push(i);
                row_cols[i].push(j);
            }
        }
    }
    let searcher = Searcher {
        code,
        col_rows: &col_rows,
        row_cols: &row_cols,
        max_weight: col_rows.iter().map(Vec::len).max().unwrap_or(0),
        node_budget: params.node_budget,
    };

    // Singleton dependent sets are zero columns.
    if let Some(c) = col_rows.iter().position(Vec::is_empty) {
        return DualResult {
            distance: MinDistance::Exact(1),
            witness: Some(vec![c]),
        };
    }
    // Any k + 1 columns are dependent, so the cap never needs to exceed it.
    let cap = params.cap.min(k as usize + 1);
    for t in 2..=cap {
        let outcome = exec.find_first(n, |c0| match searcher.from(c0, t) {
            Outcome::NotFound => None,
            other => Some(other),
        });
        match outcome {
            Some(Outcome::Found(set)) => {
                return DualResult {
                    distance: MinDistance::Exact(t as u64),
                    witness: Some(set),
                }
            }
            Some(Outcome::Exhausted) => {
                return unknown(t as u64, UnknownReason::SearchBudgetExceeded);
            }
            Some(Outcome::NotFound) | None => {}
        }
    }
    unknown(cap as u64 + 1, UnknownReason::CapExceeded)
}

enum Outcome {
    Found(Vec<usize>),
    NotFound,
    Exhausted,
}

struct Searcher<'a> {
    code: &'a LinearCode,
    col_rows: &'a [Vec<usize>],
    row_cols: &'a [Vec<usize>],
    max_weight: usize,
    node_budget: u64,
}

struct State {
    chosen: Vec<usize>,
    /// How many chosen columns touch each row.
    count: Vec<u32>,
    /// Rows covered exactly once.
    deficient: usize,
    nodes: u64,
}

impl Searcher<'_> {
    /// Dependent sets of exactly `t` columns whose smallest column is `c0`.
    fn from(&self, c0: usize, t: usize) -> Outcome {
        let mut st = State {
            chosen: Vec::with_capacity(t),
            count: vec![0; self.row_cols.len()],
            deficient: 0,
            nodes: 0,
        };
        self.push(&mut st, c0);
        self.grow(&mut st, c0, t)
    }

    fn push(&self, st: &mut State, c: usize) {
        st.chosen.push(c);
        for &i in &self.col_rows[c] {
            st.count[i] += 1;
            match st.count[i] {
                1 => st.deficient += 1,
                2 => st.deficient -= 1,
                _ => {}
            }
        }
    }

    fn pop(&self, st: &mut State) {
        let c = st.chosen.pop().expect("nonempty selection");
        for &i in &self.col_rows[c] {
            st.count[i] -= 1;
            match st.count[i] {
                0 => st.deficient -= 1,
                1 => st.deficient += 1,
                _ => {}
            }
        }
    }

    fn grow(&self, st: &mut State, c0: usize, t: usize) -> Outcome {
        st.nodes += 1;
        if st.nodes > self.node_budget {
            return Outcome::Exhausted;
        }
        let slots = t - st.chosen.len();
        if slots == 0 {
            if st.deficient == 0 {
                let dependent = self
                    .code
                    .generator()
                    .columns_dependent(&st.chosen)
                    .expect("selection holds distinct in-range columns");
                if dependent {
                    let mut set = st.chosen.clone();
                    set.sort_unstable();
                    return Outcome::Found(set);
                }
            }
            return Outcome::NotFound;
        }
        if st.deficient > slots * self.max_weight {
            return Outcome::NotFound;
        }

        let touched = st
            .chosen
            .iter()
            .flat_map(|&c| self.col_rows[c].iter().copied());
        let mut candidates: Vec<usize> = if st.deficient > 0 {
            let lowest = touched
                .filter(|&i| st.count[i] == 1)
                .min()
                .expect("a deficient row exists");
            self.row_cols[lowest].clone()
        } else {
            touched
                .flat_map(|i| self.row_cols[i].iter().copied())
                .collect()
        };
        candidates.retain(|&c| c > c0 && !st.chosen.contains(&c));
        if slots == 1 {
            // The last column has to cover every deficient row.
            candidates.retain(|&c| {
                self.col_rows[c]
                    .iter()
                    .filter(|&&i| st.count[i] == 1)
                    .count()
                    == st.deficient
            });
        }
        candidates.sort_unstable();
        candidates.dedup();

        for c in candidates {
            self.push(st, c);
            let outcome = self.grow(st, c0, t);
            self.pop(st);
            match outcome {
                Outcome::NotFound => {}
                other => return other,
            }
        }
        Outcome::NotFound
    }
}
