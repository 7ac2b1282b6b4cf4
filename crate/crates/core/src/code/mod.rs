//! Linear codes spanned by the rows of a generator matrix over GF(r); in
//! practice the generator is a unit graph's incidence matrix.

mod dual;
mod enumerate;
mod predict;

pub use dual::{DualResult, DualSearch};
pub use predict::{conjecture_ii, lambda_formula, predict, PredictedParams, TheoremSource};

use std::fmt;

use crate::error::Result;
use crate::exec::Exec;
use crate::gfmatrix::{GfMatrix, PrimeField};
use crate::graph::UnitGraph;

/// Default number of codewords `r^k` the exhaustive distance search may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 26;
/// Default largest column-subset size tried by the dual distance search.
pub const DEFAULT_DUAL_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnknownReason {
    /// `r^k` exceeded the enumeration budget.
    BudgetExceeded,
    /// No dependent column set of size up to the cap.
    CapExceeded,
    /// A subtree of the dependent-set search exceeded its node budget.
    SearchBudgetExceeded,
    /// The code (or its dual) is `{0}`.
    ZeroCode,
}

impl fmt::Display for UnknownReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnknownReason::BudgetExceeded => "budget exceeded",
            UnknownReason::CapExceeded => "subset cap exceeded",
            UnknownReason::SearchBudgetExceeded => "search budget exceeded",
            UnknownReason::ZeroCode => "zero code",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MinDistance {
    Exact(u64),
    /// Not determined; the true value lies in `[lower, upper]`.
    Unknown {
        lower: u64,
        upper: u64,
        reason: UnknownReason,
    },
}

impl MinDistance {
    pub fn exact(self) -> Option<u64> {
        match self {
            MinDistance::Exact(d) => Some(d),
            MinDistance::Unknown { .. } => None,
        }
    }

    /// Whether `d` is consistent with what is known.
    pub fn admits(self, d: u64) -> bool {
        match self {
            MinDistance::Exact(v) => v == d,
            MinDistance::Unknown { lower, upper, .. } => lower <= d && d <= upper,
        }
    }
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Exact(d) => write!(f, "{d}"),
            MinDistance::Unknown { lower, upper, .. } => write!(f, "Unknown({lower}..{upper})"),
        }
    }
}

/// `[n, k, d]` parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeParams {
    pub length: u64,
    pub dimension: u64,
    pub min_distance: MinDistance,
}

impl CodeParams {
    pub fn exact(length: u64, dimension: u64, d: u64) -> Self {
        Self {
            length,
            dimension,
            min_distance: MinDistance::Exact(d),
        }
    }

    /// `[n,k,d]_r`.
    pub fn display_over(&self, r: u32) -> String {
        format!(
            "[{},{},{}]_{}",
            self.length, self.dimension, self.min_distance, r
        )
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{}]",
            self.length, self.dimension, self.min_distance
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: GfMatrix,
    /// Nonzero rows of the generator's RREF; a basis of the code.
    basis: GfMatrix,
    pivots: Vec<usize>,
}

impl LinearCode {
    pub fn from_generator(generator: GfMatrix) -> Self {
        let rref = generator.rref();
        let basis = rref.matrix.nonzero_rows();
        Self {
            generator,
            basis,
            pivots: rref.pivots,
        }
    }

    /// The code generated by the incidence matrix of `g` over GF(r).
    pub fn from_incidence(g: &UnitGraph, r: u64) -> Result<Self> {
        Ok(Self::from_generator(g.incidence_matrix(r)?))
    }

    pub fn field(&self) -> PrimeField {
        self.generator.field()
    }

    pub fn generator(&self) -> &GfMatrix {
        &self.generator
    }

    pub fn basis(&self) -> &GfMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn length(&self) -> u64 {
        self.generator.cols() as u64
    }

    pub fn dimension(&self) -> u64 {
        self.basis.rows() as u64
    }

    /// `dim C⊥ = n − k`.
    pub fn dual_dimension(&self) -> u64 {
        self.length() - self.dimension()
    }

    /// A basis of the dual code: the right kernel of the generator.
    pub fn dual_basis(&self) -> GfMatrix {
        self.generator.nullspace()
    }

    /// Exact minimum distance by enumerating every nonzero message when
    /// `r^k ≤ budget`; otherwise bounds.
    pub fn min_distance_exact(&self, budget: u64) -> MinDistance {
        self.min_distance_with(budget, Exec::default())
    }

    pub fn min_distance_with(&self, budget: u64, exec: Exec) -> MinDistance {
        let k = self.basis.rows();
        if k == 0 {
            return MinDistance::Unknown {
                lower: 0,
                upper: 0,
                reason: UnknownReason::ZeroCode,
            };
        }
        let r = self.field().order() as u128;
        let fits = r
            .checked_pow(k as u32)
            .is_some_and(|total| total <= budget as u128);
        if !fits {
            return MinDistance::Unknown {
                lower: 1,
                upper: self.known_weight_bound(),
                reason: UnknownReason::BudgetExceeded,
            };
        }
        MinDistance::Exact(enumerate::min_weight(&self.basis, exec))
    }

    /// Smallest weight among the generator and basis rows, each a codeword.
    fn known_weight_bound(&self) -> u64 {
        self.generator
            .row_iter()
            .chain(self.basis.row_iter())
            .map(|row| row.iter().filter(|&&v| v != 0).count() as u64)
            .filter(|&w| w > 0)
            .min()
            .unwrap_or(self.length())
    }

    pub fn params(&self, budget: u64) -> CodeParams {
        CodeParams {
            length: self.length(),
            dimension: self.dimension(),
            min_distance: self.min_distance_exact(budget),
        }
    }

    /// Minimum distance of the dual: the fewest linearly dependent generator columns.
    pub fn dual_min_distance(&self, cap: usize) -> MinDistance {
        self.dual_search(DualSearch::with_cap(cap), Exec::default())
            .distance
    }

    pub fn dual_search(&self, search: DualSearch, exec: Exec) -> DualResult {
        dual::search(self, search, exec)
    }

    /// Copy of this code with generator row `i` scaled by `c ≠ 0`.
    pub fn with_scaled_row(&self, i: usize, c: u32) -> Self {
        let mut g = self.generator.clone();
        g.scale_row(i, c);
        Self::from_generator(g)
    }
}
