//! Exhaustive minimum weight over all nonzero codewords.
//!
//! Messages are walked in r-ary reflected Gray order, so consecutive
//! codewords differ by adding one basis row and the weight is updated from
//! that row's support alone. The top digits of the message select a chunk; the
//! chunks are independent and run under [`Exec`].

use crate::exec::Exec;
use crate::gfmatrix::GfMatrix;

/// Target chunk count for splitting the message space.
const CHUNKS: u64 = 64;

/// Minimum nonzero weight of the span of `basis`. Assumes at least one row.
pub(super) fn min_weight(basis: &GfMatrix, exec: Exec) -> u64 {
    let k = basis.rows();
    let r = basis.field().order() as u64;
    // Fix the top `top` digits per chunk.
    let mut top = 0;
    while top < k && r.pow(top as u32) < CHUNKS {
        top += 1;
    }
    let low = k - top;
    let chunks = r.pow(top as u32) as usize;
    let best = if r == 2 {
        let rows = Gf2Rows::new(basis);
        exec.min_over(chunks, |c| rows.chunk_min(c as u64, low))
    } else {
        let rows = ModRows::new(basis);
        exec.min_over(chunks, |c| rows.chunk_min(c as u64, low))
    };
    best.unwrap_or(u64::MAX)
}

/// Basis rows packed into `u64` words.
struct Gf2Rows {
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl Gf2Rows {
    fn new(basis: &GfMatrix) -> Self {
        let words = basis.cols().div_ceil(64);
        let rows = basis
            .row_iter()
            .map(|row| {
                let mut bits = vec![0u64; words];
                for (j, &v) in row.iter().enumerate() {
                    if v != 0 {
                        bits[j / 64] |= 1 << (j % 64);
                    }
                }
                bits
            })
            .collect();
        Self { words, rows }
    }

    fn chunk_min(&self, chunk: u64, low: usize) -> u64 {
        let mut cur = vec![0u64; self.words];
        for (bit, row) in self.rows[low..].iter().enumerate() {
            if chunk >> bit & 1 == 1 {
                xor_into(&mut cur, row);
            }
        }
        let mut best = if chunk == 0 { u64::MAX } else { popcount(&cur) };
        for i in 1u64..1 << low {
            xor_into(&mut cur, &self.rows[i.trailing_zeros() as usize]);
            best = best.min(popcount(&cur));
        }
        best
    }
}

fn xor_into(acc: &mut [u64], row: &[u64]) {
    for (a, b) in acc.iter_mut().zip(row) {
        *a ^= b;
    }
}

fn popcount(words: &[u64]) -> u64 {
    words.iter().map(|w| w.count_ones() as u64).sum()
}

/// Basis rows as sparse `(position, value)` lists for odd `r`.
struct ModRows {
    r: u32,
    len: usize,
    rows: Vec<Vec<(usize, u32)>>,
}

impl ModRows {
    fn new(basis: &GfMatrix) -> Self {
        let rows = basis
            .row_iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(_, &v)| v != 0)
                    .map(|(j, &v)| (j, v))
                    .collect()
            })
            .collect();
        Self {
            r: basis.field().order(),
            len: basis.cols(),
            rows,
        }
    }

    /// Adds `row` to `cur`, returning the new weight.
    fn add_row(&self, cur: &mut [u32], row: usize, mut weight: u64) -> u64 {
        for &(j, v) in &self.rows[row] {
            let old = cur[j];
            let mut new = old + v;
            if new >= self.r {
                new -= self.r;
            }
            cur[j] = new;
            weight = weight + (new != 0) as u64 - (old != 0) as u64;
        }
        weight
    }

    fn chunk_min(&self, chunk: u64, low: usize) -> u64 {
        let r = self.r as u64;
        let mut cur = vec![0u32; self.len];
        let mut weight = 0;
        let mut c = chunk;
        for row in low..self.rows.len() {
            for _ in 0..c % r {
                weight = self.add_row(&mut cur, row, weight);
            }
            c /= r;
        }
        let mut best = if chunk == 0 { u64::MAX } else { weight };
        // Base-r counter; the digit reached by the carry names the row to add.
        let mut counter = vec![0u32; low];
        let total = r.pow(low as u32);
        for _ in 1..total {
            let mut d = 0;
            loop {
                counter[d] += 1;
                if counter[d] == self.r {
                    counter[d] = 0;
                    d += 1;
                } else {
                    break;
                }
            }
            weight = self.add_row(&mut cur, d, weight);
            best = best.min(weight);
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfmatrix::PrimeField;
    use proptest::prelude::*;

    /// Straight enumeration of every message vector.
    fn brute_min_weight(basis: &GfMatrix) -> u64 {
        let f = basis.field();
        let r = f.order() as u64;
        let k = basis.rows();
        let mut best = u64::MAX;
        for msg in 1..r.pow(k as u32) {
            let mut word = vec![0u32; basis.cols()];
            let mut x = msg;
            for i in 0..k {
                let coeff = (x % r) as u32;
                x /= r;
                for (j, &v) in basis.row(i).iter().enumerate() {
                    word[j] = f.add(word[j], f.mul(coeff, v));
                }
            }
            let w = word.iter().filter(|&&v| v != 0).count() as u64;
            if w > 0 {
                best = best.min(w);
            }
        }
        best
    }

    fn independent_rows(r: u64, rows: Vec<Vec<u64>>) -> Option<GfMatrix> {
        let f = PrimeField::new(r).unwrap();
        let m = GfMatrix::from_rows(f, &rows).unwrap();
        let basis = m.rref().matrix.nonzero_rows();
        (basis.rows() > 0).then_some(basis)
    }

    #[test]
    fn known_codes() {
        let f = PrimeField::new(2).unwrap();
        // [7,4,3] Hamming
        let h = GfMatrix::from_rows(
            f,
            &[
                vec![1, 0, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 0, 1, 1],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .unwrap();
        assert_eq!(min_weight(&h, Exec::Sequential), 3);
        let f = PrimeField::new(3).unwrap();
        // ternary [4,2,3] tetracode
        let t = GfMatrix::from_rows(f, &[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).unwrap();
        assert_eq!(min_weight(&t, Exec::Sequential), 3);
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let f = PrimeField::new(2).unwrap();
        let mut rows = vec![vec![0u64; 150]; 3];
        rows[0].fill(1);
        rows[1][63] = 1;
        rows[1][64] = 1;
        rows[1][149] = 1;
        rows[2][0] = 1;
        rows[2][128] = 1;
        let m = GfMatrix::from_rows(f, &rows).unwrap();
        assert_eq!(min_weight(&m, Exec::Parallel), brute_min_weight(&m));
        assert_eq!(min_weight(&m, Exec::Parallel), 2);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn matches_brute_force(
            r in prop::sample::select(vec![2u64, 3, 5, 7]),
            rows in prop::collection::vec(prop::collection::vec(0u64..7, 1..12), 1..7),
        ) {
            let width = rows.iter().map(Vec::len).min().unwrap();
            let rows: Vec<Vec<u64>> = rows.into_iter().map(|mut v| { v.truncate(width); v }).collect();
            prop_assume!(r.pow(rows.len() as u32) <= 20_000);
            if let Some(basis) = independent_rows(r, rows) {
                let expected = brute_min_weight(&basis);
                prop_assert_eq!(min_weight(&basis, Exec::Sequential), expected);
                prop_assert_eq!(min_weight(&basis, Exec::Parallel), expected);
            }
        }
    }
}
