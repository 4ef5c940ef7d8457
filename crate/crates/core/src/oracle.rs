//! Brute-force reference computations used only by tests.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::group::PermutationGroup;
use crate::perm::Permutation;

/// Independent route: Gaussian elimination over exact rationals.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = BigRational::one() / &m[rank][col];
        let pivot_row = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let f = &row[col] * &inv;
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Decomposability by brute force over all pairs of nontrivial elements
/// with disjoint supports.
pub fn pair_oracle_indecomposable(group: &PermutationGroup, g: &Permutation) -> bool {
    let nontrivial: Vec<(&Permutation, Vec<usize>)> = group
        .elements()
        .iter()
        .filter(|e| !e.is_identity())
        .map(|e| (e, e.support()))
        .collect();
    for (x, sx) in &nontrivial {
        for (y, sy) in &nontrivial {
            if sx.iter().all(|pt| sy.binary_search(pt).is_err()) && &(*x * *y) == g {
                return false;
            }
        }
    }
    true
}
