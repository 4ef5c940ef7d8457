//! Exact rank of integer vectors by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Incrementally maintained echelon basis over the integers.
///
/// Row `i` has a nonzero entry at its pivot column and zeros at the pivots of
/// all earlier rows. Rows are kept primitive (content 1) so entries stay small.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    width: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl EchelonBasis {
    pub fn new(width: usize) -> Self {
        EchelonBasis {
            width,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v`; returns true iff it was independent of the current rows.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.width, "vector width");
        if self.rows.len() == self.width {
            return false;
        }
        let mut cur: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        for (pivot, row) in &self.rows {
            if cur[*pivot].is_zero() {
                continue;
            }
            let g = row[*pivot].gcd(&cur[*pivot]);
            let scale_cur = &row[*pivot] / &g;
            let scale_row = &cur[*pivot] / &g;
            for (c, r) in cur.iter_mut().zip(row) {
                *c = &*c * &scale_cur - r * &scale_row;
            }
            make_primitive(&mut cur);
        }
        match cur.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                make_primitive(&mut cur);
                self.rows.push((pivot, cur));
                true
            }
            None => false,
        }
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let content = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() || content == BigInt::from(1) {
        return;
    }
    let content = content.abs();
    for x in v.iter_mut() {
        *x = &*x / &content;
    }
}

/// Rank over the rationals of a family of integer vectors of equal width.
pub fn rank<I, V>(width: usize, vectors: I) -> usize
where
    I: IntoIterator<Item = V>,
    V: AsRef<[i64]>,
{
    let mut basis = EchelonBasis::new(width);
    for v in vectors {
        basis.insert(v.as_ref());
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::rational_rank;
    use proptest::prelude::*;

    #[test]
    fn small_cases() {
        assert_eq!(rank(3, Vec::<Vec<i64>>::new()), 0);
        assert_eq!(rank(3, [vec![0, 0, 0]]), 0);
        assert_eq!(rank(3, [vec![1, 2, 3], vec![2, 4, 6]]), 1);
        assert_eq!(rank(3, [vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]), 2);
        assert_eq!(rank(2, [vec![2, 3], vec![3, 5], vec![1, 1]]), 2);
    }

    proptest! {
        #[test]
        fn agrees_with_rational_elimination(
            rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 0..12)
        ) {
            prop_assert_eq!(rank(6, &rows), rational_rank(&rows));
        }
    }
}
