//! Gauss-Jordan elimination over the two exact fields of the crate.

use num_traits::{One, Zero};

use crate::scalar::{GaussianRational, RationalFunction};

pub(crate) trait FieldElement: Clone + Zero + One {
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    /// `self / other`; callers guarantee `other != 0`.
    fn div_ref(&self, other: &Self) -> Self;
}

impl FieldElement for GaussianRational {
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        self.checked_div(other).expect("pivot is nonzero")
    }
}

impl FieldElement for RationalFunction {
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn div_ref(&self, other: &Self) -> Self {
        self.checked_div(other).expect("pivot is nonzero")
    }
}

/// Row-reduces `rows` in place and returns the rank.
fn reduce<T: FieldElement>(rows: &mut [Vec<T>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col].clone();
        rows[rank] = rows[rank].iter().map(|x| x.div_ref(&p)).collect();
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            let pivot_row = rows[rank].clone();
            for (x, y) in rows[r].iter_mut().zip(pivot_row.iter()) {
                if !y.is_zero() {
                    *x = x.sub_ref(&factor.mul_ref(y));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub(crate) fn rank<T: FieldElement>(mut rows: Vec<Vec<T>>) -> usize {
    reduce(&mut rows)
}

/// Inverse of a square matrix, or `None` when singular.
pub(crate) fn invert<T: FieldElement>(m: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let n = m.len();
    let mut aug: Vec<Vec<T>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    // eliminate only over the left block
    let mut rank = 0;
    for col in 0..n {
        let pivot = (rank..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(rank, pivot);
        let p = aug[rank][col].clone();
        aug[rank] = aug[rank].iter().map(|x| x.div_ref(&p)).collect();
        for r in 0..n {
            if r == rank || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            let pivot_row = aug[rank].clone();
            for (x, y) in aug[r].iter_mut().zip(pivot_row.iter()) {
                if !y.is_zero() {
                    *x = x.sub_ref(&factor.mul_ref(y));
                }
            }
        }
        rank += 1;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        n.into()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(vec![vec![g(1), g(2)], vec![g(2), g(4)]]), 1);
        assert_eq!(rank(vec![vec![g(0), g(1)], vec![g(1), g(0)], vec![g(1), g(1)]]), 2);
        assert_eq!(rank::<GaussianRational>(vec![]), 0);
    }

    #[test]
    fn inverse_over_function_field() {
        let m = RationalFunction::m();
        let mb = RationalFunction::mb();
        let a = vec![vec![mb.clone(), RationalFunction::one()], vec![-RationalFunction::one(), mb.clone()]];
        let inv = invert(&a).unwrap();
        let det = &(&mb * &mb) + &RationalFunction::one();
        assert_eq!(inv[0][0], mb.checked_div(&det).unwrap());
        assert_eq!(inv[0][1], (-RationalFunction::one()).checked_div(&det).unwrap());
        assert!(invert(&[vec![m.clone(), m.clone()], vec![m.clone(), m]]).is_none());
    }
}
