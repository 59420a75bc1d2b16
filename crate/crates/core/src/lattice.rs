//! Integer symmetric bilinear forms on sublattices of `A(X)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::discriminant::check_rank;
use crate::{Error, Result};

/// Maximal rank of `H^4(X, Z)` for a cubic fourfold.
pub const MAX_RANK: usize = 23;

/// Self-intersection of the square of the hyperplane class on a cubic fourfold.
pub const H2_SQUARED: i64 = 3;

/// Symmetric integer Gram matrix, `1 <= k <= 23`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl GramMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidGram("matrix is not square".into()));
        }
        Self::from_row_major(rows.into_iter().flatten().collect(), size)
    }

    pub fn from_row_major(entries: Vec<i64>, size: usize) -> Result<Self> {
        if size == 0 || size > MAX_RANK {
            return Err(Error::InvalidGram(format!(
                "size {size} outside [1, {MAX_RANK}]"
            )));
        }
        if entries.len() != size * size {
            return Err(Error::InvalidGram(format!(
                "expected {} entries for size {size}, got {}",
                size * size,
                entries.len()
            )));
        }
        for i in 0..size {
            for j in 0..i {
                if entries[i * size + j] != entries[j * size + i] {
                    return Err(Error::InvalidGram(format!("not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(GramMatrix { size, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.size)
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn discriminant(&self) -> BigInt {
        let rows: Vec<Vec<BigInt>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect();
        bareiss_determinant(rows)
    }

    /// Sylvester's criterion on the leading principal minors.
    pub fn is_positive_definite(&self) -> bool {
        (1..=self.size).all(|k| {
            let minor = (0..k)
                .map(|i| (0..k).map(|j| BigInt::from(self.get(i, j))).collect())
                .collect();
            bareiss_determinant(minor).is_positive()
        })
    }
}

/// Fraction-free Gaussian elimination. Every intermediate pivot division is
/// exact, so the whole computation stays in `Z`.
pub(crate) fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

/// Intersection data of a class `v` against itself and `h^2`.
///
/// Primitivity of `v` in `A(X)` is assumed, not checked: there is no ambient
/// lattice to test it against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Labelling {
    pub v_dot_v: i64,
    pub v_dot_h2: i64,
}

impl Labelling {
    pub fn new(v_dot_v: i64, v_dot_h2: i64) -> Self {
        Labelling { v_dot_v, v_dot_h2 }
    }

    /// `3 v.v - (v.h^2)^2`.
    pub fn discriminant(&self) -> i128 {
        H2_SQUARED as i128 * self.v_dot_v as i128 - (self.v_dot_h2 as i128).pow(2)
    }

    pub fn gram(&self) -> GramMatrix {
        GramMatrix::from_row_major(
            vec![H2_SQUARED, self.v_dot_h2, self.v_dot_h2, self.v_dot_v],
            2,
        )
        .expect("2x2 symmetric")
    }

    pub fn is_positive_definite(&self) -> bool {
        self.discriminant() > 0
    }
}

/// Rank of the transcendental lattice, `23 - rank A(X)`.
pub fn transcendental_rank(rank_a: i64) -> Result<u32> {
    Ok(MAX_RANK as u32 - check_rank(rank_a)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gram(rows: &[&[i64]]) -> GramMatrix {
        GramMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn small_discriminants() {
        assert_eq!(gram(&[&[3, 3], &[3, 7]]).discriminant(), BigInt::from(12));
        assert_eq!(gram(&[&[1, 0], &[0, 1]]).discriminant(), BigInt::from(1));
        assert_eq!(gram(&[&[3, 1], &[1, 3]]).discriminant(), BigInt::from(8));
        assert_eq!(gram(&[&[5]]).discriminant(), BigInt::from(5));
    }

    #[test]
    fn pivoting_on_zero_diagonal() {
        // hyperbolic plane U has determinant -1
        assert_eq!(gram(&[&[0, 1], &[1, 0]]).discriminant(), BigInt::from(-1));
        let m = gram(&[&[0, 1, 2], &[1, 0, 3], &[2, 3, 0]]);
        // 0 - 1*(0-6) + 2*(3-0) = 12
        assert_eq!(m.discriminant(), BigInt::from(12));
    }

    #[test]
    fn e8_is_unimodular() {
        let mut rows = vec![vec![0i64; 8]; 8];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        // Dynkin diagram of E8: chain 0-1-2-3-4-5-6 with 7 attached to 4
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)] {
            rows[a][b] = -1;
            rows[b][a] = -1;
        }
        let m = GramMatrix::new(rows).unwrap();
        assert_eq!(m.discriminant(), BigInt::from(1));
        assert!(m.is_positive_definite());
    }

    #[test]
    fn positive_definiteness() {
        assert!(gram(&[&[3, 3], &[3, 7]]).is_positive_definite());
        assert!(!gram(&[&[3, 3], &[3, 3]]).is_positive_definite());
        assert!(!gram(&[&[2, 3], &[3, 2]]).is_positive_definite());
        assert!(!gram(&[&[-1]]).is_positive_definite());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(GramMatrix::new(vec![vec![1, 2], vec![3, 4]]).is_err());
        assert!(GramMatrix::new(vec![vec![1, 2]]).is_err());
        assert!(GramMatrix::from_row_major(vec![], 0).is_err());
        assert!(GramMatrix::from_row_major(vec![1; 24 * 24], 24).is_err());
        assert!(GramMatrix::from_row_major(vec![1, 2, 2], 2).is_err());
    }

    #[test]
    fn labellings() {
        let l = Labelling::new(7, 3);
        assert_eq!(l.discriminant(), 12);
        assert!(l.is_positive_definite());
        assert_eq!(Labelling::new(3, 3).discriminant(), 0);
        assert!(!Labelling::new(3, 3).is_positive_definite());
        assert_eq!(Labelling::new(3, 1).discriminant(), 8);
    }

    #[test]
    fn transcendental_ranks() {
        assert_eq!(transcendental_rank(1), Ok(22));
        assert_eq!(transcendental_rank(23), Ok(0));
        assert_eq!(transcendental_rank(21), Ok(2));
        assert!(transcendental_rank(0).is_err());
        assert!(transcendental_rank(24).is_err());
    }
}
