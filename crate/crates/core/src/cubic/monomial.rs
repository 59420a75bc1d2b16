use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use crate::{Error, Result};

pub const NVARS: usize = 6;
pub const DEGREE: u32 = 3;
/// Number of cubic monomials in six variables, `C(8, 3)`.
pub const MONOMIAL_COUNT: usize = 56;

/// Exponents of a degree-3 monomial `x0^e0 ... x5^e5`.
///
/// Ordered lexicographically with `x0` heaviest, so `x0^3` comes first.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExponentVector([u8; NVARS]);

impl ExponentVector {
    pub fn new(e: [u8; NVARS]) -> Result<Self> {
        let total: u32 = e.iter().map(|&x| x as u32).sum();
        if total != DEGREE {
            return Err(Error::InvalidExponent(format!(
                "{e:?} has degree {total}, expected {DEGREE}"
            )));
        }
        Ok(ExponentVector(e))
    }

    /// Monomial `x_i x_j x_k` (indices may repeat).
    pub fn from_indices(i: usize, j: usize, k: usize) -> Result<Self> {
        let mut e = [0u8; NVARS];
        for idx in [i, j, k] {
            if idx >= NVARS {
                return Err(Error::InvalidExponent(format!(
                    "variable x{idx} does not exist"
                )));
            }
            e[idx] += 1;
        }
        Ok(ExponentVector(e))
    }

    pub fn exponents(&self) -> [u8; NVARS] {
        self.0
    }

    pub fn get(&self, i: usize) -> u8 {
        self.0[i]
    }

    /// Variables occurring with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..NVARS).filter(|&i| self.0[i] > 0)
    }

    /// Exponent vector with `x_i` removed once, for differentiation.
    pub(crate) fn lowered(&self, i: usize) -> Option<[u8; NVARS]> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0;
        e[i] -= 1;
        Some(e)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All 56 cubic monomials in lexicographic order.
pub fn monomial_basis() -> &'static [ExponentVector] {
    static BASIS: OnceLock<Vec<ExponentVector>> = OnceLock::new();
    BASIS.get_or_init(|| {
        let mut out = Vec::with_capacity(MONOMIAL_COUNT);
        for i in 0..NVARS {
            for j in i..NVARS {
                for k in j..NVARS {
                    out.push(ExponentVector::from_indices(i, j, k).unwrap());
                }
            }
        }
        out.sort();
        out
    })
}
