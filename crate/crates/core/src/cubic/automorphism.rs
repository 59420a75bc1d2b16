use std::collections::BTreeMap;
use std::fmt;

use super::monomial::{ExponentVector, NVARS};
use crate::{Error, Result};

/// Diagonal linear automorphism `x_i -> zeta^{w_i} x_i` of `P^5`, where
/// `zeta` is a primitive `order`-th root of unity.
///
/// Roots of unity never materialize; all eigenvalue bookkeeping is done on
/// exponents in `Z/order`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiagonalAutomorphism {
    order: u32,
    weights: [u32; NVARS],
}

impl DiagonalAutomorphism {
    /// Weights are reduced into `[0, order)`.
    pub fn new(order: u32, weights: [i64; NVARS]) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidAutomorphism(
                "order must be at least 1".into(),
            ));
        }
        let n = order as i64;
        let weights = weights.map(|w| w.rem_euclid(n) as u32);
        Ok(DiagonalAutomorphism { order, weights })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn weights(&self) -> [u32; NVARS] {
        self.weights
    }

    /// All weights equal: the action on projective space is the identity.
    pub fn is_trivial_action(&self) -> bool {
        self.weights.iter().all(|&w| w == self.weights[0])
    }

    pub fn check_residue(&self, k: u32) -> Result<()> {
        if k >= self.order {
            return Err(Error::EigenvalueOutOfRange {
                k,
                order: self.order,
            });
        }
        Ok(())
    }

    /// Exponent of the eigenvalue of the monomial `x^e`.
    pub fn weight(&self, e: &ExponentVector) -> u32 {
        let s: u64 = (0..NVARS)
            .map(|i| self.weights[i] as u64 * e.get(i) as u64)
            .sum();
        (s % self.order as u64) as u32
    }

    /// Exponent of `det` as a power of `zeta`.
    pub fn det_weight(&self) -> u32 {
        (self.weights.iter().map(|&w| w as u64).sum::<u64>() % self.order as u64) as u32
    }

    /// Variable indices grouped by weight, ordered by weight.
    pub fn weight_classes(&self) -> BTreeMap<u32, Vec<usize>> {
        let mut classes: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, &w) in self.weights.iter().enumerate() {
            classes.entry(w).or_default().push(i);
        }
        classes
    }

    /// `w -> w + c(1, ..., 1)`; the same projective automorphism.
    pub fn shifted(&self, c: u32) -> Self {
        let n = self.order;
        DiagonalAutomorphism {
            order: n,
            weights: self
                .weights
                .map(|w| ((w as u64 + c as u64) % n as u64) as u32),
        }
    }

    /// `w -> u w`; a generator change when `gcd(u, n) = 1`.
    pub fn scaled(&self, u: u32) -> Self {
        let n = self.order as u64;
        DiagonalAutomorphism {
            order: self.order,
            weights: self.weights.map(|w| ((w as u64 * u as u64) % n) as u32),
        }
    }

    pub fn permuted(&self, perm: &[usize; NVARS]) -> Self {
        let mut weights = [0; NVARS];
        for (i, &p) in perm.iter().enumerate() {
            weights[i] = self.weights[p];
        }
        DiagonalAutomorphism {
            order: self.order,
            weights,
        }
    }
}

impl fmt::Debug for DiagonalAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DiagonalAutomorphism(n={}, w={:?})",
            self.order, self.weights
        )
    }
}

macro_rules! named {
    ($(#[$m:meta])* $name:ident, $n:expr, $w:expr) => {
        $(#[$m])*
        pub fn $name() -> DiagonalAutomorphism {
            DiagonalAutomorphism::new($n, $w).unwrap()
        }
    };
}

named!(
    /// Involution fixing a hyperplane and a point (the Eckardt family).
    phi1, 2, [0, 0, 0, 0, 0, 1]
);
named!(
    /// The symplectic involution.
    phi2, 2, [0, 0, 0, 0, 1, 1]
);
named!(phi3, 2, [0, 0, 0, 1, 1, 1]);
named!(
    /// Triple covers of `P^4` branched along a cubic threefold.
    sigma1, 3, [0, 0, 0, 0, 0, 1]
);
named!(sigma2, 3, [0, 0, 0, 0, 1, 1]);
named!(sigma3, 3, [0, 0, 0, 1, 1, 2]);
named!(sigma4, 3, [0, 0, 1, 1, 2, 2]);
named!(tau1, 3, [0, 0, 0, 0, 1, 2]);
named!(
    /// Same weights as `sigma4`; symplectic on its invariant family.
    tau2, 3, [0, 0, 1, 1, 2, 2]
);

/// Canonical instances by name.
pub fn named_automorphism(name: &str) -> Option<DiagonalAutomorphism> {
    Some(match name {
        "phi1" => phi1(),
        "phi2" => phi2(),
        "phi3" => phi3(),
        "sigma1" => sigma1(),
        "sigma2" => sigma2(),
        "sigma3" => sigma3(),
        "sigma4" => sigma4(),
        "tau1" => tau1(),
        "tau2" => tau2(),
        _ => return None,
    })
}
