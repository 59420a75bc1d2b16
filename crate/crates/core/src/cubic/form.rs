use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::{monomial_basis, ExponentVector, NVARS};

pub type Point = [BigRational; NVARS];

pub fn point_from_ints(p: [i64; NVARS]) -> Point {
    p.map(|x| BigRational::from_integer(BigInt::from(x)))
}

/// Homogeneous cubic in `x0, ..., x5` with exact rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct CubicForm {
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl CubicForm {
    pub fn zero() -> Self {
        CubicForm::default()
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, BigRational)>,
    {
        let mut f = CubicForm::zero();
        for (e, c) in terms {
            f.add_term(e, c);
        }
        f
    }

    /// Adds `c x^e`, dropping the monomial if it cancels.
    pub fn add_term(&mut self, e: ExponentVector, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add_int_term(&mut self, e: [u8; NVARS], c: i64) {
        let e = ExponentVector::new(e).expect("degree-3 exponent");
        self.add_term(e, BigRational::from_integer(BigInt::from(c)));
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Option<&BigRational> {
        self.terms.get(e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter()
    }

    pub fn evaluate(&self, p: &Point) -> BigRational {
        self.terms
            .iter()
            .map(|(e, c)| c * monomial_value(&e.exponents(), p))
            .fold(BigRational::zero(), |acc, t| acc + t)
    }

    /// All six partial derivatives at `p`.
    pub fn gradient(&self, p: &Point) -> Point {
        std::array::from_fn(|i| {
            self.terms
                .iter()
                .filter_map(|(e, c)| {
                    let lowered = e.lowered(i)?;
                    let mult = BigRational::from_integer(BigInt::from(e.get(i)));
                    Some(c * mult * monomial_value(&lowered, p))
                })
                .fold(BigRational::zero(), |acc, t| acc + t)
        })
    }

    /// Sets every variable outside `keep` to zero.
    pub fn restrict_to(&self, keep: &[usize]) -> CubicForm {
        CubicForm {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.support().all(|i| keep.contains(&i)))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Reports every supplied nonzero point at which `F` and all its partials
    /// vanish. Finding none proves nothing about smoothness.
    pub fn smoothness_probe(&self, trial_points: &[Point]) -> SmoothnessReport {
        let singular_witnesses = trial_points
            .iter()
            .filter(|p| p.iter().any(|x| !x.is_zero()))
            .filter(|p| self.evaluate(p).is_zero() && self.gradient(p).iter().all(Zero::is_zero))
            .cloned()
            .collect();
        SmoothnessReport { singular_witnesses }
    }

    /// `x0^3 + ... + x5^3`.
    pub fn fermat() -> Self {
        let mut f = CubicForm::zero();
        for i in 0..NVARS {
            let mut e = [0; NVARS];
            e[i] = 3;
            f.add_int_term(e, 1);
        }
        f
    }

    /// `x0^2 x1 + x1^2 x2 + x2^2 x3 + x3^2 x4 + x4^2 x0 + x5^3`.
    pub fn klein() -> Self {
        let mut f = CubicForm::zero();
        for i in 0..5 {
            let e = ExponentVector::from_indices(i, i, (i + 1) % 5).unwrap();
            f.add_term(e, BigRational::one());
        }
        f.add_int_term([0, 0, 0, 0, 0, 3], 1);
        f
    }

    /// `sum x_i^3 - (sum x_i)^3`, expanded.
    pub fn clebsch() -> Self {
        let mut f = CubicForm::fermat();
        for e in monomial_basis() {
            // multinomial coefficient 3! / prod e_i!
            let denom: i64 = e
                .exponents()
                .iter()
                .map(|&k| (1..=k as i64).product::<i64>())
                .product();
            f.add_term(*e, BigRational::from_integer(BigInt::from(-6 / denom)));
        }
        f
    }
}

fn monomial_value(e: &[u8; NVARS], p: &Point) -> BigRational {
    let mut v = BigRational::one();
    for (x, &k) in p.iter().zip(e) {
        for _ in 0..k {
            v *= x;
        }
    }
    v
}

/// Points supplied to [`CubicForm::smoothness_probe`] where the form is singular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub singular_witnesses: Vec<Point>,
}

impl fmt::Display for CubicForm {
    /// Writes the form in the grammar accepted by [`CubicForm::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{e}")?;
            } else {
                write!(f, "{a}*{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CubicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubicForm({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn evaluation() {
        let f = CubicForm::fermat();
        assert_eq!(f.evaluate(&point_from_ints([1, 0, 0, 0, 0, 0])), q(1, 1));
        assert!(f.evaluate(&point_from_ints([0; 6])).is_zero());
        let c = CubicForm::clebsch();
        assert!(c.evaluate(&point_from_ints([1, -1, 0, 0, 0, 0])).is_zero());
        assert!(c.evaluate(&point_from_ints([0; 6])).is_zero());
    }

    #[test]
    fn clebsch_matches_definition() {
        let c = CubicForm::clebsch();
        // no pure cubes survive the subtraction
        assert!(c
            .coefficient(&ExponentVector::new([3, 0, 0, 0, 0, 0]).unwrap())
            .is_none());
        assert_eq!(
            c.coefficient(&ExponentVector::new([2, 1, 0, 0, 0, 0]).unwrap()),
            Some(&q(-3, 1))
        );
        assert_eq!(
            c.coefficient(&ExponentVector::new([1, 1, 1, 0, 0, 0]).unwrap()),
            Some(&q(-6, 1))
        );
        let p = [q(1, 2), q(-1, 3), q(2, 1), q(0, 1), q(5, 7), q(-1, 1)];
        let s: BigRational = p.iter().cloned().fold(q(0, 1), |a, b| a + b);
        let cubes: BigRational = p.iter().map(|x| x * x * x).fold(q(0, 1), |a, b| a + b);
        assert_eq!(c.evaluate(&p), cubes - &s * &s * &s);
    }

    #[test]
    fn gradient_examples() {
        let f = CubicForm::fermat();
        assert_eq!(
            f.gradient(&point_from_ints([1, 0, 0, 0, 0, 0])),
            point_from_ints([3, 0, 0, 0, 0, 0])
        );
        let mut g = CubicForm::zero();
        g.add_int_term([3, 0, 0, 0, 0, 0], 1);
        let p = point_from_ints([0, 1, 0, 0, 0, 0]);
        assert!(g.evaluate(&p).is_zero());
        assert!(g.gradient(&p).iter().all(Zero::is_zero));
    }

    #[test]
    fn probes() {
        let coords: Vec<Point> = (0..6)
            .map(|i| {
                let mut p = [0; 6];
                p[i] = 1;
                point_from_ints(p)
            })
            .collect();
        assert!(CubicForm::fermat()
            .smoothness_probe(&coords)
            .singular_witnesses
            .is_empty());

        let mut cube = CubicForm::zero();
        cube.add_int_term([3, 0, 0, 0, 0, 0], 1);
        let w = cube.smoothness_probe(&[point_from_ints([0, 1, 0, 0, 0, 0])]);
        assert_eq!(w.singular_witnesses.len(), 1);

        let mut g = CubicForm::zero();
        g.add_int_term([2, 1, 0, 0, 0, 0], 1);
        let w = g.smoothness_probe(&[
            point_from_ints([0, 0, 1, 0, 0, 0]),
            point_from_ints([1, 0, 0, 0, 0, 0]),
            point_from_ints([0; 6]),
        ]);
        assert_eq!(
            w.singular_witnesses,
            vec![point_from_ints([0, 0, 1, 0, 0, 0])]
        );
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut f = CubicForm::fermat();
        f.add_int_term([3, 0, 0, 0, 0, 0], -1);
        assert_eq!(f.len(), 5);
        f.add_term(ExponentVector::new([0, 3, 0, 0, 0, 0]).unwrap(), q(0, 1));
        assert_eq!(f.len(), 5);
    }

    #[test]
    fn klein_terms() {
        let k = CubicForm::klein();
        assert_eq!(k.len(), 6);
        assert_eq!(
            k.to_string(),
            "x0^2*x1 + x0*x4^2 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x5^3"
        );
    }

    #[test]
    fn restriction() {
        let k = CubicForm::klein();
        assert_eq!(k.restrict_to(&[5]).len(), 1);
        assert!(!k.restrict_to(&[0, 2, 4]).is_zero());
        assert!(k.restrict_to(&[1, 3]).is_zero());
    }
}
