//! Parser for cubic forms written as sums of monomials.
//!
//! ```text
//! form   := sign? term (sign term)*
//! term   := coeff ('*'? factor)* | factor ('*'? factor)*
//! coeff  := digits ('/' digits)?
//! factor := 'x' digit ('^' digits)?
//! sign   := '+' | '-'
//! ```
//!
//! Whitespace is ignored between tokens. Every term must have total degree 3.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::form::CubicForm;
use super::monomial::{ExponentVector, DEGREE, NVARS};
use crate::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: at + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).ok()?;
        s.parse().ok()
    }

    fn coefficient(&mut self) -> Result<BigRational> {
        let start = self.pos;
        let num = self.digits().expect("caller checked for a digit");
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let Some(den) = self.digits() else {
                return self.err(at, "expected denominator after '/'");
            };
            if den.is_zero() {
                return self.err(start, "zero denominator");
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn factor(&mut self, exps: &mut [u32; NVARS]) -> Result<()> {
        let at = self.pos;
        self.pos += 1; // 'x'
        let Some(&d) = self.src.get(self.pos) else {
            return self.err(at, "expected variable index after 'x'");
        };
        if !d.is_ascii_digit() {
            return self.err(self.pos, "expected variable index after 'x'");
        }
        self.pos += 1;
        if self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            return self.err(at, "variable index must be 0..5");
        }
        let idx = (d - b'0') as usize;
        if idx >= NVARS {
            return self.err(at, format!("unknown variable x{idx}; expected x0..x5"));
        }
        let mut power = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let p_at = self.pos;
            match self.digits() {
                Some(p) => match u32::try_from(p) {
                    Ok(p) if p <= DEGREE => power = p,
                    _ => return self.err(p_at, "exponent exceeds the degree 3"),
                },
                None => return self.err(p_at, "expected exponent after '^'"),
            }
        }
        exps[idx] += power;
        Ok(())
    }

    fn term(&mut self) -> Result<(ExponentVector, BigRational)> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return self.err(self.pos, "expected a term"),
        };
        let mut coeff = BigRational::one();
        let mut exps = [0u32; NVARS];
        let mut seen_any = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.coefficient()?;
            seen_any = true;
        }
        loop {
            match self.peek() {
                Some(b'*') => {
                    let at = self.pos;
                    self.pos += 1;
                    if self.peek() != Some(b'x') {
                        return self.err(at, "expected a variable after '*'");
                    }
                }
                Some(b'x') => {}
                _ => break,
            }
            self.factor(&mut exps)?;
            seen_any = true;
        }
        if !seen_any {
            let c = self.src[start] as char;
            return self.err(start, format!("unexpected character '{c}'"));
        }
        let degree: u32 = exps.iter().sum();
        if degree != DEGREE {
            return self.err(
                start,
                format!("term has degree {degree}; a cubic form needs degree 3"),
            );
        }
        let e = ExponentVector::new(exps.map(|x| x as u8)).expect("degree checked");
        Ok((e, coeff))
    }

    fn form(&mut self) -> Result<CubicForm> {
        let mut f = CubicForm::zero();
        if self.peek().is_none() {
            return self.err(0, "empty expression");
        }
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None => break,
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(c) => {
                    return self.err(
                        self.pos,
                        format!("expected '+' or '-', found '{}'", c as char),
                    )
                }
            };
            first = false;
            let (e, c) = self.term()?;
            f.add_term(e, if negative { -c } else { c });
        }
        Ok(f)
    }
}

impl CubicForm {
    /// Parses an expression like `x0^3 - 2/3*x1*x2^2 + x3 x4 x5`.
    pub fn parse(input: &str) -> Result<CubicForm> {
        Parser {
            src: input.as_bytes(),
            pos: 0,
        }
        .form()
    }
}

impl std::str::FromStr for CubicForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CubicForm::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn column(r: Result<CubicForm>) -> usize {
        match r {
            Err(Error::Parse { column, .. }) => column,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_fermat() {
        let f = CubicForm::parse("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3").unwrap();
        assert_eq!(f, CubicForm::fermat());
    }

    #[test]
    fn coefficients_and_juxtaposition() {
        let f = CubicForm::parse("-3/6 * x0^2*x1 + 2 x3 x4 x5 - x0 x0 x1").unwrap();
        let e = ExponentVector::new([2, 1, 0, 0, 0, 0]).unwrap();
        assert_eq!(
            f.coefficient(&e),
            Some(&BigRational::new(BigInt::from(-3), BigInt::from(2)))
        );
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn cancellation_to_zero() {
        let f = CubicForm::parse("x0^3 - x0^3").unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn display_round_trips() {
        for f in [
            CubicForm::fermat(),
            CubicForm::klein(),
            CubicForm::clebsch(),
        ] {
            assert_eq!(CubicForm::parse(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn rejects_wrong_degree_with_position() {
        assert_eq!(column(CubicForm::parse("x0^3 + x1^2")), 8);
        assert_eq!(column(CubicForm::parse("x0^3 + 5")), 8);
        assert_eq!(column(CubicForm::parse("x0^2*x1^2")), 1);
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(column(CubicForm::parse("")), 1);
        assert_eq!(column(CubicForm::parse("x6^3")), 1);
        assert_eq!(column(CubicForm::parse("x0^3 x")), 6);
        assert_eq!(column(CubicForm::parse("1/0 x0^3")), 1);
        assert_eq!(column(CubicForm::parse("x0^3 y")), 6);
        assert_eq!(column(CubicForm::parse("x0^3 * + x1^3")), 6);
        assert_eq!(column(CubicForm::parse("x0^ + x1^3")), 5);
        assert_eq!(column(CubicForm::parse("x12^3")), 1);
        assert!(CubicForm::parse("x0^9").is_err());
    }
}
