//! Exact integer polynomials and q-analogues.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A dense polynomial in `x` with arbitrary-precision integer coefficients.
/// `coeffs[d]` is the coefficient of `x^d`; trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    /// `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        Self { coeffs }
    }

    /// `x - 1`.
    pub fn x_minus_one() -> Self {
        Self::from_i64(&[-1, 1])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Adds `c·x^d` in place.
    pub fn add_term(&mut self, d: usize, c: impl Into<BigInt>) {
        if self.coeffs.len() <= d {
            self.coeffs.resize(d + 1, BigInt::zero());
        }
        self.coeffs[d] += c.into();
        *self = Self::from_coeffs(std::mem::take(&mut self.coeffs));
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `Σ a_i x^i ↦ Σ a_i x^{k i}`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        let mut coeffs = vec![BigInt::zero(); self.degree().map_or(0, |d| d * k + 1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Value at an integer point.
    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Palindromic coefficients: `x^deg p(1/x) = p(x)`.
    pub fn is_reciprocal(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int(n: usize) -> IntPolynomial {
    IntPolynomial::from_coeffs(vec![BigInt::one(); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> IntPolynomial {
    (1..=n).fold(IntPolynomial::one(), |acc, i| &acc * &q_int(i))
}

pub fn reciprocal_check(p: &IntPolynomial) -> bool {
    p.is_reciprocal()
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| &a * &b)
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending powers: `1 + 2*x + x^3`, `-x^2 + x^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let mono = match d {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{d}"),
            };
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{mono}")?,
                _ => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Parses sums of terms `c`, `c*x`, `x^d`, `c*x^d`, with `+`/`-` between.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.into() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty polynomial"));
        }
        let mut out = IntPolynomial::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (coef, mono) = match term.split_once('*') {
                Some((c, m)) => (c.parse::<BigInt>().map_err(|_| err("bad coefficient"))?, Some(m)),
                None if term.starts_with('x') => (BigInt::one(), Some(term)),
                None => (term.parse::<BigInt>().map_err(|_| err("bad constant"))?, None),
            };
            let degree = match mono {
                None => 0,
                Some("x") => 1,
                Some(m) => m
                    .strip_prefix("x^")
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| err("bad monomial"))?,
            };
            out.add_term(degree, coef * sign);
        }
        Ok(out)
    }
}
