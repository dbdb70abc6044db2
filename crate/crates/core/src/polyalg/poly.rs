use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

/// Dense univariate polynomial over the rationals.
///
/// `coeffs[i]` is the coefficient of `x^i`. The last stored coefficient is
/// never zero; the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self { coeffs }
    }

    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// `x - root`
    pub fn linear_root(root: &Rational) -> Self {
        Self::new(vec![-root.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `p(x)`: -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        crate::rational::sign(&self.eval(x))
    }

    /// The `order`-th derivative.
    pub fn derivative(&self, order: usize) -> Self {
        if order >= self.coeffs.len() {
            return Self::zero();
        }
        let coeffs = self.coeffs[order..]
            .iter()
            .enumerate()
            .map(|(i, c)| {
                // falling factorial (i + order)! / i!
                let factor: BigInt = (i + 1..=i + order).map(BigInt::from).product();
                c * Rational::from_integer(factor)
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::ZeroPolynomial)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = lead.recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let q = top * &inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Quotient of a division known to be exact; errors if a remainder is left.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.recip()),
            _ => self.clone(),
        }
    }

    /// Positive rational multiple with coprime integer coefficients.
    ///
    /// Signs (and hence every sign-variation count) are preserved.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num_gcd = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .fold(BigInt::zero(), |acc, c| {
                acc.gcd(&(c.numer() * (&den_lcm / c.denom())))
            });
        let factor = Rational::new(den_lcm, num_gcd.abs());
        if factor.is_one() {
            self.clone()
        } else {
            self.scale(&factor)
        }
    }

    /// Integer coefficients of the primitive part.
    pub fn to_primitive_ints(&self) -> Vec<BigInt> {
        self.primitive_part()
            .coeffs
            .iter()
            .map(|c| c.to_integer())
            .collect()
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Number of leading zero coefficients, i.e. the multiplicity of the root at 0.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Strips every factor of `x`.
    pub fn strip_origin(&self) -> Self {
        let k = self.trailing_zeros();
        Self {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Largest absolute coefficient ratio bound: all roots satisfy `|r| < bound`.
    pub fn cauchy_bound(&self) -> Rational {
        let Some(lead) = self.leading() else {
            return Rational::one();
        };
        let lead = lead.abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rational::zero);
        max + Rational::one()
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let shown = if mag.is_one() && i > 0 {
                String::new()
            } else if mag.denom().is_one() || i == 0 {
                format_rational(&mag)
            } else {
                format!("({})", format_rational(&mag))
            };
            match i {
                0 => write!(f, "{shown}")?,
                1 => write!(f, "{shown}x")?,
                _ => write!(f, "{shown}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

/// Serialized as the low-to-high coefficient list in `"p/q"` notation.
impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::rational::serde_str::vec::serialize(&self.coeffs, s)
    }
}

impl<'a> Add<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        RatPoly::new(coeffs)
    }
}

impl<'a> Sub<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, Rational::zero());
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        RatPoly::new(coeffs)
    }
}

impl<'a> Mul<&'a RatPoly> for &'a RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatPoly> for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn derivative_examples() {
        let h2 = RatPoly::from_ints(&[-2, 0, 4]);
        assert_eq!(h2.derivative(1), RatPoly::from_ints(&[0, 8]));
        assert_eq!(h2.derivative(0), h2);
        let h3 = RatPoly::from_ints(&[0, -12, 0, 8]);
        assert_eq!(h3.derivative(2), RatPoly::from_ints(&[0, 48]));
        assert_eq!(h3.derivative(4), RatPoly::zero());
        assert_eq!(RatPoly::zero().derivative(1), RatPoly::zero());
    }

    #[test]
    fn division_and_exactness() {
        let p = RatPoly::from_ints(&[-1, 0, 1]);
        let d = RatPoly::from_ints(&[-1, 1]);
        let (q, r) = p.div_rem(&d).unwrap();
        assert_eq!(q, RatPoly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(
            RatPoly::from_ints(&[1, 0, 1]).exact_div(&d),
            Err(Error::InexactDivision)
        );
        assert_eq!(p.div_rem(&RatPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn primitive_part_keeps_sign() {
        let p = RatPoly::new(vec![rat(-1, 2), rat(3, 4), int(0)]);
        assert_eq!(p.primitive_part(), RatPoly::from_ints(&[-2, 3]));
        let q = RatPoly::from_ints(&[-6, -4]);
        assert_eq!(q.primitive_part(), RatPoly::from_ints(&[-3, -2]));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(
            RatPoly::from_ints(&[-24, 0, -96, 0, 96]).to_string(),
            "96x^4 - 96x^2 - 24"
        );
        assert_eq!(
            RatPoly::new(vec![rat(1, 6), int(-1), int(1)]).to_string(),
            "x^2 - x + 1/6"
        );
        assert_eq!(RatPoly::zero().to_string(), "0");
    }

    #[test]
    fn pow_and_reflect() {
        let p = RatPoly::from_ints(&[1, 1]);
        assert_eq!(p.pow(3), RatPoly::from_ints(&[1, 3, 3, 1]));
        assert_eq!(p.reflect(), RatPoly::from_ints(&[1, -1]));
        assert_eq!(p.pow(0), RatPoly::one());
    }
}
