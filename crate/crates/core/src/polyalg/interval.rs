use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

/// One end of an open interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Bound::Finite(r) => Some(r),
            _ => None,
        }
    }

    fn rank(&self) -> i8 {
        match self {
            Bound::NegInf => -1,
            Bound::Finite(_) => 0,
            Bound::PosInf => 1,
        }
    }

    /// Strict `<` on the extended line.
    pub fn lt(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => self.rank() < other.rank(),
        }
    }

    /// Accepts `-inf`, `inf`, `+inf` or a rational.
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" | "-oo" => Ok(Bound::NegInf),
            "inf" | "+inf" | "oo" | "+oo" => Ok(Bound::PosInf),
            other => parse_rational(other).map(Bound::Finite),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::PosInf => f.write_str("inf"),
            Bound::Finite(r) => f.write_str(&format_rational(r)),
        }
    }
}

/// Open interval `(lo, hi)` on the extended real line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Bound,
    hi: Bound,
}

impl Interval {
    pub fn new(lo: Bound, hi: Bound) -> Result<Self> {
        if matches!(lo, Bound::PosInf) || matches!(hi, Bound::NegInf) || !lo.lt(&hi) {
            return Err(Error::EmptyInterval);
        }
        Ok(Self { lo, hi })
    }

    pub fn finite(lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(Bound::Finite(lo), Bound::Finite(hi))
    }

    /// `(-inf, inf)`
    pub fn real_line() -> Self {
        Self {
            lo: Bound::NegInf,
            hi: Bound::PosInf,
        }
    }

    /// `(0, inf)`
    pub fn positive_half_line() -> Self {
        Self {
            lo: Bound::Finite(Rational::from_integer(0.into())),
            hi: Bound::PosInf,
        }
    }

    /// `(-1, 1)`
    pub fn symmetric_unit() -> Self {
        Self {
            lo: Bound::Finite(Rational::from_integer((-1).into())),
            hi: Bound::Finite(Rational::from_integer(1.into())),
        }
    }

    pub fn lo(&self) -> &Bound {
        &self.lo
    }

    pub fn hi(&self) -> &Bound {
        &self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let x = Bound::Finite(x.clone());
        self.lo.lt(&x) && x.lt(&self.hi)
    }

    /// Part of the interval strictly above `x`, if non-empty.
    pub fn above(&self, x: &Rational) -> Option<Self> {
        let lo = Bound::Finite(x.clone());
        let lo = if self.lo.lt(&lo) { lo } else { self.lo.clone() };
        Self::new(lo, self.hi.clone()).ok()
    }

    /// Part of the interval strictly below `x`, if non-empty.
    pub fn below(&self, x: &Rational) -> Option<Self> {
        let hi = Bound::Finite(x.clone());
        let hi = if hi.lt(&self.hi) { hi } else { self.hi.clone() };
        Self::new(self.lo.clone(), hi).ok()
    }

    /// Parses `"lo,hi"`, e.g. `"0,1"` or `"-inf,inf"`.
    pub fn parse(s: &str) -> Result<Self> {
        let (lo, hi) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("interval {s:?} must be \"lo,hi\"")))?;
        Self::new(Bound::parse(lo)?, Bound::parse(hi)?)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo.to_string(), self.hi.to_string()].serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn rejects_empty_intervals() {
        assert!(Interval::finite(int(1), int(1)).is_err());
        assert!(Interval::new(Bound::PosInf, Bound::PosInf).is_err());
        assert!(Interval::parse("2,-1").is_err());
    }

    #[test]
    fn containment_is_open() {
        let iv = Interval::symmetric_unit();
        assert!(iv.contains(&int(0)));
        assert!(!iv.contains(&int(1)));
        assert!(Interval::positive_half_line().contains(&int(1000)));
        assert!(!Interval::positive_half_line().contains(&int(0)));
    }

    #[test]
    fn parse_and_split() {
        let iv = Interval::parse("-inf, inf").unwrap();
        assert_eq!(iv, Interval::real_line());
        assert_eq!(iv.above(&int(0)).unwrap(), Interval::positive_half_line());
        assert!(Interval::positive_half_line().below(&int(0)).is_none());
        assert_eq!(Interval::parse("0,1").unwrap().to_string(), "(0, 1)");
    }
}
