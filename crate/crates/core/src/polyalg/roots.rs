//! GCDs, squarefree decomposition, Sturm counting and real root isolation.
//!
//! Every remainder sequence is normalized to its primitive part after each
//! step. The rescaling factors are positive, so sign sequences (and therefore
//! Sturm variation counts) are unaffected while coefficient growth stays tame.

use num_traits::{One, Zero};

use super::interval::{Bound, Interval};
use super::poly::RatPoly;
use crate::error::{Error, Result};
use crate::rational::{sign, Rational};

/// Monic greatest common divisor.
pub fn gcd(p: &RatPoly, q: &RatPoly) -> Result<RatPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::BothZero);
    }
    let mut a = p.primitive_part();
    let mut b = q.primitive_part();
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r.primitive_part();
    }
    Ok(a.monic())
}

/// `p / gcd(p, p')`, scaled to its primitive part.
pub fn squarefree_part(p: &RatPoly) -> Result<RatPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(p.primitive_part());
    }
    let g = gcd(p, &p.derivative(1))?;
    Ok(p.exact_div(&g)?.primitive_part())
}

/// A squarefree factor together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeFactor {
    pub factor: RatPoly,
    pub multiplicity: usize,
}

/// Yun's squarefree decomposition.
///
/// Returns monic, pairwise coprime, squarefree factors of positive degree in
/// increasing order of multiplicity. Their product (with multiplicities)
/// equals `p` up to the leading coefficient. Constants decompose to `[]`.
pub fn squarefree_decomposition(p: &RatPoly) -> Result<Vec<SquarefreeFactor>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let dp = p.derivative(1);
    let a0 = gcd(p, &dp)?;
    let mut b = p.exact_div(&a0)?;
    let c = dp.exact_div(&a0)?;
    let mut d = &c - &b.derivative(1);
    let mut multiplicity = 1;
    while !b.is_constant() {
        let a = gcd(&b, &d)?;
        if !a.is_constant() {
            out.push(SquarefreeFactor {
                factor: a.clone(),
                multiplicity,
            });
        }
        let next_b = b.exact_div(&a)?;
        let next_c = d.exact_div(&a)?;
        d = &next_c - &next_b.derivative(1);
        b = next_b;
        multiplicity += 1;
    }
    Ok(out)
}

/// Multiplicity of `x0` as a root of `p`.
pub fn ord_at(p: &RatPoly, x0: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if x0.is_zero() {
        return Ok(p.trailing_zeros());
    }
    let lin = RatPoly::linear_root(x0);
    let mut cur = p.clone();
    let mut k = 0;
    loop {
        let (q, r) = cur.div_rem(&lin)?;
        if !r.is_zero() {
            return Ok(k);
        }
        cur = q;
        k += 1;
    }
}

/// `(-i)^weight * p(i x)` as a real polynomial.
///
/// Requires every nonzero coefficient of `x^k` to have `k ≡ weight (mod 2)`.
/// Applying the map twice with the same weight is the identity.
pub fn rotate_imaginary(p: &RatPoly, weight: usize) -> Result<RatPoly> {
    let mut coeffs = Vec::with_capacity(p.coeffs().len());
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            coeffs.push(Rational::zero());
            continue;
        }
        if (k + weight) % 2 == 1 {
            return Err(Error::ParityViolation { degree: k, weight });
        }
        // i^k (-i)^w = i^(k - w), a real sign since k - w is even
        let half = (k as i64 - weight as i64) / 2;
        coeffs.push(if half.rem_euclid(2) == 0 {
            c.clone()
        } else {
            -c
        });
    }
    Ok(RatPoly::new(coeffs))
}

/// Sturm sequence of a polynomial (normally squarefree).
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<RatPoly>,
}

impl SturmSequence {
    pub fn new(p: &RatPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut seq = vec![p.primitive_part()];
        let dp = p.derivative(1).primitive_part();
        if !dp.is_zero() {
            seq.push(dp);
            loop {
                let n = seq.len();
                let r = seq[n - 2].rem(&seq[n - 1])?;
                if r.is_zero() {
                    break;
                }
                seq.push((-r).primitive_part());
            }
        }
        Ok(Self { seq })
    }

    pub fn polys(&self) -> &[RatPoly] {
        &self.seq
    }

    /// Sign variations of the sequence at `b`, zeros skipped.
    pub fn variations(&self, b: &Bound) -> usize {
        let signs = self.seq.iter().map(|p| match b {
            Bound::Finite(x) => p.sign_at(x),
            Bound::PosInf => p.leading().map_or(0, sign),
            Bound::NegInf => {
                let s = p.leading().map_or(0, sign);
                if p.degree().unwrap_or(0) % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
        });
        let mut last = 0i8;
        let mut changes = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Distinct roots strictly between `a` and `b`, provided neither endpoint is a root.
    pub fn count_between(&self, a: &Bound, b: &Bound) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Result of an exact real root count on an open interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct RootCount {
    /// Distinct roots strictly inside the interval.
    pub count: usize,
    /// The polynomial vanishes at the finite lower endpoint (not counted).
    pub root_at_lo: bool,
    /// The polynomial vanishes at the finite upper endpoint (not counted).
    pub root_at_hi: bool,
}

impl RootCount {
    pub fn endpoint_root(&self) -> bool {
        self.root_at_lo || self.root_at_hi
    }
}

/// Removes roots sitting exactly on finite endpoints of `iv` from a squarefree `s`.
fn deflate_endpoints(s: RatPoly, iv: &Interval) -> Result<(RatPoly, bool, bool)> {
    let mut s = s;
    let mut flags = [false, false];
    for (flag, b) in flags.iter_mut().zip([iv.lo(), iv.hi()]) {
        if let Some(x) = b.finite() {
            if s.eval(x).is_zero() {
                s = s.exact_div(&RatPoly::linear_root(x))?;
                *flag = true;
            }
        }
    }
    Ok((s, flags[0], flags[1]))
}

/// Number of distinct real roots of `p` in the open interval `iv`, with endpoint flags.
pub fn sturm_count_detailed(p: &RatPoly, iv: &Interval) -> Result<RootCount> {
    let s = squarefree_part(p)?;
    let (s, root_at_lo, root_at_hi) = deflate_endpoints(s, iv)?;
    let seq = SturmSequence::new(&s)?;
    Ok(RootCount {
        count: seq.count_between(iv.lo(), iv.hi()),
        root_at_lo,
        root_at_hi,
    })
}

/// Number of distinct real roots of `p` in the open interval `iv`.
pub fn sturm_count(p: &RatPoly, iv: &Interval) -> Result<usize> {
    sturm_count_detailed(p, iv).map(|c| c.count)
}

/// An open rational interval holding exactly one real root.
///
/// Neither endpoint is a root of the polynomial it was isolated from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
}

impl IsolatedRoot {
    pub fn interval(&self) -> Interval {
        Interval::finite(self.lo.clone(), self.hi.clone()).expect("isolating interval is nonempty")
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Root isolation by Sturm bisection on the squarefree part.
#[derive(Clone, Debug)]
pub struct RootIsolator {
    squarefree: RatPoly,
    full: RatPoly,
    sturm: SturmSequence,
    factors: Vec<SquarefreeFactor>,
    interval: Interval,
}

/// Rational split point strictly inside `(a, b)` that is not a root of `s`.
fn split_point(s: &RatPoly, a: &Rational, b: &Rational) -> Rational {
    let width = b - a;
    let mut den = 2i64;
    loop {
        for num in 1..den {
            let t = a + &width * Rational::new(num.into(), den.into());
            if !s.eval(&t).is_zero() {
                return t;
            }
        }
        den += 1;
    }
}

impl RootIsolator {
    pub fn new(p: &RatPoly, iv: &Interval) -> Result<Self> {
        let factors = squarefree_decomposition(p)?;
        let full = squarefree_part(p)?;
        let (squarefree, _, _) = deflate_endpoints(full.clone(), iv)?;
        let sturm = SturmSequence::new(&squarefree)?;
        Ok(Self {
            squarefree,
            full,
            sturm,
            factors,
            interval: iv.clone(),
        })
    }

    /// Isolating intervals for every distinct root in the interval, left to right.
    pub fn isolate(&self) -> Vec<IsolatedRoot> {
        let s = &self.squarefree;
        if s.is_constant() {
            return Vec::new();
        }
        // every root satisfies |r| < bound, so ±bound are never roots
        let bound = s.cauchy_bound();
        let lo = match self.interval.lo().finite() {
            Some(x) if *x > -bound.clone() => x.clone(),
            _ => -bound.clone(),
        };
        let hi = match self.interval.hi().finite() {
            Some(x) if *x < bound => x.clone(),
            _ => bound,
        };
        if lo >= hi {
            return Vec::new();
        }
        // endpoints that are roots of p (already deflated from s) must not bound an
        // isolating interval, or the multiplicity sign test would see a zero there
        let lo = if self.full.eval(&lo).is_zero() {
            self.nudge(&lo, &hi)
        } else {
            lo
        };
        let hi = if self.full.eval(&hi).is_zero() {
            self.nudge(&hi, &lo)
        } else {
            hi
        };
        let mut out = Vec::new();
        let mut stack = vec![(lo, hi)];
        while let Some((a, b)) = stack.pop() {
            let n = self
                .sturm
                .count_between(&Bound::Finite(a.clone()), &Bound::Finite(b.clone()));
            match n {
                0 => {}
                1 => {
                    let multiplicity = self.multiplicity_in(&a, &b);
                    out.push(IsolatedRoot {
                        lo: a,
                        hi: b,
                        multiplicity,
                    });
                }
                _ => {
                    let m = split_point(s, &a, &b);
                    // right half first so the left half is popped first
                    stack.push((m.clone(), b));
                    stack.push((a, m));
                }
            }
        }
        out
    }

    /// A point between `from` and `toward` with no root of `p` in between.
    fn nudge(&self, from: &Rational, toward: &Rational) -> Rational {
        let two = Rational::from_integer(2.into());
        let mut t = (from + toward) / &two;
        loop {
            let (a, b) = if from < &t { (from, &t) } else { (&t, from) };
            let clear = self
                .sturm
                .count_between(&Bound::Finite(a.clone()), &Bound::Finite(b.clone()))
                == 0;
            if clear && !self.full.eval(&t).is_zero() {
                return t;
            }
            t = (from + &t) / &two;
        }
    }

    fn multiplicity_in(&self, a: &Rational, b: &Rational) -> usize {
        self.factors
            .iter()
            .find(|f| f.factor.sign_at(a) * f.factor.sign_at(b) < 0)
            .map_or(1, |f| f.multiplicity)
    }

    /// Shrinks an isolating interval until its width is at most `width`.
    pub fn refine(&self, root: &mut IsolatedRoot, width: &Rational) {
        let s = &self.squarefree;
        let lo_sign = s.sign_at(&root.lo);
        while root.width() > *width {
            let m = split_point(s, &root.lo, &root.hi);
            if s.sign_at(&m) == lo_sign {
                root.lo = m;
            } else {
                root.hi = m;
            }
        }
    }

    /// Halves the interval once (keeping the root inside).
    pub fn bisect(&self, root: &mut IsolatedRoot) {
        let half = root.width() / Rational::from_integer(2.into());
        self.refine(root, &half);
    }
}

/// Isolating intervals, with multiplicities, for the distinct real roots of `p` in `iv`.
pub fn isolate_roots(p: &RatPoly, iv: &Interval) -> Result<Vec<IsolatedRoot>> {
    Ok(RootIsolator::new(p, iv)?.isolate())
}

/// True iff `p` and `q` have a common complex root.
pub fn share_root(p: &RatPoly, q: &RatPoly) -> Result<bool> {
    Ok(!gcd(p, q)?.is_constant())
}

/// Monic `x`, handy for comparisons.
pub(crate) fn is_x(p: &RatPoly) -> bool {
    p.degree() == Some(1) && p.coeff(0).is_zero() && p.coeff(1).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(
            gcd(&p(&[0, 0, 0, 32]), &p(&[0, 0, 96])).unwrap(),
            p(&[0, 0, 1])
        );
        let w = p(&[0, 0, 0, 32]);
        assert_eq!(gcd(&w, &w.derivative(1)).unwrap(), p(&[0, 0, 1]));
        assert_eq!(
            gcd(&RatPoly::zero(), &RatPoly::zero()),
            Err(Error::BothZero)
        );
        assert_eq!(
            gcd(&p(&[2, 4]), &RatPoly::zero()).unwrap(),
            RatPoly::new(vec![rat(1, 2), int(1)])
        );
    }

    #[test]
    fn squarefree_examples() {
        let sf = squarefree_decomposition(&p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(
            sf,
            vec![SquarefreeFactor {
                factor: p(&[0, 1]),
                multiplicity: 3
            }]
        );

        let sf = squarefree_decomposition(&p(&[4, 0, 8])).unwrap();
        assert_eq!(
            sf,
            vec![SquarefreeFactor {
                factor: RatPoly::new(vec![rat(1, 2), int(0), int(1)]),
                multiplicity: 1
            }]
        );

        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let sf = squarefree_decomposition(&p(&[2, -3, 0, 1])).unwrap();
        assert_eq!(
            sf,
            vec![
                SquarefreeFactor {
                    factor: p(&[2, 1]),
                    multiplicity: 1
                },
                SquarefreeFactor {
                    factor: p(&[-1, 1]),
                    multiplicity: 2
                },
            ]
        );
        assert_eq!(
            squarefree_decomposition(&RatPoly::zero()),
            Err(Error::ZeroPolynomial)
        );
        assert!(squarefree_decomposition(&p(&[5])).unwrap().is_empty());
    }

    #[test]
    fn sturm_examples() {
        let r = Interval::real_line();
        assert_eq!(sturm_count(&p(&[-24, 0, -96, 0, 96]), &r).unwrap(), 2);
        assert_eq!(sturm_count(&p(&[0, 0, 0, 32]), &r).unwrap(), 1);
        assert_eq!(sturm_count(&p(&[4, 0, 8]), &r).unwrap(), 0);
        assert_eq!(sturm_count(&p(&[7]), &r).unwrap(), 0);
        assert_eq!(
            sturm_count(&RatPoly::zero(), &r),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn endpoint_roots_are_flagged_not_counted() {
        // x (x - 1)(x - 1/2) on (0, 1)
        let q = &(&p(&[0, 1]) * &p(&[-1, 1])) * &RatPoly::new(vec![rat(-1, 2), int(1)]);
        let c = sturm_count_detailed(&q, &Interval::finite(int(0), int(1)).unwrap()).unwrap();
        assert_eq!(
            c,
            RootCount {
                count: 1,
                root_at_lo: true,
                root_at_hi: true
            }
        );
        let c = sturm_count_detailed(&q, &Interval::positive_half_line()).unwrap();
        assert_eq!(
            c,
            RootCount {
                count: 2,
                root_at_lo: true,
                root_at_hi: false
            }
        );
    }

    #[test]
    fn isolation_examples() {
        let r = Interval::real_line();
        let roots = isolate_roots(&p(&[0, 0, 0, 32]), &r).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 3);
        assert!(roots[0].lo < int(0) && roots[0].hi > int(0));

        let iso = RootIsolator::new(&p(&[-2, 0, 1]), &r).unwrap();
        let mut roots = iso.isolate();
        assert_eq!(roots.len(), 2);
        let eps = rat(1, 1000);
        for root in &mut roots {
            iso.refine(root, &eps);
            assert!(root.width() <= eps);
            assert_eq!(root.multiplicity, 1);
        }
        // roots[1] brackets sqrt(2)
        assert!(&roots[1].lo * &roots[1].lo < int(2) && &roots[1].hi * &roots[1].hi > int(2));
        assert!(roots[0].hi < roots[1].lo);

        assert!(isolate_roots(&p(&[4, 0, 8]), &r).unwrap().is_empty());
    }

    #[test]
    fn multiplicity_survives_endpoint_root_of_same_factor() {
        // (x^2 - 1/4)^2 on (-1/2, 1): the factor x^2 - 1/4 vanishes at the excluded endpoint
        let f = p(&[-1, 0, 4]);
        let q = &f * &f;
        let roots = isolate_roots(&q, &Interval::finite(rat(-1, 2), int(1)).unwrap()).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 2);
        assert!(roots[0].lo < rat(1, 2) && rat(1, 2) < roots[0].hi);
    }

    #[test]
    fn isolation_handles_rational_roots_at_bisection_points() {
        // roots at 0, ±1/2, 1: midpoints of naive bisection
        let q = &(&p(&[0, 1]) * &p(&[-1, 0, 4])) * &p(&[-1, 1]);
        let roots = isolate_roots(&q, &Interval::real_line()).unwrap();
        assert_eq!(roots.len(), 4);
        for (root, expected) in roots.iter().zip([rat(-1, 2), int(0), rat(1, 2), int(1)]) {
            assert!(root.lo < expected && expected < root.hi);
        }
    }

    #[test]
    fn ord_examples() {
        assert_eq!(ord_at(&p(&[0, 0, 0, 32]), &int(0)).unwrap(), 3);
        assert_eq!(ord_at(&p(&[4, 0, 8]), &int(0)).unwrap(), 0);
        assert_eq!(ord_at(&p(&[1, -2, 1]), &int(1)).unwrap(), 2);
        assert_eq!(
            ord_at(&RatPoly::zero(), &int(0)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotate_imaginary(&p(&[4, 0, 8]), 2).unwrap(), p(&[-4, 0, 8]));
        assert_eq!(rotate_imaginary(&p(&[0, 1]), 1).unwrap(), p(&[0, 1]));
        assert_eq!(
            rotate_imaginary(&p(&[-24, 0, -96, 0, 96]), 4).unwrap(),
            p(&[-24, 0, 96, 0, 96])
        );
        assert_eq!(
            rotate_imaginary(&p(&[1, 1]), 0),
            Err(Error::ParityViolation {
                degree: 1,
                weight: 0
            })
        );
    }
}
