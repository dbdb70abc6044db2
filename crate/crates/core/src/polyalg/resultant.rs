//! Resultants by the subresultant polynomial remainder sequence.
//!
//! The PRS runs over integer coefficients (Collins/Brown), so every division
//! in the loop is exact in ℤ and intermediate growth stays polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::RatPoly;
use crate::error::{Error, Result};
use crate::rational::Rational;

type IntPoly = Vec<BigInt>;

fn deg(p: &IntPoly) -> usize {
    p.len() - 1
}

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) · a mod b`, exact over ℤ.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = deg(b);
    let lb = &b[db];
    let mut r = a.clone();
    let mut steps = deg(a) + 1 - db;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * bj;
        }
        r = trim(r);
        steps -= 1;
    }
    // remaining powers of lc(b) keep the result a true pseudo-remainder
    let pad = lb.pow(steps as u32);
    r.into_iter().map(|c| c * &pad).collect()
}

fn content(p: &IntPoly) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Splits a nonzero rational polynomial into `scale · primitive` with integer `primitive`.
fn to_int(p: &RatPoly) -> (Rational, IntPoly) {
    let prim = p.primitive_part();
    // p = scale · prim
    let scale = p.leading().unwrap() / prim.leading().unwrap();
    (
        scale,
        prim.coeffs().iter().map(|c| c.to_integer()).collect(),
    )
}

/// Resultant of two nonzero polynomials over ℚ.
///
/// Zero exactly when `p` and `q` share a complex root. Sign convention:
/// `res(p, q) = lc(p)^deg q · Π q(α)` over the roots `α` of `p`.
pub fn resultant(p: &RatPoly, q: &RatPoly) -> Result<Rational> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (sp, mut a) = to_int(p);
    let (sq, mut b) = to_int(q);
    let (da0, db0) = (deg(&a) as u32, deg(&b) as u32);
    // res(c·A, d·B) = c^deg B · d^deg A · res(A, B)
    let outer = num_traits::pow(sp, db0 as usize) * num_traits::pow(sq, da0 as usize);

    let mut sign = BigInt::one();
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign = -sign;
        }
    }
    if deg(&b) == 0 {
        let r = b[0].pow(deg(&a) as u32) * sign;
        return Ok(outer * Rational::from_integer(r));
    }
    let ca = content(&a);
    let cb = content(&b);
    let a_parts: IntPoly = a.iter().map(|c| c / &ca).collect();
    let b_parts: IntPoly = b.iter().map(|c| c / &cb).collect();
    let t = ca.pow(deg(&b) as u32) * cb.pow(deg(&a) as u32);
    let (mut a, mut b) = (a_parts, b_parts);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = deg(&a) - deg(&b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign = -sign;
        }
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return Ok(Rational::zero());
        }
        a = b;
        let divisor = &g * h.pow(delta as u32);
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a[deg(&a)].clone();
        // h ← g^δ / h^(δ-1)
        h = if delta == 0 {
            h
        } else {
            g.pow(delta as u32) / h.pow(delta as u32 - 1)
        };
        if deg(&b) == 0 {
            let da = deg(&a) as u32;
            let lb = b[0].clone();
            // h ← h^(1 - deg a) · lc(b)^deg a
            let hh = lb.pow(da) / h.pow(da - 1);
            let value = Rational::from_integer(sign * t * hh);
            return Ok(outer * value);
        }
    }
}
