//! Classical orthogonal polynomials and orthogonal polynomials of a moment functional.
//!
//! Normalizations: physicists' Hermite (`H_n = 2^n x^n + …`), Laguerre with
//! `L_n^(α)(0) = binom(n+α, n)`, Jacobi with `P_n^(α,β)(1) = binom(n+α, n)`.
//! Moment families are monic.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polyalg::{Interval, RatPoly};
use crate::rational::{format_rational, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Hermite,
    Laguerre { alpha: Rational },
    Jacobi { alpha: Rational, beta: Rational },
    FromMoments { moments: Vec<Rational> },
}

/// An orthogonal polynomial family together with its orthogonality interval.
#[derive(Clone, Debug)]
pub struct Family {
    kind: FamilyKind,
    interval: Interval,
    /// Monic orthogonal polynomials for moment families, degrees 0..=N.
    moment_polys: Option<Arc<Vec<RatPoly>>>,
}

impl PartialEq for Family {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.interval == other.interval
    }
}

fn check_parameter(name: &'static str, value: &Rational) -> Result<()> {
    if *value <= -Rational::one() {
        return Err(Error::ParameterOutOfRange {
            name,
            value: format_rational(value),
        });
    }
    Ok(())
}

impl Family {
    pub fn hermite() -> Self {
        Self {
            kind: FamilyKind::Hermite,
            interval: Interval::real_line(),
            moment_polys: None,
        }
    }

    pub fn laguerre(alpha: Rational) -> Result<Self> {
        check_parameter("alpha", &alpha)?;
        Ok(Self {
            kind: FamilyKind::Laguerre { alpha },
            interval: Interval::positive_half_line(),
            moment_polys: None,
        })
    }

    pub fn jacobi(alpha: Rational, beta: Rational) -> Result<Self> {
        check_parameter("alpha", &alpha)?;
        check_parameter("beta", &beta)?;
        Ok(Self {
            kind: FamilyKind::Jacobi { alpha, beta },
            interval: Interval::symmetric_unit(),
            moment_polys: None,
        })
    }

    /// Orthogonal polynomials of the functional `x^k ↦ moments[k]`, supported on `support`.
    ///
    /// Builds every degree the moments determine (`moments.len() / 2`) and fails
    /// if a Hankel determinant along the way is not positive.
    pub fn from_moments(moments: Vec<Rational>, support: Interval) -> Result<Self> {
        let max_degree = moments.len() / 2;
        let polys = orthogonal_from_moments(&moments, max_degree)?;
        Ok(Self {
            kind: FamilyKind::FromMoments { moments },
            interval: support,
            moment_polys: Some(Arc::new(polys)),
        })
    }

    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    /// Even weight on a symmetric interval: Hermite, and Jacobi with α = β.
    pub fn is_symmetric(&self) -> bool {
        match &self.kind {
            FamilyKind::Hermite => true,
            FamilyKind::Jacobi { alpha, beta } => alpha == beta,
            _ => false,
        }
    }

    pub fn is_classical(&self) -> bool {
        !matches!(self.kind, FamilyKind::FromMoments { .. })
    }

    /// Largest degree available, `None` when unbounded.
    pub fn max_degree(&self) -> Option<usize> {
        self.moment_polys.as_ref().map(|p| p.len() - 1)
    }

    /// The degree-`n` member of the family.
    pub fn poly(&self, n: usize) -> Result<RatPoly> {
        match &self.moment_polys {
            Some(polys) => polys.get(n).cloned().ok_or(Error::InsufficientMoments {
                degree: n,
                needed: 2 * n,
                available: match &self.kind {
                    FamilyKind::FromMoments { moments } => moments.len(),
                    _ => 0,
                },
            }),
            None => classical_poly(self, n),
        }
    }

    /// Short machine-friendly name, e.g. `laguerre(alpha=1/2)`.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FamilyKind::Hermite => f.write_str("hermite"),
            FamilyKind::Laguerre { alpha } => {
                write!(f, "laguerre(alpha={})", format_rational(alpha))
            }
            FamilyKind::Jacobi { alpha, beta } => write!(
                f,
                "jacobi(alpha={},beta={})",
                format_rational(alpha),
                format_rational(beta)
            ),
            FamilyKind::FromMoments { moments } => {
                write!(f, "moments(n={},support={})", moments.len(), self.interval)
            }
        }
    }
}

/// Degree-`n` classical orthogonal polynomial by its three-term recurrence.
pub fn classical_poly(fam: &Family, n: usize) -> Result<RatPoly> {
    match &fam.kind {
        FamilyKind::Hermite => Ok(hermite(n)),
        FamilyKind::Laguerre { alpha } => {
            check_parameter("alpha", alpha)?;
            Ok(laguerre(n, alpha))
        }
        FamilyKind::Jacobi { alpha, beta } => {
            check_parameter("alpha", alpha)?;
            check_parameter("beta", beta)?;
            Ok(jacobi(n, alpha, beta))
        }
        FamilyKind::FromMoments { .. } => {
            Err(Error::Unsupported("classical_poly", "classical families"))
        }
    }
}

fn run_recurrence(
    n: usize,
    p0: RatPoly,
    p1: RatPoly,
    mut step: impl FnMut(usize, &RatPoly, &RatPoly) -> RatPoly,
) -> RatPoly {
    if n == 0 {
        return p0;
    }
    let (mut prev, mut cur) = (p0, p1);
    for k in 1..n {
        let next = step(k, &cur, &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `H_{k+1} = 2x H_k − 2k H_{k−1}`
fn hermite(n: usize) -> RatPoly {
    let two_x = RatPoly::from_ints(&[0, 2]);
    run_recurrence(n, RatPoly::one(), two_x.clone(), |k, cur, prev| {
        &(&two_x * cur) - &prev.scale(&int(2 * k as i64))
    })
}

/// `(k+1) L_{k+1} = (2k+1+α−x) L_k − (k+α) L_{k−1}`
fn laguerre(n: usize, alpha: &Rational) -> RatPoly {
    let p1 = RatPoly::new(vec![alpha + int(1), int(-1)]);
    run_recurrence(n, RatPoly::one(), p1, |k, cur, prev| {
        let k_r = int(k as i64);
        let lin = RatPoly::new(vec![int(2 * k as i64 + 1) + alpha, int(-1)]);
        let num = &(&lin * cur) - &prev.scale(&(&k_r + alpha));
        num.scale(&(k_r + int(1)).recip())
    })
}

/// Standard Jacobi recurrence
/// `2(k+1)(k+s+1)(2k+s) P_{k+1} = (2k+s+1)[(2k+s+2)(2k+s) x + α²−β²] P_k − 2(k+α)(k+β)(2k+s+2) P_{k−1}`
/// with `s = α + β`.
fn jacobi(n: usize, alpha: &Rational, beta: &Rational) -> RatPoly {
    let s = alpha + beta;
    let two = int(2);
    // P_1 = (α+1) + (s+2)(x−1)/2
    let half_s2 = (&s + &two) / &two;
    let p1 = RatPoly::new(vec![alpha + int(1) - &half_s2, half_s2]);
    run_recurrence(n, RatPoly::one(), p1, |k, cur, prev| {
        let k = int(k as i64);
        let c = &two * &k + &s;
        let lead = &two * (&k + int(1)) * (&k + &s + int(1)) * &c;
        let lin = RatPoly::new(vec![
            (&c + int(1)) * (alpha * alpha - beta * beta),
            (&c + int(1)) * (&c + &two) * &c,
        ]);
        let back = &two * (&k + alpha) * (&k + beta) * (&c + &two);
        (&(&lin * cur) - &prev.scale(&back)).scale(&lead.recip())
    })
}

/// Applies the moment functional `x^k ↦ moments[k]`.
fn functional(moments: &[Rational], p: &RatPoly) -> Result<Rational> {
    if let Some(deg) = p.degree() {
        if deg >= moments.len() {
            return Err(Error::InsufficientMoments {
                degree: deg.div_ceil(2),
                needed: deg + 1,
                available: moments.len(),
            });
        }
    }
    Ok(p.coeffs()
        .iter()
        .zip(moments)
        .fold(Rational::zero(), |acc, (c, m)| acc + c * m))
}

/// Monic orthogonal polynomials of degrees `0..=max_degree` by the Stieltjes recurrence.
///
/// Uses moments `m_0..m_{2n−1}`; `⟨P_k, P_k⟩ = Δ_{k+1}/Δ_k` is required to be positive
/// for every `k` whose norm the supplied moments determine.
fn orthogonal_from_moments(moments: &[Rational], max_degree: usize) -> Result<Vec<RatPoly>> {
    let x = RatPoly::x();
    let mut polys = vec![RatPoly::one()];
    let mut norms: Vec<Rational> = Vec::new();
    for k in 0..=max_degree {
        let pk = &polys[k];
        let sq = pk * pk;
        if sq.degree().unwrap_or(0) < moments.len() {
            let norm = functional(moments, &sq)?;
            if !norm.is_positive() {
                return Err(Error::MomentsNotPositiveDefinite { order: k + 1 });
            }
            norms.push(norm);
        } else if k < max_degree {
            return Err(Error::InsufficientMoments {
                degree: max_degree,
                needed: 2 * max_degree,
                available: moments.len(),
            });
        }
        if k == max_degree {
            break;
        }
        let a = functional(moments, &(&x * &sq))? / &norms[k];
        let mut next = &(&x - &RatPoly::constant(a)) * pk;
        if k > 0 {
            let b = &norms[k] / &norms[k - 1];
            next = &next - &polys[k - 1].scale(&b);
        }
        polys.push(next);
    }
    Ok(polys)
}

/// Monic degree-`n` orthogonal polynomial of the moment functional.
pub fn from_moments(moments: &[Rational], n: usize) -> Result<RatPoly> {
    if moments.len() < 2 * n {
        return Err(Error::InsufficientMoments {
            degree: n,
            needed: 2 * n,
            available: moments.len(),
        });
    }
    let mut polys = orthogonal_from_moments(moments, n)?;
    Ok(polys.swap_remove(n))
}

/// Moments `1/(k+1)` of Lebesgue measure on `[0, 1]` (shifted Legendre).
pub fn shifted_legendre_moments(count: usize) -> Vec<Rational> {
    (0..count)
        .map(|k| Rational::new(1.into(), (k as i64 + 1).into()))
        .collect()
}
