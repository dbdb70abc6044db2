//! Exact Wronskian determinants of orthogonal polynomial sequences.
//!
//! Column `c` of the Wronskian matrix is the `c`-th listed polynomial and row
//! `r` holds `r`-th derivatives, so the sign follows the listed column order.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::partition::{partition_from_multiindex, MultiIndex, Partition};
use crate::polyalg::{gcd, RatPoly};

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_determinant(m: &[Vec<RatPoly>]) -> RatPoly {
    let n = m.len();
    match n {
        0 => RatPoly::one(),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = RatPoly::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<RatPoly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][c] * &cofactor_determinant(&minor);
                acc = if c % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

/// Fraction-free (Bareiss) elimination over ℚ[x].
///
/// Every division by the previous pivot is exact; a zero pivot is replaced by
/// swapping in a lower row, flipping the sign.
pub fn bareiss_determinant(mut m: Vec<Vec<RatPoly>>) -> Result<RatPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(RatPoly::one());
    }
    let mut negate = false;
    let mut prev = RatPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(RatPoly::zero());
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Determinant of a square polynomial matrix: cofactors for `n ≤ 3`, Bareiss beyond.
pub fn determinant(m: Vec<Vec<RatPoly>>) -> Result<RatPoly> {
    if m.len() <= 3 {
        Ok(cofactor_determinant(&m))
    } else {
        bareiss_determinant(m)
    }
}

/// `Wr[f_1, …, f_n]` with columns in the given order.
pub fn wronskian(polys: &[RatPoly]) -> Result<RatPoly> {
    let n = polys.len();
    let m = (0..n)
        .map(|r| polys.iter().map(|p| p.derivative(r)).collect())
        .collect();
    determinant(m)
}

/// A Wronskian together with the family and partition it came from.
#[derive(Clone, Debug, Serialize)]
pub struct WronskianResult {
    pub poly: RatPoly,
    #[serde(skip)]
    pub family: Family,
    /// Partition of the (sorted) selected degrees.
    pub partition: Partition,
    /// Degrees in column order; differs from the sorted multi-index only after `append_index`.
    pub columns: Vec<usize>,
}

impl WronskianResult {
    pub fn crum_term(&self) -> Result<(RatPoly, RatPoly)> {
        crum_term(&self.poly)
    }
}

/// Per-family Wronskian evaluator with a shared derivative cache.
///
/// The cache is an insert-only map keyed by `(degree, order)`, so one engine
/// can serve many worker threads.
#[derive(Debug)]
pub struct WronskianEngine {
    family: Family,
    cache: RwLock<HashMap<(usize, usize), Arc<RatPoly>>>,
}

impl WronskianEngine {
    pub fn new(family: Family) -> Self {
        Self {
            family,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// `order`-th derivative of the degree-`k` family member.
    pub fn derivative(&self, k: usize, order: usize) -> Result<Arc<RatPoly>> {
        if let Some(p) = self.cache.read().unwrap().get(&(k, order)) {
            return Ok(Arc::clone(p));
        }
        let p = if order == 0 {
            self.family.poly(k)?
        } else {
            self.derivative(k, order - 1)?.derivative(1)
        };
        let mut cache = self.cache.write().unwrap();
        Ok(Arc::clone(
            cache.entry((k, order)).or_insert_with(|| Arc::new(p)),
        ))
    }

    /// Wronskian of the family members with the listed degrees, in that column order.
    pub fn wronskian_of(&self, degrees: &[usize]) -> Result<RatPoly> {
        let n = degrees.len();
        let mut m = Vec::with_capacity(n);
        for r in 0..n {
            let row = degrees
                .iter()
                .map(|&k| self.derivative(k, r).map(|p| (*p).clone()))
                .collect::<Result<Vec<_>>>()?;
            m.push(row);
        }
        determinant(m)
    }

    fn result(&self, columns: Vec<usize>) -> Result<WronskianResult> {
        let mut sorted = columns.clone();
        sorted.sort_unstable();
        let partition = partition_from_multiindex(&MultiIndex::new(sorted)?)?;
        let poly = self.wronskian_of(&columns)?;
        // leading coefficient is a nonzero Vandermonde product times the leading coefficients
        assert_eq!(
            poly.degree(),
            Some(partition.weight()),
            "Wronskian degree must equal |λ| for {partition}"
        );
        Ok(WronskianResult {
            poly,
            family: self.family.clone(),
            partition,
            columns,
        })
    }

    pub fn wronskian_det(&self, lam: &Partition) -> Result<WronskianResult> {
        self.result(lam.to_multi_index().indices().to_vec())
    }

    /// `Wr[f_{k_1}, …, f_{k_ℓ}, f_m]` with `f_m` as the last column.
    pub fn append_index(&self, lam: &Partition, m: usize) -> Result<WronskianResult> {
        let k = lam.to_multi_index();
        if k.contains(m) {
            return Err(Error::DuplicateIndex(m));
        }
        let mut columns = k.indices().to_vec();
        columns.push(m);
        self.result(columns)
    }
}

/// `Wr[P_{k_1}, …, P_{k_ℓ}]` for the multi-index of `lam`.
pub fn wronskian_det(fam: &Family, lam: &Partition) -> Result<WronskianResult> {
    WronskianEngine::new(fam.clone()).wronskian_det(lam)
}

pub fn append_index(fam: &Family, lam: &Partition, m: usize) -> Result<WronskianResult> {
    WronskianEngine::new(fam.clone()).append_index(lam, m)
}

/// `-2 (log W)''` as a reduced fraction `(numerator, denominator)`.
///
/// `-2 (W''W - W'^2) / W^2` with the common factor cancelled and the
/// denominator made monic.
pub fn crum_term(w: &RatPoly) -> Result<(RatPoly, RatPoly)> {
    if w.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d1 = w.derivative(1);
    let num = (&(&w.derivative(2) * w) - &(&d1 * &d1)).scale(&crate::rational::int(-2));
    let den = w * w;
    if num.is_zero() {
        return Ok((RatPoly::zero(), RatPoly::one()));
    }
    let g = gcd(&num, &den)?;
    let num = num.exact_div(&g)?;
    let den = den.exact_div(&g)?;
    let lead = den.leading().expect("nonzero").recip();
    Ok((num.scale(&lead), den.scale(&lead)))
}
