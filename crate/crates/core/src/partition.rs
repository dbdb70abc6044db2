//! Partitions and the multi-indices they encode.
//!
//! A partition is stored nondecreasing, `λ_1 ≤ … ≤ λ_ℓ`, and selects the
//! degrees `k_j = λ_j + j − 1` (1-based `j`). Leading zeros are meaningful:
//! `(0, 1)` selects degrees `(0, 2)` while `(1)` selects `(1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotNondecreasing(parts));
        }
        Ok(Self { parts })
    }

    /// `(n, n, …, n)` with `len` copies.
    pub fn constant(n: usize, len: usize) -> Result<Self> {
        Self::new(vec![n; len])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Parts with the leading zeros trimmed (possibly empty).
    pub fn normalized(&self) -> &[usize] {
        let zeros = self.parts.iter().take_while(|&&p| p == 0).count();
        &self.parts[zeros..]
    }

    /// `ℓ`
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn to_multi_index(&self) -> MultiIndex {
        multiindex_from_partition(self)
    }

    /// Ordering used for sweep output: weight, then length, then lexicographic.
    pub fn sweep_key(&self) -> (usize, usize, &[usize]) {
        (self.weight(), self.len(), &self.parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

/// Parses `"a,b,c"` (optionally parenthesised) into nonnegative integers.
pub fn parse_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Err(Error::EmptyPartition);
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("{t:?} is not a nonnegative integer")))
        })
        .collect()
}

/// Accepts `"λ1,λ2,…"` (nondecreasing) or `"k=k1,k2,…"` (strictly increasing degrees).
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.strip_prefix("k=") {
            Some(rest) => partition_from_multiindex(&MultiIndex::new(parse_list(rest)?)?),
            None => Self::new(parse_list(s)?),
        }
    }
}

/// Strictly increasing degrees `k_1 < … < k_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MultiIndex {
    indices: Vec<usize>,
}

impl MultiIndex {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing(indices));
        }
        Ok(Self { indices })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.indices.binary_search(&k).is_ok()
    }

    /// The `count` smallest nonnegative integers not in the multi-index.
    pub fn smallest_absent(&self, count: usize) -> Vec<usize> {
        (0..).filter(|k| !self.contains(*k)).take(count).collect()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.indices))
    }
}

/// `k_j = λ_j + j − 1`
pub fn multiindex_from_partition(lam: &Partition) -> MultiIndex {
    MultiIndex {
        indices: lam.parts.iter().enumerate().map(|(j, l)| l + j).collect(),
    }
}

/// `λ_j = k_j − j + 1`
pub fn partition_from_multiindex(k: &MultiIndex) -> Result<Partition> {
    if k.indices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotStrictlyIncreasing(k.indices.clone()));
    }
    Ok(Partition {
        parts: k.indices.iter().enumerate().map(|(j, kj)| kj - j).collect(),
    })
}

/// Transpose of the Young diagram, returned nondecreasing.
///
/// The empty diagram (all parts zero) conjugates to `(0)`.
pub fn conjugate(lam: &Partition) -> Partition {
    let max = lam.parts.last().copied().unwrap_or(0);
    // column c (1-based) has one box per part ≥ c; lengths shrink as c grows
    let mut cols: Vec<usize> = (1..=max)
        .map(|c| lam.parts.iter().filter(|&&p| p >= c).count())
        .collect();
    cols.reverse();
    if cols.is_empty() {
        cols.push(0);
    }
    Partition { parts: cols }
}

/// `(μ_1, μ_1, μ_2, μ_2, …)` for strictly increasing positive `μ`.
pub fn doubled_partition(mu: &[usize]) -> Result<Partition> {
    check_mu(mu)?;
    Partition::new(mu.iter().flat_map(|&m| [m, m]).collect())
}

fn check_mu(mu: &[usize]) -> Result<()> {
    if mu.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if mu[0] == 0 || mu.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotStrictlyIncreasing(mu.to_vec()));
    }
    Ok(())
}

/// Conjugate of the doubled partition `(μ_1², …, μ_n²)` in closed form:
/// `(2^{μ_n−μ_{n−1}}, 4^{μ_{n−1}−μ_{n−2}}, …, (2n)^{μ_1})`.
pub fn doubled_conjugate(mu: &[usize]) -> Result<Partition> {
    check_mu(mu)?;
    let n = mu.len();
    let mut parts = Vec::with_capacity(mu[n - 1]);
    for i in (0..n).rev() {
        let below = if i == 0 { 0 } else { mu[i - 1] };
        let value = 2 * (n - i);
        parts.extend(std::iter::repeat_n(value, mu[i] - below));
    }
    Partition::new(parts)
}

/// `d_λ = p − q`: odd minus even entries of the multi-index.
pub fn d_lambda(lam: &Partition) -> i64 {
    multiindex_from_partition(lam)
        .indices
        .iter()
        .map(|k| if k % 2 == 1 { 1 } else { -1 })
        .sum()
}

/// All partitions with weight ≤ `max_weight` and length ≤ `max_length`,
/// ordered by weight, then length, then lexicographically.
pub fn enumerate_partitions(max_weight: usize, max_length: usize) -> Vec<Partition> {
    fn fill(
        weight: usize,
        len: usize,
        min: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if len == 0 {
            if weight == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
            }
            return;
        }
        // remaining parts are all ≥ first, so first ≤ weight / len
        for first in min..=weight / len {
            prefix.push(first);
            fill(weight - first, len - 1, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for w in 0..=max_weight {
        for len in 1..=max_length {
            fill(w, len, 0, &mut Vec::with_capacity(len), &mut out);
        }
    }
    out
}

/// All multi-indices with entries ≤ `max_index` and length in `1..=max_length`,
/// ordered by length then lexicographically.
pub fn enumerate_multi_indices(max_index: usize, max_length: usize) -> Vec<MultiIndex> {
    fn fill(
        start: usize,
        max: usize,
        len: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<MultiIndex>,
    ) {
        if len == 0 {
            out.push(MultiIndex {
                indices: prefix.clone(),
            });
            return;
        }
        for k in start..=max {
            prefix.push(k);
            fill(k + 1, max, len - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for len in 1..=max_length {
        fill(0, max_index, len, &mut Vec::new(), &mut out);
    }
    out
}

/// Strictly increasing positive sequences with sum ≤ `max_sum`.
pub fn enumerate_strict_sequences(max_sum: usize) -> Vec<Vec<usize>> {
    fn fill(start: usize, budget: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for m in start..=budget {
            prefix.push(m);
            out.push(prefix.clone());
            fill(m + 1, budget - m, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(1, max_sum, &mut Vec::new(), &mut out);
    out
}
