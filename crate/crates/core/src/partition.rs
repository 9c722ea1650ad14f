//! Integer partitions and Young-diagram combinatorics.
//!
//! A [`Partition`] is stored without trailing zeros, so two partitions are equal
//! exactly when their diagrams are. The strip operations implement the Pieri
//! relation: `mu` is obtained from `lambda` by adding a horizontal strip of size
//! `r` iff `lambda <= mu`, `|mu| = |lambda| + r` and `mu[i+1] <= lambda[i]`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates and canonicalizes a raw sequence: trailing zeros are dropped,
    /// negative entries and increasing adjacent pairs are rejected.
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.iter().any(|&p| p < 0) || raw.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(raw.to_vec()));
        }
        let parts = raw
            .iter()
            .take_while(|&&p| p > 0)
            .map(|&p| u32::try_from(p).map_err(|_| Error::InvalidPartition(raw.to_vec())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { parts })
    }

    /// Builds a partition from parts already known to be non-increasing.
    /// Zeros are stripped.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of non-zero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Part `i` (0-based); zero past the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `sum (i-1) * lambda_i` over 1-based rows.
    pub fn epsilon(&self) -> u32 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u32 * p)
            .sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Hook lengths in row-major box order.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - j as u32 - 1;
                let leg = conj.parts[j] - i as u32 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Prepends a first row of length `first`, which must be at least the
    /// current first part.
    pub fn with_first_row(&self, first: u32) -> Option<Partition> {
        if first < self.first() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(first);
        parts.extend_from_slice(&self.parts);
        Some(Partition::from_sorted(parts))
    }

    /// Drops the first row.
    pub fn without_first_row(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// All `mu` with `mu ~ self + r`, lexicographically decreasing.
    pub fn add_horizontal_strip(&self, r: u32) -> Vec<Partition> {
        let rows = self.len() + 1;
        let mut out = Vec::new();
        let mut current = vec![0u32; rows];
        add_strip_rec(self, 0, r, &mut current, &mut out);
        out
    }

    /// All `lambda` with `lambda ~ self - r`, lexicographically decreasing.
    /// Empty when `r > |self|` or the boxes cannot be taken from distinct columns.
    pub fn remove_horizontal_strip(&self, r: u32) -> Vec<Partition> {
        if r > self.size() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current = vec![0u32; self.len()];
        remove_strip_rec(self, 0, r, &mut current, &mut out);
        out
    }
}

// Rows are filled top-down, each row taking as many boxes as possible first,
// which produces the output already in lexicographically decreasing order.
fn add_strip_rec(
    base: &Partition,
    row: usize,
    remaining: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if row == current.len() {
        if remaining == 0 {
            out.push(Partition::from_sorted(current.clone()));
        }
        return;
    }
    let lo = base.part(row);
    let hi = if row == 0 {
        lo + remaining
    } else {
        (lo + remaining).min(base.part(row - 1))
    };
    for value in (lo..=hi).rev() {
        current[row] = value;
        add_strip_rec(base, row + 1, remaining - (value - lo), current, out);
    }
}

fn remove_strip_rec(
    base: &Partition,
    row: usize,
    remaining: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if row == current.len() {
        if remaining == 0 {
            out.push(Partition::from_sorted(current.clone()));
        }
        return;
    }
    let top = base.part(row);
    let floor = base.part(row + 1);
    let lo = floor.max(top.saturating_sub(remaining));
    for value in (lo..=top).rev() {
        current[row] = value;
        remove_strip_rec(base, row + 1, remaining - (top - value), current, out);
    }
}

/// All partitions of `n`, lexicographically decreasing.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted(current.clone()));
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, by size then lexicographically decreasing.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must look like [3,1]: {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let raw = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad partition entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&raw)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<i64>::deserialize(deserializer)?;
        Partition::new(&raw).map_err(serde::de::Error::custom)
    }
}
