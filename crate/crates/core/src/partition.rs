//! Integer partitions, their cells, hook lengths and contents.
//!
//! A [`Partition`] is an immutable, canonical value: parts are positive and
//! weakly decreasing. The derived order compares the size first and then the
//! parts lexicographically, so sorting a mixed collection is deterministic.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    size: usize,
    parts: Vec<usize>,
}

/// One cell of a Young diagram, with 1-based coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStat {
    pub row: usize,
    pub col: usize,
    pub hook: usize,
    pub content: i64,
}

impl Partition {
    /// Builds a partition from raw parts. Trailing zeros are stripped; any
    /// other non-positive entry or increasing step is rejected.
    pub fn new(parts: &[i64]) -> Result<Self> {
        let mut end = parts.len();
        while end > 0 && parts[end - 1] == 0 {
            end -= 1;
        }
        let parts = &parts[..end];
        for (index, &value) in parts.iter().enumerate() {
            if value <= 0 {
                return Err(Error::NonPositivePart { index, value });
            }
        }
        for (index, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::NotWeaklyDecreasing {
                    index,
                    prev: w[0],
                    next_index: index + 1,
                    next: w[1],
                });
            }
        }
        Ok(Self::from_sorted(
            parts.iter().map(|&p| p as usize).collect(),
        ))
    }

    /// Caller guarantees the parts are positive and weakly decreasing.
    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition {
            size: parts.iter().sum(),
            parts,
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let mut conj = Vec::with_capacity(width);
        for col in 0..width {
            conj.push(self.parts.iter().take_while(|&&p| p > col).count());
        }
        Partition::from_sorted(conj)
    }

    /// Cellwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// All cells in row-major order with their hook lengths and contents.
    pub fn cell_stats(&self) -> Vec<CellStat> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size);
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = conj.parts[c] - r - 1;
                out.push(CellStat {
                    row: r + 1,
                    col: c + 1,
                    hook: arm + leg + 1,
                    content: c as i64 - r as i64,
                });
            }
        }
        out
    }

    pub fn hooks(&self) -> Vec<usize> {
        self.cell_stats().into_iter().map(|c| c.hook).collect()
    }

    pub fn contents(&self) -> Vec<i64> {
        self.cell_stats().into_iter().map(|c| c.content).collect()
    }

    /// Sorted multiset of hook lengths whose residue mod `t` lies in `residues`.
    /// Repeated residues select the class once.
    pub fn hook_multiset_mod(&self, t: usize, residues: &[usize]) -> Result<Vec<usize>> {
        if t == 0 {
            return Err(Error::ZeroModulus);
        }
        if let Some(&residue) = residues.iter().find(|&&r| r >= t) {
            return Err(Error::ResidueOutOfRange { residue, t });
        }
        let mut hooks: Vec<usize> = self
            .hooks()
            .into_iter()
            .filter(|h| residues.contains(&(h % t)))
            .collect();
        hooks.sort_unstable();
        Ok(hooks)
    }

    /// Product of all hook lengths (`1` for the empty partition).
    pub fn hook_product(&self) -> BigUint {
        self.hooks()
            .into_iter()
            .fold(BigUint::one(), |acc, h| acc * BigUint::from(h))
    }

    /// First cell (row-major) whose hook is divisible by `t`.
    pub fn hook_divisible_by(&self, t: usize) -> Option<CellStat> {
        self.cell_stats().into_iter().find(|c| c.hook % t == 0)
    }

    pub fn is_t_core(&self, t: usize) -> bool {
        t > 0 && self.hook_divisible_by(t).is_none()
    }

    /// Error naming an offending hook when `self` is not a `t`-core.
    pub fn check_t_core(&self, t: usize) -> Result<()> {
        if t == 0 {
            return Err(Error::ZeroModulus);
        }
        match self.hook_divisible_by(t) {
            None => Ok(()),
            Some(cell) => Err(Error::NotTCore {
                partition: self.to_string(),
                t,
                hook: cell.hook,
                row: cell.row,
                col: cell.col,
            }),
        }
    }

    /// Rows (0-based) whose last cell can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .collect()
    }

    /// Rows (0-based) where a cell can be added; the last entry is a new row.
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&r| r == 0 || self.part(r) < self.part(r - 1))
            .collect()
    }

    pub(crate) fn with_box_removed(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Partition::from_sorted(parts)
    }

    pub(crate) fn with_box_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition::from_sorted(parts)
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParsePartition(s.to_string()))?;
        Partition::new(&parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Iterator over the partitions of `n` in reverse lexicographic order:
/// `(n)` first, `(1,…,1)` last.
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let mut parts = current.clone();
        // Find the last part larger than one, decrement it and refill the tail
        // greedily with parts no larger than it.
        let mut ones = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        if let Some(last) = parts.pop() {
            let cap = last - 1;
            let mut rest = ones + 1;
            parts.push(cap);
            while rest > 0 {
                let p = rest.min(cap);
                parts.push(p);
                rest -= p;
            }
            self.next = Some(parts);
        }
        Some(Partition::from_sorted(current))
    }
}

/// All partitions of size at most `max_size`, smallest sizes first.
pub fn partitions_up_to(max_size: usize) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(enumerate_partitions)
}

/// Counts standard Young tableaux of the skew shape `outer / inner` by
/// removing outer corners one at a time, memoized on the current outer shape.
pub fn syt_count_oracle(outer: &Partition, inner: &Partition) -> Result<BigUint> {
    if !outer.contains(inner) {
        return Err(Error::NotContained {
            inner: inner.to_string(),
            outer: outer.to_string(),
        });
    }
    let mut memo = HashMap::new();
    Ok(skew_count(outer, inner, &mut memo))
}

pub(crate) fn skew_count(
    outer: &Partition,
    inner: &Partition,
    memo: &mut HashMap<Partition, BigUint>,
) -> BigUint {
    if outer.size() == inner.size() {
        return BigUint::one();
    }
    if let Some(v) = memo.get(outer) {
        return v.clone();
    }
    let mut total = BigUint::default();
    for row in outer.removable_rows() {
        if outer.part(row) > inner.part(row) {
            total += skew_count(&outer.with_box_removed(row), inner, memo);
        }
    }
    memo.insert(outer.clone(), total.clone());
    total
}
