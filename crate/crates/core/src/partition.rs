//! Integer partitions and r-multipartitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Zero parts are never
/// stored, so the empty sequence is the unique partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// The `i`-th part (1-based), zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Nodes `(row, column)` of the Young diagram, 1-based.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(x, &len)| (1..=len as usize).map(move |y| (x + 1, y)))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }
}

fn fill(rest: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p as u32);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Number of partitions of each integer `0..=n`.
pub fn partition_counts(n: usize) -> Vec<u128> {
    let mut counts = vec![0u128; n + 1];
    counts[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            counts[total] += counts[total - part];
        }
    }
    counts
}

/// Number of r-multipartitions of `n`.
pub fn multipartition_count(n: usize, r: usize) -> u128 {
    let p = partition_counts(n);
    let mut acc = vec![0u128; n + 1];
    acc[0] = 1;
    for _ in 0..r {
        let mut next = vec![0u128; n + 1];
        for (i, &a) in acc.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for j in 0..=n - i {
                next[i + j] += a * p[j];
            }
        }
        acc = next;
    }
    acc[n]
}

/// All r-multipartitions of `n`.
pub fn multipartitions(n: usize, r: usize) -> Vec<Vec<Partition>> {
    let tables: Vec<Vec<Partition>> = (0..=n).map(Partition::all).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    multi_fill(n, r, &tables, &mut cur, &mut out);
    out
}

fn multi_fill(
    rest: usize,
    r: usize,
    tables: &[Vec<Partition>],
    cur: &mut Vec<Partition>,
    out: &mut Vec<Vec<Partition>>,
) {
    if cur.len() + 1 == r {
        for p in &tables[rest] {
            cur.push(p.clone());
            out.push(cur.clone());
            cur.pop();
        }
        return;
    }
    if r == 0 {
        if rest == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for size in (0..=rest).rev() {
        for p in &tables[size] {
            cur.push(p.clone());
            multi_fill(rest - size, r, tables, cur, out);
            cur.pop();
        }
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Comma-separated parts; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Exponent notation, e.g. `(4,2^3)`; `∅` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            if !first {
                write!(f, ",")?;
            }
            first = false;
            match j - i {
                1 => write!(f, "{}", self.0[i])?,
                k => write!(f, "{}^{}", self.0[i], k)?,
            }
            i = j;
        }
        write!(f, ")")
    }
}
