use std::fmt;

use serde::{Deserialize, Serialize};

use super::permutation::Permutation;
use crate::error::{Error, Result};

/// An integral vector in `Z^n`, `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(pub Vec<i64>);

/// A composition: an integral vector with nonnegative entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl IntVector {
    pub fn new(v: Vec<i64>) -> Result<IntVector> {
        if v.is_empty() {
            return Err(Error::DimensionError("integral vectors need n >= 1".into()));
        }
        Ok(IntVector(v))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// `v^# = (v_n - 1, v_1, …, v_{n-1})`.
    pub fn sharp(&self) -> IntVector {
        let n = self.n();
        let mut out = Vec::with_capacity(n);
        out.push(self.0[n - 1] - 1);
        out.extend_from_slice(&self.0[..n - 1]);
        IntVector(out)
    }

    /// `-w_o v = (-v_n, …, -v_1)`.
    pub fn neg_reversed(&self) -> IntVector {
        IntVector(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        if parts.is_empty() {
            return Err(Error::DimensionError("compositions need n >= 1".into()));
        }
        Ok(Composition(parts))
    }

    pub fn zero(n: usize) -> Composition {
        Composition(vec![0; n])
    }

    /// From signed entries; any negative entry is a usage error.
    pub fn from_signed(v: &[i64]) -> Result<Composition> {
        if let Some(x) = v.iter().find(|&&x| x < 0) {
            return Err(Error::UsageError(format!(
                "composition entries must be nonnegative, got {x}"
            )));
        }
        Composition::new(v.iter().map(|&x| x as u32).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_int(&self) -> IntVector {
        IntVector(self.0.iter().map(|&x| x as i64).collect())
    }

    /// `α^# = (α_n - 1, α_1, …, α_{n-1})`; requires `α_n > 0`.
    pub fn sharp(&self) -> Option<Composition> {
        let n = self.n();
        let last = self.0[n - 1].checked_sub(1)?;
        let mut out = Vec::with_capacity(n);
        out.push(last);
        out.extend_from_slice(&self.0[..n - 1]);
        Some(Composition(out))
    }

    /// Apply the permutation: `(w·α)_i = α_{w⁻¹(i)}`.
    pub fn permuted(&self, w: &Permutation) -> Composition {
        Composition(w.act(&self.0))
    }

    /// Swap entries `i` and `i + 1` (one-based `i`).
    pub fn swapped(&self, i: usize) -> Composition {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Composition(v)
    }

    /// The dominant rearrangement `α⁺`.
    pub fn dominant(&self) -> Composition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Composition(v)
    }

    /// Distinct rearrangements of the entries, in enumeration order.
    pub fn orbit(&self) -> Vec<Composition> {
        let mut out: Vec<Composition> = Permutation::all(self.n())
            .iter()
            .map(|w| self.permuted(w))
            .collect();
        out.sort_by(grlex_cmp);
        out.dedup();
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Enumeration order: by size, then lexicographically descending.
pub fn grlex_cmp(a: &Composition, b: &Composition) -> std::cmp::Ordering {
    a.size().cmp(&b.size()).then_with(|| b.0.cmp(&a.0))
}

/// All compositions of length `n` with `|β| = d`, first entry descending.
pub fn compositions_of(n: usize, d: u32) -> Vec<Composition> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Composition(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            rec(n, d - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, d, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// All compositions of length `n` with `|β| ≤ d`, in graded-lexicographic order.
pub fn enumerate_compositions(n: usize, d: u32) -> Vec<Composition> {
    (0..=d).flat_map(|k| compositions_of(n, k)).collect()
}

/// Partitions with at most `n` parts (padded to length `n`) of size exactly `d`.
pub fn partitions_of(n: usize, d: u32) -> Vec<Composition> {
    compositions_of(n, d)
        .into_iter()
        .filter(Composition::is_partition)
        .collect()
}

/// Partitions with at most `n` parts and size `≤ d`, graded.
pub fn enumerate_partitions(n: usize, d: u32) -> Vec<Composition> {
    (0..=d).flat_map(|k| partitions_of(n, k)).collect()
}

/// `(v⁺, w_v)`: the dominant rearrangement and the shortest permutation with
/// `v⁺ = w_v⁻¹(v)`. Equal entries never cross.
pub fn dominant_sort(v: &IntVector) -> (IntVector, Permutation) {
    let n = v.n();
    let mut order: Vec<usize> = (0..n).collect();
    // Stable: ties keep their original relative order.
    order.sort_by(|&i, &j| v.0[j].cmp(&v.0[i]));
    let w = Permutation::from_one_line(&order.iter().map(|i| i + 1).collect::<Vec<_>>())
        .expect("argsort is a permutation");
    let plus = IntVector(order.iter().map(|&i| v.0[i]).collect());
    (plus, w)
}

/// The containment order `α ⊆ β`.
pub fn contains(beta: &Composition, alpha: &Composition) -> Result<bool> {
    if beta.n() != alpha.n() {
        return Err(Error::DimensionError(format!(
            "containment of {alpha} in {beta}"
        )));
    }
    let (_, wb) = dominant_sort(&beta.to_int());
    let (_, wa) = dominant_sort(&alpha.to_int());
    let w = wb.compose(&wa.inverse());
    Ok((0..alpha.n()).all(|i| {
        let j = w.apply(i);
        let (a, b) = (alpha.0[i], beta.0[j]);
        if i < j {
            a < b
        } else {
            a <= b
        }
    }))
}
