use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation.
///
/// Internally zero-based; serialized one-based. Acting on a vector moves the
/// value at position `i` to position `w(i)`: `(w·v)_i = v_{w⁻¹(i)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n).collect())
    }

    /// The simple transposition `s_i` exchanging `i` and `i + 1` (one-based `i`).
    pub fn simple(i: usize, n: usize) -> Result<Permutation> {
        if i == 0 || i >= n {
            return Err(Error::IndexError(format!("s_{i} in S_{n}")));
        }
        let mut w = Permutation::identity(n);
        w.0.swap(i - 1, i);
        Ok(w)
    }

    /// The longest element `w_o`, `i -> n + 1 - i`.
    pub fn longest(n: usize) -> Permutation {
        Permutation((0..n).rev().collect())
    }

    /// From one-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
            out.push(x - 1);
        }
        Ok(Permutation(out))
    }

    /// One-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Zero-based image of zero-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different size");
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// A reduced word `[i_1, …, i_k]` (one-based) with `w = s_{i_1} ⋯ s_{i_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        // Strip right descents: w(i) > w(i+1) means w = (w s_i) s_i with shorter w s_i.
        while let Some(i) = (0..w.n().saturating_sub(1)).find(|&i| w.0[i] > w.0[i + 1]) {
            w.0.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    /// `(w·v)_i = v_{w⁻¹(i)}`.
    pub fn act<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.n(), "permutation and vector size differ");
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.0[i]] = x.clone();
        }
        out
    }

    /// All permutations of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation(prefix.clone()));
                return;
            }
            for x in 0..used.len() {
                if !used[x] {
                    used[x] = true;
                    prefix.push(x);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[x] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Permutation::from_one_line(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_convention() {
        let w = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        // value at position 1 moves to position 2, etc.
        assert_eq!(w.act(&['a', 'b', 'c']), vec!['c', 'a', 'b']);
    }

    #[test]
    fn action_is_left_action() {
        for u in Permutation::all(3) {
            for w in Permutation::all(3) {
                let v = [10, 20, 30];
                assert_eq!(u.compose(&w).act(&v), u.act(&w.act(&v)));
            }
        }
    }

    #[test]
    fn reduced_words_multiply_back() {
        for w in Permutation::all(4) {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            let prod = word.iter().fold(Permutation::identity(4), |acc, &i| {
                acc.compose(&Permutation::simple(i, 4).unwrap())
            });
            assert_eq!(prod, w);
        }
    }

    #[test]
    fn longest_element() {
        let wo = Permutation::longest(3);
        assert_eq!(wo.length(), 3);
        assert_eq!(wo.compose(&wo), Permutation::identity(3));
        assert_eq!(Permutation::longest(2), Permutation::simple(1, 2).unwrap());
    }

    #[test]
    fn simple_out_of_range() {
        assert!(Permutation::simple(0, 3).is_err());
        assert!(Permutation::simple(3, 3).is_err());
    }
}
