use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{next_lex, tokenize, CoxeterElement, Kind, MAX_N_A};
use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

/// Descent statistics of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StatRecord {
    pub des: usize,
    pub maj: usize,
    pub odes: usize,
    pub emaj: usize,
    pub pos: usize,
}

impl Permutation {
    /// Builds a permutation from its one-line word, validating bijectivity.
    pub fn new<I>(word: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let word: Vec<i64> = word.into_iter().map(Into::into).collect();
        let n = word.len();
        if n > MAX_N_A {
            return Err(Error::CapExceeded { kind: 'A', n, cap: MAX_N_A });
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v < 1 || v as usize > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if seen[v as usize] {
                return Err(Error::DuplicateValue { value: v });
            }
            seen[v as usize] = true;
        }
        Ok(Self::from_raw(word.into_iter().map(|v| v as u8).collect()))
    }

    pub(crate) fn from_raw(word: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&word));
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_raw((1..=n as u8).collect())
    }

    /// `n ... 3 2 1`.
    pub fn longest(n: usize) -> Self {
        Self::from_raw((1..=n as u8).rev().collect())
    }

    /// The transposition exchanging `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w: Vec<u8> = (1..=n as u8).collect();
        w.swap(i - 1, j - 1);
        Self::from_raw(w)
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(n: usize, i: usize) -> Self {
        Self::transposition(n, i, i + 1)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `σ(k)` for `k` in `[n]`.
    pub fn get(&self, k: usize) -> usize {
        self.word[k - 1] as usize
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (k, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = (k + 1) as u8;
        }
        Self::from_raw(inv)
    }

    /// `σ^{-1}(v)`.
    pub fn position_of(&self, value: usize) -> usize {
        self.word.iter().position(|&x| x as usize == value).expect("value in range") + 1
    }

    /// `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch { left: self.len(), right: other.len() });
        }
        Ok(Self::from_raw(other.word.iter().map(|&k| self.word[k as usize - 1]).collect()))
    }

    /// Right multiplication by the transposition `(i, j)`: swaps positions.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut w = self.word.clone();
        w.swap(i - 1, j - 1);
        Self::from_raw(w)
    }

    /// Left multiplication by the transposition `(a, b)`: swaps values.
    pub fn swap_values(&self, a: usize, b: usize) -> Self {
        let w = self
            .word
            .iter()
            .map(|&x| match x as usize {
                x if x == a => b as u8,
                x if x == b => a as u8,
                _ => x,
            })
            .collect();
        Self::from_raw(w)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Descent positions `{i in [n-1] : σ(i) > σ(i+1)}`, ascending.
    pub fn descent_set(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_descent(&self, i: usize) -> bool {
        self.word[i - 1] > self.word[i]
    }

    pub fn stats(&self) -> StatRecord {
        let d = self.descent_set();
        StatRecord {
            des: d.len(),
            maj: d.iter().sum(),
            odes: d.iter().filter(|&&i| i % 2 == 1).count(),
            emaj: d.iter().filter(|&&i| i % 2 == 0).map(|&i| i / 2).sum(),
            pos: if self.is_empty() { 0 } else { self.position_of(self.len()) },
        }
    }

    /// Position of the largest letter `n`.
    pub fn pos(&self) -> usize {
        self.position_of(self.len())
    }

    /// Every permutation of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut w: Vec<u8> = (1..=n as u8).collect();
        let mut out = Vec::new();
        loop {
            out.push(Self::from_raw(w.clone()));
            if !next_lex(&mut w) {
                break;
            }
        }
        out
    }
}

fn is_bijection(word: &[u8]) -> bool {
    let mut seen = vec![false; word.len() + 1];
    word.iter().all(|&v| {
        let v = v as usize;
        v >= 1 && v <= word.len() && !std::mem::replace(&mut seen[v], true)
    })
}

impl fmt::Display for Permutation {
    /// Compact digits for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for &v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(u8::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(tokenize(s)?)
    }
}

impl CoxeterElement for Permutation {
    const KIND: Kind = Kind::A;

    fn size(&self) -> usize {
        self.len()
    }
    fn identity(n: usize) -> Self {
        Permutation::identity(n)
    }
    fn longest(n: usize) -> Self {
        Permutation::longest(n)
    }
    fn length(&self) -> usize {
        Permutation::length(self)
    }
    fn inverse(&self) -> Self {
        Permutation::inverse(self)
    }
    fn compose(&self, other: &Self) -> Result<Self> {
        Permutation::compose(self, other)
    }
    fn bruhat_leq(&self, other: &Self) -> bool {
        crate::bruhat::bruhat_leq_a(self, other).unwrap_or(false)
    }
    fn all(n: usize) -> Vec<Self> {
        Permutation::all(n)
    }
    fn simple_generators(n: usize) -> Vec<Self> {
        (1..n).map(|i| Permutation::simple(n, i)).collect()
    }
}
