use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{next_lex, tokenize, CoxeterElement, Kind, Permutation, MAX_N_B};
use crate::error::{Error, Result};

/// An element of `B_n` in window notation `[σ(1), ..., σ(n)]`.
///
/// The full map on `[±n]` is implied by `σ(-i) = -σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i8>,
}

/// The three summands of the type B length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LengthB {
    pub inv: usize,
    pub neg: usize,
    pub nsp: usize,
}

impl LengthB {
    pub fn total(&self) -> usize {
        self.inv + self.neg + self.nsp
    }
}

impl SignedPermutation {
    pub fn new<I>(window: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<i64>,
    {
        let window: Vec<i64> = window.into_iter().map(Into::into).collect();
        let n = window.len();
        if n > MAX_N_B {
            return Err(Error::CapExceeded { kind: 'B', n, cap: MAX_N_B });
        }
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if seen[a] {
                return Err(Error::DuplicateValue { value: a as i64 });
            }
            seen[a] = true;
        }
        Ok(Self::from_raw(window.into_iter().map(|v| v as i8).collect()))
    }

    pub(crate) fn from_raw(window: Vec<i8>) -> Self {
        SignedPermutation { window }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_raw((1..=n as i8).collect())
    }

    /// `[-1, -2, ..., -n]`.
    pub fn longest(n: usize) -> Self {
        Self::from_raw((1..=n as i8).map(|v| -v).collect())
    }

    /// Embeds an ordinary permutation (all signs positive).
    pub fn from_permutation(p: &Permutation) -> Self {
        Self::from_raw(p.word().iter().map(|&v| v as i8).collect())
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    pub fn window(&self) -> &[i8] {
        &self.window
    }

    /// `σ(k)` for `k` in `[±n]`.
    pub fn get(&self, k: i64) -> i64 {
        debug_assert!(k != 0);
        if k > 0 {
            self.window[k as usize - 1] as i64
        } else {
            -(self.window[(-k) as usize - 1] as i64)
        }
    }

    /// `σ^{-1}(v)` as a signed position in `[±n]`.
    pub fn position_of(&self, value: i64) -> i64 {
        let a = value.unsigned_abs() as usize;
        let k = self.window.iter().position(|&x| x.unsigned_abs() as usize == a).expect("in range");
        let k = (k + 1) as i64;
        if self.window[k as usize - 1] as i64 == value {
            k
        } else {
            -k
        }
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &v)| v as usize == k + 1 && v > 0)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0i8; self.len()];
        for (k, &v) in self.window.iter().enumerate() {
            let pos = (k + 1) as i8;
            inv[v.unsigned_abs() as usize - 1] = if v > 0 { pos } else { -pos };
        }
        Self::from_raw(inv)
    }

    /// `(self ∘ other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch { left: self.len(), right: other.len() });
        }
        Ok(Self::from_raw(other.window.iter().map(|&k| self.get(k as i64) as i8).collect()))
    }

    /// Right multiplication by `(i, j)_B`: acts on positions.
    pub fn times_reflection(&self, i: i64, j: i64) -> Self {
        let mut w = self.window.clone();
        if i == -j {
            let k = i.unsigned_abs() as usize - 1;
            w[k] = -w[k];
        } else {
            let (a, b) = (self.get(i), self.get(j));
            set_signed(&mut w, i, b);
            set_signed(&mut w, j, a);
        }
        Self::from_raw(w)
    }

    pub fn length_parts(&self) -> LengthB {
        let w = &self.window;
        let mut inv = 0;
        let mut nsp = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
                if (w[i] as i16 + w[j] as i16) < 0 {
                    nsp += 1;
                }
            }
        }
        LengthB { inv, neg: self.neg(), nsp }
    }

    /// `ℓ_B = inv + neg + nsp`.
    pub fn length(&self) -> usize {
        self.length_parts().total()
    }

    pub fn neg(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    /// Descent positions in `[0, n-1]` with the convention `σ(0) = 0`.
    pub fn descent_set(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                let left = if i == 0 { 0 } else { self.window[i - 1] };
                left > self.window[i]
            })
            .collect()
    }

    /// The image in the symmetric group on `[±n]`, relabelled onto `[2n]`
    /// by `-n..-1 ↦ 1..n` and `1..n ↦ n+1..2n`.
    pub fn embed_tilde(&self) -> Permutation {
        let n = self.len() as i64;
        let relabel = |k: i64| if k < 0 { k + n + 1 } else { k + n };
        let word = (-n..=n)
            .filter(|&k| k != 0)
            .map(|k| relabel(self.get(k)) as u8)
            .collect();
        Permutation::from_raw(word)
    }

    /// Every element of `B_n`, lexicographically sorted by window.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity((1usize << n) * (1..=n).product::<usize>());
        let mut w: Vec<i8> = (1..=n as i8).collect();
        loop {
            for signs in 0u32..(1 << n) {
                let win = w
                    .iter()
                    .enumerate()
                    .map(|(k, &v)| if signs >> k & 1 == 1 { -v } else { v })
                    .collect();
                out.push(Self::from_raw(win));
            }
            if !next_lex(&mut w) {
                break;
            }
        }
        out.sort();
        out
    }
}

fn set_signed(w: &mut [i8], pos: i64, value: i64) {
    if pos > 0 {
        w[pos as usize - 1] = value as i8;
    } else {
        w[(-pos) as usize - 1] = -value as i8;
    }
}

/// The reflection `(i, j)_B`: `(i,j)(-i,-j)` when `i ≠ |j|`, else `(i,-i)`.
pub fn signed_reflection(i: i64, j: i64, n: usize) -> Result<SignedPermutation> {
    if i == j {
        return Err(Error::InvalidIndex { i, j, reason: "i = j" });
    }
    if i < 1 || i as usize > n || j == 0 || j.unsigned_abs() as usize > n {
        return Err(Error::InvalidIndex { i, j, reason: "index out of range" });
    }
    if i == -j {
        Ok(SignedPermutation::identity(n).times_reflection(i, -i))
    } else {
        Ok(SignedPermutation::identity(n).times_reflection(i, j))
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(i8::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPermutation({self})")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SignedPermutation::new(tokenize(s)?)
    }
}

impl CoxeterElement for SignedPermutation {
    const KIND: Kind = Kind::B;

    fn size(&self) -> usize {
        self.len()
    }
    fn identity(n: usize) -> Self {
        SignedPermutation::identity(n)
    }
    fn longest(n: usize) -> Self {
        SignedPermutation::longest(n)
    }
    fn length(&self) -> usize {
        SignedPermutation::length(self)
    }
    fn inverse(&self) -> Self {
        SignedPermutation::inverse(self)
    }
    fn compose(&self, other: &Self) -> Result<Self> {
        SignedPermutation::compose(self, other)
    }
    fn bruhat_leq(&self, other: &Self) -> bool {
        crate::bruhat::bruhat_leq_b(self, other).unwrap_or(false)
    }
    fn all(n: usize) -> Vec<Self> {
        SignedPermutation::all(n)
    }
    fn simple_generators(n: usize) -> Vec<Self> {
        let e = SignedPermutation::identity(n);
        let mut gens = Vec::new();
        if n >= 1 {
            gens.push(e.times_reflection(1, -1));
        }
        gens.extend((1..n as i64).map(|i| e.times_reflection(i, i + 1)));
        gens
    }
}
