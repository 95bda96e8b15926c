//! Elements of the symmetric group `S_n` and the hyperoctahedral group `B_n`.
//!
//! All public indices are 1-based: `p.get(1)` is the first letter of the
//! one-line word. Storage is a plain 0-based vector.

mod signed;
mod sym;

use std::fmt;
use std::hash::Hash;

pub use signed::{signed_reflection, LengthB, SignedPermutation};
pub use sym::{Permutation, StatRecord};

use crate::error::Result;

/// Largest `n` accepted for elements of `S_n`.
pub const MAX_N_A: usize = 16;
/// Largest `n` accepted for elements of `B_n`.
pub const MAX_N_B: usize = 12;

/// Which family of groups an element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Kind {
    A,
    B,
}

impl Kind {
    pub fn cap(self) -> usize {
        match self {
            Kind::A => MAX_N_A,
            Kind::B => MAX_N_B,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Kind::A => 'A',
            Kind::B => 'B',
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl std::str::FromStr for Kind {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Kind::A),
            "B" | "b" => Ok(Kind::B),
            _ => Err(crate::error::Error::Parse {
                input: s.to_string(),
                reason: "expected A or B".into(),
            }),
        }
    }
}

/// Operations shared by `S_n` and `B_n` as Coxeter groups.
pub trait CoxeterElement:
    Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const KIND: Kind;

    /// The `n` of `S_n` / `B_n`.
    fn size(&self) -> usize;
    fn identity(n: usize) -> Self;
    fn longest(n: usize) -> Self;
    /// Coxeter length.
    fn length(&self) -> usize;
    fn inverse(&self) -> Self;
    fn compose(&self, other: &Self) -> Result<Self>;
    /// Bruhat order comparison; sizes must agree.
    fn bruhat_leq(&self, other: &Self) -> bool;
    /// Every element of the group, lexicographically sorted.
    fn all(n: usize) -> Vec<Self>;
    /// Simple generators in Coxeter order (`s_0` first for type B).
    fn simple_generators(n: usize) -> Vec<Self>;
}

/// Advances `word` to the next permutation in lexicographic order.
/// Returns `false` (leaving `word` sorted ascending) after the last one.
pub(crate) fn next_lex<T: Ord>(word: &mut [T]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        word.reverse();
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Splits a textual permutation into integer tokens. Accepts an optional
/// pair of enclosing brackets, comma separators, and compact digit strings.
pub(crate) fn tokenize(input: &str) -> Result<Vec<i64>> {
    let trimmed = input.trim();
    let inner = trimmed
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .or_else(|| trimmed.strip_prefix('(').and_then(|s| s.strip_suffix(')')))
        .unwrap_or(trimmed)
        .trim();
    let err = |reason: &str| crate::error::Error::Parse {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    if inner.contains([',', '-', '\u{2212}']) {
        inner
            .split(',')
            .map(|t| {
                let t = t.trim().replace('\u{2212}', "-");
                t.parse::<i64>().map_err(|_| err("bad integer token"))
            })
            .collect()
    } else if inner.chars().all(|c| c.is_ascii_digit()) {
        Ok(inner.chars().map(|c| c as i64 - '0' as i64).collect())
    } else {
        Err(err("expected compact digits or a comma-separated list"))
    }
}
