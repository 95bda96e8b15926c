//! The coordinates `(τ, T)` and `(i, τ, T)` of Wachs permutations.

use std::fmt;

use super::Subset;
use crate::error::{Error, Result};
use crate::perm::{Permutation, SignedPermutation};

/// Coordinates of `v ∈ W(S_n)`. For odd `n = 2m+1`, `i ∈ [m+1]` is the
/// block holding `n`, i.e. `n` sits at position `2i - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum WachsCodeA {
    Even { tau: Permutation, t: Subset },
    Odd { i: usize, tau: Permutation, t: Subset },
}

/// Coordinates of `v ∈ W(B_n)`. For odd `n = 2m+1`, `i ∈ [±(m+1)]` is
/// `(j + sgn j) / 2` where `j` is the signed position of `2m+1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum WachsCodeB {
    Even { tau: SignedPermutation, t: Subset },
    Odd { i: i64, tau: SignedPermutation, t: Subset },
}

impl WachsCodeA {
    pub fn tau(&self) -> &Permutation {
        match self {
            WachsCodeA::Even { tau, .. } | WachsCodeA::Odd { tau, .. } => tau,
        }
    }

    pub fn t(&self) -> Subset {
        match self {
            WachsCodeA::Even { t, .. } | WachsCodeA::Odd { t, .. } => *t,
        }
    }

    /// The block coordinate of `n` (odd sizes only).
    pub fn position(&self) -> Option<usize> {
        match self {
            WachsCodeA::Even { .. } => None,
            WachsCodeA::Odd { i, .. } => Some(*i),
        }
    }

    pub fn m(&self) -> usize {
        self.tau().len()
    }

    pub fn n(&self) -> usize {
        2 * self.m() + usize::from(self.position().is_some())
    }

    /// Same position coordinate, new `τ` and `T`.
    pub fn with(&self, tau: Permutation, t: Subset) -> Self {
        match self {
            WachsCodeA::Even { .. } => WachsCodeA::Even { tau, t },
            WachsCodeA::Odd { i, .. } => WachsCodeA::Odd { i: *i, tau, t },
        }
    }
}

impl WachsCodeB {
    pub fn tau(&self) -> &SignedPermutation {
        match self {
            WachsCodeB::Even { tau, .. } | WachsCodeB::Odd { tau, .. } => tau,
        }
    }

    pub fn t(&self) -> Subset {
        match self {
            WachsCodeB::Even { t, .. } | WachsCodeB::Odd { t, .. } => *t,
        }
    }

    pub fn position(&self) -> Option<i64> {
        match self {
            WachsCodeB::Even { .. } => None,
            WachsCodeB::Odd { i, .. } => Some(*i),
        }
    }

    pub fn m(&self) -> usize {
        self.tau().len()
    }

    pub fn n(&self) -> usize {
        2 * self.m() + usize::from(self.position().is_some())
    }

    pub fn with(&self, tau: SignedPermutation, t: Subset) -> Self {
        match self {
            WachsCodeB::Even { .. } => WachsCodeB::Even { tau, t },
            WachsCodeB::Odd { i, .. } => WachsCodeB::Odd { i: *i, tau, t },
        }
    }
}

impl fmt::Display for WachsCodeA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WachsCodeA::Even { tau, t } => write!(f, "({tau}, {t})"),
            WachsCodeA::Odd { i, tau, t } => write!(f, "({i}, {tau}, {t})"),
        }
    }
}

impl fmt::Display for WachsCodeB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WachsCodeB::Even { tau, t } => write!(f, "({tau}, {t})"),
            WachsCodeB::Odd { i, tau, t } => write!(f, "({i}, {tau}, {t})"),
        }
    }
}

/// Reads consecutive blocks `{2τ(i)-1, 2τ(i)}`; `i ∈ T` when the larger
/// value comes first.
fn blocks_a(word: &[u8]) -> Option<(Vec<u8>, Subset)> {
    let mut tau = Vec::with_capacity(word.len() / 2);
    let mut t = Subset::EMPTY;
    for (k, pair) in word.chunks_exact(2).enumerate() {
        let (a, b) = (pair[0], pair[1]);
        let hi = a.max(b);
        if hi % 2 != 0 || a.min(b) + 1 != hi {
            return None;
        }
        tau.push(hi / 2);
        if a > b {
            t = t.with(k + 1);
        }
    }
    Some((tau, t))
}

fn unblock_a(tau: &Permutation, t: Subset) -> Vec<u8> {
    let mut word = Vec::with_capacity(2 * tau.len());
    for (k, &s) in tau.word().iter().enumerate() {
        let (lo, hi) = (2 * s - 1, 2 * s);
        if t.contains(k + 1) {
            word.extend([hi, lo]);
        } else {
            word.extend([lo, hi]);
        }
    }
    word
}

fn blocks_b(window: &[i8]) -> Option<(Vec<i8>, Subset)> {
    let mut tau = Vec::with_capacity(window.len() / 2);
    let mut t = Subset::EMPTY;
    for (k, pair) in window.chunks_exact(2).enumerate() {
        let (a, b) = (pair[0], pair[1]);
        let hi = a.unsigned_abs().max(b.unsigned_abs());
        if a.signum() != b.signum() || hi % 2 != 0 || a.unsigned_abs().min(b.unsigned_abs()) + 1 != hi {
            return None;
        }
        tau.push(a.signum() * (hi / 2) as i8);
        if a > b {
            t = t.with(k + 1);
        }
    }
    Some((tau, t))
}

fn unblock_b(tau: &SignedPermutation, t: Subset) -> Vec<i8> {
    let mut window = Vec::with_capacity(2 * tau.len());
    for (k, &s) in tau.window().iter().enumerate() {
        let (pos, neg) = (i8::from(s > 0), i8::from(s < 0));
        let (first, second) = if t.contains(k + 1) {
            (2 * s + neg, 2 * s - pos)
        } else {
            (2 * s - pos, 2 * s + neg)
        };
        window.extend([first, second]);
    }
    window
}

fn not_wachs(v: &impl fmt::Display) -> Error {
    Error::NotWachs(v.to_string())
}

pub fn encode_a(v: &Permutation) -> Result<WachsCodeA> {
    let n = v.len();
    let word = v.word();
    if n % 2 == 0 {
        let (tau, t) = blocks_a(word).ok_or_else(|| not_wachs(v))?;
        return Ok(WachsCodeA::Even { tau: Permutation::from_raw(tau), t });
    }
    let pos = v.position_of(n);
    if pos % 2 == 0 {
        return Err(not_wachs(v));
    }
    let rest: Vec<u8> = word.iter().copied().filter(|&x| x as usize != n).collect();
    let (tau, t) = blocks_a(&rest).ok_or_else(|| not_wachs(v))?;
    Ok(WachsCodeA::Odd { i: (pos + 1) / 2, tau: Permutation::from_raw(tau), t })
}

fn check_subset(t: Subset, m: usize) -> Result<()> {
    if t.is_subset(Subset::full(m)) {
        Ok(())
    } else {
        Err(Error::InvalidCode(format!("{t} is not a subset of [{m}]")))
    }
}

pub fn decode_a(code: &WachsCodeA) -> Result<Permutation> {
    let m = code.m();
    check_subset(code.t(), m)?;
    let mut word = unblock_a(code.tau(), code.t());
    if let WachsCodeA::Odd { i, .. } = code {
        if !(1..=m + 1).contains(i) {
            return Err(Error::InvalidCode(format!("position {i} outside [{}]", m + 1)));
        }
        word.insert(2 * i - 2, (2 * m + 1) as u8);
    }
    Permutation::new(word)
}

pub fn encode_b(v: &SignedPermutation) -> Result<WachsCodeB> {
    let n = v.len();
    if n % 2 == 0 {
        let (tau, t) = blocks_b(v.window()).ok_or_else(|| not_wachs(v))?;
        return Ok(WachsCodeB::Even { tau: SignedPermutation::from_raw(tau), t });
    }
    let j = v.position_of(n as i64);
    if j % 2 == 0 {
        return Err(not_wachs(v));
    }
    let rest: Vec<i8> = v.window().iter().copied().filter(|&x| x.unsigned_abs() as usize != n).collect();
    let (tau, t) = blocks_b(&rest).ok_or_else(|| not_wachs(v))?;
    Ok(WachsCodeB::Odd { i: (j + j.signum()) / 2, tau: SignedPermutation::from_raw(tau), t })
}

pub fn decode_b(code: &WachsCodeB) -> Result<SignedPermutation> {
    let m = code.m();
    check_subset(code.t(), m)?;
    let mut window = unblock_b(code.tau(), code.t());
    if let WachsCodeB::Odd { i, .. } = code {
        if *i == 0 || i.unsigned_abs() as usize > m + 1 {
            return Err(Error::InvalidCode(format!("position {i} outside [±{}]", m + 1)));
        }
        let at = 2 * i.unsigned_abs() as usize - 2;
        window.insert(at, (i.signum() * (2 * m as i64 + 1)) as i8);
    }
    SignedPermutation::new(window.into_iter().map(i64::from))
}

/// All codes for size `n`, in no particular order.
pub fn all_codes_a(n: usize) -> Vec<WachsCodeA> {
    let m = n / 2;
    let mut out = Vec::new();
    for tau in Permutation::all(m) {
        for t in Subset::all(m) {
            if n % 2 == 0 {
                out.push(WachsCodeA::Even { tau: tau.clone(), t });
            } else {
                for i in 1..=m + 1 {
                    out.push(WachsCodeA::Odd { i, tau: tau.clone(), t });
                }
            }
        }
    }
    out
}

pub fn all_codes_b(n: usize) -> Vec<WachsCodeB> {
    let m = n / 2;
    let top = m as i64 + 1;
    let mut out = Vec::new();
    for tau in SignedPermutation::all(m) {
        for t in Subset::all(m) {
            if n % 2 == 0 {
                out.push(WachsCodeB::Even { tau: tau.clone(), t });
            } else {
                for i in (-top..=top).filter(|&i| i != 0) {
                    out.push(WachsCodeB::Odd { i, tau: tau.clone(), t });
                }
            }
        }
    }
    out
}
