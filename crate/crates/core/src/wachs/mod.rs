//! Wachs permutations: membership, coordinates, the induced Bruhat order
//! and its rank function.
//!
//! Every `v ∈ W(S_n)` is written `(τ, T)` (even `n`) or `(i, τ, T)` (odd
//! `n`) with `τ ∈ S_m`, `T ⊆ [m]`, `m = ⌊n/2⌋`; likewise for `W(B_n)` with
//! `τ ∈ B_m`. Order, covers, rank and Möbius values are computed on these
//! coordinates without touching the ambient group.

mod closed;
mod code;
mod maps;
mod order;
mod subset;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use rayon::prelude::*;

pub use closed::{closed_polys, stats_distribution_check, wachs_rank, ClosedPolys};
pub use code::{all_codes_a, all_codes_b, decode_a, decode_b, encode_a, encode_b, WachsCodeA, WachsCodeB};
pub use maps::{chi_map, coatom_c, descent_class, f_map, involution_wa, involution_wb, stabilizer_gi};
pub use order::Rule;
pub use subset::Subset;

use crate::error::{Error, Result};
use crate::perm::{CoxeterElement, Kind, Permutation, SignedPermutation};
use crate::poset::FinitePoset;

/// Largest `n` for which [`enumerate_wachs`] will list `W(S_n)`.
pub const ENUM_CAP_A: usize = 14;
/// Largest `n` for which [`enumerate_wachs`] will list `W(B_n)`.
pub const ENUM_CAP_B: usize = 10;

pub fn enum_cap(kind: Kind) -> usize {
    match kind {
        Kind::A => ENUM_CAP_A,
        Kind::B => ENUM_CAP_B,
    }
}

/// A group element that may be a Wachs permutation, together with the
/// coordinate-level description of the induced order.
pub trait WachsElement: CoxeterElement {
    type Code: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync;

    fn is_wachs(&self) -> bool;
    fn encode(&self) -> Result<Self::Code>;
    fn decode(code: &Self::Code) -> Result<Self>;
    fn all_codes(n: usize) -> Vec<Self::Code>;
    /// The `τ` coordinate.
    fn projection(code: &Self::Code) -> Self;
    fn code_leq_with(u: &Self::Code, v: &Self::Code, rule: Rule) -> bool;
    fn code_leq(u: &Self::Code, v: &Self::Code) -> bool {
        Self::code_leq_with(u, v, Rule::Rigid)
    }
    /// Codes of the elements covered by `v`.
    fn code_lower_covers(v: &Self::Code) -> Vec<Self::Code>;
    fn code_rank(v: &Self::Code) -> usize;
    fn code_mobius(v: &Self::Code) -> i64;
}

/// `|σ^{-1}(k) - σ^{-1}(k*)| ≤ 1` for every `k < n`, where `k*` is the
/// partner of `k` in `{1,2}, {3,4}, ...`.
fn pairs_adjacent(n: usize, pos: impl Fn(usize) -> i64) -> bool {
    (1..n).all(|k| {
        let partner = if k % 2 == 0 { k - 1 } else { k + 1 };
        (pos(k) - pos(partner)).abs() <= 1
    })
}

impl WachsElement for Permutation {
    type Code = WachsCodeA;

    fn is_wachs(&self) -> bool {
        pairs_adjacent(self.len(), |k| self.position_of(k) as i64)
    }

    fn encode(&self) -> Result<WachsCodeA> {
        encode_a(self)
    }

    fn decode(code: &WachsCodeA) -> Result<Self> {
        decode_a(code)
    }

    fn all_codes(n: usize) -> Vec<WachsCodeA> {
        all_codes_a(n)
    }

    fn projection(code: &WachsCodeA) -> Self {
        code.tau().clone()
    }

    fn code_leq_with(u: &WachsCodeA, v: &WachsCodeA, rule: Rule) -> bool {
        order::leq_a(u, v, rule)
    }

    fn code_lower_covers(v: &WachsCodeA) -> Vec<WachsCodeA> {
        order::lower_covers_a(v)
    }

    fn code_rank(v: &WachsCodeA) -> usize {
        order::rank_a(v)
    }

    fn code_mobius(v: &WachsCodeA) -> i64 {
        let top = v.position().map_or(true, |i| i == v.m() + 1);
        mobius_value(v.tau().is_identity() && top, v.t())
    }
}

impl WachsElement for SignedPermutation {
    type Code = WachsCodeB;

    fn is_wachs(&self) -> bool {
        pairs_adjacent(self.len(), |k| self.position_of(k as i64))
    }

    fn encode(&self) -> Result<WachsCodeB> {
        encode_b(self)
    }

    fn decode(code: &WachsCodeB) -> Result<Self> {
        decode_b(code)
    }

    fn all_codes(n: usize) -> Vec<WachsCodeB> {
        all_codes_b(n)
    }

    fn projection(code: &WachsCodeB) -> Self {
        code.tau().clone()
    }

    fn code_leq_with(u: &WachsCodeB, v: &WachsCodeB, rule: Rule) -> bool {
        order::leq_b(u, v, rule)
    }

    fn code_lower_covers(v: &WachsCodeB) -> Vec<WachsCodeB> {
        order::lower_covers_b(v)
    }

    fn code_rank(v: &WachsCodeB) -> usize {
        order::rank_b(v)
    }

    fn code_mobius(v: &WachsCodeB) -> i64 {
        let top = v.position().map_or(true, |i| i == v.m() as i64 + 1);
        mobius_value(v.tau().is_identity() && top, v.t())
    }
}

fn mobius_value(nonzero: bool, t: Subset) -> i64 {
    match (nonzero, t.len() % 2) {
        (false, _) => 0,
        (true, 0) => 1,
        (true, _) => -1,
    }
}

fn check_cap<W: WachsElement>(n: usize) -> Result<()> {
    let cap = enum_cap(W::KIND);
    if n > cap {
        return Err(Error::CapExceeded { kind: W::KIND.letter(), n, cap });
    }
    Ok(())
}

/// `W(S_n)` or `W(B_n)`, sorted lexicographically by one-line word/window.
pub fn enumerate_wachs<W: WachsElement>(n: usize) -> Result<Vec<W>> {
    check_cap::<W>(n)?;
    let mut out = W::all_codes(n).iter().map(W::decode).collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

fn same_size<W: WachsElement>(u: &W, v: &W) -> Result<()> {
    if u.size() != v.size() {
        return Err(Error::SizeMismatch { left: u.size(), right: v.size() });
    }
    Ok(())
}

/// Bruhat comparison of two Wachs permutations, decided on coordinates.
pub fn wachs_leq<W: WachsElement>(u: &W, v: &W) -> Result<bool> {
    same_size(u, v)?;
    Ok(W::code_leq(&u.encode()?, &v.encode()?))
}

/// The Wachs permutations covered by `v` in the induced order, sorted.
pub fn wachs_covers<W: WachsElement>(v: &W) -> Result<Vec<W>> {
    let mut out = W::code_lower_covers(&v.encode()?).iter().map(W::decode).collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// The comparison under either subset filter; see [`Rule`].
pub fn wachs_leq_with<W: WachsElement>(u: &W, v: &W, rule: Rule) -> Result<bool> {
    same_size(u, v)?;
    Ok(W::code_leq_with(&u.encode()?, &v.encode()?, rule))
}

/// `ℓ(v) - ℓ(τ)`, straight from the definition.
pub fn rank_lw<W: WachsElement>(v: &W) -> Result<usize> {
    let code = v.encode()?;
    Ok(v.length() - W::projection(&code).length())
}

/// `ℓ_W(v)` from the coordinate formula.
pub fn rank_lw_closed<W: WachsElement>(v: &W) -> Result<usize> {
    Ok(W::code_rank(&v.encode()?))
}

/// `μ(e, v)` in the induced order, from the coordinate formula.
pub fn mobius_closed<W: WachsElement>(code: &W::Code) -> i64 {
    W::code_mobius(code)
}

/// The induced Bruhat order on `W(S_n)` / `W(B_n)`, built from the
/// coordinate-level cover relation. Element `k` of the poset is `elems[k]`.
pub fn wachs_poset<W: WachsElement>(n: usize) -> Result<(Vec<W>, FinitePoset)> {
    let elems = enumerate_wachs::<W>(n)?;
    let index: HashMap<&W, usize> = elems.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let lower = elems
        .par_iter()
        .map(|v| wachs_covers(v).map(|cs| cs.iter().map(|u| index[u]).collect()))
        .collect::<Result<Vec<Vec<usize>>>>()?;
    let keys = elems.iter().map(ToString::to_string).collect();
    Ok((elems, FinitePoset::from_lower_covers(keys, &lower)?))
}

/// The same poset, with every comparison made in the ambient group.
pub fn bruhat_poset<W: WachsElement>(n: usize) -> Result<(Vec<W>, FinitePoset)> {
    let elems = enumerate_wachs::<W>(n)?;
    let keys = elems.iter().map(ToString::to_string).collect();
    let poset = FinitePoset::from_leq(keys, |a, b| elems[a].bruhat_leq(&elems[b]))?;
    Ok((elems, poset))
}

/// `W(S_n) ∩ S_n^J` under Bruhat order.
pub fn wachs_quotient_poset(n: usize, j: &[usize]) -> Result<(Vec<Permutation>, FinitePoset)> {
    let elems: Vec<Permutation> = descent_class(n, j)?.into_iter().filter(|v| v.is_wachs()).collect();
    let poset = FinitePoset::from_elements(&elems, |a, b| a.bruhat_leq(b))?;
    Ok((elems, poset))
}
