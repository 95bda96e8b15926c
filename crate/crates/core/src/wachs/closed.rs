//! Closed forms for the rank-generating and characteristic polynomials.

use serde::Serialize;

use super::{enumerate_wachs, rank_lw};
use crate::error::{Error, Result};
use crate::perm::{Kind, Permutation};
use crate::qpoly::{q_factorial, q_int, IntPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedPolys {
    #[serde(serialize_with = "as_text")]
    pub rank_gen: IntPolynomial,
    #[serde(serialize_with = "as_text")]
    pub char_poly: IntPolynomial,
    pub rank: usize,
}

fn as_text<S: serde::Serializer>(p: &IntPolynomial, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// Rank of `W(S_n)` / `W(B_n)`: `C(n,2) - C(m,2)` and `n² - m²`.
pub fn wachs_rank(kind: Kind, n: usize) -> usize {
    let m = n / 2;
    match kind {
        Kind::A => n * n.saturating_sub(1) / 2 - m * m.saturating_sub(1) / 2,
        Kind::B => n * n - m * m,
    }
}

fn one_plus_monomial(d: usize) -> IntPolynomial {
    IntPolynomial::one() + IntPolynomial::monomial(d)
}

/// `Σ_v x^{ℓ_W(v)}` and `χ(x)` in closed form, with `m = ⌊n/2⌋`.
///
/// Type A: `(1+x)^m [m]_{x^3}!`, times `[m+1]_{x^2}` for odd `n`, and
/// `χ = (x-1)^m x^{r-m}`. Type B: additionally `∏_{k ≤ m} (1 + x^{3k-1})`,
/// times `(1 + x^{2m+1})` for odd `n`. The characteristic polynomial of
/// `W(B_1)`, a two-element chain, is `x - 1`, not `x`.
pub fn closed_polys(kind: Kind, n: usize) -> ClosedPolys {
    let m = n / 2;
    let rank = wachs_rank(kind, n);
    let mut rank_gen = one_plus_monomial(1).pow(m as u32) * q_factorial(m).substitute_power(3);
    if kind == Kind::B {
        rank_gen = rank_gen * (1..=m).map(|k| one_plus_monomial(3 * k - 1)).product::<IntPolynomial>();
    }
    if n % 2 == 1 {
        rank_gen = rank_gen * q_int(m + 1).substitute_power(2);
        if kind == Kind::B {
            rank_gen = rank_gen * one_plus_monomial(2 * m + 1);
        }
    }
    let char_poly = IntPolynomial::x_minus_one().pow(m as u32) * IntPolynomial::monomial(rank - m);
    ClosedPolys { rank_gen, char_poly, rank }
}

/// `Σ x^{ℓ_W(v)} = Σ x^{3·emaj(v) + odes(v)}` over `W(S_n)`, `n` even.
pub fn stats_distribution_check(n: usize) -> Result<bool> {
    if n % 2 == 1 {
        return Err(Error::Unsupported(format!("stats_distribution_check needs even n, got {n}")));
    }
    let mut lhs = IntPolynomial::zero();
    let mut rhs = IntPolynomial::zero();
    for v in enumerate_wachs::<Permutation>(n)? {
        lhs.add_term(rank_lw(&v)?, 1);
        let s = v.stats();
        rhs.add_term(3 * s.emaj + s.odes, 1);
    }
    Ok(lhs == rhs)
}
