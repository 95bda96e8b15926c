//! Order, covers and rank on coordinates.
//!
//! Write `u = (i, σ, S)`, `v = (j, τ, T)`. Then `u ≤ v` iff `σ ≤ τ`,
//! `j ≤ i` and `S ∩ W ∩ R ⊆ T`, where
//!
//! * `R` is the set of rigid positions of `(σ, τ)`: `σ(k) = τ(k) = c` and
//!   the same number of letters smaller than `c` precede position `k` in
//!   both (over signed positions in type B). These are exactly the
//!   positions on which every element of the interval `[σ, τ]` agrees.
//! * `W` is `[min(|i|,|j|) - 1] ∪ [max(|i|,|j|), m]` when `i, j` have the
//!   same sign and `[max(|i|,|j|), m]` otherwise. For even sizes `W = [m]`.
//!
//! Replacing `R` by the plain agreement set `{k : σ(k) = τ(k)}` and always
//! using the same-sign window gives a different relation, kept as
//! [`Rule::PlainAgreement`] for comparison.

use super::code::{WachsCodeA, WachsCodeB};
use super::Subset;
use crate::bruhat::{covers_a, covers_b};
use crate::perm::{CoxeterElement, Permutation, SignedPermutation};

/// Which subset filter the comparison uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Rigid,
    PlainAgreement,
}

fn agree<T: PartialEq>(a: &[T], b: &[T]) -> Subset {
    (1..=a.len()).filter(|&k| a[k - 1] == b[k - 1]).collect()
}

fn differ<T: PartialEq>(a: &[T], b: &[T]) -> Subset {
    (1..=a.len()).filter(|&k| a[k - 1] != b[k - 1]).collect()
}

fn rigid_a(s: &Permutation, t: &Permutation) -> Subset {
    let below = |w: &Permutation, k: usize, c: usize| (1..k).filter(|&i| w.get(i) < c).count();
    (1..=s.len())
        .filter(|&k| {
            let c = s.get(k);
            c == t.get(k) && below(s, k, c) == below(t, k, c)
        })
        .collect()
}

fn rigid_b(s: &SignedPermutation, t: &SignedPermutation) -> Subset {
    let m = s.len() as i64;
    let below = |w: &SignedPermutation, k: i64, c: i64| (-m..k).filter(|&i| i != 0 && w.get(i) < c).count();
    (1..=m)
        .filter(|&k| {
            let c = s.get(k);
            c == t.get(k) && below(s, k, c) == below(t, k, c)
        })
        .map(|k| k as usize)
        .collect()
}

fn window(i: i64, j: i64, m: usize, rule: Rule) -> Subset {
    let (lo, hi) = (i.abs().min(j.abs()), i.abs().max(j.abs()));
    let low = if rule == Rule::Rigid && i.signum() != j.signum() { Subset::EMPTY } else { Subset::range(1, lo - 1) };
    low.union(Subset::range(hi, m as i64))
}

fn filtered_subset(s: Subset, t: Subset, w: Subset, f: Subset) -> bool {
    s.intersection(w).intersection(f).is_subset(t)
}

pub(super) fn leq_a(u: &WachsCodeA, v: &WachsCodeA, rule: Rule) -> bool {
    let (sigma, tau) = (u.tau(), v.tau());
    let m = tau.len();
    if sigma.len() != m || !sigma.bruhat_leq(tau) {
        return false;
    }
    let w = match (u.position(), v.position()) {
        (None, None) => Subset::full(m),
        (Some(i), Some(j)) if j <= i => window(i as i64, j as i64, m, rule),
        _ => return false,
    };
    let f = match rule {
        Rule::Rigid => rigid_a(sigma, tau),
        Rule::PlainAgreement => agree(sigma.word(), tau.word()),
    };
    filtered_subset(u.t(), v.t(), w, f)
}

pub(super) fn leq_b(u: &WachsCodeB, v: &WachsCodeB, rule: Rule) -> bool {
    let (sigma, tau) = (u.tau(), v.tau());
    let m = tau.len();
    if sigma.len() != m || !sigma.bruhat_leq(tau) {
        return false;
    }
    let w = match (u.position(), v.position()) {
        (None, None) => Subset::full(m),
        (Some(i), Some(j)) if j <= i => window(i, j, m, rule),
        _ => return false,
    };
    let f = match rule {
        Rule::Rigid => rigid_b(sigma, tau),
        Rule::PlainAgreement => agree(sigma.window(), tau.window()),
    };
    filtered_subset(u.t(), v.t(), w, f)
}

/// Elements with the same `τ` and one element fewer in `T`.
fn drop_one<C>(t: Subset, build: impl Fn(Subset) -> C) -> impl Iterator<Item = C> {
    t.iter().map(move |x| build(t.without(x)))
}

pub(super) fn lower_covers_a(v: &WachsCodeA) -> Vec<WachsCodeA> {
    let (tau, t, m) = (v.tau(), v.t(), v.m());
    let mut out: Vec<WachsCodeA> = drop_one(t, |s| v.with(tau.clone(), s)).collect();
    if let Some(j) = v.position() {
        if j <= m && !t.contains(j) {
            out.push(WachsCodeA::Odd { i: j + 1, tau: tau.clone(), t: t.with(j) });
        }
    }
    for sigma in covers_a(tau) {
        let d = differ(sigma.word(), tau.word());
        if d.intersection(t).is_empty() {
            out.push(v.with(sigma, t.union(d)));
        }
    }
    out
}

pub(super) fn lower_covers_b(v: &WachsCodeB) -> Vec<WachsCodeB> {
    let (tau, t, m) = (v.tau(), v.t(), v.m());
    let mut out: Vec<WachsCodeB> = drop_one(t, |s| v.with(tau.clone(), s)).collect();
    if let Some(j) = v.position() {
        let i = if j == -1 { 1 } else { j + 1 };
        if i <= m as i64 + 1 {
            if j == -1 {
                out.push(WachsCodeB::Odd { i, tau: tau.clone(), t });
            } else {
                let k = i.abs().min(j.abs()) as usize;
                if !t.contains(k) {
                    out.push(WachsCodeB::Odd { i, tau: tau.clone(), t: t.with(k) });
                }
            }
        }
    }
    for sigma in covers_b(tau) {
        let d = differ(sigma.window(), tau.window());
        if d.intersection(t).is_empty() {
            out.push(v.with(sigma, t.union(d)));
        }
    }
    out
}

pub(super) fn rank_a(v: &WachsCodeA) -> usize {
    let base = 3 * v.tau().length() + v.t().len();
    match v.position() {
        None => base,
        Some(i) => base + 2 * (v.m() + 1 - i),
    }
}

pub(super) fn rank_b(v: &WachsCodeB) -> usize {
    let tau: &SignedPermutation = v.tau();
    let base = 3 * tau.length() + v.t().len() - tau.neg();
    match v.position() {
        None => base,
        Some(i) => {
            let extra = 2 * (v.m() as i64 - i + 1) - if i < 0 { 3 } else { 0 };
            base + extra as usize
        }
    }
}
