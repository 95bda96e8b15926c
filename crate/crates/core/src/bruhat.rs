//! Bruhat order on `S_n` and `B_n`: comparison and lower covers.

use crate::error::{Error, Result};
use crate::perm::{Permutation, SignedPermutation};

/// `p ≤ q` in Bruhat order, by the tableau criterion restricted to the
/// descents of `p`: the sorted prefixes of length `k` must compare
/// entrywise for every `k ∈ D(p)`.
pub fn bruhat_leq_a(p: &Permutation, q: &Permutation) -> Result<bool> {
    if p.len() != q.len() {
        return Err(Error::SizeMismatch { left: p.len(), right: q.len() });
    }
    Ok(tableau_leq(p.word(), q.word()))
}

fn tableau_leq(p: &[u8], q: &[u8]) -> bool {
    let n = p.len();
    let mut ps: Vec<u8> = Vec::with_capacity(n);
    let mut qs: Vec<u8> = Vec::with_capacity(n);
    for k in 0..n.saturating_sub(1) {
        insert_sorted(&mut ps, p[k]);
        insert_sorted(&mut qs, q[k]);
        if p[k] > p[k + 1] && ps.iter().zip(&qs).any(|(a, b)| a > b) {
            return false;
        }
    }
    true
}

fn insert_sorted(buf: &mut Vec<u8>, x: u8) {
    let at = buf.partition_point(|&y| y < x);
    buf.insert(at, x);
}

/// `u ≤ v` in the Bruhat order of `B_n`, via the embedding into the
/// symmetric group on `[±n]`.
pub fn bruhat_leq_b(u: &SignedPermutation, v: &SignedPermutation) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::SizeMismatch { left: u.len(), right: v.len() });
    }
    Ok(tableau_leq(u.embed_tilde().word(), v.embed_tilde().word()))
}

/// Elements covered by `p` in `S_n`: `p·(i,j)` for every inversion `(i,j)`
/// with no intermediate value strictly between positions `i` and `j`.
pub fn covers_a(p: &Permutation) -> Vec<Permutation> {
    let w = p.word();
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if w[i] > w[j] && !(i + 1..j).any(|k| w[j] < w[k] && w[k] < w[i]) {
                out.push(p.swap_positions(i + 1, j + 1));
            }
        }
    }
    out.sort();
    out
}

/// Elements covered by `v` in `B_n`.
///
/// `u ⋖ v` exactly when `v = u·(i,j)(-i,-j)` for a non-central free rise
/// `(i,j)` of `u`, or `v = u·(i,-i)` for a central symmetric free rise.
pub fn covers_b(v: &SignedPermutation) -> Vec<SignedPermutation> {
    let n = v.len() as i64;
    let mut out = Vec::new();
    for a in 1..=n {
        let u = v.times_reflection(a, -a);
        if is_free_rise(&u, -a, a) {
            out.push(u);
        }
        for c in a + 1..=n {
            for b in [c, -c] {
                let u = v.times_reflection(a, b);
                let (i, j) = (a.min(b), a.max(b));
                if is_free_rise(&u, i, j) && !is_central(&u, i, j) {
                    out.push(u);
                }
            }
        }
    }
    out.sort();
    out
}

fn is_free_rise(u: &SignedPermutation, i: i64, j: i64) -> bool {
    let (lo, hi) = (u.get(i), u.get(j));
    lo < hi && !(i + 1..j).filter(|&k| k != 0).any(|k| lo < u.get(k) && u.get(k) < hi)
}

fn is_central(u: &SignedPermutation, i: i64, j: i64) -> bool {
    i <= 0 && 0 <= j && u.get(i) <= 0 && 0 <= u.get(j)
}
