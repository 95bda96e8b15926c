use super::{WachsCodeA, WachsCodeB, WachsElement};
use crate::error::{Error, Result};
use crate::perm::{Permutation, SignedPermutation};

fn require_wachs<W: WachsElement>(v: &W) -> Result<()> {
    if v.is_wachs() {
        Ok(())
    } else {
        Err(Error::NotWachs(v.to_string()))
    }
}

/// `χ_n`: deletes the letter `n` from a Wachs permutation of `[n]`.
pub fn chi_map(v: &Permutation) -> Result<Permutation> {
    require_wachs(v)?;
    let n = v.len();
    if n < 2 {
        return Err(Error::Unsupported("chi_map needs n > 1".into()));
    }
    Permutation::new(v.word().iter().copied().filter(|&x| x as usize != n))
}

/// `f_n(v) = τ`.
pub fn f_map(v: &Permutation) -> Result<Permutation> {
    Ok(v.encode()?.tau().clone())
}

/// `(τ, T) ↦ (τ·(i,j), T △ {i,j})`, keeping the position coordinate.
pub fn involution_wa(v: &Permutation, i: usize, j: usize) -> Result<Permutation> {
    let code = v.encode()?;
    if !(1 <= i && i < j && j <= code.m()) {
        return Err(Error::InvalidIndex { i: i as i64, j: j as i64, reason: "need 1 <= i < j <= m" });
    }
    let flip = [i, j].into_iter().collect();
    let image: WachsCodeA = code.with(code.tau().swap_positions(i, j), code.t().symmetric_difference(flip));
    Permutation::decode(&image)
}

/// `(τ, T) ↦ (τ·(i,j)_B, T △ {i,|j|})`. Accepts `1 ≤ i < |j| ≤ m` or
/// `j = -i`.
pub fn involution_wb(v: &SignedPermutation, i: i64, j: i64) -> Result<SignedPermutation> {
    let code = v.encode()?;
    let m = code.m() as i64;
    let valid = i >= 1 && (i < j.abs() || j == -i) && j.abs() <= m;
    if !valid {
        return Err(Error::InvalidIndex { i, j, reason: "not a reflection (i,j)_B of B_m" });
    }
    let flip = [i as usize, j.unsigned_abs() as usize].into_iter().collect();
    let image: WachsCodeB = code.with(code.tau().times_reflection(i, j), code.t().symmetric_difference(flip));
    SignedPermutation::decode(&image)
}

/// The coatom `c(v)` of `v ∈ W(B_{2m+1})` lying above every `u < v` whose
/// letter `2m+1` sits further right. With `j` the signed position of
/// `2m+1`: flip position 1 if `j = -1`;
/// otherwise swap positions `j+1, j+2` if they form a descent, and
/// `j, j+2` if not.
pub fn coatom_c(v: &SignedPermutation) -> Result<SignedPermutation> {
    require_wachs(v)?;
    let n = v.len();
    if n % 2 == 0 {
        return Err(Error::Unsupported(format!("coatom_c needs odd size, got {n}")));
    }
    let j = v.position_of(n as i64);
    if j == -1 {
        return Ok(v.times_reflection(-1, 1));
    }
    if j == n as i64 {
        return Err(Error::Unsupported(format!("{v} has no coatom moving {n}")));
    }
    if v.get(j + 1) > v.get(j + 2) {
        Ok(v.times_reflection(j + 1, j + 2))
    } else {
        Ok(v.times_reflection(j, j + 2))
    }
}

/// `{σ ∈ S_n : σ(k) < σ(k+1) for all k ∈ J}`, lexicographically sorted.
pub fn descent_class(n: usize, j: &[usize]) -> Result<Vec<Permutation>> {
    if let Some(&bad) = j.iter().find(|&&k| k == 0 || k >= n) {
        return Err(Error::InvalidIndex { i: bad as i64, j: bad as i64 + 1, reason: "J must lie in [n-1]" });
    }
    Ok(Permutation::all(n).into_iter().filter(|s| j.iter().all(|&k| !s.is_descent(k))).collect())
}

/// `{w ∈ S_n : w I w^{-1} = I}` for `I = {s_k : k odd}`.
pub fn stabilizer_gi(n: usize) -> Result<Vec<Permutation>> {
    if n % 2 == 1 {
        return Err(Error::Unsupported(format!("stabilizer_gi needs even n, got {n}")));
    }
    let generators: Vec<(usize, usize)> = (1..n).step_by(2).map(|k| (k, k + 1)).collect();
    // w s_k w^{-1} is the transposition of the values w(k), w(k+1).
    let conjugate = |w: &Permutation, (a, b): (usize, usize)| {
        let (x, y) = (w.get(a), w.get(b));
        (x.min(y), x.max(y))
    };
    Ok(Permutation::all(n)
        .into_iter()
        .filter(|w| generators.iter().all(|&g| generators.contains(&conjugate(w, g))))
        .collect())
}
