use super::FinitePoset;

/// The total order `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> FinitePoset {
    let keys = (0..n).map(|i| i.to_string()).collect();
    FinitePoset::from_leq(keys, |i, j| i <= j).expect("total order")
}

pub fn antichain(n: usize) -> FinitePoset {
    let keys = (0..n).map(|i| i.to_string()).collect();
    FinitePoset::from_leq(keys, |i, j| i == j).expect("discrete order")
}

/// Subsets of `[m]` under inclusion, keyed like `{1,3}`; index = bitmask.
pub fn boolean_algebra(m: usize) -> FinitePoset {
    let keys = (0..1usize << m).map(|s| set_key(s as u64)).collect();
    FinitePoset::from_leq(keys, |a, b| a & !b == 0).expect("inclusion order")
}

pub(crate) fn set_key(mask: u64) -> String {
    let parts: Vec<String> = (0..64).filter(|k| mask >> k & 1 == 1).map(|k| (k + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn pair_keys(p: &FinitePoset, q: &FinitePoset) -> Vec<String> {
    p.keys()
        .iter()
        .flat_map(|x| q.keys().iter().map(move |y| format!("({x}, {y})")))
        .collect()
}

/// `(x, y) ≤ (x', y')` iff `x < x'`, or `x = x'` and `y ≤ y'`.
/// Element `(i, j)` has index `i * |Q| + j`.
pub fn ordinal_product(p: &FinitePoset, q: &FinitePoset) -> FinitePoset {
    let m = q.len();
    FinitePoset::from_leq(pair_keys(p, q), |a, b| {
        let (x, y, x2, y2) = (a / m, a % m, b / m, b % m);
        (x != x2 && p.leq(x, x2)) || (x == x2 && q.leq(y, y2))
    })
    .expect("ordinal product of partial orders")
}

/// Componentwise order; indices as in [`ordinal_product`].
pub fn cartesian_product(p: &FinitePoset, q: &FinitePoset) -> FinitePoset {
    let m = q.len();
    FinitePoset::from_leq(pair_keys(p, q), |a, b| p.leq(a / m, b / m) && q.leq(a % m, b % m))
        .expect("product of partial orders")
}
