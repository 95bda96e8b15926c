//! Structural lemmas about the coordinates, checked exhaustively on small
//! sizes against the ambient Bruhat order.

use std::collections::HashMap;

use wachs_core::bruhat::{covers_a, covers_b};
use wachs_core::wachs::{
    coatom_c, enumerate_wachs, involution_wa, involution_wb, rank_lw_closed, wachs_covers, wachs_poset, Subset,
    WachsCodeA, WachsCodeB, WachsElement,
};
use wachs_core::{CoxeterElement, Permutation, SignedPermutation};

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn rank<W: WachsElement>(v: &W) -> usize {
    rank_lw_closed(v).unwrap()
}

/// `(position, τ, T)` with the position compared in reverse.
trait Coords: WachsElement {
    fn coords(code: &Self::Code) -> (Option<i64>, Self, Subset);
}

impl Coords for Permutation {
    fn coords(c: &WachsCodeA) -> (Option<i64>, Self, Subset) {
        (c.position().map(|i| i as i64), c.tau().clone(), c.t())
    }
}

impl Coords for SignedPermutation {
    fn coords(c: &WachsCodeB) -> (Option<i64>, Self, Subset) {
        (c.position(), c.tau().clone(), c.t())
    }
}

fn ordinal_leq<W: Coords>(u: &W::Code, v: &W::Code) -> bool {
    let ((i, s, ss), (j, t, tt)) = (W::coords(u), W::coords(v));
    if i != j {
        return j < i;
    }
    (s != t && s.bruhat_leq(&t)) || (s == t && ss.is_subset(tt))
}

fn cartesian_leq<W: Coords>(u: &W::Code, v: &W::Code) -> bool {
    let ((i, s, ss), (j, t, tt)) = (W::coords(u), W::coords(v));
    j <= i && s.bruhat_leq(&t) && ss.is_subset(tt)
}

fn sandwich<W: Coords>(n: usize) {
    let elems = enumerate_wachs::<W>(n).unwrap();
    let codes: Vec<W::Code> = elems.iter().map(|v| v.encode().unwrap()).collect();
    for (u, cu) in elems.iter().zip(&codes) {
        for (v, cv) in elems.iter().zip(&codes) {
            let below = u.bruhat_leq(v);
            assert!(!below || ordinal_leq::<W>(cu, cv), "encode not monotone at {u} <= {v}");
            assert!(!cartesian_leq::<W>(cu, cv) || below, "decode not monotone at {cu} <= {cv}");
        }
    }
}

#[test]
fn coordinates_sit_between_cartesian_and_ordinal_products() {
    for n in 1..=7 {
        sandwich::<Permutation>(n);
    }
    for n in 1..=5 {
        sandwich::<SignedPermutation>(n);
    }
}

#[test]
fn neither_product_is_isomorphic() {
    let (u, v) = (p("214365").encode().unwrap(), p("125634").encode().unwrap());
    assert_eq!(u.to_string(), "(123, {1,2,3})");
    assert_eq!(v.to_string(), "(132, {})");
    assert!(ordinal_leq::<Permutation>(&u, &v));
    assert!(!p("214365").bruhat_leq(&p("125634")));

    let (u, v) = (p("2143").encode().unwrap(), p("3412").encode().unwrap());
    assert!(p("2143").bruhat_leq(&p("3412")));
    assert!(!cartesian_leq::<Permutation>(&u, &v) && !cartesian_leq::<Permutation>(&v, &u));
}

/// Pairs `i < j` with `τ·(i,j) ⋖ τ`.
fn transposition_covers(tau: &Permutation) -> Vec<(usize, usize)> {
    let below = covers_a(tau);
    let m = tau.len();
    (1..=m)
        .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
        .filter(|&(i, j)| below.contains(&tau.swap_positions(i, j)))
        .collect()
}

#[test]
fn transposition_involution_gives_a_coatom_above_everything_smaller() {
    for n in [2, 4, 6] {
        let elems = enumerate_wachs::<Permutation>(n).unwrap();
        for v in &elems {
            let code = v.encode().unwrap();
            for (i, j) in transposition_covers(code.tau()) {
                if code.t().contains(i) || code.t().contains(j) {
                    continue;
                }
                let w = involution_wa(v, i, j).unwrap();
                assert!(w.bruhat_leq(v) && w != *v);
                assert_eq!(rank(v) - rank(&w), 1);
                let floor = code.tau().swap_positions(i, j);
                for u in &elems {
                    let sigma = u.encode().unwrap().tau().clone();
                    if u.bruhat_leq(v) && u != v && sigma.bruhat_leq(&floor) {
                        assert!(u.bruhat_leq(&w), "{u} <= {v}, expected <= {w}");
                    }
                }
            }
        }
    }
}

#[test]
fn odd_involution_and_position_shift_are_coatoms() {
    for n in [3, 5, 7] {
        for v in enumerate_wachs::<Permutation>(n).unwrap() {
            let code = v.encode().unwrap();
            let (k, s) = (code.position().unwrap(), code.t());
            if k > code.m() || s.contains(k) {
                continue;
            }
            let shifted = v.compose(&Permutation::transposition(n, 2 * k - 1, 2 * k + 1)).unwrap();
            assert!(shifted.is_wachs() && shifted.bruhat_leq(&v) && shifted != v);
            assert_eq!(rank(&shifted) + 1, rank(&v));
            for (i, j) in transposition_covers(code.tau()) {
                if s.contains(i) || s.contains(j) {
                    continue;
                }
                let w = involution_wa(&v, i, j).unwrap();
                assert!(w.bruhat_leq(&v) && w != v);
                assert_eq!(rank(&w) + 1, rank(&v));
            }
        }
    }
}

/// `(i, j)` with `i ∈ [m]`, `(i,j)_B` a reflection and `τ·(i,j)_B ⋖ τ`.
fn signed_reflection_covers(tau: &SignedPermutation) -> Vec<(i64, i64)> {
    let below = covers_b(tau);
    let m = tau.len() as i64;
    let mut out = Vec::new();
    for i in 1..=m {
        for j in (-m..=m).filter(|&j| j != 0 && (i < j.abs() || j == -i)) {
            if below.contains(&tau.times_reflection(i, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

#[test]
fn signed_involution_gives_a_coatom_above_everything_smaller() {
    let mut outside = 0;
    for n in [2, 4] {
        let elems = enumerate_wachs::<SignedPermutation>(n).unwrap();
        for v in &elems {
            let code = v.encode().unwrap();
            for (i, j) in signed_reflection_covers(code.tau()) {
                if code.t().contains(i as usize) || code.t().contains(j.unsigned_abs() as usize) {
                    continue;
                }
                let w = involution_wb(v, i, j).unwrap();
                assert!(w.bruhat_leq(v) && w != *v);
                assert_eq!(rank(v) - rank(&w), 1);
                let floor = code.tau().times_reflection(i, j);
                for u in &elems {
                    let sigma = u.encode().unwrap().tau().clone();
                    if !sigma.bruhat_leq(&floor) {
                        continue;
                    }
                    if u.bruhat_leq(v) {
                        assert!(u.bruhat_leq(&w), "{u} <= {v}, expected <= {w}");
                    } else if !u.bruhat_leq(&w) {
                        outside += 1;
                    }
                }
            }
        }
    }
    // the conclusion needs u < v: some u with σ ≤ τ·(i,j)_B are not below w
    assert!(outside > 0);
}

#[test]
fn position_lowering_step() {
    for n in [3, 5, 7] {
        let elems = enumerate_wachs::<Permutation>(n).unwrap();
        for v in &elems {
            let i = v.pos();
            if i + 2 > n {
                continue;
            }
            let next = v.compose(&Permutation::transposition(n, i + 1, i + 2)).unwrap();
            let z = if v.bruhat_leq(&next) {
                v.compose(&Permutation::transposition(n, i, i + 2)).unwrap()
            } else {
                next
            };
            assert!(z.is_wachs(), "z({v}) = {z}");
            for u in &elems {
                if u.pos() > i && u.bruhat_leq(v) {
                    assert!(u.bruhat_leq(&z), "{u} < {v}, expected <= {z}");
                }
            }
        }
    }
}

#[test]
fn c_dominates_everything_with_the_top_letter_further_right() {
    for n in [3, 5] {
        let elems = enumerate_wachs::<SignedPermutation>(n).unwrap();
        let top = n as i64;
        for v in &elems {
            let j = v.position_of(top);
            let covers = wachs_covers(v).unwrap();
            let moving: Vec<&SignedPermutation> = covers.iter().filter(|u| u.position_of(top) != j).collect();
            match coatom_c(v) {
                Ok(c) => {
                    assert!(covers.contains(&c), "c({v}) = {c}");
                    assert_eq!(rank(&c) + 1, rank(v));
                    // c(v) keeps the letter in place exactly when the next pair is a descent
                    if c.position_of(top) == j {
                        assert!(moving.is_empty(), "v = {v}");
                    } else {
                        assert_eq!(moving, vec![&c], "v = {v}");
                    }
                    for u in &elems {
                        if u.bruhat_leq(v) && j < u.position_of(top) {
                            assert!(u.bruhat_leq(&c), "{u} < {v}, expected <= {c}");
                        }
                    }
                }
                Err(_) => assert!(moving.is_empty(), "v = {v}"),
            }
        }
    }
}

fn union_closed<W: Coords>(n: usize) {
    let elems = enumerate_wachs::<W>(n).unwrap();
    let codes: Vec<W::Code> = elems.iter().map(|v| v.encode().unwrap()).collect();
    let index: HashMap<(Option<i64>, W, Subset), usize> =
        codes.iter().enumerate().map(|(k, c)| (W::coords(c), k)).collect();
    for u in &elems {
        for v in &elems {
            if !u.bruhat_leq(v) {
                continue;
            }
            let mut between: HashMap<(Option<i64>, W), Vec<Subset>> = HashMap::new();
            for (w, c) in elems.iter().zip(&codes) {
                if u.bruhat_leq(w) && w.bruhat_leq(v) {
                    let (i, s, t) = W::coords(c);
                    between.entry((i, s)).or_default().push(t);
                }
            }
            for ((i, s), ts) in &between {
                for a in ts {
                    for b in ts {
                        let k = index[&(*i, s.clone(), a.union(*b))];
                        assert!(u.bruhat_leq(&elems[k]) && elems[k].bruhat_leq(v), "{u} <= {} <= {v}", elems[k]);
                    }
                }
            }
        }
    }
}

#[test]
fn intervals_are_closed_under_union_of_subsets() {
    union_closed::<Permutation>(5);
    union_closed::<SignedPermutation>(5);
}

#[test]
fn reversal_is_an_antiautomorphism() {
    for n in 1..=7 {
        let (elems, poset) = wachs_poset::<Permutation>(n).unwrap();
        let w0 = Permutation::longest(n);
        let top = rank(&w0);
        let index: HashMap<&Permutation, usize> = elems.iter().enumerate().map(|(k, v)| (v, k)).collect();
        let map: Vec<usize> = elems.iter().map(|v| index[&v.compose(&w0).unwrap()]).collect();
        assert!(poset.dual_check(&map).unwrap(), "n = {n}");
        for v in &elems {
            assert_eq!(rank(&v.compose(&w0).unwrap()), top - rank(v));
        }
    }
}
