//! Left and right weak orders, left inversion sets and the product
//! decomposition of the right weak order on Wachs permutations.
//!
//! Reflections are keyed as `(a, b)`: `1 ≤ a < b` in `S_n`; in `B_n`
//! either `1 ≤ a < |b|` for `(a,b)(-a,-b)` or `b = -a` for `(a,-a)`.
//! `u ≤_R v` iff `T_L(u) ⊆ T_L(v)`, and `u ≤_L v` iff `u⁻¹ ≤_R v⁻¹`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{CoxeterElement, Kind, Permutation, SignedPermutation};
use crate::poset::{FinitePoset, LatticeReport};
use crate::wachs::{enumerate_wachs, Subset, WachsCodeA, WachsCodeB, WachsElement};

pub type Reflection = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "L",
            Side::Right => "R",
        })
    }
}

pub trait WeakElement: CoxeterElement {
    /// `T_L(w)`, read off the positions of the letters.
    fn tl_set(&self) -> BTreeSet<Reflection>;
    /// `T_L(w)` by testing `ℓ(tw) < ℓ(w)` for every reflection `t`.
    fn tl_set_by_length(&self) -> BTreeSet<Reflection>;
    /// Dense index of a reflection key among those of size `n`.
    fn reflection_slot(n: usize, t: Reflection) -> usize;
    fn reflection_slots(n: usize) -> usize;

    fn tl_mask(&self) -> FixedBitSet {
        let n = self.size();
        let mut mask = FixedBitSet::with_capacity(Self::reflection_slots(n));
        for t in self.tl_set() {
            mask.insert(Self::reflection_slot(n, t));
        }
        mask
    }
}

impl WeakElement for Permutation {
    fn tl_set(&self) -> BTreeSet<Reflection> {
        let n = self.len();
        let pos = |v: usize| self.position_of(v);
        (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .filter(|&(a, b)| pos(b) < pos(a))
            .map(|(a, b)| (a as i64, b as i64))
            .collect()
    }

    fn tl_set_by_length(&self) -> BTreeSet<Reflection> {
        let n = self.len();
        let len = self.length();
        let mut out = BTreeSet::new();
        for a in 1..=n {
            for b in a + 1..=n {
                let t = Permutation::transposition(n, a, b);
                if t.compose(self).expect("same size").length() < len {
                    out.insert((a as i64, b as i64));
                }
            }
        }
        out
    }

    fn reflection_slot(n: usize, (a, b): Reflection) -> usize {
        (a as usize - 1) * n + (b as usize - 1)
    }

    fn reflection_slots(n: usize) -> usize {
        n * n
    }
}

/// Every reflection key of `B_n`.
fn b_reflections(n: usize) -> impl Iterator<Item = Reflection> {
    let n = n as i64;
    (1..=n).flat_map(move |a| {
        std::iter::once((a, -a)).chain((a + 1..=n).flat_map(move |b| [(a, b), (a, -b)]))
    })
}

impl WeakElement for SignedPermutation {
    fn tl_set(&self) -> BTreeSet<Reflection> {
        let pos = |v: i64| self.position_of(v);
        b_reflections(self.len())
            .filter(|&(a, b)| match b {
                _ if b == -a => pos(a) < pos(-a),
                _ if b > 0 => pos(b) < pos(a),
                _ => pos(b) > pos(a),
            })
            .collect()
    }

    fn tl_set_by_length(&self) -> BTreeSet<Reflection> {
        let n = self.len();
        let len = self.length();
        b_reflections(n)
            .filter(|&(a, b)| {
                let t = crate::perm::signed_reflection(a, b, n).expect("valid key");
                t.compose(self).expect("same size").length() < len
            })
            .collect()
    }

    fn reflection_slot(n: usize, (a, b): Reflection) -> usize {
        let n = n as i64;
        ((a - 1) * (2 * n + 1) + (b + n)) as usize
    }

    fn reflection_slots(n: usize) -> usize {
        n * (2 * n + 1)
    }
}

fn same_size<W: CoxeterElement>(u: &W, v: &W) -> Result<()> {
    if u.size() != v.size() {
        return Err(Error::SizeMismatch { left: u.size(), right: v.size() });
    }
    Ok(())
}

pub fn weak_leq<W: WeakElement>(u: &W, v: &W, side: Side) -> Result<bool> {
    same_size(u, v)?;
    Ok(match side {
        Side::Right => u.tl_set().is_subset(&v.tl_set()),
        Side::Left => u.inverse().tl_set().is_subset(&v.inverse().tl_set()),
    })
}

/// The weak order of the given side restricted to `elems`.
pub fn weak_poset<W: WeakElement>(elems: &[W], side: Side) -> Result<FinitePoset> {
    let masks: Vec<FixedBitSet> = elems
        .par_iter()
        .map(|w| match side {
            Side::Right => w.tl_mask(),
            Side::Left => w.inverse().tl_mask(),
        })
        .collect();
    let keys = elems.iter().map(ToString::to_string).collect();
    FinitePoset::from_leq(keys, |i, j| masks[i].is_subset(&masks[j]))
}

/// `(W(S_n), ≤)` or `(W(B_n), ≤)` under a weak order.
pub fn wachs_weak_poset<W: WachsElement + WeakElement>(n: usize, side: Side) -> Result<(Vec<W>, FinitePoset)> {
    let elems = enumerate_wachs::<W>(n)?;
    let poset = weak_poset(&elems, side)?;
    Ok((elems, poset))
}

/// The image of a Wachs code in `G_{⌈n/2⌉} × P([⌊n/2⌋])`: `τ` (with the
/// top letter reinserted at the position coordinate for odd sizes)
/// together with `{|τ(k)| : k ∈ T}`.
pub trait ProductImage: WachsElement + WeakElement {
    fn product_image(code: &Self::Code) -> (Self, Subset);
}

impl ProductImage for Permutation {
    fn product_image(code: &WachsCodeA) -> (Self, Subset) {
        let tau = code.tau();
        let values = code.t().iter().map(|k| tau.get(k)).collect();
        let bar = match code.position() {
            None => tau.clone(),
            Some(i) => {
                let mut w: Vec<i64> = tau.word().iter().map(|&x| x as i64).collect();
                w.insert(i - 1, tau.len() as i64 + 1);
                Permutation::new(w).expect("insertion keeps a bijection")
            }
        };
        (bar, values)
    }
}

impl ProductImage for SignedPermutation {
    fn product_image(code: &WachsCodeB) -> (Self, Subset) {
        let tau = code.tau();
        let values = code.t().iter().map(|k| tau.get(k as i64).unsigned_abs() as usize).collect();
        let bar = match code.position() {
            None => tau.clone(),
            Some(i) => {
                let mut w: Vec<i64> = tau.window().iter().map(|&x| x as i64).collect();
                w.insert(i.unsigned_abs() as usize - 1, i.signum() * (tau.len() as i64 + 1));
                SignedPermutation::new(w).expect("insertion keeps a bijection")
            }
        };
        (bar, values)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WeakIsoReport {
    pub kind: Kind,
    pub n: usize,
    pub holds: bool,
    /// `(v, "(τ̄, X)")` for every Wachs element, in enumeration order.
    pub map: Vec<(String, String)>,
    /// A pair on which the map fails to reflect or preserve the order.
    pub counterexample: Option<(String, String)>,
    /// Lattice properties of the Wachs side.
    pub lattice: LatticeReport,
}

fn product_iso<W: ProductImage>(n: usize) -> Result<WeakIsoReport> {
    let (elems, poset) = wachs_weak_poset::<W>(n, Side::Right)?;
    let images: Vec<(W, Subset)> =
        elems.iter().map(|v| v.encode().map(|c| W::product_image(&c))).collect::<Result<_>>()?;
    let masks: Vec<FixedBitSet> = images.iter().map(|(t, _)| t.tl_mask()).collect();
    let map: Vec<(String, String)> =
        elems.iter().zip(&images).map(|(v, (t, x))| (v.to_string(), format!("({t}, {x})"))).collect();

    let target_size = W::all((n + 1) / 2).len() << (n / 2);
    let distinct: HashMap<&(W, Subset), usize> = images.iter().enumerate().map(|(k, im)| (im, k)).collect();
    let bijective = distinct.len() == elems.len() && elems.len() == target_size;

    let counterexample = (0..elems.len()).into_par_iter().find_map_first(|a| {
        (0..elems.len()).find_map(|b| {
            let image_leq = masks[a].is_subset(&masks[b]) && images[a].1.is_subset(images[b].1);
            (image_leq != poset.leq(a, b)).then(|| (elems[a].to_string(), elems[b].to_string()))
        })
    });
    Ok(WeakIsoReport {
        kind: W::KIND,
        n,
        holds: bijective && counterexample.is_none(),
        map,
        counterexample,
        lattice: poset.lattice_checks()?,
    })
}

/// Checks that `(τ, T) ↦ (τ̄, {|τ(k)| : k ∈ T})` is an isomorphism from
/// the right weak order on Wachs permutations onto the product of the
/// right weak order on `G_{⌈n/2⌉}` with a Boolean lattice.
pub fn weak_product_iso(kind: Kind, n: usize) -> Result<WeakIsoReport> {
    match kind {
        Kind::A => product_iso::<Permutation>(n),
        Kind::B => product_iso::<SignedPermutation>(n),
    }
}
