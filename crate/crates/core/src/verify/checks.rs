use std::collections::HashMap;

use rayon::prelude::*;

use super::Outcome;
use crate::perm::{Kind, Permutation, SignedPermutation};
use crate::poset::Grading;
use crate::wachs::{
    bruhat_poset, closed_polys, enumerate_wachs, mobius_closed, rank_lw, stabilizer_gi, stats_distribution_check,
    wachs_covers, wachs_poset, wachs_quotient_poset, wachs_rank, WachsElement,
};
use crate::weak::{wachs_weak_poset, weak_product_iso, Side, WeakElement};

fn fail(msg: String) -> Outcome {
    Ok(Some(msg))
}

macro_rules! by_kind {
    ($kind:expr, $f:ident, $n:expr) => {
        match $kind {
            Kind::A => $f::<Permutation>($n),
            Kind::B => $f::<SignedPermutation>($n),
        }
    };
}

pub(super) fn graded(kind: Kind, n: usize) -> Outcome {
    fn go<W: WachsElement>(n: usize) -> Outcome {
        let (elems, poset) = wachs_poset::<W>(n)?;
        let rank = match poset.grade()? {
            Grading::Graded { rank } => rank,
            Grading::NotGraded(w) => {
                let show = |c: &[usize]| c.iter().map(|&i| elems[i].to_string()).collect::<Vec<_>>().join(" < ");
                return fail(format!("chains {} and {}", show(&w.short_chain), show(&w.long_chain)));
            }
        };
        for (k, v) in elems.iter().enumerate() {
            if rank[k] != rank_lw(v)? {
                return fail(format!("{v}: poset rank {} but ℓ_W = {}", rank[k], rank_lw(v)?));
            }
        }
        let top = poset.poset_rank()?;
        if top != wachs_rank(W::KIND, n) {
            return fail(format!("rank {top}, expected {}", wachs_rank(W::KIND, n)));
        }
        Ok(None)
    }
    by_kind!(kind, go, n)
}

pub(super) fn order(kind: Kind, n: usize) -> Outcome {
    fn go<W: WachsElement>(n: usize) -> Outcome {
        let elems = enumerate_wachs::<W>(n)?;
        let codes: Vec<W::Code> = elems.iter().map(|v| v.encode()).collect::<crate::Result<_>>()?;
        let bad = (0..elems.len()).into_par_iter().find_map_first(|a| {
            (0..elems.len()).find_map(|b| {
                let closed = W::code_leq(&codes[a], &codes[b]);
                (closed != elems[a].bruhat_leq(&elems[b]))
                    .then(|| format!("{} vs {}: closed form says {closed}", elems[a], elems[b]))
            })
        });
        Ok(bad)
    }
    by_kind!(kind, go, n)
}

pub(super) fn covers(kind: Kind, n: usize) -> Outcome {
    fn go<W: WachsElement>(n: usize) -> Outcome {
        let (elems, oracle) = bruhat_poset::<W>(n)?;
        for (k, v) in elems.iter().enumerate() {
            let mut expected: Vec<W> = oracle.lower_covers(k).iter().map(|&i| elems[i].clone()).collect();
            expected.sort();
            if wachs_covers(v)? != expected {
                return fail(format!("lower covers of {v} differ"));
            }
        }
        Ok(None)
    }
    by_kind!(kind, go, n)
}

pub(super) fn mobius(kind: Kind, n: usize) -> Outcome {
    fn go<W: WachsElement>(n: usize) -> Outcome {
        let (elems, poset) = wachs_poset::<W>(n)?;
        let bottom = poset.minimum().expect("identity is the minimum");
        let mu = poset.mobius();
        for (k, v) in elems.iter().enumerate() {
            let closed = mobius_closed::<W>(&v.encode()?);
            if mu.get(bottom, k) != closed {
                return fail(format!("μ(e, {v}) = {} but closed form gives {closed}", mu.get(bottom, k)));
            }
        }
        Ok(None)
    }
    by_kind!(kind, go, n)
}

pub(super) fn charpoly(kind: Kind, n: usize) -> Outcome {
    fn go<W: WachsElement>(n: usize) -> Outcome {
        let (_, poset) = wachs_poset::<W>(n)?;
        let (got, want) = (poset.characteristic_polynomial()?, closed_polys(W::KIND, n).char_poly);
        Ok((got != want).then(|| format!("computed {got}, closed form {want}")))
    }
    by_kind!(kind, go, n)
}

pub(super) fn rankpoly(kind: Kind, n: usize) -> Outcome {
    fn go<W: WachsElement>(n: usize) -> Outcome {
        let (_, poset) = wachs_poset::<W>(n)?;
        let (got, want) = (poset.rank_generating_polynomial()?, closed_polys(W::KIND, n).rank_gen);
        if got != want {
            return fail(format!("computed {got}, closed form {want}"));
        }
        Ok((!got.is_reciprocal()).then(|| format!("{got} is not reciprocal")))
    }
    by_kind!(kind, go, n)
}

pub(super) fn weakiso(kind: Kind, n: usize) -> Outcome {
    let report = weak_product_iso(kind, n)?;
    if !report.holds {
        let (u, v) = report.counterexample.unwrap_or_default();
        return fail(format!("map is not an isomorphism; first bad pair {u}, {v}"));
    }
    if !(report.lattice.is_lattice && report.lattice.is_complemented) {
        return fail(format!("right weak order: {:?}", report.lattice));
    }
    Ok(None)
}

pub(super) fn selfdual(_: Kind, n: usize) -> Outcome {
    let (elems, poset) = wachs_poset::<Permutation>(n)?;
    let w0 = Permutation::longest(n);
    let index: HashMap<&Permutation, usize> = elems.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let images: Vec<Permutation> = elems.iter().map(|v| v.compose(&w0)).collect::<crate::Result<_>>()?;
    let map: Vec<usize> = images.iter().map(|w| index[w]).collect();
    if !poset.dual_check(&map)? {
        return fail("v ↦ v·w_n is not order-reversing".into());
    }
    let top = rank_lw(&w0)?;
    for (v, w) in elems.iter().zip(&images) {
        if rank_lw(w)? + rank_lw(v)? != top {
            return fail(format!("ℓ_W({v}) + ℓ_W({w}) ≠ {top}"));
        }
    }
    Ok(None)
}

pub(super) fn statdist(_: Kind, n: usize) -> Outcome {
    Ok((!stats_distribution_check(n)?).then(|| "distributions differ".to_string()))
}

pub(super) fn gi_stabilizer(_: Kind, n: usize) -> Outcome {
    let g = stabilizer_gi(n)?;
    if g != enumerate_wachs::<Permutation>(n)? {
        return fail(format!("stabilizer has {} elements", g.len()));
    }
    let bad = g.par_iter().find_map_first(|x| {
        if !g.contains(&x.inverse()) {
            return Some(format!("{x} has inverse outside"));
        }
        g.iter().find_map(|y| {
            let xy = x.compose(y).expect("same size");
            (g.binary_search(&xy).is_err()).then(|| format!("{x}·{y} = {xy} outside"))
        })
    });
    Ok(bad)
}

pub(super) fn nongraded_remark(_: Kind, n: usize) -> Outcome {
    let (_, poset) = wachs_quotient_poset(n, &[1])?;
    let (Some(a), Some(b)) = (poset.index_of("124365"), poset.index_of("561234")) else {
        return fail("interval endpoints missing".into());
    };
    let interval = poset.interval(a, b);
    Ok(interval.grade()?.is_graded().then(|| "[124365, 561234] is graded".to_string()))
}

pub(super) fn nongraded_weak_left(kind: Kind, n: usize) -> Outcome {
    fn go<W: WachsElement + WeakElement>(n: usize) -> Outcome {
        let (_, poset) = wachs_weak_poset::<W>(n, Side::Left)?;
        Ok(poset.grade()?.is_graded().then(|| "left weak order is graded".to_string()))
    }
    by_kind!(kind, go, n)
}

pub(super) fn mobius_values(kind: Kind, n: usize) -> Outcome {
    fn go<W: WachsElement>(n: usize) -> Outcome {
        let (elems, poset) = wachs_poset::<W>(n)?;
        let mu = poset.mobius();
        mu.fill();
        let bad = (0..elems.len()).find_map(|u| {
            mu.row(u)
                .iter()
                .position(|x| x.abs() > 1)
                .map(|v| format!("μ({}, {}) = {}", elems[u], elems[v], mu.get(u, v)))
        });
        Ok(bad)
    }
    by_kind!(kind, go, n)
}

pub(super) fn left_lattice(_: Kind, n: usize) -> Outcome {
    let (_, poset) = wachs_weak_poset::<Permutation>(n, Side::Left)?;
    Ok((!poset.is_lattice()?).then(|| "some pair has no meet".to_string()))
}
