//! Finite posets over opaque string keys.
//!
//! A poset stores, for every element, its principal up-set and down-set as
//! bitsets together with the cover relation in both directions. Everything
//! else (grading, Möbius values, lattice operations, isomorphism) is derived.

mod export;
mod iso;
mod lattice;
mod mobius;
mod product;

use std::collections::HashMap;
use std::fmt::Display;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub use iso::poset_isomorphic;
pub use lattice::LatticeReport;
pub use mobius::MobiusTable;
pub use product::{antichain, boolean_algebra, cartesian_product, chain, ordinal_product};

/// Order axioms are checked on construction up to this many elements.
pub const VALIDATE_LIMIT: usize = 5000;

#[derive(Clone, Debug)]
pub struct FinitePoset {
    keys: Vec<String>,
    index: HashMap<String, usize>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    down_size: Vec<usize>,
    up_size: Vec<usize>,
    /// A linear extension (indices sorted by down-set size).
    topo: Vec<usize>,
}

/// Outcome of [`FinitePoset::grade`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grading {
    Graded { rank: Vec<usize> },
    NotGraded(ChainWitness),
}

/// Two saturated chains from `bottom` to `top` of different lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWitness {
    pub bottom: usize,
    pub top: usize,
    pub short_chain: Vec<usize>,
    pub long_chain: Vec<usize>,
}

impl Grading {
    pub fn rank(&self) -> Option<&[usize]> {
        match self {
            Grading::Graded { rank } => Some(rank),
            Grading::NotGraded(_) => None,
        }
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, Grading::Graded { .. })
    }
}

impl FinitePoset {
    /// Builds the poset on `keys` ordered by `leq(i, j)` over indices.
    /// Rows are evaluated in parallel; the oracle must be a partial order.
    pub fn from_leq<F>(keys: Vec<String>, leq: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let n = keys.len();
        let up: Vec<FixedBitSet> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(n);
                for j in 0..n {
                    if i == j || leq(i, j) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        if n <= VALIDATE_LIMIT {
            for i in 0..n {
                if !leq(i, i) {
                    return Err(Error::OrderViolation(format!("{} is not ≤ itself", keys[i])));
                }
            }
        }
        Self::from_up_sets(keys, up, n <= VALIDATE_LIMIT)
    }

    /// Builds a poset from typed elements and a comparison on them.
    pub fn from_elements<T, F>(elements: &[T], leq: F) -> Result<Self>
    where
        T: Display + Sync,
        F: Fn(&T, &T) -> bool + Sync,
    {
        let keys = elements.iter().map(ToString::to_string).collect();
        Self::from_leq(keys, |i, j| leq(&elements[i], &elements[j]))
    }

    /// Builds the poset generated by a (not necessarily reduced) relation
    /// given as lower covers: `lower[j]` lists elements below `j`.
    pub fn from_lower_covers(keys: Vec<String>, lower: &[Vec<usize>]) -> Result<Self> {
        let n = keys.len();
        let mut indeg = vec![0usize; n];
        let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (j, ls) in lower.iter().enumerate() {
            for &i in ls {
                above[i].push(j);
                indeg[j] += 1;
            }
        }
        let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(i) = queue.pop() {
            order.push(i);
            for &j in &above[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    queue.push(j);
                }
            }
        }
        if order.len() != n {
            return Err(Error::OrderViolation("cover relation has a cycle".into()));
        }
        let mut down: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n); n];
        for &j in &order {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(j);
            for &i in &lower[j] {
                row.union_with(&down[i]);
            }
            down[j] = row;
        }
        let up = transpose(&down);
        Self::from_up_sets(keys, up, false)
    }

    fn from_up_sets(keys: Vec<String>, up: Vec<FixedBitSet>, validate: bool) -> Result<Self> {
        let n = keys.len();
        if validate {
            validate_axioms(&keys, &up)?;
        }
        let down = transpose(&up);
        let upper_covers: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut strict = up[i].clone();
                strict.set(i, false);
                let mut blocked = FixedBitSet::with_capacity(n);
                for k in strict.ones() {
                    let mut s = up[k].clone();
                    s.set(k, false);
                    blocked.union_with(&s);
                }
                strict.difference(&blocked).collect()
            })
            .collect();
        let mut lower_covers = vec![Vec::new(); n];
        for (i, cs) in upper_covers.iter().enumerate() {
            for &j in cs {
                lower_covers[j].push(i);
            }
        }
        let down_size: Vec<usize> = down.iter().map(|d| d.count_ones(..)).collect();
        let up_size: Vec<usize> = up.iter().map(|u| u.count_ones(..)).collect();
        let mut topo: Vec<usize> = (0..n).collect();
        topo.sort_by_key(|&i| (down_size[i], i));
        let index = keys.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        Ok(FinitePoset { keys, index, up, down, down_size, up_size, upper_covers, lower_covers, topo })
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[String] {
        &self.keys
    }

    pub fn key(&self, i: usize) -> &str {
        &self.keys[i]
    }

    pub fn index_of(&self, key: &str) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn up_set(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    pub fn down_set(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    /// All cover pairs `(i, j)` with `i ⋖ j`, sorted.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .upper_covers
            .iter()
            .enumerate()
            .flat_map(|(i, cs)| cs.iter().map(move |&j| (i, j)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn cover_count(&self) -> usize {
        self.upper_covers.iter().map(Vec::len).sum()
    }

    pub fn linear_extension(&self) -> &[usize] {
        &self.topo
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.up_size[i] == self.len())
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.down_size[i] == self.len())
    }

    /// Number of elements `≤ i`.
    pub fn down_size(&self, i: usize) -> usize {
        self.down_size[i]
    }

    /// Number of elements `≥ i`.
    pub fn up_size(&self, i: usize) -> usize {
        self.up_size[i]
    }

    pub(crate) fn bounds(&self) -> Result<(usize, usize)> {
        let bottom = self.minimum().ok_or(Error::Unbounded("minimum"))?;
        let top = self.maximum().ok_or(Error::Unbounded("maximum"))?;
        Ok((bottom, top))
    }

    /// Ranks by longest cover path from the minimum. The poset is graded iff
    /// every cover raises this rank by exactly one; otherwise the first bad
    /// cover yields two saturated chains of different lengths.
    pub fn grade(&self) -> Result<Grading> {
        let (bottom, _) = self.bounds()?;
        let n = self.len();
        let mut rank = vec![0usize; n];
        let mut pred = vec![usize::MAX; n];
        for &j in &self.topo {
            for &i in &self.lower_covers[j] {
                if pred[j] == usize::MAX || rank[i] + 1 > rank[j] {
                    rank[j] = rank[i] + 1;
                    pred[j] = i;
                }
            }
        }
        let chain_to = |mut v: usize| {
            let mut c = vec![v];
            while v != bottom {
                v = pred[v];
                c.push(v);
            }
            c.reverse();
            c
        };
        for &j in &self.topo {
            for &i in &self.lower_covers[j] {
                if rank[i] + 1 != rank[j] {
                    let mut short_chain = chain_to(i);
                    short_chain.push(j);
                    return Ok(Grading::NotGraded(ChainWitness {
                        bottom,
                        top: j,
                        short_chain,
                        long_chain: chain_to(j),
                    }));
                }
            }
        }
        Ok(Grading::Graded { rank })
    }

    /// Rank of a graded bounded poset.
    pub fn poset_rank(&self) -> Result<usize> {
        let (_, top) = self.bounds()?;
        match self.grade()? {
            Grading::Graded { rank } => Ok(rank[top]),
            Grading::NotGraded(w) => Err(self.not_graded(&w)),
        }
    }

    pub(crate) fn not_graded(&self, w: &ChainWitness) -> Error {
        Error::NotGraded(format!(
            "[{}, {}] has saturated chains of lengths {} and {}",
            self.keys[w.bottom],
            self.keys[w.top],
            w.short_chain.len() - 1,
            w.long_chain.len() - 1
        ))
    }

    pub(crate) fn require_graded(&self) -> Result<Vec<usize>> {
        match self.grade()? {
            Grading::Graded { rank } => Ok(rank),
            Grading::NotGraded(w) => Err(self.not_graded(&w)),
        }
    }

    /// The induced subposet on `members`, in the given order.
    pub fn subposet(&self, members: &[usize]) -> FinitePoset {
        let keys = members.iter().map(|&i| self.keys[i].clone()).collect();
        Self::from_leq(keys, |a, b| self.leq(members[a], members[b]))
            .expect("restriction of a partial order")
    }

    /// The closed interval `[a, b]`, or an empty poset if `a ≰ b`.
    pub fn interval(&self, a: usize, b: usize) -> FinitePoset {
        let mut cut = self.up[a].clone();
        cut.intersect_with(&self.down[b]);
        let members: Vec<usize> = cut.ones().collect();
        self.subposet(&members)
    }

    /// `true` iff `map` is an order-reversing bijection onto itself.
    pub fn dual_check(&self, map: &[usize]) -> Result<bool> {
        let n = self.len();
        let mut seen = vec![false; n];
        if map.len() != n || map.iter().any(|&m| m >= n || std::mem::replace(&mut seen[m], true)) {
            return Err(Error::Unsupported("dual_check requires a bijection".into()));
        }
        Ok((0..n).into_par_iter().all(|u| (0..n).all(|v| self.leq(u, v) == self.leq(map[v], map[u]))))
    }

    /// `Σ_v x^{rank(v)}`.
    pub fn rank_generating_polynomial(&self) -> Result<crate::qpoly::IntPolynomial> {
        let rank = self.require_graded()?;
        let mut p = crate::qpoly::IntPolynomial::zero();
        for r in rank {
            p.add_term(r, 1);
        }
        Ok(p)
    }
}

fn transpose(rows: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let n = rows.len();
    let mut out = vec![FixedBitSet::with_capacity(n); n];
    for (i, row) in rows.iter().enumerate() {
        for j in row.ones() {
            out[j].insert(i);
        }
    }
    out
}

fn validate_axioms(keys: &[String], up: &[FixedBitSet]) -> Result<()> {
    let n = keys.len();
    let bad = (0..n).into_par_iter().find_map_first(|i| {
        for j in up[i].ones() {
            if j != i && up[j].contains(i) {
                return Some(format!("{} ≤ {} ≤ {} with distinct ends", keys[i], keys[j], keys[i]));
            }
            if !up[j].is_subset(&up[i]) {
                let k = up[j].difference(&up[i]).next().expect("nonempty difference");
                return Some(format!(
                    "{} ≤ {} ≤ {} but {} ≰ {}",
                    keys[i], keys[j], keys[k], keys[i], keys[k]
                ));
            }
        }
        None
    });
    match bad {
        Some(msg) => Err(Error::OrderViolation(msg)),
        None => Ok(()),
    }
}
