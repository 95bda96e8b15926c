use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use super::FinitePoset;
use crate::error::Result;
use crate::qpoly::IntPolynomial;

/// Möbius values `μ(u, v)`, one row per `u`, computed on first use.
pub struct MobiusTable<'a> {
    poset: &'a FinitePoset,
    rows: Vec<OnceLock<Vec<i64>>>,
}

impl<'a> MobiusTable<'a> {
    pub fn new(poset: &'a FinitePoset) -> Self {
        MobiusTable { poset, rows: (0..poset.len()).map(|_| OnceLock::new()).collect() }
    }

    /// `μ(u, v)`; zero when `u ≰ v`.
    pub fn get(&self, u: usize, v: usize) -> i64 {
        self.row(u)[v]
    }

    /// `μ(u, ·)` for every element.
    pub fn row(&self, u: usize) -> &[i64] {
        self.rows[u].get_or_init(|| mobius_row(self.poset, u))
    }

    /// Fills every row, sharding sources across the rayon pool.
    pub fn fill(&self) {
        (0..self.rows.len()).into_par_iter().for_each(|u| {
            self.row(u);
        });
    }
}

fn mobius_row(p: &FinitePoset, u: usize) -> Vec<i64> {
    let n = p.len();
    let mut mu = vec![0i64; n];
    mu[u] = 1;
    let mut between = FixedBitSet::with_capacity(n);
    for &v in p.linear_extension() {
        if v == u || !p.leq(u, v) {
            continue;
        }
        between.clone_from(p.up_set(u));
        between.intersect_with(p.down_set(v));
        between.set(v, false);
        mu[v] = -between.ones().map(|z| mu[z]).sum::<i64>();
    }
    mu
}

impl FinitePoset {
    pub fn mobius(&self) -> MobiusTable<'_> {
        MobiusTable::new(self)
    }

    /// `Σ_z μ(0̂, z) x^{ρ(1̂) - ρ(z)}`.
    pub fn characteristic_polynomial(&self) -> Result<IntPolynomial> {
        let (bottom, top) = self.bounds()?;
        let rank = self.require_graded()?;
        let mu = mobius_row(self, bottom);
        let mut out = IntPolynomial::zero();
        for (z, &m) in mu.iter().enumerate() {
            if m != 0 {
                out.add_term(rank[top] - rank[z], m);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{boolean_algebra, chain};
    use super::*;

    #[test]
    fn boolean_algebra_values() {
        let b = boolean_algebra(2);
        let mu = b.mobius();
        let (bot, top) = b.bounds().unwrap();
        assert_eq!(mu.get(bot, top), 1);
        for u in 0..b.len() {
            assert_eq!(mu.get(u, u), 1);
        }
        let b3 = boolean_algebra(3);
        let (bot, top) = b3.bounds().unwrap();
        assert_eq!(b3.mobius().get(bot, top), -1);
    }

    #[test]
    fn recursion_identity_holds_everywhere() {
        let p = super::super::cartesian_product(&chain(3), &boolean_algebra(2));
        let mu = p.mobius();
        mu.fill();
        for u in 0..p.len() {
            for v in 0..p.len() {
                if u == v || !p.leq(u, v) {
                    assert_eq!(mu.get(u, v), if u == v { 1 } else { 0 });
                    continue;
                }
                let s: i64 = (0..p.len()).filter(|&z| p.leq(u, z) && p.leq(z, v)).map(|z| mu.get(u, z)).sum();
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(chain(1).characteristic_polynomial().unwrap(), IntPolynomial::one());
        // chain of length 1: x - 1
        assert_eq!(chain(2).characteristic_polynomial().unwrap(), IntPolynomial::x_minus_one());
        assert_eq!(
            boolean_algebra(3).characteristic_polynomial().unwrap(),
            IntPolynomial::x_minus_one().pow(3)
        );
    }
}
