use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use super::FinitePoset;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeReport {
    pub is_lattice: bool,
    pub is_complemented: bool,
}

impl FinitePoset {
    /// Greatest element of a down-closed set, if any. Only the member with
    /// the largest principal down-set can be the maximum, and it is one
    /// exactly when that down-set is all of `set`.
    fn max_of_down_set(&self, set: &FixedBitSet) -> Option<usize> {
        let z = set.ones().max_by_key(|&z| self.down_size(z))?;
        (self.down_size(z) == set.count_ones(..)).then_some(z)
    }

    fn min_of_up_set(&self, set: &FixedBitSet) -> Option<usize> {
        let z = set.ones().max_by_key(|&z| self.up_size(z))?;
        (self.up_size(z) == set.count_ones(..)).then_some(z)
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let mut lower = self.down_set(a).clone();
        lower.intersect_with(self.down_set(b));
        self.max_of_down_set(&lower)
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let mut upper = self.up_set(a).clone();
        upper.intersect_with(self.up_set(b));
        self.min_of_up_set(&upper)
    }

    /// A bounded poset is a lattice iff every pair has a meet.
    pub fn is_lattice(&self) -> Result<bool> {
        self.bounds()?;
        let n = self.len();
        Ok((0..n).into_par_iter().all(|a| (a + 1..n).all(|b| self.meet(a, b).is_some())))
    }

    pub fn lattice_checks(&self) -> Result<LatticeReport> {
        let (bottom, top) = self.bounds()?;
        if !self.is_lattice()? {
            return Ok(LatticeReport { is_lattice: false, is_complemented: false });
        }
        let n = self.len();
        let is_complemented = (0..n).into_par_iter().all(|x| {
            (0..n).any(|y| self.meet(x, y) == Some(bottom) && self.join(x, y) == Some(top))
        });
        Ok(LatticeReport { is_lattice: true, is_complemented })
    }
}
