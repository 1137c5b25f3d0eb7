//! Numerical semigroups and their relative ideals.
//!
//! Monomial fractional ideals of `R = k[[t^S]]` are subsets `E ⊆ ℤ` with
//! `E + S ⊆ E`. Products become sumsets, colons become
//! `E − F = {z : z + F ⊆ E}`, and multiplication by `t^z` becomes
//! translation, so every operation here is exact integer combinatorics on
//! a finite window below the conductors.

mod ideal;
mod semigroup;

pub use ideal::{is_translate, RelativeIdeal};
pub use semigroup::NumericalSemigroup;

use crate::caps::Caps;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SemigroupError {
    #[error("no generators given")]
    NoGenerators,
    #[error("generators must be positive")]
    NonPositiveGenerator,
    #[error("not a numerical semigroup: gcd of {0:?} is not 1")]
    GcdNotOne(Vec<u64>),
    #[error("an ideal needs at least one generator")]
    EmptyOffsets,
    #[error("not a semigroup: {0}")]
    NotASemigroup(String),
    #[error("enumeration cap exceeded: {gaps} gaps > cap {cap}")]
    EnumerationCapExceeded { gaps: usize, cap: usize },
    #[error("cannot parse relative ideal `{0}` (expected `a,b | c`)")]
    Parse(String),
}

impl NumericalSemigroup {
    /// `⋃ (g + S)` over the offsets.
    pub fn ideal_from_gens(&self, offsets: &[i64]) -> Result<RelativeIdeal, SemigroupError> {
        let lo = *offsets.iter().min().ok_or(SemigroupError::EmptyOffsets)?;
        let hi = lo + self.conductor();
        Ok(RelativeIdeal::from_window(lo, hi, |z| offsets.iter().any(|&g| self.contains(z - g))))
    }

    /// `E + F = {e + f}`, the monomial product of the two ideals.
    pub fn ideal_sum(&self, e: &RelativeIdeal, f: &RelativeIdeal) -> RelativeIdeal {
        let lo = e.least() + f.least();
        // z ≥ c_E + min F is (z − min F) + min F, and symmetrically
        let hi = (e.conductor() + f.least()).min(f.conductor() + e.least());
        let out = RelativeIdeal::from_window(lo, hi, |z| {
            e.members_below(z - f.least() + 1).any(|a| f.contains(z - a))
        });
        assert!(self.is_relative_ideal(&out), "window computation left an ideal not closed under S");
        out
    }

    /// `E − F = {z : z + F ⊆ E}`.
    pub fn ideal_colon(&self, e: &RelativeIdeal, f: &RelativeIdeal) -> RelativeIdeal {
        let lo = e.least() - f.least();
        // once z + min F reaches c_E, all of z + F lies in E
        let hi = e.conductor() - f.least();
        let out = RelativeIdeal::from_window(lo, hi, |z| {
            f.members_below(e.conductor() - z).all(|b| e.contains(z + b))
        });
        assert!(self.is_relative_ideal(&out), "window computation left an ideal not closed under S");
        out
    }

    /// `tr E = (S − E) + E`.
    pub fn trace(&self, e: &RelativeIdeal) -> RelativeIdeal {
        self.ideal_sum(&self.dual(e), e)
    }

    /// `E* = S − E`.
    pub fn dual(&self, e: &RelativeIdeal) -> RelativeIdeal {
        self.ideal_colon(&self.as_ideal(), e)
    }

    /// `E = S − (S − E)`.
    pub fn is_reflexive(&self, e: &RelativeIdeal) -> bool {
        self.dual(&self.dual(e)) == *e
    }

    /// The ring `E − E` as a numerical semigroup.
    pub fn endo_semigroup(&self, e: &RelativeIdeal) -> NumericalSemigroup {
        NumericalSemigroup::from_ideal(&self.ideal_colon(e, e)).expect("E − E is a numerical semigroup")
    }

    /// `K = {z : F − z ∉ S}` with `F` the Frobenius number.
    pub fn canonical_ideal(&self) -> RelativeIdeal {
        let fr = self.frobenius();
        RelativeIdeal::from_window(0, fr + 1, |z| !self.contains(fr - z))
    }

    /// Symmetric semigroups are exactly the Gorenstein ones: `K` is a translate of `S`.
    pub fn is_symmetric(&self) -> bool {
        is_translate(&self.as_ideal(), &self.canonical_ideal()).is_some()
    }

    /// `m^n` as the `n`-fold sumset of `S ∖ {0}` (`m^0 = S`).
    pub fn maximal_ideal_power(&self, n: u32) -> RelativeIdeal {
        let m = self.maximal_ideal();
        (0..n).fold(self.as_ideal(), |acc, _| self.ideal_sum(&acc, &m))
    }

    /// `ℓ(R/m^{n+1})`: the number of elements of `S` outside `m^{n+1}`.
    pub fn colength_of_maximal_power(&self, n: u32) -> u64 {
        let power = self.maximal_ideal_power(n + 1);
        (0..power.conductor()).filter(|&z| self.contains(z) && !power.contains(z)).count() as u64
    }

    /// All relative ideals with least element 0, i.e. `S ∪ G` for sets of
    /// gaps `G` with `G + (S ∖ {0}) ∩ gaps ⊆ G`.
    ///
    /// Ordered by the number of added gaps, then lexicographically.
    pub fn enumerate_normalized_ideals(&self, caps: &Caps) -> Result<Vec<RelativeIdeal>, SemigroupError> {
        let gaps = self.gaps();
        if gaps.len() > caps.gaps {
            return Err(SemigroupError::EnumerationCapExceeded { gaps: gaps.len(), cap: caps.gaps });
        }
        let mut chosen: Vec<Vec<i64>> = Vec::new();
        let mut current: Vec<bool> = vec![false; gaps.len()];
        self.close_gaps(gaps.len(), &mut current, &mut chosen);
        chosen.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(chosen
            .into_iter()
            .map(|g| RelativeIdeal::from_window(0, self.conductor(), |z| self.contains(z) || g.contains(&z)))
            .collect())
    }

    /// Decides gaps from the largest down; a gap may join only if every gap
    /// above it reachable by adding an element of `S` has already joined.
    fn close_gaps(&self, remaining: usize, current: &mut Vec<bool>, out: &mut Vec<Vec<i64>>) {
        let gaps = self.gaps();
        if remaining == 0 {
            out.push(gaps.iter().zip(current.iter()).filter(|(_, &c)| c).map(|(&g, _)| g as i64).collect());
            return;
        }
        let idx = remaining - 1;
        let g = gaps[idx] as i64;
        current[idx] = false;
        self.close_gaps(idx, current, out);
        let closed = gaps[idx + 1..]
            .iter()
            .zip(&current[idx + 1..])
            .all(|(&h, &inside)| inside || !self.contains(h as i64 - g));
        if closed {
            current[idx] = true;
            self.close_gaps(idx, current, out);
            current[idx] = false;
        }
    }
}
