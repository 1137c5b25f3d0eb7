use super::{RelativeIdeal, SemigroupError};
use std::fmt;

/// A submonoid of `(ℕ, +)` with finite complement, the value semigroup of
/// the monomial curve ring `k[[t^s : s ∈ S]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    /// Membership of `0..=frobenius + 1`.
    membership: Vec<bool>,
    frobenius: i64,
    multiplicity: u64,
    gaps: Vec<u64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// Closes `gens` under addition. The generators are reduced to the
    /// minimal generating set.
    pub fn new(gens: &[u64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::NoGenerators);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::NonPositiveGenerator);
        }
        if gens.iter().fold(0, |acc, &g| gcd(acc, g)) != 1 {
            return Err(SemigroupError::GcdNotOne(gens.to_vec()));
        }
        let smallest = *gens.iter().min().expect("nonempty") as usize;
        // once `smallest` consecutive members appear, everything after is a member
        let mut member = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < smallest {
            n += 1;
            let m = gens.iter().any(|&g| (g as usize) <= n && member[n - g as usize]);
            member.push(m);
            run = if m { run + 1 } else { 0 };
        }
        let frobenius = member.iter().rposition(|&m| !m).map_or(-1, |i| i as i64);
        member.truncate((frobenius + 2) as usize);
        let gaps: Vec<u64> = (0..member.len()).filter(|&i| !member[i]).map(|i| i as u64).collect();
        let mut s = NumericalSemigroup { generators: Vec::new(), membership: member, frobenius, multiplicity: 0, gaps };
        s.generators = s.minimal_generators();
        s.multiplicity = s.generators[0];
        Ok(s)
    }

    /// Rebuilds a semigroup from a relative ideal that contains 0 and is
    /// closed under addition, e.g. an endomorphism ring `E − E`.
    pub fn from_ideal(set: &RelativeIdeal) -> Result<Self, SemigroupError> {
        if set.least() != 0 {
            return Err(SemigroupError::NotASemigroup(format!("least element of {set} is not 0")));
        }
        let c = set.conductor();
        let e = (1..).find(|&z| set.contains(z)).expect("cofinite");
        let mut gens = Vec::new();
        for z in 1..c.max(1) + e {
            if !set.contains(z) {
                continue;
            }
            let decomposable = (1..z).any(|a| set.contains(a) && set.contains(z - a));
            if !decomposable {
                gens.push(z as u64);
            }
        }
        let s = NumericalSemigroup::new(&gens)?;
        if &s.as_ideal() != set {
            return Err(SemigroupError::NotASemigroup(format!("{set} is not closed under addition")));
        }
        Ok(s)
    }

    fn minimal_generators(&self) -> Vec<u64> {
        let bound = self.frobenius + 1 + self.smallest_nonzero() as i64;
        (1..=bound)
            .filter(|&z| self.contains(z) && !(1..z).any(|a| self.contains(a) && self.contains(z - a)))
            .map(|z| z as u64)
            .collect()
    }

    fn smallest_nonzero(&self) -> u64 {
        (1..).find(|&z| self.contains(z as i64)).expect("cofinite")
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            false
        } else if z > self.frobenius {
            true
        } else {
            self.membership[z as usize]
        }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Largest gap, or −1 for `ℕ`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Least nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Least `c` with `[c, ∞) ⊆ S`.
    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    /// `S` as a relative ideal over itself.
    pub fn as_ideal(&self) -> RelativeIdeal {
        RelativeIdeal::from_window(0, self.conductor(), |z| self.contains(z))
    }

    /// `S ∖ {0}`, the monomial model of the maximal ideal.
    pub fn maximal_ideal(&self) -> RelativeIdeal {
        RelativeIdeal::from_window(1, self.conductor().max(1), |z| self.contains(z))
    }

    /// Whether `E + S ⊆ E`.
    pub fn is_relative_ideal(&self, e: &RelativeIdeal) -> bool {
        e.members_below(e.conductor())
            .all(|z| self.generators.iter().all(|&g| e.contains(z + g as i64)))
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(","))
    }
}
