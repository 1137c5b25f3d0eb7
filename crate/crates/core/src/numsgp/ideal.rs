use super::SemigroupError;
use std::fmt;
use std::str::FromStr;

/// A set `E ⊆ ℤ`, bounded below, containing every integer from its
/// conductor on. Stored as the finitely many members below the conductor.
///
/// The conductor is kept tight: `conductor − 1` is never a member.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelativeIdeal {
    sporadic: Vec<i64>,
    conductor: i64,
}

impl RelativeIdeal {
    /// Members of `[lo, hi)` are those satisfying `member`; everything from
    /// `hi` on is a member; nothing below `lo` is.
    pub fn from_window(lo: i64, hi: i64, member: impl Fn(i64) -> bool) -> Self {
        let sporadic = (lo..hi).filter(|&z| member(z)).collect();
        let mut e = RelativeIdeal { sporadic, conductor: hi.max(lo) };
        e.tighten();
        e
    }

    /// The listed elements together with `[conductor, ∞)`.
    pub fn from_parts(mut sporadic: Vec<i64>, conductor: i64) -> Self {
        sporadic.retain(|&z| z < conductor);
        sporadic.sort_unstable();
        sporadic.dedup();
        let mut e = RelativeIdeal { sporadic, conductor };
        e.tighten();
        e
    }

    fn tighten(&mut self) {
        while self.sporadic.last() == Some(&(self.conductor - 1)) {
            self.sporadic.pop();
            self.conductor -= 1;
        }
    }

    /// Elements below the conductor.
    pub fn sporadic(&self) -> &[i64] {
        &self.sporadic
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn least(&self) -> i64 {
        self.sporadic.first().copied().unwrap_or(self.conductor)
    }

    pub fn contains(&self, z: i64) -> bool {
        z >= self.conductor || self.sporadic.binary_search(&z).is_ok()
    }

    /// Members strictly below `bound`, ascending.
    pub fn members_below(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        let lo = self.least();
        (lo..bound).filter(move |&z| self.contains(z))
    }

    /// `E + z`.
    pub fn shift(&self, z: i64) -> RelativeIdeal {
        RelativeIdeal { sporadic: self.sporadic.iter().map(|s| s + z).collect(), conductor: self.conductor + z }
    }

    /// Translate with least element 0.
    pub fn normalized(&self) -> RelativeIdeal {
        self.shift(-self.least())
    }

    pub fn is_subset_of(&self, other: &RelativeIdeal) -> bool {
        self.members_below(self.conductor.max(other.conductor)).all(|z| other.contains(z))
    }
}

/// Offset `z` with `f = e + z`, if `f` is a translate of `e`.
pub fn is_translate(e: &RelativeIdeal, f: &RelativeIdeal) -> Option<i64> {
    let z = f.least() - e.least();
    (e.shift(z) == *f).then_some(z)
}

impl fmt::Display for RelativeIdeal {
    /// `sporadic… | conductor`, e.g. `3,4 | 6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.sporadic.iter().map(|z| z.to_string()).collect();
        if s.is_empty() {
            write!(f, "| {}", self.conductor)
        } else {
            write!(f, "{} | {}", s.join(","), self.conductor)
        }
    }
}

impl FromStr for RelativeIdeal {
    type Err = SemigroupError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || SemigroupError::Parse(text.to_string());
        let (left, right) = text.split_once('|').ok_or_else(bad)?;
        let conductor: i64 = right.trim().parse().map_err(|_| bad())?;
        let sporadic = left
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RelativeIdeal::from_parts(sporadic, conductor))
    }
}
