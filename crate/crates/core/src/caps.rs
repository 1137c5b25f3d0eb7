//! Search and enumeration limits shared by the engines.

use serde::{Deserialize, Serialize};

/// Environment variable holding cap overrides, e.g. `dim=6,gaps=24,hom=22`.
pub const CAPS_ENV: &str = "TRACE_LAB_CAPS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest algebra (or component) dimension whose ideals are enumerated.
    /// `None` means 6 over `F_2` and 4 otherwise.
    pub dim: Option<usize>,
    /// Largest gap count of a semigroup whose normalized ideals are enumerated.
    pub gaps: usize,
    /// Isomorphism searches visit at most `2^hom` maps.
    pub hom: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { dim: None, gaps: 24, hom: 22 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad cap setting `{0}` (expected e.g. dim=6,gaps=24,hom=22)")]
pub struct CapsParseError(pub String);

impl Caps {
    pub fn dim_cap(&self, p: u64) -> usize {
        self.dim.unwrap_or(if p == 2 { 6 } else { 4 })
    }

    pub fn hom_budget(&self) -> u128 {
        1u128.checked_shl(self.hom).unwrap_or(u128::MAX)
    }

    /// Applies `key=value` overrides on top of `self`.
    pub fn with_overrides(mut self, text: &str) -> Result<Caps, CapsParseError> {
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let bad = || CapsParseError(item.to_string());
            let (key, value) = item.split_once('=').ok_or_else(bad)?;
            let n: usize = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "dim" => self.dim = Some(n),
                "gaps" => self.gaps = n,
                "hom" => self.hom = u32::try_from(n).ok().filter(|&h| h < 128).ok_or_else(bad)?,
                _ => return Err(bad()),
            }
        }
        Ok(self)
    }

    /// Defaults, overridden by [`CAPS_ENV`] when set.
    pub fn from_env() -> Result<Caps, CapsParseError> {
        match std::env::var(CAPS_ENV) {
            Ok(text) => Caps::default().with_overrides(&text),
            Err(_) => Ok(Caps::default()),
        }
    }
}
