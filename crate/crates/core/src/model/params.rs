use serde::Serialize;

use crate::error::{Error, Result};

/// The triple `(n, k, s)` of an s-stable Kneser graph, plus the residue
/// `r = n - s*k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    pub n: u32,
    pub k: u32,
    pub s: u32,
    pub r: u32,
}

impl Params {
    /// Validates `s >= 2`, `k >= 1` and `n >= s*k`.
    pub fn new(n: u32, k: u32, s: u32) -> Result<Params> {
        if s < 2 {
            return Err(Error::InvalidParams(format!(
                "s = {s}: stability below 2 (ordinary Kneser graphs) is not supported"
            )));
        }
        if k < 1 {
            return Err(Error::InvalidParams("k must be at least 1".into()));
        }
        let sk = u64::from(s) * u64::from(k);
        if u64::from(n) < sk {
            return Err(Error::InvalidParams(format!(
                "n = {n} is below s*k = {sk}; the graph has no vertices"
            )));
        }
        Ok(Params { n, k, s, r: n - s * k })
    }

    /// Number of blank cells, `n - k`.
    pub fn blanks(&self) -> u32 {
        self.n - self.k
    }

    /// Smallest admissible gap, `s - 1` blanks.
    pub fn min_gap(&self) -> u32 {
        self.s - 1
    }

    /// Words of 64 bits needed for an `n`-bit mask.
    pub(crate) fn words(&self) -> usize {
        (self.n as usize).div_ceil(64)
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}, k={}, s={})", self.n, self.k, self.s)
    }
}
