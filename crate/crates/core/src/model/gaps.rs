use std::fmt;

use super::vertex::parse_list;
use super::{Params, Vertex};
use crate::error::{Error, Result};

/// Cyclic list of blank counts between consecutive marked cells, read from
/// the smallest element onward. Each entry is at least `s - 1` and the entries
/// sum to `n - k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GapSequence(Vec<u32>);

/// Blank counts of `v`, starting after its smallest element.
pub fn gap_sequence(v: &Vertex, p: &Params) -> GapSequence {
    let elements = v.to_vec();
    let k = elements.len();
    let gaps = (0..k)
        .map(|i| {
            if i + 1 < k {
                elements[i + 1] - elements[i] - 1
            } else {
                elements[0] + p.n - elements[i] - 1
            }
        })
        .collect();
    GapSequence(gaps)
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
pub fn least_rotation(word: &[u32]) -> usize {
    let len = word.len();
    if len == 0 {
        return 0;
    }
    let at = |i: isize| word[i as usize % len];
    let mut fail = vec![-1isize; 2 * len];
    let mut k: isize = 0;
    for j in 1..(2 * len) as isize {
        let sj = at(j);
        let mut i = fail[(j - k - 1) as usize];
        while i != -1 && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = fail[i as usize];
        }
        if sj != at(k + i + 1) {
            // here i == -1
            if sj < at(k) {
                k = j;
            }
            fail[(j - k) as usize] = -1;
        } else {
            fail[(j - k) as usize] = i + 1;
        }
    }
    k as usize % len
}

/// Length of the shortest block `u` with `word = u^d`, via the failure function.
pub fn primitive_period(word: &[u32]) -> usize {
    let len = word.len();
    if len == 0 {
        return 0;
    }
    let mut border = vec![0usize; len + 1];
    let mut b = 0usize;
    for i in 1..len {
        while b > 0 && word[i] != word[b] {
            b = border[b];
        }
        if word[i] == word[b] {
            b += 1;
        }
        border[i + 1] = b;
    }
    let p = len - border[len];
    if len.is_multiple_of(p) {
        p
    } else {
        len
    }
}

impl GapSequence {
    pub fn new(gaps: Vec<u32>) -> GapSequence {
        GapSequence(gaps)
    }

    /// Checks the length, the minimum gap and the total against `p`.
    pub fn validated(gaps: Vec<u32>, p: &Params) -> Result<GapSequence> {
        if gaps.len() != p.k as usize {
            return Err(Error::MalformedSet(format!(
                "gap word has {} entries, expected {}",
                gaps.len(),
                p.k
            )));
        }
        if let Some(&g) = gaps.iter().find(|&&g| g < p.min_gap()) {
            return Err(Error::MalformedSet(format!("gap {g} below s-1 = {}", p.min_gap())));
        }
        let total: u64 = gaps.iter().map(|&g| u64::from(g)).sum();
        if total != u64::from(p.blanks()) {
            return Err(Error::MalformedSet(format!(
                "gaps sum to {total}, expected n-k = {}",
                p.blanks()
            )));
        }
        Ok(GapSequence(gaps))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    /// The word read starting at index `start`.
    pub fn rotated(&self, start: usize) -> GapSequence {
        let len = self.0.len();
        if len == 0 {
            return self.clone();
        }
        let start = start % len;
        let mut gaps = Vec::with_capacity(len);
        gaps.extend_from_slice(&self.0[start..]);
        gaps.extend_from_slice(&self.0[..start]);
        GapSequence(gaps)
    }

    /// Lexicographically least rotation.
    pub fn canonical(&self) -> GapSequence {
        self.rotated(least_rotation(&self.0))
    }

    /// Number of repetitions `d` of the primitive block.
    pub fn repetitions(&self) -> usize {
        match self.0.len() {
            0 => 1,
            len => len / primitive_period(&self.0),
        }
    }

    /// Places the first marked cell at `anchor` and the rest after the gaps.
    pub fn realize(&self, anchor: u32, p: &Params) -> Vertex {
        let mut elements = Vec::with_capacity(self.0.len());
        let mut pos = anchor - 1;
        for &g in &self.0 {
            elements.push(pos % p.n + 1);
            pos += g + 1;
        }
        elements.sort_unstable();
        Vertex::from_elements_unchecked(&elements, p)
    }

    /// Parses the parenthesized form `(1,2,3)`.
    pub fn parse(text: &str) -> Result<GapSequence> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::MalformedSet(format!("expected (a,b,...), got {text:?}")))?;
        parse_list(inner).map(GapSequence)
    }
}

impl fmt::Display for GapSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}
