use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::Params;
use crate::error::{Error, Result};

/// An s-stable k-subset of `{1..n}`, stored as an n-bit mask.
///
/// Element `e` lives in bit `e - 1`. Masks up to 128 bits stay inline.
/// Vertices from the same [`Params`] always carry the same number of words,
/// so equality and hashing are plain word comparisons. Ordering is
/// lexicographic on the ascending element lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    bits: SmallVec<[u64; 2]>,
}

/// True iff every cyclic gap between consecutive elements is at least `s`.
///
/// Elements may come in any order but must be `k` distinct values in `[1, n]`.
pub fn is_stable(elements: &[u32], p: &Params) -> Result<bool> {
    let sorted = check_set(elements, p)?;
    Ok(cyclically_spread(&sorted, p))
}

fn check_set(elements: &[u32], p: &Params) -> Result<Vec<u32>> {
    if elements.len() != p.k as usize {
        return Err(Error::MalformedSet(format!(
            "expected {} elements, got {}",
            p.k,
            elements.len()
        )));
    }
    if let Some(&e) = elements.iter().find(|&&e| e < 1 || e > p.n) {
        return Err(Error::MalformedSet(format!("element {e} outside [1, {}]", p.n)));
    }
    let mut sorted = elements.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::MalformedSet(format!("duplicate element {}", w[0])));
    }
    Ok(sorted)
}

fn cyclically_spread(sorted: &[u32], p: &Params) -> bool {
    let inner = sorted.windows(2).all(|w| w[1] - w[0] >= p.s);
    let wrap = match (sorted.first(), sorted.last()) {
        (Some(&lo), Some(&hi)) => lo + p.n - hi >= p.s,
        _ => true,
    };
    inner && wrap
}

impl Vertex {
    /// Builds a vertex from its elements, rejecting malformed or unstable sets.
    pub fn from_elements(elements: &[u32], p: &Params) -> Result<Vertex> {
        let sorted = check_set(elements, p)?;
        if !cyclically_spread(&sorted, p) {
            return Err(Error::Unstable(format_set(&sorted)));
        }
        Ok(Self::from_elements_unchecked(&sorted, p))
    }

    pub(crate) fn from_elements_unchecked(elements: &[u32], p: &Params) -> Vertex {
        let mut bits: SmallVec<[u64; 2]> = SmallVec::from_elem(0, p.words());
        for &e in elements {
            let b = (e - 1) as usize;
            bits[b / 64] |= 1 << (b % 64);
        }
        Vertex { bits }
    }

    /// Ascending elements.
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            bits: &self.bits,
            word: 0,
            current: self.bits.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.elements().collect()
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, e: u32) -> bool {
        let b = (e as usize).wrapping_sub(1);
        b / 64 < self.bits.len() && self.bits[b / 64] >> (b % 64) & 1 == 1
    }

    pub fn min_element(&self) -> Option<u32> {
        self.elements().next()
    }

    /// Disjointness, the adjacency relation of the graph.
    pub fn is_adjacent(&self, other: &Vertex) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    /// Rotation by `t` positions: every element `e` goes to `((e - 1 + t) mod n) + 1`.
    pub fn rotate(&self, t: i64, p: &Params) -> Vertex {
        let n = p.n as i64;
        let t = t.rem_euclid(n) as u32;
        if t == 0 {
            return self.clone();
        }
        if self.bits.len() == 1 {
            let mask = if p.n == 64 { u64::MAX } else { (1u64 << p.n) - 1 };
            let x = self.bits[0];
            let rotated = ((x << t) | (x >> (p.n - t))) & mask;
            return Vertex {
                bits: SmallVec::from_elem(rotated, 1),
            };
        }
        let mut bits: SmallVec<[u64; 2]> = SmallVec::from_elem(0, self.bits.len());
        for e in self.elements() {
            let b = ((e - 1 + t) % p.n) as usize;
            bits[b / 64] |= 1 << (b % 64);
        }
        Vertex { bits }
    }

    /// Parses the braced textual form `{1,3,5}` (whitespace tolerated).
    pub fn parse(text: &str, p: &Params) -> Result<Vertex> {
        let inner = text
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::MalformedSet(format!("expected {{a,b,...}}, got {text:?}")))?;
        let elements = parse_list(inner)?;
        Vertex::from_elements(&elements, p)
    }
}

pub(crate) fn parse_list(inner: &str) -> Result<Vec<u32>> {
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| Error::MalformedSet(format!("not an integer: {:?}", tok.trim())))
        })
        .collect()
}

pub(crate) fn format_set(elements: &[u32]) -> String {
    let body: Vec<String> = elements.iter().map(u32::to_string).collect();
    format!("{{{}}}", body.join(","))
}

/// Iterator over the set bits of a [`Vertex`], as 1-based elements.
pub struct Elements<'a> {
    bits: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Elements<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros();
                self.current &= self.current - 1;
                return Some((self.word * 64) as u32 + tz + 1);
            }
            self.word += 1;
            self.current = *self.bits.get(self.word)?;
        }
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements().cmp(other.elements())
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_set(&self.to_vec()))
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
