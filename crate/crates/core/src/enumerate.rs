//! Streaming vertex enumeration, necklace-first class enumeration and
//! vertex counting.

use crate::model::{ClassInfo, GapSequence, Params, Vertex};

/// Lexicographic stream of all s-stable k-subsets.
///
/// Holds only the current subset, so memory does not grow with the output.
#[derive(Debug, Clone)]
pub struct VertexStream {
    params: Params,
    current: Vec<u32>,
    done: bool,
}

pub fn enumerate_vertices(p: &Params) -> VertexStream {
    let current = (0..p.k).map(|i| 1 + i * p.s).collect();
    VertexStream {
        params: *p,
        current,
        done: false,
    }
}

impl VertexStream {
    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Advances `current` to its lexicographic successor, if any.
    fn advance(&mut self) -> bool {
        let p = self.params;
        let k = self.current.len();
        let (n, s) = (p.n, p.s);
        for j in (0..k).rev() {
            let candidate = self.current[j] + 1;
            // the last element is bounded by n and by the wrap gap to the first
            let first = if j == 0 { candidate } else { self.current[0] };
            let last_cap = n.min(first + n - s);
            let tail = (k - 1 - j) as u32 * s;
            if candidate + tail <= last_cap {
                self.current[j] = candidate;
                for m in j + 1..k {
                    self.current[m] = self.current[m - 1] + s;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for VertexStream {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.done {
            return None;
        }
        let out = Vertex::from_elements_unchecked(&self.current, &self.params);
        if !self.advance() {
            self.done = true;
        }
        Some(out)
    }
}

/// Vertex count by filtering every k-subset. Meant for small `n`.
pub fn count_vertices_bruteforce(p: &Params) -> u64 {
    let (n, k) = (p.n as usize, p.k as usize);
    let mut combo: Vec<u32> = (1..=k as u32).collect();
    let mut count = 0u64;
    loop {
        let spread = combo.windows(2).all(|w| w[1] - w[0] >= p.s) && combo[0] + p.n - combo[k - 1] >= p.s;
        if spread {
            count += 1;
        }
        // next k-combination of 1..=n
        let mut i = k;
        while i > 0 && combo[i - 1] as usize == n - k + i {
            i -= 1;
        }
        if i == 0 {
            return count;
        }
        combo[i - 1] += 1;
        for j in i..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Vertex count from compositions: `C(r + k - 1, k - 1) * n / k`.
///
/// A class with gap word `g` has `n / d` members while `g` has `k / d`
/// distinct rotations, so each composition contributes `n / k` vertices.
pub fn count_vertices_formula(p: &Params) -> u64 {
    let compositions = binomial(u128::from(p.r) + u128::from(p.k) - 1, u128::from(p.k) - 1);
    let total = compositions * u128::from(p.n) / u128::from(p.k);
    u64::try_from(total).expect("vertex count exceeds u64")
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Largest `n` for which [`count_vertices`] filters subsets directly.
pub const BRUTE_FORCE_MAX_N: u32 = 20;

pub fn count_vertices(p: &Params) -> u64 {
    if p.n <= BRUTE_FORCE_MAX_N {
        count_vertices_bruteforce(p)
    } else {
        count_vertices_formula(p)
    }
}

/// All rotation classes, sorted by necklace.
#[derive(Debug, Clone)]
pub struct ClassCatalog {
    pub params: Params,
    pub classes: Vec<ClassInfo>,
    pub total_vertices: u64,
}

impl ClassCatalog {
    /// Position of the class whose necklace is `necklace` (must be canonical).
    pub fn index_of(&self, necklace: &GapSequence) -> Option<usize> {
        self.classes
            .binary_search_by(|c| c.necklace.cmp(necklace))
            .ok()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ClassInfo> {
        self.classes.iter()
    }
}

/// Enumerates classes directly as necklaces of compositions of `n - k` into
/// `k` parts of at least `s - 1`.
///
/// Subtracting `s - 1` from each part leaves necklaces over `{0..r}` with
/// digit sum `r`; those come out of the FKM prenecklace recursion in
/// lexicographic order, pruned on the running sum.
pub fn enumerate_classes(p: &Params) -> ClassCatalog {
    let k = p.k as usize;
    let mut word = vec![0u32; k + 1];
    let mut classes = Vec::new();
    fkm(1, 1, 0, p, &mut word, &mut classes);
    let total_vertices = classes.iter().map(|c| u64::from(c.order)).sum();
    ClassCatalog {
        params: *p,
        classes,
        total_vertices,
    }
}

// word is 1-indexed; word[0] is unused
fn fkm(t: usize, period: usize, sum: u32, p: &Params, word: &mut [u32], out: &mut Vec<ClassInfo>) {
    let k = p.k as usize;
    if t > k {
        if k.is_multiple_of(period) && sum == p.r {
            let gaps = word[1..].iter().map(|&x| x + p.min_gap()).collect();
            out.push(ClassInfo::from_necklace(GapSequence::new(gaps), p));
        }
        return;
    }
    let copied = word[t - period];
    if sum + copied <= p.r {
        word[t] = copied;
        fkm(t + 1, period, sum + copied, p, word, out);
    }
    for digit in copied + 1..=p.r - sum {
        word[t] = digit;
        fkm(t + 1, t, sum + digit, p, word, out);
    }
}
