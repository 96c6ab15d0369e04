//! Independent checks: a Hamiltonian-cycle verifier, a backtracking oracle
//! for small instances, and a replay of the structural claims the
//! construction relies on.
//!
//! The verifier and the oracle only share the stability predicate with the
//! rest of the crate. They enumerate subsets and test disjointness on their
//! own.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classgraph::{build_ck_bruteforce, build_sck, root_necklace, sck_path_to_root, SckGraph, CK_GUARD};
use crate::enumerate::enumerate_vertices;
use crate::error::{Error, Result};
use crate::model::{canonical_class, is_stable, ClassInfo, GapSequence, Params, Vertex};

/// Outcome of [`verify_cycle`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ok: bool,
    /// Entries in the checked sequence.
    pub vertex_count: usize,
    /// Vertices the graph actually has.
    pub expected_count: u64,
    /// Valid vertices of the graph absent from the sequence.
    pub missing: u64,
    /// Entries repeating an earlier valid entry.
    pub duplicates: usize,
    /// Positions `(i, i+1 mod len)` of consecutive entries that intersect.
    pub bad_edges: Vec<(usize, usize)>,
    /// Positions of entries that are malformed or not s-stable.
    pub bad_vertices: Vec<usize>,
}

/// Upper bound on `C(n, k)` for counting vertices by subset enumeration.
const COUNT_BY_SUBSETS_MAX: u128 = 5_000_000;

/// k-subsets of `{1..n}` in lexicographic order.
fn for_each_subset(n: u32, k: u32, mut visit: impl FnMut(&[u32])) {
    let (n, k) = (n as usize, k as usize);
    if k == 0 || k > n {
        return;
    }
    let mut combo: Vec<u32> = (1..=k as u32).collect();
    loop {
        visit(&combo);
        let mut i = k;
        while i > 0 && combo[i - 1] as usize == n - k + i {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        combo[i - 1] += 1;
        for j in i..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

fn choose(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Vertex count, by subset filtering when that is affordable and otherwise
/// from compositions of the blank cells.
fn independent_count(p: &Params) -> u64 {
    if choose(u128::from(p.n), u128::from(p.k)) <= COUNT_BY_SUBSETS_MAX {
        let mut count = 0u64;
        for_each_subset(p.n, p.k, |set| {
            if is_stable(set, p).unwrap_or(false) {
                count += 1;
            }
        });
        count
    } else {
        let comps = choose(u128::from(p.r + p.k - 1), u128::from(p.k - 1));
        (comps * u128::from(p.n) / u128::from(p.k)) as u64
    }
}

fn disjoint(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

/// Checks that `seq` lists every vertex exactly once, each consecutive pair
/// (cyclically) disjoint, with at least three entries.
pub fn verify_cycle(p: &Params, seq: &[Vec<u32>]) -> VerificationReport {
    let expected_count = independent_count(p);
    let mut sorted_entries: Vec<Vec<u32>> = Vec::with_capacity(seq.len());
    let mut bad_vertices = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::with_capacity(seq.len());
    let mut duplicates = 0;
    for (i, entry) in seq.iter().enumerate() {
        let mut sorted = entry.clone();
        sorted.sort_unstable();
        if is_stable(entry, p) != Ok(true) {
            bad_vertices.push(i);
        } else if !seen.insert(sorted.clone()) {
            duplicates += 1;
        }
        sorted_entries.push(sorted);
    }
    let len = seq.len();
    let bad_edges: Vec<(usize, usize)> = (0..len)
        .filter(|&i| len > 1 && !disjoint(&sorted_entries[i], &sorted_entries[(i + 1) % len]))
        .map(|i| (i, (i + 1) % len))
        .collect();
    let missing = expected_count.saturating_sub(seen.len() as u64);
    let ok = bad_vertices.is_empty()
        && bad_edges.is_empty()
        && duplicates == 0
        && missing == 0
        && len as u64 == expected_count
        && len >= 3;
    VerificationReport {
        ok,
        vertex_count: len,
        expected_count,
        missing,
        duplicates,
        bad_edges,
        bad_vertices,
    }
}

pub fn verify_vertices(p: &Params, seq: &[Vertex]) -> VerificationReport {
    let raw: Vec<Vec<u32>> = seq.iter().map(Vertex::to_vec).collect();
    verify_cycle(p, &raw)
}

/// Default vertex limit of [`bruteforce_hamiltonian`].
pub const ORACLE_LIMIT: u64 = 40;
/// Expansion budget of [`bruteforce_hamiltonian`].
pub const ORACLE_BUDGET: u64 = 10_000_000;

/// Backtracking search for a Hamiltonian cycle in the explicit graph.
///
/// Returns `Ok(None)` when none exists (including graphs with fewer than
/// three vertices).
pub fn bruteforce_hamiltonian(p: &Params, limit: u64) -> Result<Option<Vec<Vertex>>> {
    let mut sets: Vec<Vec<u32>> = Vec::new();
    for_each_subset(p.n, p.k, |set| {
        if is_stable(set, p).unwrap_or(false) {
            sets.push(set.to_vec());
        }
    });
    let count = sets.len() as u64;
    if count > limit {
        return Err(Error::TooLarge { count, limit });
    }
    if count < 3 {
        return Ok(None);
    }
    let nv = sets.len();
    let adj: Vec<Vec<bool>> = (0..nv)
        .map(|a| (0..nv).map(|b| a != b && disjoint(&sets[a], &sets[b])).collect())
        .collect();
    let degree: Vec<usize> = adj.iter().map(|row| row.iter().filter(|&&x| x).count()).collect();
    let neighbors: Vec<Vec<usize>> = (0..nv)
        .map(|a| {
            let mut ns: Vec<usize> = (0..nv).filter(|&b| adj[a][b]).collect();
            ns.sort_by_key(|&b| (degree[b], b));
            ns
        })
        .collect();

    struct Search<'a> {
        adj: &'a [Vec<bool>],
        neighbors: &'a [Vec<usize>],
        visited: Vec<bool>,
        path: Vec<usize>,
        expansions: u64,
    }

    impl Search<'_> {
        fn extend(&mut self) -> Result<bool> {
            let nv = self.adj.len();
            let last = *self.path.last().expect("path starts non-empty");
            if self.path.len() == nv {
                return Ok(self.adj[last][self.path[0]]);
            }
            for &next in &self.neighbors[last] {
                if self.visited[next] {
                    continue;
                }
                self.expansions += 1;
                if self.expansions > ORACLE_BUDGET {
                    return Err(Error::BudgetExceeded { budget: ORACLE_BUDGET });
                }
                self.visited[next] = true;
                self.path.push(next);
                if self.extend()? {
                    return Ok(true);
                }
                self.path.pop();
                self.visited[next] = false;
            }
            Ok(false)
        }
    }

    let mut search = Search {
        adj: &adj,
        neighbors: &neighbors,
        visited: vec![false; nv],
        path: vec![0],
        expansions: 0,
    };
    search.visited[0] = true;
    if !search.extend()? {
        return Ok(None);
    }
    Ok(Some(
        search
            .path
            .iter()
            .map(|&i| Vertex::from_elements(&sets[i], p).expect("stable by construction"))
            .collect(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimOutcome {
    pub name: &'static str,
    pub status: ClaimStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub params: Params,
    pub claims: Vec<ClaimOutcome>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != ClaimStatus::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&ClaimOutcome> {
        self.claims.iter().find(|c| c.name == name)
    }
}

/// Vertex count up to which rotation invariance is checked on every pair.
const EXHAUSTIVE_PAIRS_MAX: u64 = 500;
const SAMPLED_PAIRS: usize = 20_000;

fn outcome(name: &'static str, failures: Vec<String>, ok_detail: String) -> ClaimOutcome {
    if failures.is_empty() {
        ClaimOutcome {
            name,
            status: ClaimStatus::Pass,
            detail: ok_detail,
        }
    } else {
        let shown: Vec<String> = failures.iter().take(3).cloned().collect();
        ClaimOutcome {
            name,
            status: ClaimStatus::Fail,
            detail: format!("{} failures, e.g. {}", failures.len(), shown.join("; ")),
        }
    }
}

fn orbit_size(v: &Vertex, p: &Params) -> u32 {
    (1..=p.n)
        .find(|&t| v.rotate(i64::from(t), p) == *v)
        .unwrap_or(p.n)
}

/// Replays every structural claim the construction depends on, on one instance.
pub fn replay_claims(p: &Params) -> ClaimReport {
    let sck = build_sck(p);
    let count = independent_count(p);
    let claims = vec![
        rotation_cycles(&sck, p),
        class_orders(&sck, p, count),
        rotation_invariance(p, count),
        friend_witnesses(&sck, p),
        degree_bound(&sck, p),
        sck_connectivity(&sck, p),
        ck_soundness(&sck, p, count),
    ];
    ClaimReport { params: *p, claims }
}

fn rotation_cycles(sck: &SckGraph, p: &Params) -> ClaimOutcome {
    let mut failures = Vec::new();
    for class in sck.catalog.iter() {
        let m = class.order;
        let members: Vec<Vertex> = (0..m).map(|i| class.member(i64::from(i), p)).collect();
        let distinct: HashSet<&Vertex> = members.iter().collect();
        let closes = class.member(i64::from(m), p) == class.base_vertex;
        let linked = (0..m as usize).all(|i| members[i].is_adjacent(&members[(i + 1) % m as usize]));
        if m < 3 || distinct.len() != m as usize || !closes || !linked {
            failures.push(format!("{} (order {m})", class.necklace));
        }
    }
    outcome(
        "rotation_cycles",
        failures,
        format!("{} classes each form a rotation cycle", sck.catalog.len()),
    )
}

fn class_orders(sck: &SckGraph, p: &Params, count: u64) -> ClaimOutcome {
    let mut failures = Vec::new();
    let blanks = p.n - p.k;
    for class in sck.catalog.iter() {
        let brute = orbit_size(&class.base_vertex, p);
        let d = class.period_d;
        let block = p.k / d;
        let repeated = class.necklace.as_slice().chunks(block as usize).all(|c| c == &class.necklace.as_slice()[..block as usize]);
        if brute != class.order || class.order * d != p.n || !p.k.is_multiple_of(d) || !blanks.is_multiple_of(d) || !repeated {
            failures.push(format!("{}: order {} vs orbit {brute}", class.necklace, class.order));
        }
    }
    if sck.catalog.total_vertices != count {
        failures.push(format!("orders sum to {} but the graph has {count} vertices", sck.catalog.total_vertices));
    }
    if count <= CK_GUARD {
        let mut grouped: std::collections::BTreeMap<GapSequence, u32> = Default::default();
        for v in enumerate_vertices(p) {
            *grouped.entry(canonical_class(&v, p).necklace).or_default() += 1;
        }
        let listed: std::collections::BTreeMap<GapSequence, u32> =
            sck.catalog.iter().map(|c| (c.necklace.clone(), c.order)).collect();
        if grouped != listed {
            failures.push("orbit partition of the vertex stream differs from the catalog".into());
        }
    }
    outcome(
        "class_orders",
        failures,
        format!("{} orders match orbit sizes and sum to {count}", sck.catalog.len()),
    )
}

fn rotation_invariance(p: &Params, count: u64) -> ClaimOutcome {
    let mut failures = Vec::new();
    let check = |u: &Vertex, v: &Vertex, failures: &mut Vec<String>| {
        if u.is_adjacent(v) != u.rotate(1, p).is_adjacent(&v.rotate(1, p)) {
            failures.push(format!("{u} / {v}"));
        }
    };
    let detail = if count <= EXHAUSTIVE_PAIRS_MAX {
        let all: Vec<Vertex> = enumerate_vertices(p).collect();
        for u in &all {
            for v in &all {
                check(u, v, &mut failures);
            }
        }
        format!("all {} ordered pairs", all.len() * all.len())
    } else {
        let sck_classes: Vec<ClassInfo> = crate::enumerate::enumerate_classes(p).classes;
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..SAMPLED_PAIRS {
            let a = &sck_classes[rng.gen_range(0..sck_classes.len())];
            let b = &sck_classes[rng.gen_range(0..sck_classes.len())];
            let u = a.member(rng.gen_range(0..i64::from(a.order)), p);
            let v = b.member(rng.gen_range(0..i64::from(b.order)), p);
            check(&u, &v, &mut failures);
        }
        format!("{SAMPLED_PAIRS} sampled pairs")
    };
    outcome("rotation_invariance", failures, detail)
}

fn friend_witnesses(sck: &SckGraph, p: &Params) -> ClaimOutcome {
    let mut failures = Vec::new();
    for edge in &sck.edges {
        let w = &edge.witness;
        let from = canonical_class(&w.witness_u, p);
        let to = canonical_class(&w.witness_v, p);
        // recompute the moved word from the index
        let mut word = w.from_class.necklace.as_slice().to_vec();
        let k = word.len();
        word[w.move_index - 1] += 1;
        word[w.move_index % k] -= 1;
        let moved = GapSequence::new(word).canonical();
        let ends = [&sck.class(edge.a).necklace, &sck.class(edge.b).necklace];
        if !w.witness_u.is_adjacent(&w.witness_v)
            || from != w.from_class
            || to != w.to_class
            || moved != w.to_class.necklace
            || from == to
            || !ends.contains(&&from.necklace)
            || !ends.contains(&&to.necklace)
        {
            failures.push(format!("{} -> {}", w.from_class.necklace, w.to_class.necklace));
        }
    }
    outcome(
        "friend_witnesses",
        failures,
        format!("{} friend edges carry disjoint witnesses", sck.edges.len()),
    )
}

fn degree_bound(sck: &SckGraph, p: &Params) -> ClaimOutcome {
    let mut failures = Vec::new();
    let mut max_degree = 0;
    for (idx, class) in sck.catalog.iter().enumerate() {
        let bound = (p.k / class.period_d) as usize;
        let friends = sck.friend_count(idx);
        let degree = sck.degree(idx);
        max_degree = max_degree.max(degree);
        if friends > bound || bound >= class.order as usize || degree >= class.order as usize {
            failures.push(format!(
                "{}: {friends} friends, degree {degree}, k/d {bound}, order {}",
                class.necklace, class.order
            ));
        }
    }
    outcome(
        "degree_bound",
        failures,
        format!("friends <= k/d < order and SCK degree < order (max degree {max_degree})"),
    )
}

fn sck_connectivity(sck: &SckGraph, p: &Params) -> ClaimOutcome {
    if p.r == 0 {
        let detail = format!("n = s*k: {} class, nothing to connect", sck.catalog.len());
        let status = if sck.catalog.len() == 1 { ClaimStatus::Pass } else { ClaimStatus::Fail };
        return ClaimOutcome {
            name: "sck_connected",
            status,
            detail,
        };
    }
    let mut failures = Vec::new();
    if !sck.is_connected() {
        failures.push("BFS from the root misses classes".into());
    }
    let root = root_necklace(p);
    for class in sck.catalog.iter() {
        let path = sck_path_to_root(class, p);
        // surplus bound for coordinate i travels k-1-i hops from the last coordinate
        let k = class.necklace.len() as u64;
        let bound: u64 = class
            .necklace
            .as_slice()
            .iter()
            .enumerate()
            .map(|(i, &g)| (k - 1 - i as u64) * u64::from(g - p.min_gap()))
            .sum();
        let hops_ok = path.windows(2).all(|hop| {
            match (sck.catalog.index_of(&hop[0].necklace), sck.catalog.index_of(&hop[1].necklace)) {
                (Some(a), Some(b)) => sck.edge_between(a, b).is_some(),
                _ => false,
            }
        });
        let starts = path.first().map(|c| &c.necklace) == Some(&root);
        let ends = path.last() == Some(class);
        if !hops_ok || !starts || !ends || path.len() as u64 > bound + 1 {
            failures.push(format!("path to {}", class.necklace));
        }
    }
    outcome(
        "sck_connected",
        failures,
        format!("connected; friend paths from {root} reach all {} classes", sck.catalog.len()),
    )
}

fn ck_soundness(sck: &SckGraph, p: &Params, count: u64) -> ClaimOutcome {
    if count > CK_GUARD {
        return ClaimOutcome {
            name: "ck_contains_sck",
            status: ClaimStatus::Skipped,
            detail: format!("{count} vertices exceed the brute-force guard"),
        };
    }
    let ck = match build_ck_bruteforce(p) {
        Ok(ck) => ck,
        Err(e) => {
            return ClaimOutcome {
                name: "ck_contains_sck",
                status: ClaimStatus::Fail,
                detail: e.to_string(),
            }
        }
    };
    let failures: Vec<String> = sck
        .edges
        .iter()
        .filter(|e| !ck.edges.contains(&(e.a, e.b)))
        .map(|e| format!("{} -- {}", sck.class(e.a).necklace, sck.class(e.b).necklace))
        .collect();
    outcome(
        "ck_contains_sck",
        failures,
        format!("{} SCK edges within {} CK edges", sck.edges.len(), ck.edges.len()),
    )
}
