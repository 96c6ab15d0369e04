//! Friend classes, the friend-class graph (SCK) and its brute-force
//! super-graph of all class adjacencies (CK).
//!
//! A friend of a class is obtained by moving one marked cell a single step to
//! the right: gap `i` grows by one and the cyclically next gap shrinks by one.
//! Friend classes are always adjacent; the witness pair is the anchored
//! vertex `u` and the moved vertex rotated by one more step.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::enumerate::{enumerate_classes, enumerate_vertices, ClassCatalog};
use crate::error::{Error, Result};
use crate::model::{canonical_class, ClassInfo, GapSequence, Params, Vertex};

/// A directed friend move with its adjacency witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriendEdge {
    pub from_class: ClassInfo,
    pub to_class: ClassInfo,
    /// 1-based index `i` of the growing gap; gap `i + 1` (cyclically) shrinks.
    pub move_index: usize,
    pub witness_u: Vertex,
    pub witness_v: Vertex,
}

/// Witness pair for the friend move at index `i` (1-based) of class `a`.
pub fn friend_witness(a: &ClassInfo, i: usize, p: &Params) -> Result<(Vertex, Vertex)> {
    let gaps = a.necklace.as_slice();
    let k = gaps.len();
    let shrinking = i % k.max(1);
    if i < 1 || i > k || gaps[shrinking] < p.s {
        return Err(Error::InadmissibleMove {
            class: a.necklace.to_string(),
            index: i,
        });
    }
    let u = a.base_vertex.clone();
    let mut moved = u.to_vec();
    moved[shrinking] = moved[shrinking] % p.n + 1;
    let w = Vertex::from_elements_unchecked(&sorted(moved), p);
    let v = w.rotate(1, p);
    debug_assert!(u.is_adjacent(&v), "witness {u} / {v} not disjoint");
    Ok((u, v))
}

fn sorted(mut xs: Vec<u32>) -> Vec<u32> {
    xs.sort_unstable();
    xs
}

/// Gap word after the move at 1-based index `i`, if admissible.
fn moved_word(gaps: &[u32], i: usize, p: &Params) -> Option<GapSequence> {
    let k = gaps.len();
    let shrinking = i % k;
    if k < 2 || gaps[shrinking] < p.s {
        return None;
    }
    let mut g = gaps.to_vec();
    g[i - 1] += 1;
    g[shrinking] -= 1;
    Some(GapSequence::new(g))
}

/// Distinct friend classes of `a`, one edge each, in increasing move index.
///
/// Self-loops (a move that lands back in `a`) are dropped.
pub fn friends(a: &ClassInfo, p: &Params) -> Vec<FriendEdge> {
    let gaps = a.necklace.as_slice();
    let mut seen: BTreeSet<GapSequence> = BTreeSet::new();
    let mut out = Vec::new();
    for i in 1..=gaps.len() {
        let Some(word) = moved_word(gaps, i, p) else {
            continue;
        };
        let to_class = ClassInfo::from_gaps(&word, p);
        if to_class.necklace == a.necklace || !seen.insert(to_class.necklace.clone()) {
            continue;
        }
        let (witness_u, witness_v) = friend_witness(a, i, p).expect("admissible move");
        out.push(FriendEdge {
            from_class: a.clone(),
            to_class,
            move_index: i,
            witness_u,
            witness_v,
        });
    }
    out
}

/// Necklace `((s-1)^(k-1), s-1+r)`, the class every other class is reached from.
pub fn root_necklace(p: &Params) -> GapSequence {
    let mut gaps = vec![p.min_gap(); p.k as usize];
    if let Some(last) = gaps.last_mut() {
        *last += p.r;
    }
    GapSequence::new(gaps)
}

/// Undirected friend edge between catalog entries `a < b`.
#[derive(Debug, Clone)]
pub struct SckEdge {
    pub a: usize,
    pub b: usize,
    pub witness: FriendEdge,
}

/// The spanning subgraph of the class graph formed by friend edges.
#[derive(Debug, Clone)]
pub struct SckGraph {
    pub catalog: ClassCatalog,
    pub edges: Vec<SckEdge>,
    /// Per class: `(neighbour, edge index)`, sorted by neighbour.
    adjacency: Vec<Vec<(usize, usize)>>,
    friend_counts: Vec<usize>,
}

pub fn build_sck(p: &Params) -> SckGraph {
    SckGraph::from_catalog(enumerate_classes(p))
}

impl SckGraph {
    pub fn from_catalog(catalog: ClassCatalog) -> SckGraph {
        let p = catalog.params;
        let mut pairs: BTreeMap<(usize, usize), FriendEdge> = BTreeMap::new();
        let mut friend_counts = Vec::with_capacity(catalog.len());
        for (idx, class) in catalog.iter().enumerate() {
            let fs = friends(class, &p);
            friend_counts.push(fs.len());
            for edge in fs {
                let other = catalog
                    .index_of(&edge.to_class.necklace)
                    .expect("friend class missing from catalog");
                let key = (idx.min(other), idx.max(other));
                pairs.entry(key).or_insert(edge);
            }
        }
        let mut adjacency = vec![Vec::new(); catalog.len()];
        let edges: Vec<SckEdge> = pairs
            .into_iter()
            .enumerate()
            .map(|(e, ((a, b), witness))| {
                adjacency[a].push((b, e));
                adjacency[b].push((a, e));
                SckEdge { a, b, witness }
            })
            .collect();
        for list in &mut adjacency {
            list.sort_unstable();
        }
        SckGraph {
            catalog,
            edges,
            adjacency,
            friend_counts,
        }
    }

    pub fn params(&self) -> &Params {
        &self.catalog.params
    }

    pub fn class(&self, idx: usize) -> &ClassInfo {
        &self.catalog.classes[idx]
    }

    /// `(neighbour, edge index)` pairs in increasing neighbour order.
    pub fn neighbors(&self, idx: usize) -> &[(usize, usize)] {
        &self.adjacency[idx]
    }

    pub fn degree(&self, idx: usize) -> usize {
        self.adjacency[idx].len()
    }

    /// Number of distinct friend classes of `idx` (outgoing moves only).
    pub fn friend_count(&self, idx: usize) -> usize {
        self.friend_counts[idx]
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<&SckEdge> {
        self.adjacency[a]
            .binary_search_by(|&(nb, _)| nb.cmp(&b))
            .ok()
            .map(|pos| &self.edges[self.adjacency[a][pos].1])
    }

    pub fn root_index(&self) -> usize {
        self.catalog
            .index_of(&root_necklace(self.params()))
            .expect("root class is always present")
    }

    /// Classes reachable from the root, by BFS.
    pub fn reachable_from_root(&self) -> Vec<bool> {
        let mut seen = vec![false; self.catalog.len()];
        let root = self.root_index();
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, _) in self.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_from_root().into_iter().all(|x| x)
    }
}

/// Class-level graph with an edge wherever some members are adjacent.
#[derive(Debug, Clone)]
pub struct ClassGraph {
    pub catalog: ClassCatalog,
    pub edges: BTreeSet<(usize, usize)>,
}

/// Vertex-count guard for [`build_ck_bruteforce`].
pub const CK_GUARD: u64 = 5000;

/// Builds CK by testing every vertex pair. Only for small instances.
pub fn build_ck_bruteforce(p: &Params) -> Result<ClassGraph> {
    let catalog = enumerate_classes(p);
    if catalog.total_vertices > CK_GUARD {
        return Err(Error::TooLarge {
            count: catalog.total_vertices,
            limit: CK_GUARD,
        });
    }
    let members: Vec<(Vertex, usize)> = enumerate_vertices(p)
        .map(|v| {
            let c = canonical_class(&v, p);
            let idx = catalog.index_of(&c.necklace).expect("class in catalog");
            (v, idx)
        })
        .collect();
    let mut edges = BTreeSet::new();
    for (x, (u, cu)) in members.iter().enumerate() {
        for (v, cv) in &members[x + 1..] {
            if cu != cv && u.is_adjacent(v) {
                edges.insert((*cu.min(cv), *cu.max(cv)));
            }
        }
    }
    Ok(ClassGraph { catalog, edges })
}

/// Friend path from the root class to `a`.
///
/// Starting at `((s-1)^(k-1), s-1+r)`, gaps are fixed from the last
/// coordinate backwards: the surplus sitting in coordinate `j` is pushed one
/// unit at a time into coordinate `j - 1` until coordinate `j` matches `a`.
/// Repeated classes are collapsed, so every hop is a genuine friend pair.
pub fn sck_path_to_root(a: &ClassInfo, p: &Params) -> Vec<ClassInfo> {
    let target = a.necklace.as_slice();
    let mut current = root_necklace(p).into_inner();
    let mut path = vec![ClassInfo::from_gaps(&GapSequence::new(current.clone()), p)];
    for j in (1..current.len()).rev() {
        while current[j] > target[j] {
            current[j - 1] += 1;
            current[j] -= 1;
            let class = ClassInfo::from_gaps(&GapSequence::new(current.clone()), p);
            if path.last() != Some(&class) {
                path.push(class);
            }
        }
    }
    debug_assert_eq!(current.as_slice(), target);
    path
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32, k: u32, s: u32) -> Params {
        Params::new(n, k, s).unwrap()
    }

    fn class(gaps: &[u32], q: &Params) -> ClassInfo {
        ClassInfo::from_gaps(&GapSequence::new(gaps.to_vec()), q)
    }

    fn friend_words(gaps: &[u32], q: &Params) -> Vec<(usize, String)> {
        friends(&class(gaps, q), q)
            .iter()
            .map(|e| (e.move_index, e.to_class.necklace.to_string()))
            .collect()
    }

    #[test]
    fn friend_examples() {
        let q = p(9, 3, 2);
        assert_eq!(friend_words(&[1, 1, 4], &q), [(2, "(1,2,3)".to_string())]);
        assert_eq!(
            friend_words(&[1, 3, 2], &q),
            [(1, "(2,2,2)".to_string()), (2, "(1,1,4)".to_string())]
        );
        let big = p(36, 6, 3);
        let fs = friends(&class(&[5; 6], &big), &big);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].to_class.necklace.to_string(), "(4,5,5,5,5,6)");
    }

    #[test]
    fn path_length_follows_surplus_transport() {
        let q = p(36, 6, 3);
        let target = class(&[2, 2, 5, 16, 2, 3], &q);
        let path = sck_path_to_root(&target, &q);
        assert_eq!(path.len(), 38);
        assert_eq!(path.last(), Some(&target));
    }

    #[test]
    fn witness_examples() {
        let q = p(9, 3, 2);
        let (u, v) = friend_witness(&class(&[1, 1, 4], &q), 2, &q).unwrap();
        assert_eq!((u.to_string(), v.to_string()), ("{1,3,5}".into(), "{2,4,7}".into()));
        let (u, v) = friend_witness(&class(&[1, 2, 3], &q), 1, &q).unwrap();
        assert_eq!((u.to_string(), v.to_string()), ("{1,3,6}".into(), "{2,5,7}".into()));
        assert!(matches!(
            friend_witness(&class(&[1, 1, 4], &q), 1, &q),
            Err(Error::InadmissibleMove { index: 1, .. })
        ));
        assert!(friend_witness(&class(&[1, 1, 4], &q), 4, &q).is_err());
    }

    #[test]
    fn wraparound_move_moves_the_first_cell() {
        // (2,2,2): i = 3 grows the last gap and shrinks the first
        let q = p(9, 3, 2);
        let (u, v) = friend_witness(&class(&[2, 2, 2], &q), 3, &q).unwrap();
        assert_eq!(u.to_string(), "{1,4,7}");
        assert_eq!(v.to_string(), "{3,5,8}");
        assert!(u.is_adjacent(&v));
    }

    #[test]
    fn small_sck_graphs() {
        let edge_names = |g: &SckGraph| -> Vec<(String, String)> {
            g.edges
                .iter()
                .map(|e| (g.class(e.a).necklace.to_string(), g.class(e.b).necklace.to_string()))
                .collect()
        };
        let g = build_sck(&p(9, 3, 2));
        assert_eq!(g.catalog.len(), 4);
        let expected: Vec<(String, String)> = [
            ("(1,1,4)", "(1,2,3)"),
            ("(1,1,4)", "(1,3,2)"),
            ("(1,2,3)", "(1,3,2)"),
            ("(1,2,3)", "(2,2,2)"),
            ("(1,3,2)", "(2,2,2)"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        assert_eq!(edge_names(&g), expected);

        let g = build_sck(&p(7, 3, 2));
        assert_eq!((g.catalog.len(), g.edges.len()), (1, 0));

        let g = build_sck(&p(8, 3, 2));
        assert_eq!(edge_names(&g), [("(1,1,3)".to_string(), "(1,2,2)".to_string())]);
    }

    #[test]
    fn undirected_degree_can_exceed_friend_count() {
        // (2,2,2) has one friend but also receives the move from (1,3,2)
        let g = build_sck(&p(9, 3, 2));
        let idx = g.catalog.index_of(&GapSequence::new(vec![2, 2, 2])).unwrap();
        assert_eq!(g.friend_count(idx), 1);
        assert_eq!(g.degree(idx), 2);
        assert!(g.degree(idx) < g.class(idx).order as usize);
    }

    #[test]
    fn ck_contains_sck() {
        for q in [p(9, 3, 2), p(8, 3, 2), p(12, 4, 2), p(13, 3, 3)] {
            let ck = build_ck_bruteforce(&q).unwrap();
            let sck = build_sck(&q);
            for e in &sck.edges {
                assert!(ck.edges.contains(&(e.a, e.b)), "{q}");
            }
        }
        let ck = build_ck_bruteforce(&p(9, 3, 2)).unwrap();
        assert_eq!(ck.edges.len(), 5);
        let ck = build_ck_bruteforce(&p(6, 3, 2)).unwrap();
        assert_eq!((ck.catalog.len(), ck.edges.len()), (1, 0));
        assert_eq!(ck.catalog.classes[0].order, 2);
        assert!(matches!(build_ck_bruteforce(&p(40, 5, 2)), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn paths_from_root() {
        let q = p(9, 3, 2);
        let root = class(&[1, 1, 4], &q);
        assert_eq!(sck_path_to_root(&root, &q), vec![root.clone()]);

        let path = sck_path_to_root(&class(&[1, 2, 3], &q), &q);
        let names: Vec<String> = path.iter().map(|c| c.necklace.to_string()).collect();
        assert_eq!(names, ["(1,1,4)", "(1,2,3)"]);

        let g = build_sck(&q);
        let path = sck_path_to_root(&class(&[2, 2, 2], &q), &q);
        assert_eq!(path.first().unwrap().necklace, root.necklace);
        assert_eq!(path.last().unwrap().necklace.to_string(), "(2,2,2)");
        for hop in path.windows(2) {
            let a = g.catalog.index_of(&hop[0].necklace).unwrap();
            let b = g.catalog.index_of(&hop[1].necklace).unwrap();
            assert!(g.edge_between(a, b).is_some());
        }
    }
}
