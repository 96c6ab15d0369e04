use crate::classgraph::SckGraph;
use crate::error::{Error, Result};
use crate::model::{Params, Vertex};

use super::SpanningTree;

/// Per-class anchors: member `i` of class `A` is `anchors[A] + i`.
///
/// For every tree edge `(B, C)` the anchors are chosen so that `B_i` and
/// `C_i` are adjacent for every integer `i`.
#[derive(Debug, Clone)]
pub struct ClassIndexing {
    pub params: Params,
    pub anchors: Vec<Vertex>,
    pub orders: Vec<u32>,
}

impl ClassIndexing {
    /// `A_i`, with `i` reduced modulo the class order.
    pub fn member(&self, class: usize, i: i64) -> Vertex {
        let i = i.rem_euclid(i64::from(self.orders[class]));
        self.anchors[class].rotate(i, &self.params)
    }
}

/// Aligns anchors along the tree using the friend witnesses.
///
/// For a tree edge with witness `u` in the parent `B` and `v` in the child
/// `C`, find `j` with `B_j = u`; then `C_0 = v - j`. Since rotation preserves
/// disjointness, `B_i = u + (i - j)` and `C_i = v + (i - j)` are adjacent for
/// all `i`.
pub fn align_indexing(g: &SckGraph, t: &SpanningTree) -> Result<ClassIndexing> {
    let p = *g.params();
    let count = g.catalog.len();
    let orders: Vec<u32> = g.catalog.iter().map(|c| c.order).collect();
    let mut anchors: Vec<Option<Vertex>> = vec![None; count];
    anchors[t.root] = Some(g.class(t.root).base_vertex.clone());
    for &c in &t.order {
        let Some((b, edge)) = t.parent[c] else {
            continue;
        };
        let w = &g.edges[edge].witness;
        let parent_necklace = &g.class(b).necklace;
        let (in_parent, in_child) = if w.from_class.necklace == *parent_necklace {
            (&w.witness_u, &w.witness_v)
        } else {
            (&w.witness_v, &w.witness_u)
        };
        let anchor_b = anchors[b].as_ref().expect("parent aligned before child");
        let j = (0..orders[b])
            .find(|&j| anchor_b.rotate(i64::from(j), &p) == *in_parent)
            .ok_or_else(|| Error::WitnessMismatch {
                class: parent_necklace.to_string(),
                witness: in_parent.to_string(),
            })?;
        anchors[c] = Some(in_child.rotate(-i64::from(j), &p));
    }
    let anchors = anchors
        .into_iter()
        .map(|a| a.expect("tree spans every class"))
        .collect();
    Ok(ClassIndexing {
        params: p,
        anchors,
        orders,
    })
}
