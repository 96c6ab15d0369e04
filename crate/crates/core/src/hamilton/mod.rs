//! Hamiltonian cycle construction.
//!
//! Every rotation class is a cycle on its own. A BFS spanning tree of the
//! friend-class graph tells which cycles to merge: for a tree edge `(B, C)`
//! the class indexings are aligned so that `B_i` and `C_i` are adjacent for
//! all `i`, and the cycles are joined by swapping `B_t B_{t+1}`,
//! `C_t C_{t+1}` for `B_t C_t`, `B_{t+1} C_{t+1}`. Class `B` uses slots
//! `consumed(B) + 1, consumed(B) + 2, ...` for its children, where
//! `consumed(B)` is the slot spent joining its own parent (0 for the root).
//! Tree degree below the class order keeps those slots distinct.

mod cycle;
mod indexing;
mod tree;

pub use cycle::CycleStructure;
pub use indexing::{align_indexing, ClassIndexing};
pub use tree::{spanning_tree, SpanningTree};

use crate::classgraph::{build_sck, SckGraph};
use crate::error::{Error, Result};
use crate::model::{Params, Vertex};

/// Everything produced on the way to a Hamiltonian cycle.
#[derive(Debug, Clone)]
pub struct Construction {
    pub params: Params,
    pub sck: SckGraph,
    pub tree: SpanningTree,
    pub indexing: ClassIndexing,
    /// Cyclic order, starting at the root anchor.
    pub cycle: Vec<Vertex>,
}

impl Construction {
    pub fn build(p: &Params) -> Result<Construction> {
        let sck = build_sck(p);
        if sck.catalog.total_vertices < 3 {
            return Err(not_hamiltonian(p, sck.catalog.total_vertices));
        }
        let tree = spanning_tree(&sck)?;
        let indexing = align_indexing(&sck, &tree)?;
        let mut cs = CycleStructure::seed(&indexing)?;
        splice_all(&mut cs, &tree, &indexing)?;
        let cycle = cs.traverse(tree.root, &indexing)?;
        Ok(Construction {
            params: *p,
            sck,
            tree,
            indexing,
            cycle,
        })
    }
}

/// Splices every child into its parent, level by level.
pub fn splice_all(cs: &mut CycleStructure, tree: &SpanningTree, idx: &ClassIndexing) -> Result<()> {
    cs.set_consumed(tree.root, 0);
    for &b in &tree.order {
        let base = u64::from(cs.consumed(b).expect("parent spliced before its children"));
        for (alpha, &c) in tree.children[b].iter().enumerate() {
            cs.splice(b, c, base + alpha as u64 + 1, idx)?;
        }
    }
    if cs.cycle_count() != 1 {
        return Err(Error::BrokenCycle(format!("{} cycles left after splicing", cs.cycle_count())));
    }
    Ok(())
}

fn not_hamiltonian(p: &Params, count: u64) -> Error {
    let reason = if p.s == 2 {
        format!(
            "{p}: only {count} vertices; with s = 2 a Hamiltonian cycle needs n >= 2k+1 = {}",
            2 * p.k + 1
        )
    } else {
        format!("{p}: only {count} vertices, fewer than 3")
    };
    Error::NotHamiltonian { reason }
}

/// A Hamiltonian cycle of `K_{s-stab}(n, k)`, in cyclic order.
///
/// `n = s*k` gives `s` pairwise disjoint vertices (a complete graph), which
/// is a cycle for `s >= 3`; for `s = 2` the graph is a single edge.
pub fn assemble_hamiltonian(p: &Params) -> Result<Vec<Vertex>> {
    Construction::build(p).map(|c| c.cycle)
}
