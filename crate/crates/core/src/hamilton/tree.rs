use std::collections::VecDeque;

use crate::classgraph::SckGraph;
use crate::error::{Error, Result};

/// BFS spanning tree of the friend-class graph, rooted at the root class.
///
/// All class references are catalog indices.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    pub root: usize,
    /// `(parent class, SCK edge index)`; `None` for the root.
    pub parent: Vec<Option<(usize, usize)>>,
    /// Children in increasing necklace order.
    pub children: Vec<Vec<usize>>,
    pub level: Vec<u32>,
    /// Classes in BFS order, root first.
    pub order: Vec<usize>,
}

impl SpanningTree {
    pub fn tree_degree(&self, idx: usize) -> usize {
        self.children[idx].len() + usize::from(self.parent[idx].is_some())
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// BFS from the root class, neighbours in increasing necklace order.
pub fn spanning_tree(g: &SckGraph) -> Result<SpanningTree> {
    let count = g.catalog.len();
    let root = g.root_index();
    let mut parent = vec![None; count];
    let mut children = vec![Vec::new(); count];
    let mut level = vec![0u32; count];
    let mut seen = vec![false; count];
    let mut order = Vec::with_capacity(count);
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &(y, edge) in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, edge));
                level[y] = level[x] + 1;
                children[x].push(y);
                queue.push_back(y);
            }
        }
    }
    if order.len() != count {
        return Err(Error::Disconnected {
            unreached: count - order.len(),
        });
    }
    let tree = SpanningTree {
        root,
        parent,
        children,
        level,
        order,
    };
    for idx in 0..count {
        let order = g.class(idx).order;
        let degree = tree.tree_degree(idx);
        if degree > order as usize {
            return Err(Error::DegreeBound {
                class: g.class(idx).necklace.to_string(),
                degree,
                order,
            });
        }
    }
    Ok(tree)
}
