use crate::error::{Error, Result};
use crate::model::Vertex;

use super::ClassIndexing;

/// A 2-regular graph on the members of all classes, kept as a neighbour map.
///
/// Member `A_i` gets the id `offset[A] + (i mod order[A])`. Seeding places
/// every class on its own rotation cycle; each [`splice`](Self::splice)
/// merges two cycles with a 2-edge exchange.
#[derive(Debug, Clone)]
pub struct CycleStructure {
    offsets: Vec<u32>,
    orders: Vec<u32>,
    neighbors: Vec<[u32; 2]>,
    consumed: Vec<Option<u32>>,
    // union-find over classes; each root stands for one cycle
    leader: Vec<usize>,
    cycles: usize,
}

impl CycleStructure {
    /// One rotation cycle `A_0 A_1 ... A_{m-1} A_0` per class.
    pub fn seed(idx: &ClassIndexing) -> Result<CycleStructure> {
        let mut offsets = Vec::with_capacity(idx.orders.len());
        let mut neighbors = Vec::new();
        let mut next = 0u32;
        for (class, &m) in idx.orders.iter().enumerate() {
            if m < 3 {
                return Err(Error::BrokenCycle(format!(
                    "class {class} has order {m}; a rotation cycle needs at least 3 members"
                )));
            }
            offsets.push(next);
            for i in 0..m {
                let prev = next + (i + m - 1) % m;
                let succ = next + (i + 1) % m;
                neighbors.push([prev, succ]);
            }
            next += m;
        }
        let classes = idx.orders.len();
        Ok(CycleStructure {
            offsets,
            orders: idx.orders.clone(),
            neighbors,
            consumed: vec![None; classes],
            leader: (0..classes).collect(),
            cycles: classes,
        })
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    /// Slot of the rotation-cycle edge removed when `class` joined its parent.
    pub fn consumed(&self, class: usize) -> Option<u32> {
        self.consumed[class]
    }

    pub fn set_consumed(&mut self, class: usize, slot: u32) {
        self.consumed[class] = Some(slot % self.orders[class]);
    }

    fn id(&self, class: usize, i: u64) -> u32 {
        self.offsets[class] + (i % u64::from(self.orders[class])) as u32
    }

    fn has_edge(&self, x: u32, y: u32) -> bool {
        self.neighbors[x as usize].contains(&y)
    }

    fn replace(&mut self, x: u32, old: u32, new: u32) {
        let slot = self.neighbors[x as usize]
            .iter_mut()
            .find(|v| **v == old)
            .expect("edge checked before exchange");
        *slot = new;
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.leader[x] != x {
            self.leader[x] = self.leader[self.leader[x]];
            x = self.leader[x];
        }
        x
    }

    /// Exchanges `B_t B_{t+1}` and `C_t C_{t+1}` for `B_t C_t` and
    /// `B_{t+1} C_{t+1}`, with `t = slot` reduced separately modulo each order.
    pub fn splice(&mut self, b: usize, c: usize, slot: u64, idx: &ClassIndexing) -> Result<()> {
        let (bt, bt1) = (self.id(b, slot), self.id(b, slot + 1));
        let (ct, ct1) = (self.id(c, slot), self.id(c, slot + 1));
        if !self.has_edge(bt, bt1) {
            return Err(Error::SlotOccupied {
                class: b.to_string(),
                slot,
            });
        }
        if !self.has_edge(ct, ct1) {
            return Err(Error::BrokenCycle(format!("class {c} lost edge at slot {slot}")));
        }
        let (lb, lc) = (self.find(b), self.find(c));
        if lb == lc {
            return Err(Error::BrokenCycle(format!("classes {b} and {c} already share a cycle")));
        }
        let t = slot as i64;
        if !idx.member(b, t).is_adjacent(&idx.member(c, t)) || !idx.member(b, t + 1).is_adjacent(&idx.member(c, t + 1)) {
            return Err(Error::BrokenCycle(format!("classes {b} and {c} are not aligned at slot {slot}")));
        }
        self.replace(bt, bt1, ct);
        self.replace(bt1, bt, ct1);
        self.replace(ct, ct1, bt);
        self.replace(ct1, ct, bt1);
        self.leader[lc] = lb;
        self.cycles -= 1;
        self.set_consumed(c, (slot % u64::from(self.orders[c])) as u32);
        Ok(())
    }

    fn locate(&self, id: u32) -> (usize, i64) {
        let class = self.offsets.partition_point(|&o| o <= id) - 1;
        (class, i64::from(id - self.offsets[class]))
    }

    /// Walks the single remaining cycle from `start_class`'s member 0, first
    /// stepping to the lexicographically smaller neighbour.
    pub fn traverse(&self, start_class: usize, idx: &ClassIndexing) -> Result<Vec<Vertex>> {
        let vertex = |id: u32| {
            let (class, i) = self.locate(id);
            idx.member(class, i)
        };
        let total = self.neighbors.len();
        let start = self.offsets[start_class];
        let [x, y] = self.neighbors[start as usize];
        let mut next = if vertex(x) <= vertex(y) { x } else { y };
        let mut prev = start;
        let mut out = Vec::with_capacity(total);
        out.push(vertex(start));
        while next != start {
            if out.len() >= total {
                return Err(Error::BrokenCycle("walk did not close".into()));
            }
            out.push(vertex(next));
            let [a, b] = self.neighbors[next as usize];
            let step = if a == prev { b } else { a };
            prev = next;
            next = step;
        }
        if out.len() != total {
            return Err(Error::BrokenCycle(format!(
                "cycle through the start covers {} of {total} vertices",
                out.len()
            )));
        }
        Ok(out)
    }
}
