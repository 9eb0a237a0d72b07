//! Lattices without an embedding, and the read interface shared with
//! [`LatticeDiagram`].

use super::order::{topological_order, up_sets, Order, OrderFailure};
use super::LatticeDiagram;
use crate::error::{LatticeError, Result};

/// Order-theoretic reads common to embedded and plain lattices.
pub trait FiniteLattice: Send + Sync {
    fn len(&self) -> usize;
    fn bottom(&self) -> usize;
    fn top(&self) -> usize;
    fn leq(&self, x: usize, y: usize) -> bool;
    fn join(&self, x: usize, y: usize) -> usize;
    fn meet(&self, x: usize, y: usize) -> usize;
    fn height(&self, x: usize) -> usize;
    fn upper_covers(&self, x: usize) -> &[usize];
    fn lower_covers(&self, x: usize) -> &[usize];

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn covers(&self, x: usize, y: usize) -> bool {
        self.upper_covers(x).contains(&y)
    }

    fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower_covers(x).len() == 1).collect()
    }
}

impl FiniteLattice for LatticeDiagram {
    fn len(&self) -> usize {
        LatticeDiagram::len(self)
    }
    fn bottom(&self) -> usize {
        LatticeDiagram::bottom(self)
    }
    fn top(&self) -> usize {
        LatticeDiagram::top(self)
    }
    fn leq(&self, x: usize, y: usize) -> bool {
        LatticeDiagram::leq(self, x, y)
    }
    fn join(&self, x: usize, y: usize) -> usize {
        LatticeDiagram::join(self, x, y)
    }
    fn meet(&self, x: usize, y: usize) -> usize {
        LatticeDiagram::meet(self, x, y)
    }
    fn height(&self, x: usize) -> usize {
        LatticeDiagram::height(self, x)
    }
    fn upper_covers(&self, x: usize) -> &[usize] {
        self.up(x)
    }
    fn lower_covers(&self, x: usize) -> &[usize] {
        self.down(x)
    }
}

/// A finite lattice given by its cover relation only.
#[derive(Clone, Debug)]
pub struct PlainLattice {
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    order: Order,
    bottom: usize,
    top: usize,
}

impl PlainLattice {
    /// `up[x]` lists the upper covers of `x` in any order.
    pub fn from_covers(up: Vec<Vec<usize>>) -> Result<PlainLattice> {
        let n = up.len();
        let bad = |m: String| LatticeError::Precondition(m);
        if n == 0 {
            return Err(bad("empty lattice".into()));
        }
        if up.iter().flatten().any(|&y| y >= n) {
            return Err(bad("cover index out of range".into()));
        }
        let topo = topological_order(&up).ok_or_else(|| bad("cover relation has a cycle".into()))?;
        let ups = up_sets(&up, &topo);
        for (x, ys) in up.iter().enumerate() {
            for &y in ys {
                if ys.iter().any(|&c| c != y && ups[c].contains(y)) {
                    return Err(bad(format!("{x} -> {y} is not a cover")));
                }
            }
        }
        let order = Order::build(&up).map_err(|e| match e {
            OrderFailure::Cycle => bad("cover relation has a cycle".into()),
            OrderFailure::NoJoin(x, y) => bad(format!("{x} and {y} have no join")),
            OrderFailure::NoMeet(x, y) => bad(format!("{x} and {y} have no meet")),
        })?;
        let mut down = vec![Vec::new(); n];
        for (x, ys) in up.iter().enumerate() {
            for &y in ys {
                down[y].push(x);
            }
        }
        let bottom = (0..n).find(|&x| down[x].is_empty()).unwrap();
        let top = (0..n).find(|&x| up[x].is_empty()).unwrap();
        Ok(PlainLattice {
            up,
            down,
            order,
            bottom,
            top,
        })
    }

    pub fn cover_lists(&self) -> &[Vec<usize>] {
        &self.up
    }
}

impl From<&LatticeDiagram> for PlainLattice {
    fn from(d: &LatticeDiagram) -> PlainLattice {
        PlainLattice::from_covers(d.to_raw().up).expect("a diagram is a lattice")
    }
}

impl FiniteLattice for PlainLattice {
    fn len(&self) -> usize {
        self.up.len()
    }
    fn bottom(&self) -> usize {
        self.bottom
    }
    fn top(&self) -> usize {
        self.top
    }
    fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }
    fn join(&self, x: usize, y: usize) -> usize {
        self.order.join(x, y)
    }
    fn meet(&self, x: usize, y: usize) -> usize {
        self.order.meet(x, y)
    }
    fn height(&self, x: usize) -> usize {
        self.order.height[x]
    }
    fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }
    fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }
}
