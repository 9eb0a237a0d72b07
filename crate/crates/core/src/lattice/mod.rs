//! Finite lattices together with a fixed planar embedding.
//!
//! The embedding is a rotation system: each element keeps its upper covers
//! and its lower covers ordered left to right. Validation certifies the
//! embedding through the Euler face count plus the shape of the outer face.

mod canon;
pub mod faces;
pub mod order;
mod plain;
pub mod predicates;
mod validate;

use std::cmp::Ordering;

pub use canon::{brute_force_isomorphic, is_isomorphic, lattice_code, CanonicalCode};
pub use plain::{FiniteLattice, PlainLattice};
pub use validate::{Rule, ValidationReport, Violation};

use crate::error::{LatticeError, Result};
use order::{covers_within, Order};

/// Unvalidated diagram data, as read from a file or built by hand.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawDiagram {
    pub up: Vec<Vec<usize>>,
    pub down: Vec<Vec<usize>>,
    pub labels: Vec<Option<String>>,
}

impl RawDiagram {
    /// Builds raw data from ordered upper-cover lists. Lower covers are
    /// ordered by the left-of relation when the structure is a lattice, and
    /// by id otherwise (validation then reports the failure).
    pub fn from_up_lists(up: Vec<Vec<usize>>, labels: Vec<Option<String>>) -> RawDiagram {
        let n = up.len();
        let mut down = vec![Vec::new(); n];
        let in_range = up.iter().flatten().all(|&y| y < n);
        if in_range {
            for (x, ys) in up.iter().enumerate() {
                for &y in ys {
                    down[y].push(x);
                }
            }
            if let Ok(order) = Order::build(&up) {
                for list in down.iter_mut() {
                    insertion_sort_by(list, |&a, &b| match left_of_in(&up, &order, a, b) {
                        Ok(true) => Ordering::Less,
                        Ok(false) => Ordering::Greater,
                        Err(_) => a.cmp(&b),
                    });
                }
            }
        }
        let mut labels = labels;
        labels.resize(n, None);
        RawDiagram { up, down, labels }
    }
}

fn insertion_sort_by<T: Copy>(v: &mut [T], mut cmp: impl FnMut(&T, &T) -> Ordering) {
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && cmp(&v[j - 1], &v[j]) == Ordering::Greater {
            v.swap(j - 1, j);
            j -= 1;
        }
    }
}

/// Checks all diagram invariants without failing.
pub fn validate(raw: &RawDiagram) -> ValidationReport {
    validate::validate_full(raw).0
}

/// A validated planar lattice diagram. Immutable; all queries are reads.
#[derive(Clone, Debug)]
pub struct LatticeDiagram {
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    labels: Vec<Option<String>>,
    order: Order,
    bottom: usize,
    top: usize,
}

impl PartialEq for LatticeDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.up == other.up && self.down == other.down && self.labels == other.labels
    }
}

impl Eq for LatticeDiagram {}

impl LatticeDiagram {
    pub fn from_raw(raw: RawDiagram) -> Result<LatticeDiagram> {
        let (report, order) = validate::validate_full(&raw);
        if !report.ok() {
            return Err(LatticeError::Invalid(report));
        }
        let order = order.expect("valid diagrams carry order tables");
        let bottom = (0..raw.up.len()).find(|&x| raw.down[x].is_empty()).unwrap();
        let top = (0..raw.up.len()).find(|&x| raw.up[x].is_empty()).unwrap();
        let mut labels = raw.labels;
        labels.resize(raw.up.len(), None);
        Ok(LatticeDiagram {
            up: raw.up,
            down: raw.down,
            labels,
            order,
            bottom,
            top,
        })
    }

    pub fn from_up_lists(up: Vec<Vec<usize>>) -> Result<LatticeDiagram> {
        Self::from_raw(RawDiagram::from_up_lists(up, Vec::new()))
    }

    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> LatticeDiagram {
        self.labels = labels;
        self.labels.resize(self.len(), None);
        self
    }

    pub fn to_raw(&self) -> RawDiagram {
        RawDiagram {
            up: self.up.clone(),
            down: self.down.clone(),
            labels: self.labels.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn up(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn down(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn label(&self, x: usize) -> Option<&str> {
        self.labels[x].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// Label if present, otherwise the id.
    pub fn name(&self, x: usize) -> String {
        self.label(x).map_or_else(|| x.to_string(), str::to_string)
    }

    /// Element with the given label.
    pub fn by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(label))
    }

    pub fn edge_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.order.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `x ≺ y`.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(&y)
    }

    pub fn height(&self, x: usize) -> usize {
        self.order.height[x]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.order.join(x, y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.order.meet(x, y)
    }

    pub fn checked_join(&self, x: usize, y: usize) -> Result<usize> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.join(x, y))
    }

    pub fn checked_meet(&self, x: usize, y: usize) -> Result<usize> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.meet(x, y))
    }

    pub(crate) fn check(&self, x: usize) -> Result<()> {
        if x < self.len() {
            Ok(())
        } else {
            Err(LatticeError::OutOfRange(x, self.len()))
        }
    }

    /// Elements `y` with `x <= y`.
    pub fn up_set(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.order.ups[x].iter()
    }

    /// Elements `y` with `y <= x`.
    pub fn down_set(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.order.downs[x].iter()
    }

    /// The interval `[a, b]` in increasing id order.
    pub fn interval(&self, a: usize, b: usize) -> Vec<usize> {
        self.order.ups[a].intersection(&self.order.downs[b]).iter().collect()
    }

    pub fn is_join_irreducible(&self, x: usize) -> bool {
        self.down[x].len() == 1
    }

    pub fn is_meet_irreducible(&self, x: usize) -> bool {
        self.up[x].len() == 1
    }

    pub fn is_doubly_irreducible(&self, x: usize) -> bool {
        self.is_join_irreducible(x) && self.is_meet_irreducible(x)
    }

    pub fn join_irreducibles(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.is_join_irreducible(x)).collect()
    }

    /// Whether `x` lies to the left of `y` in the fixed embedding.
    ///
    /// Follows the leftmost paths from `x ∧ y` towards `x` and towards `y`
    /// and compares the branch positions where they first part.
    pub fn left_of(&self, x: usize, y: usize) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        left_of_in(&self.up, &self.order, x, y)
    }

    /// `(leftChain, rightChain)`: maximal chains from bottom to top always
    /// taking the first (resp. last) upper cover.
    pub fn boundary_chains(&self) -> (Vec<usize>, Vec<usize>) {
        let walk = |last: bool| {
            let mut chain = vec![self.bottom];
            let mut x = self.bottom;
            while let Some(&y) = if last { self.up[x].last() } else { self.up[x].first() } {
                chain.push(y);
                x = y;
            }
            chain
        };
        (walk(false), walk(true))
    }

    pub fn covers_above(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    /// `x*_L`: the left upper cover of a non-top element with at most two covers.
    pub fn star_left(&self, x: usize) -> Result<usize> {
        self.star(x).map(|c| c[0])
    }

    /// `x*_R`: the right upper cover of a non-top element with at most two covers.
    pub fn star_right(&self, x: usize) -> Result<usize> {
        self.star(x).map(|c| *c.last().unwrap())
    }

    fn star(&self, x: usize) -> Result<&[usize]> {
        self.check(x)?;
        let c = &self.up[x];
        match c.len() {
            0 => Err(LatticeError::IsTop(x)),
            1 | 2 => Ok(c),
            k => Err(LatticeError::NotSlimSemimodularContext { element: x, covers: k }),
        }
    }

    /// Sub-diagram on `keep` (ids of `self`, any order). The new id of
    /// `keep[i]` is `i`. Covers are recomputed from the restricted order and
    /// cover lists are ordered by `self`'s left-of relation.
    pub fn induced(&self, keep: &[usize]) -> Result<LatticeDiagram> {
        Ok(self.induced_raw(keep)?.0)
    }

    pub(crate) fn induced_raw(&self, keep: &[usize]) -> Result<(LatticeDiagram, RawDiagram)> {
        for &x in keep {
            self.check(x)?;
        }
        let n = keep.len();
        let mut new_id = vec![usize::MAX; self.len()];
        for (i, &x) in keep.iter().enumerate() {
            new_id[x] = i;
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for (x, y) in covers_within(&self.order.ups, keep) {
            up[new_id[x]].push(y);
            down[new_id[y]].push(x);
        }
        let cmp = |a: &usize, b: &usize| match self.left_of(*a, *b) {
            Ok(true) => Ordering::Less,
            Ok(false) => Ordering::Greater,
            Err(_) => a.cmp(b),
        };
        for list in up.iter_mut().chain(down.iter_mut()) {
            insertion_sort_by(list, cmp);
            for e in list.iter_mut() {
                *e = new_id[*e];
            }
        }
        let labels = keep.iter().map(|&x| self.labels[x].clone()).collect();
        let raw = RawDiagram { up, down, labels };
        Ok((LatticeDiagram::from_raw(raw.clone())?, raw))
    }

    /// The left-right mirror image (same lattice, reversed embedding).
    pub fn mirror(&self) -> LatticeDiagram {
        let rev = |v: &Vec<Vec<usize>>| v.iter().map(|l| l.iter().rev().copied().collect()).collect();
        LatticeDiagram {
            up: rev(&self.up),
            down: rev(&self.down),
            labels: self.labels.clone(),
            order: self.order.clone(),
            bottom: self.bottom,
            top: self.top,
        }
    }

    /// Renames element `x` to `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<LatticeDiagram> {
        let n = self.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        let mut labels = vec![None; n];
        for x in 0..n {
            up[perm[x]] = self.up[x].iter().map(|&y| perm[y]).collect();
            down[perm[x]] = self.down[x].iter().map(|&y| perm[y]).collect();
            labels[perm[x]] = self.labels[x].clone();
        }
        LatticeDiagram::from_raw(RawDiagram { up, down, labels })
    }
}

pub(crate) fn left_of_in(up: &[Vec<usize>], order: &Order, x: usize, y: usize) -> Result<bool> {
    if order.leq(x, y) || order.leq(y, x) {
        return Err(LatticeError::Comparable(x, y));
    }
    let z = order.meet(x, y);
    let step = |p: usize, target: usize| up[p].iter().position(|&c| order.leq(c, target));
    let (mut px, mut py) = (z, z);
    loop {
        let (ix, iy) = match (step(px, x), step(py, y)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(LatticeError::Comparable(x, y)),
        };
        let (cx, cy) = (up[px][ix], up[py][iy]);
        if cx != cy || px != py {
            return Ok(ix < iy);
        }
        px = cx;
        py = cy;
    }
}
