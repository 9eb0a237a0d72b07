//! Cells (bounded faces of the embedding) and upper-adjacent pairs of
//! 4-cells.

use serde::Serialize;

use crate::error::{LatticeError, Result};
use crate::lattice::faces::{face_of, split_bimodal, trace_faces};
use crate::lattice::LatticeDiagram;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cell {
    pub bottom: usize,
    pub top: usize,
    /// Bottom to top, both ends included.
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Cell {
    pub fn is_4cell(&self) -> bool {
        self.left.len() == 3 && self.right.len() == 3
    }

    /// Left atom of a 4-cell.
    pub fn left_atom(&self) -> usize {
        self.left[1]
    }

    pub fn right_atom(&self) -> usize {
        self.right[1]
    }

    pub fn elements(&self) -> Vec<usize> {
        let mut e = self.left.clone();
        e.extend(&self.right[1..self.right.len() - 1]);
        e.sort_unstable();
        e
    }

    /// Checks that both sides are maximal chains of `[bottom, top]` and that
    /// every inner left element is left of every inner right element.
    pub fn satisfies_definition(&self, d: &LatticeDiagram) -> bool {
        let chain_ok = |c: &[usize]| {
            c.first() == Some(&self.bottom) && c.last() == Some(&self.top) && c.windows(2).all(|w| d.covers(w[0], w[1]))
        };
        let inner = |c: &[usize]| c[1..c.len() - 1].to_vec();
        chain_ok(&self.left)
            && chain_ok(&self.right)
            && self.left.len() >= 3
            && self.right.len() >= 3
            && inner(&self.left)
                .iter()
                .all(|&x| inner(&self.right).iter().all(|&y| matches!(d.left_of(x, y), Ok(true))))
    }
}

/// All bounded faces, ordered by bottom then left atom.
pub fn enumerate_cells(d: &LatticeDiagram) -> Vec<Cell> {
    if d.edge_count() == 0 {
        return Vec::new();
    }
    let raw = d.to_raw();
    let faces = trace_faces(&raw.up, &raw.down);
    let first = d.up(d.bottom())[0];
    let outer = face_of(&faces, (d.bottom(), first));
    let mut cells: Vec<Cell> = faces
        .iter()
        .enumerate()
        .filter(|(i, _)| Some(*i) != outer)
        .map(|(_, f)| {
            let (left, right) =
                split_bimodal(f, |(a, b)| d.covers(a, b)).expect("validated diagrams have bimodal faces");
            Cell {
                bottom: left[0],
                top: *left.last().unwrap(),
                left,
                right,
            }
        })
        .collect();
    cells.sort_by_key(|c| (c.bottom, c.left[1]));
    cells
}

pub fn is_4cell_lattice(d: &LatticeDiagram) -> bool {
    enumerate_cells(d).iter().all(Cell::is_4cell)
}

/// Semimodularity read off the cells: cells with equal bottoms have equal
/// tops.
pub fn cell_criterion_semimodular(d: &LatticeDiagram) -> Result<bool> {
    let cells = enumerate_cells(d);
    if !cells.iter().all(Cell::is_4cell) {
        return Err(LatticeError::Precondition("not a 4-cell lattice".into()));
    }
    Ok(cells
        .iter()
        .all(|a| cells.iter().all(|b| a.bottom != b.bottom || a.top == b.top)))
}

/// Two 4-cells `a` (left) and `b` (right) with a common top whose
/// intersection is the top and the shared atom `u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UpperAdjacentPair {
    pub a: Cell,
    pub b: Cell,
    pub top: usize,
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

impl UpperAdjacentPair {
    fn from_cells(a: &Cell, b: &Cell) -> Option<UpperAdjacentPair> {
        let ok =
            a.is_4cell() && b.is_4cell() && a.top == b.top && a.right_atom() == b.left_atom() && a.bottom != b.bottom;
        ok.then(|| UpperAdjacentPair {
            a: a.clone(),
            b: b.clone(),
            top: a.top,
            u: a.right_atom(),
            v: a.left_atom(),
            w: b.right_atom(),
        })
    }

    /// Checks the pair against the diagram it claims to live in.
    pub fn check_in(&self, d: &LatticeDiagram) -> Result<()> {
        let cells = enumerate_cells(d);
        let found = cells.contains(&self.a)
            && cells.contains(&self.b)
            && UpperAdjacentPair::from_cells(&self.a, &self.b).as_ref() == Some(self);
        if found {
            Ok(())
        } else {
            Err(LatticeError::PairNotInLattice(format!("top {} u {}", self.top, self.u)))
        }
    }
}

/// Ordered by top, then `u`.
pub fn upper_adjacent_pairs(d: &LatticeDiagram) -> Vec<UpperAdjacentPair> {
    let cells = enumerate_cells(d);
    let mut pairs: Vec<UpperAdjacentPair> = cells
        .iter()
        .flat_map(|a| cells.iter().filter_map(move |b| UpperAdjacentPair::from_cells(a, b)))
        .collect();
    pairs.sort_by_key(|p| (p.top, p.u));
    pairs
}

/// Pairs whose top is not strictly below the top of another pair.
pub fn maximal_upper_adjacent_pairs(d: &LatticeDiagram) -> Vec<UpperAdjacentPair> {
    let pairs = upper_adjacent_pairs(d);
    let tops: Vec<usize> = pairs.iter().map(|p| p.top).collect();
    pairs
        .into_iter()
        .filter(|p| !tops.iter().any(|&t| d.lt(p.top, t)))
        .collect()
}

pub fn count_pairs(d: &LatticeDiagram) -> usize {
    upper_adjacent_pairs(d).len()
}

/// Whether `p` is maximal among the pairs of `d`.
pub fn is_maximal(d: &LatticeDiagram, p: &UpperAdjacentPair) -> bool {
    !upper_adjacent_pairs(d).iter().any(|q| d.lt(p.top, q.top))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(d: &LatticeDiagram, c: &Cell) -> Vec<String> {
        let mut v: Vec<String> = c.elements().iter().map(|&x| d.name(x)).collect();
        v.sort();
        v
    }

    #[test]
    fn square_has_one_cell() {
        let cells = enumerate_cells(&fixtures::c2xc2());
        assert_eq!(cells.len(), 1);
        assert!(cells[0].is_4cell());
    }

    #[test]
    fn grid_3x3_has_four_4cells() {
        let g = fixtures::grid(3, 3);
        let cells = enumerate_cells(&g);
        assert_eq!(cells.len(), 4);
        assert!(cells.iter().all(|c| c.is_4cell() && c.satisfies_definition(&g)));
    }

    #[test]
    fn s7_cells() {
        let s = fixtures::s7();
        let cells = enumerate_cells(&s);
        let got: Vec<Vec<String>> = cells.iter().map(|c| names(&s, c)).collect();
        let want: Vec<Vec<String>> = [["0", "a1", "a2", "m"], ["1", "a1", "b1", "m"], ["1", "a2", "b2", "m"]]
            .iter()
            .map(|c| c.iter().map(|s| s.to_string()).collect())
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn n5_is_not_a_4cell_lattice() {
        let n5 = fixtures::n5();
        assert!(!is_4cell_lattice(&n5));
        let cells = enumerate_cells(&n5);
        assert_eq!(cells.len(), 1);
        let mut lens = [cells[0].left.len(), cells[0].right.len()];
        lens.sort();
        assert_eq!(lens, [3, 4]);
        assert!(cell_criterion_semimodular(&n5).is_err());
    }

    #[test]
    fn chain_vacuous() {
        assert!(is_4cell_lattice(&fixtures::chain(4)));
        assert!(enumerate_cells(&fixtures::chain(1)).is_empty());
    }

    #[test]
    fn cell_criterion_examples() {
        assert!(cell_criterion_semimodular(&fixtures::s7()).unwrap());
        assert!(cell_criterion_semimodular(&fixtures::grid(3, 3)).unwrap());
        let kite = fixtures::kite();
        assert!(is_4cell_lattice(&kite));
        assert!(!cell_criterion_semimodular(&kite).unwrap());
        assert!(!kite.is_semimodular());
    }

    #[test]
    fn s7_pair() {
        let s = fixtures::s7();
        let pairs = upper_adjacent_pairs(&s);
        assert_eq!(pairs.len(), 1);
        let p = &pairs[0];
        assert_eq!(
            [p.top, p.u, p.v, p.w].map(|x| s.name(x)),
            ["1", "m", "b1", "b2"].map(String::from)
        );
        assert_eq!(maximal_upper_adjacent_pairs(&s), pairs);
        assert_eq!(count_pairs(&s), 1);
        p.check_in(&s).unwrap();
    }

    #[test]
    fn grid_has_no_pairs() {
        let g = fixtures::grid(3, 3);
        assert_eq!(count_pairs(&g), 0);
        assert!(maximal_upper_adjacent_pairs(&g).is_empty());
    }

    #[test]
    fn face_degrees_sum_to_twice_edges() {
        for d in fixtures::all() {
            let raw = d.to_raw();
            let total: usize = trace_faces(&raw.up, &raw.down).iter().map(Vec::len).sum();
            assert_eq!(total, 2 * d.edge_count());
        }
    }
}
