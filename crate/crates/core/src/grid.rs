//! Chains, grids, corner removal and recognition of grids with corners cut
//! off.
//!
//! In the grid `C_m × C_n` the element `⟨i, j⟩` has id `i·n + j` and upper
//! covers `[⟨i+1, j⟩, ⟨i, j+1⟩]`, so the `i` axis runs along the left
//! boundary.

use serde::{Deserialize, Serialize};

use crate::error::{LatticeError, Result};
use crate::lattice::{LatticeDiagram, RawDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

pub fn chain(k: usize) -> Result<LatticeDiagram> {
    if k == 0 {
        return Err(LatticeError::Precondition("a chain needs at least one element".into()));
    }
    let up = (0..k).map(|i| if i + 1 < k { vec![i + 1] } else { vec![] }).collect();
    let labels = (0..k).map(|i| Some(i.to_string())).collect();
    LatticeDiagram::from_raw(RawDiagram::from_up_lists(up, labels))
}

pub fn product_of_chains(m: usize, n: usize) -> Result<LatticeDiagram> {
    if m == 0 || n == 0 {
        return Err(LatticeError::Precondition("grid sides must be positive".into()));
    }
    let mut up = Vec::with_capacity(m * n);
    let mut labels = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            let mut c = Vec::new();
            if i + 1 < m {
                c.push((i + 1) * n + j);
            }
            if j + 1 < n {
                c.push(i * n + j + 1);
            }
            up.push(c);
            labels.push(Some(format!("{i},{j}")));
        }
    }
    LatticeDiagram::from_raw(RawDiagram::from_up_lists(up, labels))
}

fn boundary(d: &LatticeDiagram, side: Side) -> Vec<usize> {
    let (l, r) = d.boundary_chains();
    match side {
        Side::Left => l,
        Side::Right => r,
    }
}

/// Whether `x` may be cut off `d` from the given side.
pub fn is_removable(d: &LatticeDiagram, side: Side, x: usize) -> bool {
    x != d.bottom() && x != d.top() && d.is_doubly_irreducible(x) && boundary(d, side).contains(&x)
}

/// Removes `x`; the remaining ids keep their relative order.
pub fn remove_element(d: &LatticeDiagram, side: Side, x: usize) -> Result<LatticeDiagram> {
    d.check(x)?;
    if !is_removable(d, side, x) {
        return Err(LatticeError::Precondition(format!(
            "element {x} is not a doubly irreducible element of the {} boundary",
            side.name()
        )));
    }
    let keep: Vec<usize> = d.elements().filter(|&y| y != x).collect();
    d.induced(&keep)
}

/// Removes `steps` doubly irreducible elements from one boundary, each
/// time the highest one available.
pub fn remove_corner(d: &LatticeDiagram, side: Side, steps: usize) -> Result<LatticeDiagram> {
    let mut cur = d.clone();
    for _ in 0..steps {
        let pick = boundary(&cur, side)
            .into_iter()
            .filter(|&x| is_removable(&cur, side, x))
            .max_by_key(|&x| cur.height(x));
        let Some(x) = pick else {
            return Err(LatticeError::NoDoublyIrreducible(side.name()));
        };
        cur = remove_element(&cur, side, x)?;
    }
    Ok(cur)
}

/// A distributive diagram written as `C_m × C_n` with a left corner and
/// then a right corner removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridDecomposition {
    pub m: usize,
    pub n: usize,
    /// Grid coordinates removed from the left boundary, in removal order.
    pub left_corner: Vec<(usize, usize)>,
    /// Grid coordinates removed afterwards from the right boundary.
    pub right_corner: Vec<(usize, usize)>,
    /// `witness[k]` is the element of the input matching the `k`-th element
    /// of the replayed diagram.
    pub witness: Vec<usize>,
    /// Grid coordinates of each input element.
    pub coords: Vec<(usize, usize)>,
}

impl GridDecomposition {
    /// Rebuilds the diagram by removing the recorded corners one element
    /// at a time, checking each removal. Element `k` of the result is the
    /// `k`-th surviving grid point in id order.
    pub fn replay(&self) -> Result<LatticeDiagram> {
        let grid = product_of_chains(self.m, self.n)?;
        let mut alive: Vec<usize> = grid.elements().collect();
        let mut cur = grid.clone();
        let steps = self
            .left_corner
            .iter()
            .map(|&c| (Side::Left, c))
            .chain(self.right_corner.iter().map(|&c| (Side::Right, c)));
        for (side, (i, j)) in steps {
            if i >= self.m || j >= self.n {
                return Err(LatticeError::NoDecomposition(format!("<{i},{j}> outside the grid")));
            }
            let g = i * self.n + j;
            let Some(pos) = alive.iter().position(|&a| a == g) else {
                return Err(LatticeError::NoDecomposition(format!("<{i},{j}> removed twice")));
            };
            cur = remove_element(&cur, side, pos)?;
            alive.remove(pos);
        }
        Ok(cur)
    }

    /// Surviving grid points in the order used by [`GridDecomposition::replay`].
    pub fn surviving(&self) -> Vec<(usize, usize)> {
        let mut gone: Vec<(usize, usize)> = self.left_corner.clone();
        gone.extend(&self.right_corner);
        (0..self.m)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|p| !gone.contains(p))
            .collect()
    }

    /// Replays and checks that the witness is an isomorphism onto `d`.
    pub fn verify(&self, d: &LatticeDiagram) -> Result<()> {
        let r = self.replay()?;
        if r.len() != d.len() || self.witness.len() != r.len() {
            return Err(LatticeError::NoDecomposition("size mismatch after replay".into()));
        }
        for x in r.elements() {
            for y in r.elements() {
                if r.covers(x, y) != d.covers(self.witness[x], self.witness[y]) {
                    return Err(LatticeError::NoDecomposition(format!(
                        "witness breaks the cover {x} -> {y}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Splits the join-irreducibles of `d` into at most two chains, each sorted
/// upwards. The chain holding the leftmost atom comes first.
fn two_chains(d: &LatticeDiagram) -> Result<(Vec<usize>, Vec<usize>)> {
    let j = d.join_irreducibles();
    let k = j.len();
    // maximum matching on the strict order, augmenting paths
    let mut match_right: Vec<Option<usize>> = vec![None; k];
    fn augment(
        a: usize,
        d: &LatticeDiagram,
        j: &[usize],
        seen: &mut [bool],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for b in 0..j.len() {
            if d.lt(j[a], j[b]) && !seen[b] {
                seen[b] = true;
                if match_right[b].is_none_or(|a2| augment(a2, d, j, seen, match_right)) {
                    match_right[b] = Some(a);
                    return true;
                }
            }
        }
        false
    }
    for a in 0..k {
        augment(a, d, &j, &mut vec![false; k], &mut match_right);
    }
    let mut next = vec![None; k];
    for (b, a) in match_right.iter().enumerate() {
        if let Some(a) = a {
            next[*a] = Some(b);
        }
    }
    let mut chains: Vec<Vec<usize>> = (0..k)
        .filter(|&b| match_right[b].is_none())
        .map(|start| {
            let mut c = vec![j[start]];
            let mut cur = start;
            while let Some(nx) = next[cur] {
                c.push(j[nx]);
                cur = nx;
            }
            c
        })
        .collect();
    if chains.len() > 2 {
        return Err(LatticeError::NoDecomposition(format!(
            "join-irreducibles need {} chains",
            chains.len()
        )));
    }
    chains.resize(2, Vec::new());
    let left_atom = d.up(d.bottom()).first().copied();
    if left_atom.is_some_and(|a| chains[1].contains(&a)) {
        chains.swap(0, 1);
    }
    let second = chains.pop().unwrap();
    let first = chains.pop().unwrap();
    Ok((first, second))
}

/// Finds `m`, `n` and corner removal sequences reproducing `d`.
pub fn recognize_grid_minus_corners(d: &LatticeDiagram) -> Result<GridDecomposition> {
    if !d.is_distributive() {
        return Err(LatticeError::NotDistributive);
    }
    let (c1, c2) = two_chains(d)?;
    let (m, n) = (c1.len() + 1, c2.len() + 1);
    let coords: Vec<(usize, usize)> = d
        .elements()
        .map(|x| {
            let i = c1.iter().filter(|&&c| d.leq(c, x)).count();
            let j = c2.iter().filter(|&&c| d.leq(c, x)).count();
            (i, j)
        })
        .collect();
    let mut at = vec![None; m * n];
    for (x, &(i, j)) in coords.iter().enumerate() {
        if at[i * n + j].replace(x).is_some() {
            return Err(LatticeError::NoDecomposition(format!("two elements at <{i},{j}>")));
        }
    }
    let present = |i: usize, j: usize| at[i * n + j].is_some();
    let row_min: Vec<usize> = (0..m).map(|i| (0..n).find(|&j| present(i, j)).unwrap_or(n)).collect();
    let col_min: Vec<usize> = (0..n).map(|j| (0..m).find(|&i| present(i, j)).unwrap_or(m)).collect();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (i, &rmin) in row_min.iter().enumerate() {
        for (j, &cmin) in col_min.iter().enumerate() {
            if present(i, j) {
                continue;
            }
            match (j < rmin, i < cmin) {
                (true, false) => left.push((i, j)),
                (false, true) => right.push((i, j)),
                _ => {
                    return Err(LatticeError::NoDecomposition(format!(
                        "missing point <{i},{j}> is not in a corner"
                    )))
                }
            }
        }
    }

    let grid = product_of_chains(m, n)?;
    let mut alive: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let mut cur = grid;
    let mut order_of = |mut pending: Vec<(usize, usize)>, side: Side| -> Result<Vec<(usize, usize)>> {
        let mut seq = Vec::new();
        // corner points furthest from the diagonal go first
        pending.sort_by_key(|&(i, j)| match side {
            Side::Left => (std::cmp::Reverse(i), j),
            Side::Right => (std::cmp::Reverse(j), i),
        });
        while !pending.is_empty() {
            let found = pending.iter().position(|p| {
                let pos = alive.iter().position(|a| a == p).unwrap();
                is_removable(&cur, side, pos)
            });
            let Some(k) = found else {
                return Err(LatticeError::NoDecomposition("corner cannot be peeled".into()));
            };
            let p = pending.remove(k);
            let pos = alive.iter().position(|a| *a == p).unwrap();
            cur = remove_element(&cur, side, pos)?;
            alive.remove(pos);
            seq.push(p);
        }
        Ok(seq)
    };
    let left_corner = order_of(left, Side::Left)?;
    let right_corner = order_of(right, Side::Right)?;
    let witness = alive.iter().map(|&(i, j)| at[i * n + j].unwrap()).collect();
    let dec = GridDecomposition {
        m,
        n,
        left_corner,
        right_corner,
        witness,
        coords,
    };
    dec.verify(d)?;
    Ok(dec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_layout() {
        let g = product_of_chains(3, 4).unwrap();
        assert_eq!(g.len(), 12);
        assert_eq!(g.up(0), &[4, 1]);
        let (l, r) = g.boundary_chains();
        assert_eq!(l, vec![0, 4, 8, 9, 10, 11]);
        assert_eq!(r, vec![0, 1, 2, 3, 7, 11]);
        assert!(g.is_distributive());
    }

    #[test]
    fn corner_removal_picks_highest() {
        let g = product_of_chains(3, 3).unwrap();
        let d = remove_corner(&g, Side::Left, 1).unwrap();
        assert_eq!(d.len(), 8);
        assert!(d.by_label("2,0").is_none());
        let e = remove_corner(&g, Side::Right, 1).unwrap();
        assert!(e.by_label("0,2").is_none());
    }

    #[test]
    fn chain_has_nothing_to_remove() {
        let c = chain(2).unwrap();
        assert!(remove_corner(&c, Side::Left, 1).is_err());
        assert!(remove_corner(&c, Side::Left, 0).is_ok());
    }

    #[test]
    fn recognize_plain_grid() {
        let g = product_of_chains(3, 4).unwrap();
        let dec = recognize_grid_minus_corners(&g).unwrap();
        assert_eq!((dec.m, dec.n), (3, 4));
        assert!(dec.left_corner.is_empty() && dec.right_corner.is_empty());
    }

    #[test]
    fn recognize_cut_grid_and_replay() {
        let g = product_of_chains(4, 4).unwrap();
        let d = remove_corner(&g, Side::Left, 2).unwrap();
        let d = remove_corner(&d, Side::Right, 1).unwrap();
        let dec = recognize_grid_minus_corners(&d).unwrap();
        assert_eq!((dec.m, dec.n), (4, 4));
        assert_eq!(dec.left_corner.len() + dec.right_corner.len(), 3);
        assert_eq!(dec.left_corner[0], (dec.m - 1, 0));
        dec.verify(&d).unwrap();
    }

    #[test]
    fn recognize_rejects_non_distributive() {
        assert!(matches!(
            recognize_grid_minus_corners(&crate::fixtures::s7()),
            Err(LatticeError::NotDistributive)
        ));
    }

    #[test]
    fn chain_is_a_degenerate_grid() {
        let dec = recognize_grid_minus_corners(&chain(4).unwrap()).unwrap();
        assert_eq!(dec.m * dec.n, 4);
    }
}
