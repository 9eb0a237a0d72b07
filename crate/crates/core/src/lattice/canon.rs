//! Canonical codes: color refinement by (height, cover degrees) followed by
//! individualization search for the minimum adjacency code.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::plain::{FiniteLattice, PlainLattice};
use super::LatticeDiagram;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode {
    /// Set when the code also fixes the planar embedding.
    pub embedded: bool,
    pub code: Vec<u8>,
}

impl CanonicalCode {
    pub fn hex(&self) -> String {
        self.code.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.embedded {
            f.write_str("e:")?;
        }
        f.write_str(&self.hex())
    }
}

fn refine<L: FiniteLattice + ?Sized>(d: &L, colors: &mut [u32]) {
    let n = colors.len();
    let mut classes = count_classes(colors);
    loop {
        let mut keys: Vec<(u32, Vec<u32>, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut u: Vec<u32> = d.upper_covers(v).iter().map(|&w| colors[w]).collect();
                let mut l: Vec<u32> = d.lower_covers(v).iter().map(|&w| colors[w]).collect();
                u.sort_unstable();
                l.sort_unstable();
                (colors[v], u, l, v)
            })
            .collect();
        keys.sort_unstable_by(|a, b| (&a.0, &a.1, &a.2).cmp(&(&b.0, &b.1, &b.2)));
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (&keys[i].0, &keys[i].1, &keys[i].2) != (&keys[i - 1].0, &keys[i - 1].1, &keys[i - 1].2) {
                rank = i as u32;
            }
            colors[keys[i].3] = rank;
        }
        let now = count_classes(colors);
        if now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn code_of<L: FiniteLattice + ?Sized>(d: &L, colors: &[u32]) -> Vec<u8> {
    let n = colors.len();
    let mut bits = vec![0u8; (n * n).div_ceil(8)];
    for x in 0..n {
        for &y in d.upper_covers(x) {
            let k = colors[x] as usize * n + colors[y] as usize;
            bits[k / 8] |= 1 << (k % 8);
        }
    }
    let mut code = (n as u32).to_be_bytes().to_vec();
    code.extend(bits);
    code
}

fn twins<L: FiniteLattice + ?Sized>(d: &L, cell: &[usize]) -> bool {
    let key = |v: usize| {
        let mut u = d.upper_covers(v).to_vec();
        let mut l = d.lower_covers(v).to_vec();
        u.sort_unstable();
        l.sort_unstable();
        (u, l)
    };
    let first = key(cell[0]);
    cell[1..].iter().all(|&v| key(v) == first)
}

fn search<L: FiniteLattice + ?Sized>(d: &L, mut colors: Vec<u32>, best: &mut Option<Vec<u8>>) {
    refine(d, &mut colors);
    let n = colors.len();
    let mut by_color: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (v, &c) in colors.iter().enumerate() {
        by_color[c as usize].push(v);
    }
    let Some(cell) = by_color.iter().find(|c| c.len() > 1) else {
        let code = code_of(d, &colors);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let branch: &[usize] = if twins(d, cell) { &cell[..1] } else { cell };
    let c = colors[cell[0]];
    for &v in branch {
        // v keeps rank c, the rest of its cell moves to c + 1
        let next: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(u, &cu)| if cu == c && u != v { c + 1 } else { cu })
            .collect();
        search(d, next, best);
    }
}

/// Code identifying the lattice up to isomorphism (embedding ignored).
pub fn lattice_code<L: FiniteLattice + ?Sized>(d: &L) -> CanonicalCode {
    let n = d.len();
    let colors: Vec<u32> = (0..n)
        .map(|v| (d.height(v) * 1024 + d.upper_covers(v).len() * 32 + d.lower_covers(v).len()) as u32)
        .collect();
    // normalise to ranks
    let mut sorted = colors.clone();
    sorted.sort_unstable();
    let colors = colors
        .iter()
        .map(|c| sorted.iter().position(|s| s == c).unwrap() as u32)
        .collect();
    let mut best = None;
    search(d, colors, &mut best);
    CanonicalCode {
        embedded: false,
        code: best.expect("search always reaches a leaf"),
    }
}

impl PlainLattice {
    pub fn canonical_form(&self) -> CanonicalCode {
        lattice_code(self)
    }
}

impl LatticeDiagram {
    /// Code identifying the lattice up to isomorphism (embedding ignored).
    pub fn canonical_form(&self) -> CanonicalCode {
        lattice_code(self)
    }

    /// Code identifying the diagram up to renaming, embedding included.
    pub fn embedded_code(&self) -> CanonicalCode {
        let n = self.len();
        let mut id = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([self.bottom()]);
        let mut seq = Vec::with_capacity(n);
        id[self.bottom()] = 0;
        while let Some(x) = queue.pop_front() {
            seq.push(x);
            for &y in self.up(x) {
                if id[y] == usize::MAX {
                    id[y] = seq.len() + queue.len();
                    queue.push_back(y);
                }
            }
        }
        let mut code = (n as u32).to_be_bytes().to_vec();
        for &x in &seq {
            code.push(self.up(x).len() as u8);
            for &y in self.up(x) {
                code.extend((id[y] as u32).to_be_bytes());
            }
        }
        CanonicalCode { embedded: true, code }
    }
}

pub fn is_isomorphic<A: FiniteLattice + ?Sized, B: FiniteLattice + ?Sized>(a: &A, b: &B) -> bool {
    a.len() == b.len() && lattice_code(a) == lattice_code(b)
}

/// Explicit bijection search preserving the cover relation.
pub fn brute_force_isomorphic<A: FiniteLattice + ?Sized, B: FiniteLattice + ?Sized>(a: &A, b: &B) -> bool {
    fn extend<A: FiniteLattice + ?Sized, B: FiniteLattice + ?Sized>(
        a: &A,
        b: &B,
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let x = map.len();
        if x == a.len() {
            return true;
        }
        for y in 0..b.len() {
            if used[y] || a.height(x) != b.height(y) || a.upper_covers(x).len() != b.upper_covers(y).len() {
                continue;
            }
            let consistent =
                (0..x).all(|p| a.covers(p, x) == b.covers(map[p], y) && a.covers(x, p) == b.covers(y, map[p]));
            if consistent {
                map.push(y);
                used[y] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[y] = false;
            }
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn product_symmetry() {
        assert_eq!(
            fixtures::grid(2, 3).canonical_form(),
            fixtures::grid(3, 2).canonical_form()
        );
    }

    #[test]
    fn s7_differs_from_grid() {
        assert_ne!(fixtures::s7().canonical_form(), fixtures::grid(3, 3).canonical_form());
    }

    #[test]
    fn mirror_keeps_lattice_code_changes_embedded_code() {
        let s = fixtures::s7();
        assert_eq!(s.canonical_form(), s.mirror().canonical_form());
        let m = fixtures::s7_plus();
        assert_eq!(m.canonical_form(), m.mirror().canonical_form());
    }

    #[test]
    fn permuted_ids_same_code() {
        let d = fixtures::s7();
        let n = d.len();
        let perm: Vec<usize> = (0..n).map(|i| (i * 3 + 2) % n).collect();
        let p = d.permuted(&perm).unwrap();
        assert_eq!(d.canonical_form(), p.canonical_form());
        assert_eq!(d.embedded_code(), p.embedded_code());
    }

    #[test]
    fn agrees_with_bijection_search_on_fixtures() {
        let all = fixtures::all();
        for a in &all {
            for b in &all {
                if a.len() <= 10 && b.len() <= 10 {
                    assert_eq!(is_isomorphic(a, b), brute_force_isomorphic(a, b));
                }
            }
        }
    }
}
