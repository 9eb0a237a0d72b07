//! Order tables computed from a cover graph.

/// Fixed-size bit set over element ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }
}

/// Topological order of the digraph given by `up`, or `None` on a cycle.
pub fn topological_order(up: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = up.len();
    let mut indeg = vec![0usize; n];
    for ys in up {
        for &y in ys {
            indeg[y] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).rev().filter(|&x| indeg[x] == 0).collect();
    let mut out = Vec::with_capacity(n);
    while let Some(x) = stack.pop() {
        out.push(x);
        for &y in up[x].iter().rev() {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                stack.push(y);
            }
        }
    }
    (out.len() == n).then_some(out)
}

/// Reflexive up-sets (`ups[x]` = all `y >= x`) of an acyclic cover graph.
pub fn up_sets(up: &[Vec<usize>], topo: &[usize]) -> Vec<BitSet> {
    let n = up.len();
    let mut ups = vec![BitSet::new(n); n];
    for &x in topo.iter().rev() {
        let mut s = BitSet::new(n);
        s.insert(x);
        for &y in &up[x] {
            s.union_with(&ups[y]);
        }
        ups[x] = s;
    }
    ups
}

/// Longest-chain distance from the minimal elements.
pub fn heights(up: &[Vec<usize>], topo: &[usize]) -> Vec<usize> {
    let mut h = vec![0usize; up.len()];
    for &x in topo {
        for &y in &up[x] {
            h[y] = h[y].max(h[x] + 1);
        }
    }
    h
}

/// Order data of a finite lattice: comparability plus join and meet tables.
#[derive(Clone, Debug)]
pub struct Order {
    pub n: usize,
    pub ups: Vec<BitSet>,
    pub downs: Vec<BitSet>,
    pub height: Vec<usize>,
    pub join: Vec<u32>,
    pub meet: Vec<u32>,
}

/// Why an acyclic cover graph failed to be a lattice.
#[derive(Debug, Clone)]
pub enum OrderFailure {
    Cycle,
    NoJoin(usize, usize),
    NoMeet(usize, usize),
}

impl Order {
    /// Builds order tables; fails on cycles or missing joins/meets.
    pub fn build(up: &[Vec<usize>]) -> Result<Order, OrderFailure> {
        let n = up.len();
        let topo = topological_order(up).ok_or(OrderFailure::Cycle)?;
        let ups = up_sets(up, &topo);
        let mut downs = vec![BitSet::new(n); n];
        for (x, s) in ups.iter().enumerate() {
            for y in s.iter() {
                downs[y].insert(x);
            }
        }
        let height = heights(up, &topo);
        let mut depth = vec![0usize; n];
        for &x in topo.iter().rev() {
            for &y in &up[x] {
                depth[x] = depth[x].max(depth[y] + 1);
            }
        }
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for x in 0..n {
            for y in x..n {
                let common = ups[x].intersection(&ups[y]);
                let j = common
                    .iter()
                    .min_by_key(|&z| height[z])
                    .filter(|&z| common.is_subset(&ups[z]))
                    .ok_or(OrderFailure::NoJoin(x, y))?;
                let common = downs[x].intersection(&downs[y]);
                let m = common
                    .iter()
                    .min_by_key(|&z| depth[z])
                    .filter(|&z| common.is_subset(&downs[z]))
                    .ok_or(OrderFailure::NoMeet(x, y))?;
                join[x * n + y] = j as u32;
                join[y * n + x] = j as u32;
                meet[x * n + y] = m as u32;
                meet[y * n + x] = m as u32;
            }
        }
        Ok(Order {
            n,
            ups,
            downs,
            height,
            join,
            meet,
        })
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.ups[x].contains(y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y] as usize
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y] as usize
    }
}

/// Cover relation (transitive reduction) of the order restricted to `keep`,
/// expressed on the original ids.
pub fn covers_within(ups: &[BitSet], keep: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for &x in keep {
        for &y in keep {
            if x == y || !ups[x].contains(y) {
                continue;
            }
            let between = keep
                .iter()
                .any(|&z| z != x && z != y && ups[x].contains(z) && ups[z].contains(y));
            if !between {
                out.push((x, y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_basics() {
        let mut s = BitSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(s.len(), 3);
        let mut t = BitSet::new(130);
        t.insert(64);
        assert!(t.is_subset(&s));
        assert!(!s.is_subset(&t));
    }

    #[test]
    fn cycle_detected() {
        let up = vec![vec![1], vec![0]];
        assert!(matches!(Order::build(&up), Err(OrderFailure::Cycle)));
    }

    #[test]
    fn two_maxima_has_no_join() {
        // 0 < 1, 0 < 2
        let up = vec![vec![1, 2], vec![], vec![]];
        assert!(matches!(Order::build(&up), Err(OrderFailure::NoJoin(1, 2))));
    }
}
