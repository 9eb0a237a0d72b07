use super::plain::{FiniteLattice, PlainLattice};
use super::LatticeDiagram;

fn comparable<L: FiniteLattice + ?Sized>(l: &L, x: usize, y: usize) -> bool {
    l.leq(x, y) || l.leq(y, x)
}

/// `(o, a, b)` with `o ≺ a, b` and `a ⊀ a ∨ b`.
pub fn semimodularity_witness<L: FiniteLattice + ?Sized>(l: &L) -> Option<(usize, usize, usize)> {
    for o in 0..l.len() {
        let ups = l.upper_covers(o);
        for (i, &a) in ups.iter().enumerate() {
            for &b in &ups[i + 1..] {
                let j = l.join(a, b);
                if !l.covers(a, j) || !l.covers(b, j) {
                    return Some((o, a, b));
                }
            }
        }
    }
    None
}

/// An `N5` sublattice `(a, c, b)`: `a < c`, `a ∨ b = c ∨ b`, `a ∧ b = c ∧ b`.
pub fn find_n5<L: FiniteLattice + ?Sized>(l: &L) -> Option<(usize, usize, usize)> {
    let n = l.len();
    for a in 0..n {
        for c in 0..n {
            if a == c || !l.leq(a, c) {
                continue;
            }
            for b in 0..n {
                if comparable(l, b, a) || comparable(l, b, c) {
                    continue;
                }
                if l.join(a, b) == l.join(c, b) && l.meet(a, b) == l.meet(c, b) {
                    return Some((a, c, b));
                }
            }
        }
    }
    None
}

/// An `M3` sublattice: three pairwise incomparable elements with equal
/// pairwise joins and equal pairwise meets.
pub fn find_m3<L: FiniteLattice + ?Sized>(l: &L) -> Option<(usize, usize, usize)> {
    let n = l.len();
    for a in 0..n {
        for b in a + 1..n {
            if comparable(l, a, b) {
                continue;
            }
            let (j, m) = (l.join(a, b), l.meet(a, b));
            for c in b + 1..n {
                if !comparable(l, a, c)
                    && !comparable(l, b, c)
                    && l.join(a, c) == j
                    && l.join(b, c) == j
                    && l.meet(a, c) == m
                    && l.meet(b, c) == m
                {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Modular law `x ≤ z ⇒ x ∨ (y ∧ z) = (x ∨ y) ∧ z` over all triples.
pub fn is_modular_by_identity<L: FiniteLattice + ?Sized>(l: &L) -> bool {
    let n = l.len();
    (0..n).all(|x| {
        (0..n)
            .filter(|&z| l.leq(x, z))
            .all(|z| (0..n).all(|y| l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), z)))
    })
}

/// Distributive law `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` over all triples.
pub fn is_distributive_by_identity<L: FiniteLattice + ?Sized>(l: &L) -> bool {
    let n = l.len();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z)))))
}

macro_rules! predicate_methods {
    ($t:ty) => {
        impl $t {
            /// Whenever `a ≠ b` both cover `o`, `a ≺ a ∨ b`.
            pub fn is_semimodular(&self) -> bool {
                semimodularity_witness(self).is_none()
            }

            pub fn semimodularity_witness(&self) -> Option<(usize, usize, usize)> {
                semimodularity_witness(self)
            }

            pub fn find_n5(&self) -> Option<(usize, usize, usize)> {
                find_n5(self)
            }

            pub fn find_m3(&self) -> Option<(usize, usize, usize)> {
                find_m3(self)
            }

            pub fn is_modular(&self) -> bool {
                find_n5(self).is_none()
            }

            pub fn is_distributive(&self) -> bool {
                find_n5(self).is_none() && find_m3(self).is_none()
            }

            pub fn is_modular_by_identity(&self) -> bool {
                is_modular_by_identity(self)
            }

            pub fn is_distributive_by_identity(&self) -> bool {
                is_distributive_by_identity(self)
            }
        }
    };
}

predicate_methods!(LatticeDiagram);
predicate_methods!(PlainLattice);
