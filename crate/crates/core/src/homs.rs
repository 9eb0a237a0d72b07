//! Join-homomorphisms between finite lattices.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{violation, LatticeError, Result};
use crate::lattice::predicates::semimodularity_witness;
use crate::lattice::{FiniteLattice, LatticeDiagram, PlainLattice};

/// A total map between the element sets of two lattices, with its
/// properties computed once at construction.
#[derive(Clone, Debug)]
pub struct LatticeMap<S = LatticeDiagram, T = LatticeDiagram> {
    source: Arc<S>,
    target: Arc<T>,
    table: Vec<usize>,
    surjective: bool,
    join_preserving: bool,
    cover_preserving: bool,
}

fn check_join_preserving<S: FiniteLattice, T: FiniteLattice>(s: &S, t: &T, f: &[usize]) -> bool {
    let n = s.len();
    (0..n).all(|x| (x + 1..n).all(|y| f[s.join(x, y)] == t.join(f[x], f[y])))
}

fn check_cover_preserving<S: FiniteLattice, T: FiniteLattice>(s: &S, t: &T, f: &[usize]) -> bool {
    (0..s.len()).all(|x| s.upper_covers(x).iter().all(|&y| f[x] == f[y] || t.covers(f[x], f[y])))
}

impl<S: FiniteLattice, T: FiniteLattice> LatticeMap<S, T> {
    pub fn new(source: Arc<S>, target: Arc<T>, table: Vec<usize>) -> Result<Self> {
        if table.len() != source.len() {
            return Err(LatticeError::Map(format!(
                "table has {} entries for {} source elements",
                table.len(),
                source.len()
            )));
        }
        if let Some(&y) = table.iter().find(|&&y| y >= target.len()) {
            return Err(LatticeError::Map(format!("image {y} outside the target")));
        }
        let mut hit = vec![false; target.len()];
        for &y in &table {
            hit[y] = true;
        }
        let surjective = hit.iter().all(|&h| h);
        let join_preserving = check_join_preserving(&*source, &*target, &table);
        let cover_preserving = join_preserving && check_cover_preserving(&*source, &*target, &table);
        Ok(LatticeMap {
            source,
            target,
            table,
            surjective,
            join_preserving,
            cover_preserving,
        })
    }

    pub fn source(&self) -> &Arc<S> {
        &self.source
    }

    pub fn target(&self) -> &Arc<T> {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn is_join_homomorphism(&self) -> bool {
        self.join_preserving
    }

    /// Covers go to covers or collapse. Only defined for join-homomorphisms.
    pub fn is_cover_preserving(&self) -> Result<bool> {
        if !self.join_preserving {
            return Err(LatticeError::Map("not a join-homomorphism".into()));
        }
        Ok(self.cover_preserving)
    }

    /// Recomputes all flags from the table.
    pub fn flags_consistent(&self) -> bool {
        let fresh = LatticeMap::new(self.source.clone(), self.target.clone(), self.table.clone());
        fresh.is_ok_and(|f| {
            (f.surjective, f.join_preserving, f.cover_preserving)
                == (self.surjective, self.join_preserving, self.cover_preserving)
        })
    }

    /// Preimage of `y`, increasing.
    pub fn fiber(&self, y: usize) -> Vec<usize> {
        (0..self.table.len()).filter(|&x| self.table[x] == y).collect()
    }

    /// Fibers with more than one element, ordered by their least member.
    pub fn kernel_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = (0..self.target.len())
            .map(|y| self.fiber(y))
            .filter(|f| f.len() > 1)
            .collect();
        classes.sort();
        classes
    }

    /// Covers `x ≺ y` of the source with `f(x) = f(y)`.
    pub fn collapsed_covers(&self) -> Vec<(usize, usize)> {
        (0..self.source.len())
            .flat_map(|x| self.source.upper_covers(x).iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| self.table[x] == self.table[y])
            .collect()
    }

    /// `self` followed by `g`.
    pub fn then<U: FiniteLattice>(&self, g: &LatticeMap<T, U>) -> Result<LatticeMap<S, U>> {
        if g.source.len() != self.target.len() {
            return Err(LatticeError::Map("maps do not compose".into()));
        }
        let table = self.table.iter().map(|&y| g.table[y]).collect();
        LatticeMap::new(self.source.clone(), g.target.clone(), table)
    }

    /// For a cover `x ≺ y` of the target, a cover `a ≺ b` of the source with
    /// `f(a) = x` and `f(b) = y`: `a` is the largest element over `x` and `b`
    /// a minimal element over `y` above `a`.
    pub fn lift_cover(&self, x: usize, y: usize) -> Result<(usize, usize)> {
        if !self.join_preserving || !self.cover_preserving {
            return Err(LatticeError::Precondition(
                "lifting covers needs a cover-preserving join-homomorphism".into(),
            ));
        }
        let t = &self.target;
        if x >= t.len() || y >= t.len() || !t.covers(x, y) {
            return Err(LatticeError::Map(format!("{x} -> {y} is not a cover of the target")));
        }
        let fx = self.fiber(x);
        let fy = self.fiber(y);
        if fx.is_empty() || fy.is_empty() {
            return Err(LatticeError::Map(format!("cover {x} -> {y} not in the image")));
        }
        let s = &self.source;
        let a = fx.iter().fold(fx[0], |acc, &z| s.join(acc, z));
        if self.table[a] != x {
            return Err(violation("fibers are join-closed", format!("fiber of {x}")));
        }
        let b = fy
            .iter()
            .copied()
            .filter(|&z| s.leq(a, z))
            .min_by_key(|&z| (s.height(z), z))
            .ok_or_else(|| violation("lifting covers", format!("nothing over {y} above {a}")))?;
        if !s.covers(a, b) {
            return Err(violation("lifting covers", format!("{a} does not cover-precede {b}")));
        }
        Ok((a, b))
    }
}

impl<L: FiniteLattice> LatticeMap<L, L> {
    pub fn identity(d: Arc<L>) -> LatticeMap<L, L> {
        let table = (0..d.len()).collect();
        LatticeMap::new(d.clone(), d, table).expect("identity is total")
    }
}

/// `|tgt| ^ |J(src)|`, saturating.
pub fn search_estimate<S: FiniteLattice, T: FiniteLattice>(src: &S, tgt: &T) -> u128 {
    let j = src.join_irreducibles().len() as u32;
    (tgt.len() as u128).saturating_pow(j)
}

/// All surjective join-homomorphisms `src → tgt`, in lexicographic order of
/// the images of the join-irreducibles.
pub fn enumerate_join_surjections<S: FiniteLattice, T: FiniteLattice>(
    src: &Arc<S>,
    tgt: &Arc<T>,
    limit: u128,
) -> Result<Vec<LatticeMap<S, T>>> {
    enumerate_join_surjections_with(src, tgt, limit, false)
}

/// As [`enumerate_join_surjections`]; with `cover_preserving_only` the
/// search prunes and returns only cover-preserving maps.
pub fn enumerate_join_surjections_with<S: FiniteLattice, T: FiniteLattice>(
    src: &Arc<S>,
    tgt: &Arc<T>,
    limit: u128,
    cover_preserving_only: bool,
) -> Result<Vec<LatticeMap<S, T>>> {
    let estimate = search_estimate(&**src, &**tgt);
    if estimate > limit {
        return Err(LatticeError::SearchTooLarge { estimate, bound: limit });
    }
    if tgt.len() > src.len() {
        return Ok(Vec::new());
    }
    let mut js = src.join_irreducibles();
    js.sort_by_key(|&j| (src.height(j), j));
    let search = Search {
        src: &**src,
        tgt: &**tgt,
        js: &js,
        cover_preserving_only,
    };
    let tables: Vec<Vec<usize>> = if js.is_empty() {
        search.finish(&[]).into_iter().collect()
    } else {
        (0..tgt.len())
            .into_par_iter()
            .flat_map_iter(|first| {
                let mut out = Vec::new();
                let mut img = vec![first];
                if search.admissible(&img) {
                    search.extend(&mut img, &mut out);
                }
                out
            })
            .collect()
    };
    tables
        .into_iter()
        .map(|t| LatticeMap::new(src.clone(), tgt.clone(), t))
        .collect()
}

struct Search<'a, S, T> {
    src: &'a S,
    tgt: &'a T,
    js: &'a [usize],
    cover_preserving_only: bool,
}

impl<S: FiniteLattice, T: FiniteLattice> Search<'_, S, T> {
    /// Image of `x` determined by the images of the first `img.len()`
    /// join-irreducibles, assuming those below `x` are among them.
    fn value(&self, img: &[usize], x: usize) -> usize {
        img.iter()
            .zip(self.js)
            .filter(|&(_, &j)| self.src.leq(j, x))
            .fold(self.tgt.bottom(), |acc, (&v, _)| self.tgt.join(acc, v))
    }

    /// Checks the newest assignment against the earlier ones.
    fn admissible(&self, img: &[usize]) -> bool {
        let k = img.len() - 1;
        let (j, v) = (self.js[k], img[k]);
        let below_ok = (0..k).all(|i| !self.src.leq(self.js[i], j) || self.tgt.leq(img[i], v));
        if !below_ok {
            return false;
        }
        let lower = self.src.lower_covers(j)[0];
        let fl = self.value(&img[..k], lower);
        if !self.tgt.leq(fl, v) {
            return false;
        }
        !self.cover_preserving_only || fl == v || self.tgt.covers(fl, v)
    }

    fn extend(&self, img: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if img.len() == self.js.len() {
            if let Some(t) = self.finish(img) {
                out.push(t);
            }
            return;
        }
        for v in 0..self.tgt.len() {
            img.push(v);
            if self.admissible(img) {
                self.extend(img, out);
            }
            img.pop();
        }
    }

    fn finish(&self, img: &[usize]) -> Option<Vec<usize>> {
        let table: Vec<usize> = (0..self.src.len()).map(|x| self.value(img, x)).collect();
        let mut hit = vec![false; self.tgt.len()];
        for &y in &table {
            hit[y] = true;
        }
        let ok = hit.iter().all(|&h| h)
            && check_join_preserving(self.src, self.tgt, &table)
            && (!self.cover_preserving_only || check_cover_preserving(self.src, self.tgt, &table));
        ok.then_some(table)
    }
}

/// For a surjective cover-preserving join-homomorphism from a semimodular
/// lattice, whether the image is semimodular.
pub fn quotient_semimodularity_check<S: FiniteLattice, T: FiniteLattice>(f: &LatticeMap<S, T>) -> Result<bool> {
    if !f.is_surjective() {
        return Err(LatticeError::Precondition("map is not surjective".into()));
    }
    if !f.is_cover_preserving()? {
        return Err(LatticeError::Precondition("map is not cover-preserving".into()));
    }
    if semimodularity_witness(&**f.source()).is_some() {
        return Err(LatticeError::Precondition("source is not semimodular".into()));
    }
    Ok(semimodularity_witness(&**f.target()).is_none())
}

/// A join-surjection given by its closed elements: `closed` is a
/// meet-closed subset containing the top, and `table[x]` is the index in
/// `closed` of the least closed element above `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub closed: Vec<usize>,
    pub table: Vec<usize>,
}

impl Quotient {
    /// The closed elements as a lattice, ids following `closed`.
    pub fn image<L: FiniteLattice>(&self, src: &L) -> PlainLattice {
        let c = &self.closed;
        let lt = |a: usize, b: usize| a != b && src.leq(c[a], c[b]);
        let up = (0..c.len())
            .map(|a| {
                (0..c.len())
                    .filter(|&b| lt(a, b) && !(0..c.len()).any(|z| lt(a, z) && lt(z, b)))
                    .collect()
            })
            .collect();
        PlainLattice::from_covers(up).expect("a closure system is a lattice")
    }
}

/// Every cover-preserving join-surjection of `src` with at most `max_size`
/// elements in its image, one per kernel, as closure systems.
pub fn enumerate_cover_preserving_quotients<L: FiniteLattice>(src: &L, max_size: usize) -> Vec<Quotient> {
    enumerate_cover_preserving_quotients_with(src, max_size, false)
}

/// As [`enumerate_cover_preserving_quotients`]; with `keep_join_irreducibles`
/// only kernels separating the join-irreducibles of `src` are returned.
pub fn enumerate_cover_preserving_quotients_with<L: FiniteLattice>(
    src: &L,
    max_size: usize,
    keep_join_irreducibles: bool,
) -> Vec<Quotient> {
    let mut order: Vec<usize> = (0..src.len()).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(src.height(x)), x));
    let mut forced = vec![0; src.len()];
    if keep_join_irreducibles {
        for j in src.join_irreducibles() {
            forced[j] = 1;
        }
    }
    let mut q = Closures {
        src,
        order: &order,
        max_size,
        forced,
        f: vec![usize::MAX; src.len()],
        chosen: Vec::new(),
        out: Vec::new(),
    };
    if max_size > 0 {
        q.visit(0);
    }
    q.out
}

struct Closures<'a, L> {
    src: &'a L,
    order: &'a [usize],
    max_size: usize,
    forced: Vec<u32>,
    /// closure of each decided element
    f: Vec<usize>,
    chosen: Vec<usize>,
    out: Vec<Quotient>,
}

impl<L: FiniteLattice> Closures<'_, L> {
    /// `f(x) ⪯ f(y)` in the closure system for every cover `x ≺ y`.
    fn covers_ok(&self, x: usize) -> bool {
        let s = self.src;
        s.upper_covers(x).iter().all(|&y| {
            let (a, b) = (self.f[x], self.f[y]);
            a == b
                || !self
                    .chosen
                    .iter()
                    .any(|&z| z != a && z != b && s.leq(a, z) && s.leq(z, b))
        })
    }

    fn visit(&mut self, k: usize) {
        if k == self.order.len() {
            let mut closed = self.chosen.clone();
            closed.sort_unstable();
            let table = self.f.iter().map(|v| closed.binary_search(v).unwrap()).collect();
            self.out.push(Quotient { closed, table });
            return;
        }
        let x = self.order[k];
        let s = self.src;
        if self.forced[x] == 0 && x != s.top() {
            let fx = self
                .chosen
                .iter()
                .copied()
                .filter(|&m| s.leq(x, m))
                .min_by_key(|&m| (s.height(m), m))
                .expect("the top is closed");
            self.f[x] = fx;
            if self.covers_ok(x) {
                self.visit(k + 1);
            }
        }
        if self.chosen.len() < self.max_size {
            let meets: Vec<usize> = self.chosen.iter().map(|&m| s.meet(x, m)).collect();
            for &m in &meets {
                self.forced[m] += 1;
            }
            self.chosen.push(x);
            self.f[x] = x;
            if self.covers_ok(x) {
                self.visit(k + 1);
            }
            self.chosen.pop();
            for &m in &meets {
                self.forced[m] -= 1;
            }
        }
        self.f[x] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lattice::is_isomorphic;

    fn arc(d: LatticeDiagram) -> Arc<LatticeDiagram> {
        Arc::new(d)
    }

    #[test]
    fn identity_is_everything() {
        let s = arc(fixtures::s7());
        let id = LatticeMap::identity(s.clone());
        assert!(id.is_surjective() && id.is_join_homomorphism() && id.is_cover_preserving().unwrap());
        assert!(quotient_semimodularity_check(&id).unwrap());
        for x in s.elements() {
            for &y in s.up(x) {
                assert_eq!(id.lift_cover(x, y).unwrap(), (x, y));
            }
        }
    }

    #[test]
    fn chain_two_has_only_identity() {
        let c = arc(fixtures::chain(2));
        let maps = enumerate_join_surjections(&c, &c, 1 << 20).unwrap();
        assert_eq!(maps.len(), 1);
        assert_eq!(maps[0].table(), &[0, 1]);
    }

    #[test]
    fn n5_image_of_c2xc3_never_cover_preserving() {
        let src = arc(fixtures::grid(2, 3));
        let tgt = arc(fixtures::n5());
        let maps = enumerate_join_surjections(&src, &tgt, 1 << 20).unwrap();
        assert!(!maps.is_empty());
        assert!(maps.iter().all(|m| !m.is_cover_preserving().unwrap()));
        let pruned = enumerate_join_surjections_with(&src, &tgt, 1 << 20, true).unwrap();
        assert!(pruned.is_empty());
    }

    #[test]
    fn grid_onto_s7() {
        let src = arc(fixtures::grid(3, 3));
        let tgt = arc(fixtures::s7());
        let all = enumerate_join_surjections(&src, &tgt, 1 << 20).unwrap();
        let cp: Vec<_> = all.iter().filter(|m| m.is_cover_preserving().unwrap()).collect();
        // the map and its mirror image
        assert_eq!(cp.len(), 2);
        for m in cp {
            assert!(quotient_semimodularity_check(m).unwrap());
            assert!(m.flags_consistent());
            let sizes: Vec<usize> = m.kernel_classes().iter().map(Vec::len).collect();
            assert_eq!(sizes, vec![3]);
        }
    }

    #[test]
    fn non_join_map_detected() {
        let sq = arc(fixtures::c2xc2());
        // the top lands below an atom's image
        let f = LatticeMap::new(sq.clone(), sq.clone(), vec![0, 3, 1, 2]).unwrap();
        assert!(!f.is_join_homomorphism());
        assert!(f.is_cover_preserving().is_err());
    }

    #[test]
    fn search_bound_enforced() {
        let src = arc(fixtures::grid(3, 3));
        let tgt = arc(fixtures::s7());
        assert!(matches!(
            enumerate_join_surjections(&src, &tgt, 10),
            Err(LatticeError::SearchTooLarge { .. })
        ));
    }

    #[test]
    fn works_on_plain_targets() {
        let cube = Arc::new(
            PlainLattice::from_covers(vec![
                vec![1, 2, 4],
                vec![3, 5],
                vec![3, 6],
                vec![7],
                vec![5, 6],
                vec![7],
                vec![7],
                vec![],
            ])
            .unwrap(),
        );
        let maps = enumerate_join_surjections(&cube, &cube, 1 << 20).unwrap();
        // automorphisms of the cube
        assert_eq!(maps.len(), 6);
    }

    #[test]
    fn quotients_agree_with_map_enumeration() {
        // each kernel accounts for |Aut(K)| cover-preserving maps onto K
        for d in [fixtures::grid(2, 3), fixtures::grid(3, 3), fixtures::chain(4)] {
            let src = arc(d);
            let qs = enumerate_cover_preserving_quotients(&*src, src.len());
            let images: Vec<Arc<PlainLattice>> = qs.iter().map(|q| Arc::new(q.image(&*src))).collect();
            for (q, k) in qs.iter().zip(&images) {
                let f = LatticeMap::new(src.clone(), k.clone(), q.table.clone()).unwrap();
                assert!(f.is_surjective() && f.is_cover_preserving().unwrap());
                let same = images.iter().filter(|o| is_isomorphic(&***o, &**k)).count();
                let auts = enumerate_join_surjections(k, k, 1 << 24).unwrap().len();
                let maps = enumerate_join_surjections_with(&src, k, 1 << 24, true).unwrap().len();
                assert_eq!(maps, same * auts);
            }
        }
    }

    #[test]
    fn grid_has_one_s7_quotient() {
        let g = fixtures::grid(3, 3);
        let qs = enumerate_cover_preserving_quotients(&g, 7);
        let s7: Vec<_> = qs
            .iter()
            .filter(|q| is_isomorphic(&q.image(&g), &fixtures::s7()))
            .collect();
        assert_eq!(s7.len(), 1);
        assert!(qs.iter().all(|q| q.closed.len() <= 7));
        let kept = enumerate_cover_preserving_quotients_with(&g, 9, true);
        let js = g.join_irreducibles();
        assert!(kept.iter().all(|q| js.iter().all(|j| q.closed.contains(j))));
        assert!(kept.iter().any(|q| is_isomorphic(&q.image(&g), &fixtures::s7())));
        assert!(kept.len() < qs.len());
    }
}
