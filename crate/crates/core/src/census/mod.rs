//! Small planar semimodular lattices built in three steps: a grid minus
//! two corners, a cover-preserving join-homomorphic image, and eyes.
//! [`exhaustive`] enumerates the same lattices independently.

pub mod exhaustive;
pub mod store;

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::cells::{count_pairs, enumerate_cells, is_4cell_lattice};
use crate::error::{violation, LatticeError, Result};
use crate::expansion::full_expansion;
use crate::grid::{product_of_chains, recognize_grid_minus_corners, GridDecomposition};
use crate::homs::{enumerate_cover_preserving_quotients_with, quotient_semimodularity_check, LatticeMap, Quotient};
use crate::lattice::{lattice_code, CanonicalCode, LatticeDiagram, PlainLattice};
use crate::slimming::{add_eye, is_slim, replay_eyes, slim, EyeRecord};

pub use exhaustive::{enumerate_lattices, exhaustive_crosscheck, find_planar_embedding, CrosscheckReport};

pub const DEFAULT_MAX_ELEMENTS: usize = 10;
pub const CONSTRUCTIVE_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Predicates {
    pub planar: bool,
    pub semimodular: bool,
    pub modular: bool,
    pub distributive: bool,
    pub slim: bool,
    pub four_cell: bool,
    pub pairs: usize,
}

impl Predicates {
    pub fn of(d: &LatticeDiagram) -> Predicates {
        Predicates {
            planar: true,
            semimodular: d.is_semimodular(),
            modular: d.is_modular(),
            distributive: d.is_distributive(),
            slim: is_slim(d),
            four_cell: is_4cell_lattice(d),
            pairs: count_pairs(d),
        }
    }

    pub fn line(&self) -> String {
        format!(
            "planar={} semimodular={} modular={} distributive={} slim={} 4cell={} pairs={}",
            self.planar, self.semimodular, self.modular, self.distributive, self.slim, self.four_cell, self.pairs
        )
    }
}

/// How a lattice was built: grid size, corner removals, collapses and eyes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub grid: (usize, usize),
    pub left_corner: Vec<(usize, usize)>,
    pub right_corner: Vec<(usize, usize)>,
    /// Each table maps the current lattice onto the next; the image is the
    /// induced diagram on the largest element of each class.
    pub collapses: Vec<Vec<usize>>,
    pub eyes: Vec<EyeRecord>,
    pub code: CanonicalCode,
}

/// Quotient of `d` by the kernel of `table`, embedded as the induced
/// diagram on the class maxima. Class `k` becomes element `k`.
pub fn collapse(d: &Arc<LatticeDiagram>, table: &[usize]) -> Result<LatticeMap> {
    if table.len() != d.len() {
        return Err(LatticeError::Map(format!(
            "table has {} entries for {} elements",
            table.len(),
            d.len()
        )));
    }
    let k = table.iter().max().map_or(0, |&m| m + 1);
    let mut maxima: Vec<Option<usize>> = vec![None; k];
    for (x, &c) in table.iter().enumerate() {
        maxima[c] = Some(maxima[c].map_or(x, |m| d.join(m, x)));
    }
    let maxima: Vec<usize> = maxima
        .into_iter()
        .enumerate()
        .map(|(c, m)| m.ok_or_else(|| LatticeError::Map(format!("class {c} is empty"))))
        .collect::<Result<_>>()?;
    if maxima.iter().enumerate().any(|(c, &m)| table[m] != c) {
        return Err(LatticeError::Map("classes are not join-closed".into()));
    }
    let image = Arc::new(d.induced(&maxima)?);
    let f = LatticeMap::new(d.clone(), image, table.to_vec())?;
    if !f.is_join_homomorphism() || !f.is_cover_preserving()? {
        return Err(LatticeError::Map(
            "collapse is not a cover-preserving join-homomorphism".into(),
        ));
    }
    Ok(f)
}

impl ConstructionTrace {
    pub fn grid_decomposition(&self) -> GridDecomposition {
        GridDecomposition {
            m: self.grid.0,
            n: self.grid.1,
            left_corner: self.left_corner.clone(),
            right_corner: self.right_corner.clone(),
            witness: Vec::new(),
            coords: Vec::new(),
        }
    }

    /// Rebuilds the diagram, checking every collapse and the final code.
    pub fn replay(&self) -> Result<LatticeDiagram> {
        let mut cur = Arc::new(self.grid_decomposition().replay()?);
        for table in &self.collapses {
            let f = collapse(&cur, table)?;
            if !quotient_semimodularity_check(&f)? {
                return Err(violation(
                    "images of semimodular lattices are semimodular",
                    String::new(),
                ));
            }
            cur = f.target().clone();
        }
        let out = replay_eyes(&cur, &self.eyes)?;
        if lattice_code(&out) != self.code {
            return Err(violation(
                "a trace replays to its recorded code",
                format!("{} elements", out.len()),
            ));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusEntry {
    #[serde(skip)]
    pub diagram: LatticeDiagram,
    pub code: CanonicalCode,
    pub embedded_code: CanonicalCode,
    pub predicates: Predicates,
    pub traces: Vec<ConstructionTrace>,
}

#[derive(Clone, Debug)]
pub struct Corpus {
    pub max_elements: usize,
    /// Sorted by size, then code.
    pub entries: Vec<CorpusEntry>,
    /// Grid shapes searched in step 1.
    pub shapes: usize,
}

impl Corpus {
    pub fn codes(&self, max: usize) -> Vec<CanonicalCode> {
        self.entries
            .iter()
            .filter(|e| e.diagram.len() <= max)
            .map(|e| e.code.clone())
            .collect()
    }

    pub fn find(&self, code: &CanonicalCode) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| &e.code == code)
    }
}

/// A grid minus a left and a right corner: row `i` keeps the columns
/// `lo[i]..=hi[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    pub m: usize,
    pub n: usize,
    pub lo: Vec<usize>,
    pub hi: Vec<usize>,
}

impl Shape {
    pub fn size(&self) -> usize {
        self.lo.iter().zip(&self.hi).map(|(l, h)| h - l + 1).sum()
    }

    /// Kept grid points as ids of `product_of_chains(m, n)`, increasing.
    pub fn kept(&self) -> Vec<usize> {
        (0..self.m)
            .flat_map(|i| (self.lo[i]..=self.hi[i]).map(move |j| i * self.n + j))
            .collect()
    }

    /// Corner removals in an order [`GridDecomposition::replay`] accepts.
    pub fn trace(&self) -> ConstructionTrace {
        let (m, n) = (self.m, self.n);
        let mut left: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..self.lo[i]).map(move |j| (i, j))).collect();
        let mut right: Vec<(usize, usize)> = (0..m).flat_map(|i| (self.hi[i] + 1..n).map(move |j| (i, j))).collect();
        left.sort_by_key(|&(i, j)| (std::cmp::Reverse(i), j));
        right.sort_by_key(|&(i, j)| (std::cmp::Reverse(j), i));
        ConstructionTrace {
            grid: (m, n),
            left_corner: left,
            right_corner: right,
            collapses: Vec::new(),
            eyes: Vec::new(),
            code: CanonicalCode::default(),
        }
    }

    /// The same lattice without an embedding, ids as in [`Shape::diagram`].
    pub fn plain(&self) -> PlainLattice {
        let mut id = vec![usize::MAX; self.m * self.n];
        for (k, g) in self.kept().into_iter().enumerate() {
            id[g] = k;
        }
        let mut up = vec![Vec::new(); self.size()];
        for i in 0..self.m {
            for j in self.lo[i]..=self.hi[i] {
                let x = id[i * self.n + j];
                if i + 1 < self.m && (self.lo[i + 1]..=self.hi[i + 1]).contains(&j) {
                    up[x].push(id[(i + 1) * self.n + j]);
                }
                if j < self.hi[i] {
                    up[x].push(id[i * self.n + j + 1]);
                }
            }
        }
        PlainLattice::from_covers(up).expect("shapes are lattices")
    }

    pub fn diagram(&self) -> Result<LatticeDiagram> {
        product_of_chains(self.m, self.n)?.induced(&self.kept())
    }
}

/// Every grid minus corners whose lattice has at most `max_join_irreducibles`
/// join-irreducibles, up to transposition. These are the down-set lattices
/// of the posets of width at most two.
pub fn grid_shapes(max_join_irreducibles: usize) -> Vec<Shape> {
    fn rows(m: usize, n: usize, lo: &mut Vec<usize>, hi: &mut Vec<usize>, out: &mut Vec<Shape>) {
        let i = lo.len();
        if i == m {
            if hi[m - 1] == n - 1 {
                out.push(Shape {
                    m,
                    n,
                    lo: lo.clone(),
                    hi: hi.clone(),
                });
            }
            return;
        }
        let (lo_min, lo_max) = if i == 0 { (0, 0) } else { (lo[i - 1], hi[i - 1]) };
        for l in lo_min..=lo_max {
            let h_min = if i == 0 { l } else { hi[i - 1].max(l) };
            for h in h_min..n {
                lo.push(l);
                hi.push(h);
                rows(m, n, lo, hi, out);
                lo.pop();
                hi.pop();
            }
        }
    }
    let mut out = Vec::new();
    for m in 1..=max_join_irreducibles + 1 {
        for n in m..=max_join_irreducibles + 2 - m {
            rows(m, n, &mut Vec::new(), &mut Vec::new(), &mut out);
        }
    }
    out
}

fn dedup_first(
    items: Vec<(ConstructionTrace, LatticeDiagram)>,
) -> BTreeMap<CanonicalCode, (ConstructionTrace, LatticeDiagram)> {
    let mut map = BTreeMap::new();
    for (t, d) in items {
        map.entry(t.code.clone()).or_insert((t, d));
    }
    map
}

/// Every planar semimodular lattice with at most `max_elements` elements,
/// one entry per isomorphism class. A slim semimodular lattice `L` is the
/// image of the down-set lattice of `J(L)` under `X ↦ ∨X`, a
/// cover-preserving join-homomorphism keeping the join-irreducibles apart,
/// so step 2 only needs those kernels.
pub fn build_corpus(max_elements: usize) -> Result<Corpus> {
    if max_elements > CONSTRUCTIVE_BOUND {
        return Err(LatticeError::BoundExceeded(format!(
            "corpus of lattices with {max_elements} elements (bound {CONSTRUCTIVE_BOUND})"
        )));
    }
    if max_elements == 0 {
        return Ok(Corpus {
            max_elements,
            entries: Vec::new(),
            shapes: 0,
        });
    }

    // steps 1 and 2, deduplicated by the code of the image
    let shapes = grid_shapes(max_elements - 1);
    let found: Vec<(CanonicalCode, usize, Quotient)> = shapes
        .par_iter()
        .enumerate()
        .flat_map_iter(|(k, shape)| {
            let d = shape.plain();
            enumerate_cover_preserving_quotients_with(&d, max_elements, true)
                .into_iter()
                .map(|q| (lattice_code(&q.image(&d)), k, q))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut candidates: BTreeMap<CanonicalCode, (usize, Quotient)> = BTreeMap::new();
    for (code, k, q) in found {
        candidates.entry(code).or_insert((k, q));
    }
    let images: Vec<(ConstructionTrace, LatticeDiagram)> = candidates
        .into_par_iter()
        .map(|(code, (k, q))| {
            let d = Arc::new(shapes[k].diagram()?);
            let f = collapse(&d, &q.table)?;
            let mut t = shapes[k].trace();
            if q.closed.len() < d.len() {
                t.collapses.push(q.table);
            }
            t.code = code;
            Ok((t, (**f.target()).clone()))
        })
        .collect::<Result<_>>()?;
    let slim_images = dedup_first(images);
    for (code, (_, k)) in &slim_images {
        verify_roundtrip(k).map_err(|e| match e {
            LatticeError::LemmaViolation { lemma, detail } => {
                violation(lemma, format!("image {}: {detail}", code.hex()))
            }
            other => other,
        })?;
    }

    // step 3, level by level
    let mut all = slim_images;
    let mut frontier: Vec<(ConstructionTrace, LatticeDiagram)> = all.values().cloned().collect();
    while !frontier.is_empty() {
        let children: Vec<(ConstructionTrace, LatticeDiagram)> = frontier
            .par_iter()
            .filter(|(_, d)| d.len() < max_elements)
            .flat_map_iter(|(t, d)| {
                enumerate_cells(d).into_iter().map(move |cell| {
                    let e = add_eye(d, &cell, 0).expect("cells of a diagram host eyes");
                    let mut t = t.clone();
                    t.eyes.push(EyeRecord {
                        removed: d.len(),
                        host: cell,
                        position: 0,
                    });
                    t.code = lattice_code(&e);
                    (t, e)
                })
            })
            .collect();
        frontier.clear();
        for (code, item) in dedup_first(children) {
            if let std::collections::btree_map::Entry::Vacant(slot) = all.entry(code) {
                slot.insert(item.clone());
                frontier.push(item);
            }
        }
    }

    let mut entries: Vec<CorpusEntry> = all
        .into_values()
        .map(|(t, d)| CorpusEntry {
            code: t.code.clone(),
            embedded_code: d.embedded_code(),
            predicates: Predicates::of(&d),
            traces: vec![t],
            diagram: d,
        })
        .collect();
    entries.sort_by(|a, b| (a.diagram.len(), &a.code).cmp(&(b.diagram.len(), &b.code)));
    Ok(Corpus {
        max_elements,
        entries,
        shapes: shapes.len(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RoundTrip {
    pub eyes: usize,
    pub slim_size: usize,
    pub steps: usize,
    pub distributive_size: usize,
    pub grid: (usize, usize),
}

/// Slims `d`, expands it to a distributive lattice, recognizes that as a
/// grid minus corners, and rebuilds `d` from there. Failures name the
/// statement that broke.
pub fn verify_roundtrip(d: &LatticeDiagram) -> Result<RoundTrip> {
    let stage = |lemma: &'static str| {
        move |e: LatticeError| match e {
            LatticeError::LemmaViolation { .. } => e,
            other => violation(lemma, other.to_string()),
        }
    };
    if !d.is_semimodular() {
        return Err(LatticeError::Precondition(
            "round trip needs a semimodular lattice".into(),
        ));
    }
    let (s, eyes) = slim(d);
    if !s.is_semimodular() {
        return Err(violation("slimming keeps semimodularity", String::new()));
    }
    let fe = full_expansion(&s).map_err(stage("the expansion theorem"))?;
    let dec = recognize_grid_minus_corners(&fe.distributive)
        .map_err(stage("distributive planar lattices are grids minus corners"))?;
    dec.verify(&fe.distributive)
        .map_err(stage("distributive planar lattices are grids minus corners"))?;

    // forward: collapse D along the composite, then put the eyes back
    let phi = fe.phi.table();
    let mut classes: Vec<usize> = Vec::new();
    let mut table = vec![0; phi.len()];
    for (x, &y) in phi.iter().enumerate() {
        let c = match classes.iter().position(|&z| z == y) {
            Some(c) => c,
            None => {
                classes.push(y);
                classes.len() - 1
            }
        };
        table[x] = c;
    }
    let f =
        collapse(&fe.distributive, &table).map_err(stage("the composite is a cover-preserving join-homomorphism"))?;
    if lattice_code(&**f.target()) != lattice_code(&s) {
        return Err(violation("L = Dφ", "collapsed lattice differs from the slim lattice"));
    }
    let back = replay_eyes(&s, &eyes).map_err(stage("eyes re-insert"))?;
    if lattice_code(&back) != lattice_code(d) {
        return Err(violation("adding the eyes back rebuilds the lattice", String::new()));
    }
    Ok(RoundTrip {
        eyes: eyes.len(),
        slim_size: s.len(),
        steps: fe.steps.len(),
        distributive_size: fe.distributive.len(),
        grid: (dec.m, dec.n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn shapes_are_distributive() {
        for shape in grid_shapes(4) {
            let d = shape.diagram().unwrap();
            assert!(d.is_distributive());
            assert_eq!(d.join_irreducibles().len(), shape.m + shape.n - 2);
            assert_eq!(shape.trace().grid_decomposition().replay().unwrap(), d);
            assert_eq!(lattice_code(&shape.plain()), lattice_code(&d));
        }
    }

    #[test]
    fn distributive_counts() {
        // planar distributive lattices by size
        let mut codes = std::collections::BTreeSet::new();
        let mut by_size = [0usize; 9];
        for shape in grid_shapes(7) {
            if shape.size() <= 8 && codes.insert(lattice_code(&shape.plain())) {
                by_size[shape.size()] += 1;
            }
        }
        assert_eq!(&by_size[1..], &[1, 1, 1, 2, 3, 5, 8, 14]);
    }

    #[test]
    fn tiny_corpus() {
        let c = build_corpus(4).unwrap();
        let has = |d: &LatticeDiagram| c.find(&lattice_code(d)).is_some();
        assert!(has(&fixtures::c2xc2()));
        assert!(has(&fixtures::chain(3)));
        assert!(has(&fixtures::chain(4)));
        assert!(!has(&fixtures::m3()));
        let c5 = build_corpus(5).unwrap();
        assert!(c5.find(&lattice_code(&fixtures::m3())).is_some());
        for e in &c5.entries {
            assert!(e.traces[0].replay().is_ok());
        }
    }

    #[test]
    fn s7_and_s7_plus_traces() {
        let c = build_corpus(10).unwrap();
        let s7 = c.find(&lattice_code(&fixtures::s7())).unwrap();
        let t = &s7.traces[0];
        assert_eq!(t.collapses.len(), 1);
        assert!(t.eyes.is_empty());
        assert!(t.replay().is_ok());
        let plus = c.find(&lattice_code(&fixtures::s7_plus())).unwrap();
        assert_eq!(plus.traces[0].eyes.len(), 3);
    }

    #[test]
    fn roundtrip_fixtures() {
        for d in fixtures::all() {
            if d.is_semimodular() {
                verify_roundtrip(&d).unwrap();
            }
        }
        let r = verify_roundtrip(&fixtures::s7()).unwrap();
        assert_eq!((r.distributive_size, r.grid), (9, (3, 3)));
        assert!(verify_roundtrip(&fixtures::n5()).is_err());
    }

    #[test]
    fn bound_enforced() {
        assert!(matches!(
            build_corpus(CONSTRUCTIVE_BOUND + 1),
            Err(LatticeError::BoundExceeded(_))
        ));
    }
}
