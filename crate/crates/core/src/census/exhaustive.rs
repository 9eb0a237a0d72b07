//! Brute-force enumeration of all small lattices and of their planar
//! embeddings, independent of the three-step construction.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::build_corpus;
use crate::error::{LatticeError, Result};
use crate::lattice::{lattice_code, CanonicalCode, FiniteLattice, LatticeDiagram, PlainLattice, RawDiagram};

pub const EXHAUSTIVE_BOUND: usize = 7;

/// Naturally labelled posets on `m` points, as strict down-sets (bitmasks).
fn inner_posets(m: usize) -> Vec<Vec<u32>> {
    fn go(m: usize, down: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let k = down.len();
        if k == m {
            out.push(down.clone());
            return;
        }
        for ideal in 0u32..(1 << k) {
            let closed = (0..k).all(|i| ideal & (1 << i) == 0 || down[i] & !ideal == 0);
            if closed {
                down.push(ideal);
                go(m, down, out);
                down.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(m, &mut Vec::new(), &mut out);
    out
}

fn lattice_from_inner(down: &[u32]) -> Option<PlainLattice> {
    let m = down.len();
    let n = m + 2;
    // 0 is the bottom, inner i is i + 1, n - 1 is the top
    let lt = |x: usize, y: usize| -> bool {
        if x == y {
            return false;
        }
        if x == 0 || y == n - 1 {
            return true;
        }
        if y == 0 || x == n - 1 {
            return false;
        }
        down[y - 1] & (1 << (x - 1)) != 0
    };
    let up = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)))
                .collect()
        })
        .collect();
    PlainLattice::from_covers(up).ok()
}

/// All lattices with `n` elements, one per isomorphism class, ordered by
/// code.
pub fn enumerate_lattices(n: usize) -> Result<Vec<PlainLattice>> {
    if n > EXHAUSTIVE_BOUND {
        return Err(LatticeError::BoundExceeded(format!(
            "n too large: {n} > {EXHAUSTIVE_BOUND}"
        )));
    }
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![PlainLattice::from_covers(vec![vec![]])?]),
        _ => {}
    }
    let found: BTreeMap<CanonicalCode, PlainLattice> = inner_posets(n - 2)
        .into_par_iter()
        .filter_map(|down| lattice_from_inner(&down))
        .map(|l| (lattice_code(&l), l))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(found.into_values().collect())
}

/// Tries every left-to-right order of every cover list and keeps the first
/// one whose faces trace out a planar diagram. Mirror images are skipped.
pub fn find_planar_embedding(l: &PlainLattice) -> Option<LatticeDiagram> {
    let covers = l.cover_lists();
    if l.len() == 1 {
        return LatticeDiagram::from_up_lists(vec![vec![]]).ok();
    }
    let bottom = l.bottom();
    covers
        .iter()
        .map(|c| c.iter().copied().permutations(c.len()).collect::<Vec<_>>())
        .multi_cartesian_product()
        .filter(|up| up[bottom].first() <= up[bottom].last())
        .find_map(|up| LatticeDiagram::from_raw(RawDiagram::from_up_lists(up, Vec::new())).ok())
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub n: usize,
    /// Indexed by size.
    pub lattices: Vec<usize>,
    pub semimodular: Vec<usize>,
    pub planar_semimodular: Vec<usize>,
    pub exhaustive_codes: Vec<CanonicalCode>,
    pub corpus_codes: Vec<CanonicalCode>,
    pub missing_from_corpus: Vec<CanonicalCode>,
    pub extra_in_corpus: Vec<CanonicalCode>,
}

impl CrosscheckReport {
    pub fn matches(&self) -> bool {
        self.missing_from_corpus.is_empty() && self.extra_in_corpus.is_empty()
    }

    pub fn table(&self) -> String {
        let mut s = String::from("size lattices semimodular planar_semimodular\n");
        for k in 1..=self.n {
            s += &format!(
                "{k:>4} {:>8} {:>11} {:>18}\n",
                self.lattices[k], self.semimodular[k], self.planar_semimodular[k]
            );
        }
        s += &format!(
            "missing_from_corpus={} extra_in_corpus={}\n",
            self.missing_from_corpus.len(),
            self.extra_in_corpus.len()
        );
        s
    }
}

/// Planar semimodular lattices with at most `n` elements, found by brute
/// force and compared with the constructive corpus.
pub fn exhaustive_crosscheck(n: usize) -> Result<CrosscheckReport> {
    if n > EXHAUSTIVE_BOUND {
        return Err(LatticeError::BoundExceeded(format!(
            "n too large: {n} > {EXHAUSTIVE_BOUND}"
        )));
    }
    let mut report = CrosscheckReport {
        n,
        lattices: vec![0; n + 1],
        semimodular: vec![0; n + 1],
        planar_semimodular: vec![0; n + 1],
        exhaustive_codes: Vec::new(),
        corpus_codes: Vec::new(),
        missing_from_corpus: Vec::new(),
        extra_in_corpus: Vec::new(),
    };
    for k in 1..=n {
        let all = enumerate_lattices(k)?;
        report.lattices[k] = all.len();
        let semi: Vec<&PlainLattice> = all.iter().filter(|l| l.is_semimodular()).collect();
        report.semimodular[k] = semi.len();
        let planar: Vec<CanonicalCode> = semi
            .par_iter()
            .filter(|l| find_planar_embedding(l).is_some())
            .map(|l| lattice_code(*l))
            .collect();
        report.planar_semimodular[k] = planar.len();
        report.exhaustive_codes.extend(planar);
    }
    report.exhaustive_codes.sort();
    let mut corpus = build_corpus(n)?.codes(n);
    corpus.sort();
    report.missing_from_corpus = report
        .exhaustive_codes
        .iter()
        .filter(|c| corpus.binary_search(c).is_err())
        .cloned()
        .collect();
    report.extra_in_corpus = corpus
        .iter()
        .filter(|c| report.exhaustive_codes.binary_search(c).is_err())
        .cloned()
        .collect();
    report.corpus_codes = corpus;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lattice_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_lattices(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn small_sizes_are_chains() {
        for n in 1..=3 {
            let ls = enumerate_lattices(n).unwrap();
            assert_eq!(ls.len(), 1);
            assert!(ls[0].is_distributive());
        }
    }

    #[test]
    fn embeddings_found_or_refuted() {
        let n5 = PlainLattice::from(&fixtures::n5());
        assert!(find_planar_embedding(&n5).is_some());
        let cube = PlainLattice::from_covers(vec![
            vec![1, 2, 4],
            vec![3, 5],
            vec![3, 6],
            vec![7],
            vec![5, 6],
            vec![7],
            vec![7],
            vec![],
        ])
        .unwrap();
        assert!(find_planar_embedding(&cube).is_none());
    }

    #[test]
    fn crosscheck_five() {
        let r = exhaustive_crosscheck(5).unwrap();
        assert!(r.matches(), "{}", r.table());
    }

    #[test]
    fn too_large() {
        assert!(exhaustive_crosscheck(EXHAUSTIVE_BOUND + 1).is_err());
    }
}
