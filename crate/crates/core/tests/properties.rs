use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::Index;

use planarlat::cells::{count_pairs, enumerate_cells};
use planarlat::census::{build_corpus, Corpus};
use planarlat::cli::{emit_lattice, parse_lattice};
use planarlat::expansion::one_step_expansion_with;
use planarlat::lattice::{lattice_code, LatticeDiagram, RawDiagram};
use planarlat::slimming::{add_eye, slim};

fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(|| build_corpus(9).unwrap())
}

fn pick(i: &Index) -> &'static LatticeDiagram {
    let c = corpus();
    &c.entries[i.index(c.entries.len())].diagram
}

fn pick_non_modular(i: &Index) -> &'static LatticeDiagram {
    let all: Vec<&LatticeDiagram> = corpus()
        .entries
        .iter()
        .filter(|e| e.predicates.slim && !e.predicates.modular)
        .map(|e| &e.diagram)
        .collect();
    all[i.index(all.len())]
}

/// The same diagram with element `x` renamed `perm[x]`.
fn relabel(d: &LatticeDiagram, perm: &[usize]) -> LatticeDiagram {
    let raw = d.to_raw();
    let n = d.len();
    let mut up = vec![Vec::new(); n];
    let mut down = vec![Vec::new(); n];
    let mut labels = vec![None; n];
    for x in 0..n {
        up[perm[x]] = raw.up[x].iter().map(|&y| perm[y]).collect();
        down[perm[x]] = raw.down[x].iter().map(|&y| perm[y]).collect();
        labels[perm[x]] = raw.labels[x].clone();
    }
    LatticeDiagram::from_raw(RawDiagram { up, down, labels }).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn format_round_trip(i: Index) {
        let d = pick(&i);
        let text = emit_lattice(d);
        let back = parse_lattice(&text).unwrap();
        prop_assert_eq!(&back, d);
        prop_assert_eq!(emit_lattice(&back), text);
    }

    #[test]
    fn codes_ignore_ids(i: Index, seed in any::<u64>()) {
        let d = pick(&i);
        let mut perm: Vec<usize> = (0..d.len()).collect();
        // Fisher-Yates driven by the seed
        let mut s = seed;
        for k in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (s >> 33) as usize % (k + 1));
        }
        let p = relabel(d, &perm);
        prop_assert_eq!(lattice_code(&p), lattice_code(d));
        prop_assert_eq!(p.embedded_code(), d.embedded_code());
        prop_assert_eq!(lattice_code(&d.mirror()), lattice_code(d));
    }

    #[test]
    fn join_meet_laws(i: Index, a: Index, b: Index, c: Index) {
        let d = pick(&i);
        let n = d.len();
        let (x, y, z) = (a.index(n), b.index(n), c.index(n));
        prop_assert_eq!(d.join(x, y), d.join(y, x));
        prop_assert_eq!(d.join(d.join(x, y), z), d.join(x, d.join(y, z)));
        prop_assert_eq!(d.meet(x, d.join(x, y)), x);
        prop_assert_eq!(d.join(x, d.meet(x, y)), x);
        prop_assert_eq!(d.leq(x, y), d.join(x, y) == y);
    }

    #[test]
    fn expansion_step_invariants(i: Index, choice in 0usize..4) {
        let d = pick_non_modular(&i);
        let e = one_step_expansion_with(d, choice).unwrap();
        prop_assert_eq!(count_pairs(&e.base) + 1, count_pairs(d));
        let f = &e.projection;
        prop_assert!(f.is_surjective());
        prop_assert!(f.is_join_homomorphism());
        prop_assert!(f.is_cover_preserving().unwrap());
        prop_assert!(e.base.is_semimodular());
    }

    #[test]
    fn eye_then_slim_is_identity(i: Index, cell: Index) {
        let d = pick(&i);
        let cells: Vec<_> = enumerate_cells(d).into_iter().filter(|c| c.is_4cell()).collect();
        prop_assume!(!cells.is_empty());
        let with_eye = add_eye(d, &cells[cell.index(cells.len())], 0).unwrap();
        prop_assert!(!planarlat::slimming::is_slim(&with_eye));
        let (s, _) = slim(&with_eye);
        prop_assert_eq!(lattice_code(&s), lattice_code(&slim(d).0));
    }
}
