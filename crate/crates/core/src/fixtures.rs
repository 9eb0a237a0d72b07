//! Small named lattices with fixed embeddings.

use crate::grid;
use crate::lattice::{LatticeDiagram, RawDiagram};

fn labeled(up: Vec<Vec<usize>>, labels: &[&str]) -> LatticeDiagram {
    let labels = labels.iter().map(|s| Some(s.to_string())).collect();
    LatticeDiagram::from_raw(RawDiagram::from_up_lists(up, labels)).expect("fixture is a valid diagram")
}

pub fn chain(k: usize) -> LatticeDiagram {
    grid::chain(k).expect("k >= 1")
}

pub fn grid(m: usize, n: usize) -> LatticeDiagram {
    grid::product_of_chains(m, n).expect("m, n >= 1")
}

pub fn c2xc2() -> LatticeDiagram {
    grid(2, 2)
}

pub fn m3() -> LatticeDiagram {
    labeled(
        vec![vec![1, 2, 3], vec![4], vec![4], vec![4], vec![]],
        &["0", "a", "b", "c", "1"],
    )
}

/// `N5` drawn with the long side on the left.
pub fn n5() -> LatticeDiagram {
    labeled(
        vec![vec![1, 3], vec![2], vec![4], vec![4], vec![]],
        &["0", "a", "c", "b", "1"],
    )
}

/// `S7`: three 4-cells, the two upper ones sharing the edge `m ≺ 1`.
pub fn s7() -> LatticeDiagram {
    labeled(
        vec![vec![1, 2], vec![3, 4], vec![4, 5], vec![6], vec![6], vec![6], vec![]],
        &["0", "a1", "a2", "b1", "m", "b2", "1"],
    )
}

/// `S7` with an eye in each of its three 4-cells.
pub fn s7_plus() -> LatticeDiagram {
    labeled(
        vec![
            vec![1, 7, 2],
            vec![3, 8, 4],
            vec![4, 9, 5],
            vec![6],
            vec![6],
            vec![6],
            vec![],
            vec![4],
            vec![6],
            vec![6],
        ],
        &["0", "a1", "a2", "b1", "m", "b2", "1", "e1", "e2", "e3"],
    )
}

/// Two 4-cells with a common bottom and different tops, capped by a third
/// cell. A 4-cell lattice that is not semimodular.
pub fn kite() -> LatticeDiagram {
    labeled(
        vec![vec![1, 2, 3], vec![4], vec![4, 5], vec![5], vec![6], vec![6], vec![]],
        &["0", "a", "b", "c", "p", "q", "1"],
    )
}

fn from_text(text: &str) -> LatticeDiagram {
    crate::cli::format::parse_lattice(text).expect("fixture file parses")
}

/// Smallest slim semimodular lattice with two maximal pairs whose tops are
/// incomparable: a quotient of `C5 x C5`, labels are grid coordinates.
pub fn two_pair() -> LatticeDiagram {
    from_text(include_str!("../../../fixtures/two_pair.lat"))
}

/// Four lower covers under the top and two maximal pairs sharing it.
pub fn fan4() -> LatticeDiagram {
    from_text(include_str!("../../../fixtures/fan4.lat"))
}

pub fn all() -> Vec<LatticeDiagram> {
    vec![
        chain(1),
        chain(2),
        chain(3),
        c2xc2(),
        grid(2, 3),
        grid(3, 3),
        m3(),
        n5(),
        s7(),
        s7_plus(),
        kite(),
        fan4(),
        two_pair(),
    ]
}
