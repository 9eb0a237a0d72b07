//! Removing and inserting eyes: middle atoms of covering `M3` sublattices.

use serde::Serialize;

use crate::cells::Cell;
use crate::error::{LatticeError, Result};
use crate::lattice::{LatticeDiagram, RawDiagram};

/// One eye removed by [`slim`], stated for re-insertion: `host` and
/// `removed` use the ids the elements have while the records are replayed
/// in order on the slim diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EyeRecord {
    pub removed: usize,
    pub host: Cell,
    pub position: usize,
}

/// First covering `M3` `(o, [a, b, c], i)`, scanning `o` bottom-up and left
/// to right, with `a`, `b`, `c` consecutive among the covers of `o` below `i`.
pub fn find_covering_m3(d: &LatticeDiagram) -> Option<(usize, [usize; 3], usize)> {
    let mut by_level: Vec<usize> = d.elements().collect();
    by_level.sort_by(|&x, &y| {
        d.height(x).cmp(&d.height(y)).then_with(|| match d.left_of(x, y) {
            Ok(true) => std::cmp::Ordering::Less,
            Ok(false) => std::cmp::Ordering::Greater,
            Err(_) => x.cmp(&y),
        })
    });
    for o in by_level {
        let ups = d.up(o);
        for &first in ups {
            for &i in d.up(first) {
                let s: Vec<usize> = ups.iter().copied().filter(|&x| d.covers(x, i)).collect();
                if s.len() >= 3 {
                    return Some((o, [s[0], s[1], s[2]], i));
                }
            }
        }
    }
    None
}

pub fn is_slim(d: &LatticeDiagram) -> bool {
    find_covering_m3(d).is_none()
}

/// Every covering square `{o, a, b, a ∨ b}` equals the interval `[o, a ∨ b]`.
pub fn covering_squares_are_intervals(d: &LatticeDiagram) -> bool {
    d.elements().all(|o| {
        let ups = d.up(o);
        ups.iter().enumerate().all(|(k, &a)| {
            ups[k + 1..].iter().all(|&b| {
                let j = d.join(a, b);
                !(d.covers(a, j) && d.covers(b, j)) || d.interval(o, j).len() == 4
            })
        })
    })
}

/// Removes eyes until the diagram is slim. Records come in replay order:
/// applying them with [`add_eye`] to the returned diagram rebuilds `d`.
pub fn slim(d: &LatticeDiagram) -> (LatticeDiagram, Vec<EyeRecord>) {
    let mut alive: Vec<usize> = d.elements().collect();
    let mut cur = d.clone();
    // (b, o, a, c, i) in ids of d
    let mut removed: Vec<[usize; 5]> = Vec::new();
    while let Some((o, [a, b, c], i)) = find_covering_m3(&cur) {
        removed.push([b, o, a, c, i].map(|x| alive[x]));
        alive.remove(b);
        cur = d.induced(&alive).expect("removing an eye keeps a planar lattice");
    }
    let mut new_id = vec![usize::MAX; d.len()];
    for (k, &x) in alive.iter().enumerate() {
        new_id[x] = k;
    }
    let mut records = Vec::with_capacity(removed.len());
    for (next, &[b, o, a, c, i]) in (alive.len()..).zip(removed.iter().rev()) {
        let [o, a, c, i] = [o, a, c, i].map(|x| new_id[x]);
        records.push(EyeRecord {
            removed: next,
            host: Cell {
                bottom: o,
                top: i,
                left: vec![o, a, i],
                right: vec![o, c, i],
            },
            position: 0,
        });
        new_id[b] = next;
    }
    (cur, records)
}

/// Inserts a new element `b` (id `d.len()`) with `o ≺ b ≺ i` inside the
/// 4-cell `{o, a, c, i}`. Eyes already sitting between `a` and `c` are
/// allowed; `position` counts how many of them end up left of `b`.
pub fn add_eye(d: &LatticeDiagram, cell: &Cell, position: usize) -> Result<LatticeDiagram> {
    if !cell.is_4cell() {
        return Err(LatticeError::NotFourCell(format!(
            "chains of length {} and {}",
            cell.left.len(),
            cell.right.len()
        )));
    }
    let (o, a, c, i) = (cell.bottom, cell.left[1], cell.right[1], cell.top);
    for x in [o, a, c, i] {
        d.check(x)?;
    }
    let not_cell = || LatticeError::NotFourCell(format!("{{{o}, {a}, {c}, {i}}} is not a covering square"));
    if !(d.covers(o, a) && d.covers(o, c) && d.covers(a, i) && d.covers(c, i)) || a == c {
        return Err(not_cell());
    }
    let ups = d.up(o);
    let (pa, pc) = (
        ups.iter().position(|&x| x == a).unwrap(),
        ups.iter().position(|&x| x == c).unwrap(),
    );
    if pa >= pc {
        return Err(not_cell());
    }
    let eyes = &ups[pa + 1..pc];
    if eyes.iter().any(|&x| !d.covers(x, i)) {
        return Err(not_cell());
    }
    if position > eyes.len() {
        return Err(LatticeError::PositionOutOfRange {
            position,
            max: eyes.len(),
        });
    }
    let b = d.len();
    let mut raw: RawDiagram = d.to_raw();
    raw.up[o].insert(pa + 1 + position, b);
    let da = raw.down[i].iter().position(|&x| x == a).unwrap();
    raw.down[i].insert(da + 1 + position, b);
    raw.up.push(vec![i]);
    raw.down.push(vec![o]);
    raw.labels.push(None);
    LatticeDiagram::from_raw(raw)
}

/// Applies eye records in order.
pub fn replay_eyes(d: &LatticeDiagram, records: &[EyeRecord]) -> Result<LatticeDiagram> {
    let mut cur = d.clone();
    for r in records {
        if r.removed != cur.len() {
            return Err(LatticeError::Precondition(format!(
                "eye record expects id {}, next id is {}",
                r.removed,
                cur.len()
            )));
        }
        cur = add_eye(&cur, &r.host, r.position)?;
    }
    Ok(cur)
}
