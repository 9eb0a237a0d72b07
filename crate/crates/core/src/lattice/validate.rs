use std::fmt;

use serde::Serialize;

use super::faces::{face_of, split_bimodal, trace_faces};
use super::order::{Order, OrderFailure};
use super::{left_of_in, RawDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    Empty,
    IndexOutOfRange,
    UpDownMismatch,
    DuplicateCover,
    Cycle,
    NoUniqueMinimum,
    NoUniqueMaximum,
    NotACover,
    NoJoin,
    NoMeet,
    FaceCount,
    OuterFace,
    FaceShape,
    CoverOrder,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::Empty => "empty",
            Rule::IndexOutOfRange => "index out of range",
            Rule::UpDownMismatch => "up/down mismatch",
            Rule::DuplicateCover => "duplicate cover",
            Rule::Cycle => "cycle",
            Rule::NoUniqueMinimum => "no unique minimum",
            Rule::NoUniqueMaximum => "no unique maximum",
            Rule::NotACover => "not a cover",
            Rule::NoJoin => "no join",
            Rule::NoMeet => "no meet",
            Rule::FaceCount => "face count != E-V+2",
            Rule::OuterFace => "outer face not bounded by boundary chains",
            Rule::FaceShape => "inner face not two chains",
            Rule::CoverOrder => "cover order disagrees with left-of",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub elements: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    fn push(&mut self, rule: Rule, elements: Vec<usize>) {
        if !self.has(rule) {
            self.violations.push(Violation { rule, elements });
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} {:?}", v.rule, v.elements)?;
        }
        Ok(())
    }
}

/// Checks every diagram invariant; returns the order tables when the
/// underlying structure is a lattice.
pub(crate) fn validate_full(raw: &RawDiagram) -> (ValidationReport, Option<Order>) {
    let mut rep = ValidationReport::default();
    let n = raw.up.len();
    if n == 0 {
        rep.push(Rule::Empty, vec![]);
        return (rep, None);
    }
    if raw.down.len() != n {
        rep.push(Rule::UpDownMismatch, vec![n, raw.down.len()]);
        return (rep, None);
    }
    for (x, list) in raw.up.iter().chain(raw.down.iter()).enumerate() {
        if let Some(&y) = list.iter().find(|&&y| y >= n) {
            rep.push(Rule::IndexOutOfRange, vec![x % n, y]);
        }
    }
    if !rep.ok() {
        return (rep, None);
    }
    for x in 0..n {
        for (i, &y) in raw.up[x].iter().enumerate() {
            if y == x || raw.up[x][..i].contains(&y) {
                rep.push(Rule::DuplicateCover, vec![x, y]);
            }
            if !raw.down[y].contains(&x) {
                rep.push(Rule::UpDownMismatch, vec![x, y]);
            }
        }
        for (i, &y) in raw.down[x].iter().enumerate() {
            if y == x || raw.down[x][..i].contains(&y) {
                rep.push(Rule::DuplicateCover, vec![y, x]);
            }
            if !raw.up[y].contains(&x) {
                rep.push(Rule::UpDownMismatch, vec![y, x]);
            }
        }
    }
    if !rep.ok() {
        return (rep, None);
    }

    let mins: Vec<usize> = (0..n).filter(|&x| raw.down[x].is_empty()).collect();
    let maxs: Vec<usize> = (0..n).filter(|&x| raw.up[x].is_empty()).collect();
    if mins.len() != 1 {
        rep.push(Rule::NoUniqueMinimum, mins.clone());
    }
    if maxs.len() != 1 {
        rep.push(Rule::NoUniqueMaximum, maxs.clone());
    }

    let order = match Order::build(&raw.up) {
        Ok(o) => Some(o),
        Err(OrderFailure::Cycle) => {
            rep.push(Rule::Cycle, vec![]);
            None
        }
        Err(OrderFailure::NoJoin(x, y)) => {
            rep.push(Rule::NoJoin, vec![x, y]);
            None
        }
        Err(OrderFailure::NoMeet(x, y)) => {
            rep.push(Rule::NoMeet, vec![x, y]);
            None
        }
    };
    // genuine covers need only acyclicity
    if let Some(topo) = super::order::topological_order(&raw.up) {
        let ups = super::order::up_sets(&raw.up, &topo);
        'outer: for x in 0..n {
            for &y in &raw.up[x] {
                if raw.up[x].iter().any(|&c| c != y && ups[c].contains(y)) {
                    rep.push(Rule::NotACover, vec![x, y]);
                    break 'outer;
                }
            }
        }
    }

    check_embedding(raw, &mut rep, order.as_ref(), &mins);
    (rep, order)
}

fn check_embedding(raw: &RawDiagram, rep: &mut ValidationReport, order: Option<&Order>, mins: &[usize]) {
    let n = raw.up.len();
    let edges: usize = raw.up.iter().map(Vec::len).sum();
    let faces = trace_faces(&raw.up, &raw.down);
    let expected = if edges == 0 { 1 } else { (edges + 2).saturating_sub(n) };
    let found = if edges == 0 { 1 } else { faces.len() };
    if edges + 2 < n || found != expected {
        rep.push(Rule::FaceCount, vec![found, expected]);
        return;
    }
    if edges == 0 || mins.len() != 1 {
        return;
    }
    let bottom = mins[0];
    let walk = |pick_last: bool| {
        let mut chain = vec![bottom];
        let mut x = bottom;
        while let Some(&y) = if pick_last { raw.up[x].last() } else { raw.up[x].first() } {
            if chain.len() > n {
                break;
            }
            chain.push(y);
            x = y;
        }
        chain
    };
    let left = walk(false);
    let right = walk(true);
    let mut expected_outer: Vec<(usize, usize)> = left.windows(2).map(|w| (w[0], w[1])).collect();
    expected_outer.extend(right.windows(2).rev().map(|w| (w[1], w[0])));
    let outer = face_of(&faces, (left[0], left[1]));
    let outer_ok = outer.is_some_and(|oi| {
        let f = &faces[oi];
        let start = f.iter().position(|&d| d == (left[0], left[1])).unwrap_or(0);
        let rotated: Vec<_> = f[start..].iter().chain(&f[..start]).copied().collect();
        rotated == expected_outer
    });
    if !outer_ok {
        rep.push(Rule::OuterFace, vec![*left.last().unwrap(), *right.last().unwrap()]);
        return;
    }
    let oi = outer.unwrap();
    for (i, f) in faces.iter().enumerate() {
        if i == oi {
            continue;
        }
        if split_bimodal(f, |(a, b)| raw.up[a].contains(&b)).is_none() {
            rep.push(Rule::FaceShape, f.iter().map(|d| d.0).collect());
            break;
        }
    }
    if let Some(order) = order {
        'lists: for x in 0..n {
            for list in [&raw.up[x], &raw.down[x]] {
                for w in list.windows(2) {
                    if !matches!(left_of_in(&raw.up, order, w[0], w[1]), Ok(true)) {
                        rep.push(Rule::CoverOrder, vec![x, w[0], w[1]]);
                        break 'lists;
                    }
                }
            }
        }
    }
}
