//! Expansion of a slim semimodular lattice: for a maximal upper-adjacent
//! pair `U`, the side chains, the four intervals `T`, `B`, `I`, `J`, and the
//! lattice `T×{1} ∪ B×{0} ∪ I×{α} ∪ J×{β}` inside `L × C2²`, which maps
//! onto `L` and has one pair fewer.

use std::cmp::Ordering;
use std::sync::Arc;

use serde::Serialize;

use crate::cells::{count_pairs, is_maximal, maximal_upper_adjacent_pairs, Cell, UpperAdjacentPair};
use crate::error::{violation, LatticeError, Result};
use crate::homs::LatticeMap;
use crate::lattice::{LatticeDiagram, RawDiagram};
use crate::slimming::is_slim;

/// Element of `C2² = {0 < α, β < 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Tag {
    Zero,
    Alpha,
    Beta,
    One,
}

impl Tag {
    pub fn leq(self, other: Tag) -> bool {
        self == other || self == Tag::Zero || other == Tag::One
    }

    pub fn join(self, other: Tag) -> Tag {
        match (self, other) {
            (a, b) if a == b => a,
            (Tag::Zero, b) => b,
            (a, Tag::Zero) => a,
            _ => Tag::One,
        }
    }

    fn covers(self, other: Tag) -> bool {
        matches!(
            (self, other),
            (Tag::Zero, Tag::Alpha) | (Tag::Zero, Tag::Beta) | (Tag::Alpha, Tag::One) | (Tag::Beta, Tag::One)
        )
    }

    /// Left-to-right rank among covers reaching the same element of `L`.
    fn rank(self) -> u8 {
        match self {
            Tag::Alpha => 0,
            Tag::Zero | Tag::One => 1,
            Tag::Beta => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Tag::Zero => "0",
            Tag::Alpha => "a",
            Tag::Beta => "b",
            Tag::One => "1",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Block {
    T,
    B,
    I,
    J,
}

impl Block {
    pub fn tag(self) -> Tag {
        match self {
            Block::T => Tag::One,
            Block::B => Tag::Zero,
            Block::I => Tag::Alpha,
            Block::J => Tag::Beta,
        }
    }
}

/// One step of a side chain: the 4-cell with zero `zero`, atoms `x` (the
/// outer one) and the previous chain element, and unit the chain element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideCell {
    pub zero: usize,
    pub x: usize,
    pub inner: usize,
    pub unit: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideChain {
    /// `c_0 ≺ c_1 ≺ … ≺ c_k`, starting at the pair's top.
    pub chain: Vec<usize>,
    /// `cells[i - 1]` witnesses the step to `chain[i]`.
    pub cells: Vec<SideCell>,
}

impl SideChain {
    pub fn last(&self) -> usize {
        *self.chain.last().unwrap()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpansionContext {
    pub pair: UpperAdjacentPair,
    pub c: SideChain,
    pub d: SideChain,
    pub v_plus: usize,
    pub w_plus: usize,
    pub c_plus: usize,
    pub d_plus: usize,
    pub t: Vec<usize>,
    pub b: Vec<usize>,
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub i_bridges: Vec<(usize, usize)>,
    pub j_bridges: Vec<(usize, usize)>,
    /// Whether `c⁺` and `d⁺` lie on the left and right boundary chains.
    pub c_plus_on_boundary: bool,
    pub d_plus_on_boundary: bool,
}

fn side_chain(d: &LatticeDiagram, start: usize, left: bool) -> Result<SideChain> {
    let mut chain = vec![start];
    let mut cells = Vec::new();
    let mut cur = start;
    while cur != d.top() {
        let next = if left { d.star_left(cur)? } else { d.star_right(cur)? };
        let lower = d.down(next);
        let pos = lower.iter().position(|&y| y == cur).expect("star is a cover");
        // outer neighbour of `cur` among the lower covers of `next`
        let x = if left {
            pos.checked_sub(1).map(|p| lower[p])
        } else {
            lower.get(pos + 1).copied()
        };
        let Some(x) = x else { break };
        let zero = d.meet(x, cur);
        if !(d.covers(zero, x) && d.covers(zero, cur)) {
            return Err(violation(
                "side chain cells are 4-cells",
                format!("{{{zero}, {x}, {cur}, {next}}}"),
            ));
        }
        cells.push(SideCell {
            zero,
            x,
            inner: cur,
            unit: next,
        });
        chain.push(next);
        cur = next;
    }
    Ok(SideChain { chain, cells })
}

/// The chains `C_U` and `D_U` with their witnessing cells.
pub fn build_side_chains(d: &LatticeDiagram, pair: &UpperAdjacentPair) -> Result<(SideChain, SideChain)> {
    pair.check_in(d)?;
    Ok((side_chain(d, pair.top, true)?, side_chain(d, pair.top, false)?))
}

/// Least element of the left (or right) boundary chain not below `reference`.
pub fn boundary_anchor(d: &LatticeDiagram, reference: usize, left: bool) -> usize {
    let (l, r) = d.boundary_chains();
    let chain = if left { l } else { r };
    chain.into_iter().find(|&x| !d.leq(x, reference)).unwrap_or(d.top())
}

/// `(v⁺, w⁺, c⁺, d⁺)`. The boundary anchors are taken relative to the
/// shared atom `u`.
pub fn compute_anchors(
    d: &LatticeDiagram,
    pair: &UpperAdjacentPair,
    chains: &(SideChain, SideChain),
) -> Result<(usize, usize, usize, usize)> {
    if !is_maximal(d, pair) {
        return Err(LatticeError::PairNotMaximal { top: pair.top });
    }
    Ok((
        boundary_anchor(d, pair.u, true),
        boundary_anchor(d, pair.u, false),
        chains.0.last(),
        chains.1.last(),
    ))
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Builds the context for a maximal pair and checks the structural facts
/// the expansion relies on.
pub fn decompose(d: &LatticeDiagram, pair: &UpperAdjacentPair) -> Result<ExpansionContext> {
    if !is_slim(d) || !d.is_semimodular() {
        return Err(LatticeError::Precondition(
            "expansion needs a slim semimodular lattice".into(),
        ));
    }
    pair.check_in(d)?;
    let chains = build_side_chains(d, pair)?;
    let (v_plus, w_plus, c_plus, d_plus) = compute_anchors(d, pair, &chains)?;
    let (c, dc) = chains;
    let t = d.interval(pair.top, d.top());
    let b = d.interval(d.bottom(), pair.u);
    let i = if d.leq(v_plus, c_plus) {
        d.interval(v_plus, c_plus)
    } else {
        Vec::new()
    };
    let j = if d.leq(w_plus, d_plus) {
        d.interval(w_plus, d_plus)
    } else {
        Vec::new()
    };
    let bridges = |side: &[usize]| -> Vec<(usize, usize)> {
        b.iter()
            .flat_map(|&x| d.up(x).iter().map(move |&y| (x, y)))
            .filter(|(_, y)| side.contains(y))
            .collect()
    };
    let i_bridges = bridges(&i);
    let j_bridges = bridges(&j);
    let (lb, rb) = d.boundary_chains();
    let ctx = ExpansionContext {
        pair: pair.clone(),
        c_plus_on_boundary: lb.contains(&c_plus),
        d_plus_on_boundary: rb.contains(&d_plus),
        c,
        d: dc,
        v_plus,
        w_plus,
        c_plus,
        d_plus,
        t,
        b,
        i,
        j,
        i_bridges,
        j_bridges,
    };
    check_context(d, &ctx)?;
    Ok(ctx)
}

/// The decomposition identities and the chain lemmas.
pub fn check_context(d: &LatticeDiagram, ctx: &ExpansionContext) -> Result<()> {
    let has = |s: &[usize], x: usize| s.contains(&x);
    let inter = |a: &[usize], b: &[usize]| sorted(a.iter().copied().filter(|x| b.contains(x)).collect());
    for x in d.elements() {
        if !(has(&ctx.t, x) || has(&ctx.b, x) || has(&ctx.i, x) || has(&ctx.j, x)) {
            return Err(violation("L = T ∪ B ∪ I ∪ J", format!("element {x} is in no block")));
        }
    }
    if ctx
        .b
        .iter()
        .any(|&x| has(&ctx.t, x) || has(&ctx.i, x) || has(&ctx.j, x))
    {
        return Err(violation("B is disjoint to I, J and T", String::new()));
    }
    if inter(&ctx.i, &ctx.j) != vec![ctx.pair.top] {
        return Err(violation("I ∩ J = {c0}", format!("{:?}", inter(&ctx.i, &ctx.j))));
    }
    if inter(&ctx.i, &ctx.t) != sorted(ctx.c.chain.clone()) {
        return Err(violation("I ∩ T = C", format!("{:?}", inter(&ctx.i, &ctx.t))));
    }
    if inter(&ctx.j, &ctx.t) != sorted(ctx.d.chain.clone()) {
        return Err(violation("J ∩ T = D", format!("{:?}", inter(&ctx.j, &ctx.t))));
    }
    for (side, left) in [(&ctx.c, true), (&ctx.d, false)] {
        if d.interval(side.chain[0], side.last()) != sorted(side.chain.clone()) {
            return Err(violation("side chains are intervals", format!("{:?}", side.chain)));
        }
        for w in side.chain.windows(2) {
            let lower = d.down(w[1]);
            let extreme = if left { *lower.last().unwrap() } else { lower[0] };
            if extreme != w[0] {
                return Err(violation(
                    "outermost lower cover of a side chain element is its predecessor",
                    format!("{} -> {}", w[0], w[1]),
                ));
            }
        }
    }
    Ok(())
}

/// For every bridge `(x, y)` and every `z`: `x ∨ z = y ∨ z`, or the two
/// joins form a bridge on the same side.
pub fn check_bridge_stability(d: &LatticeDiagram, ctx: &ExpansionContext) -> Result<()> {
    for (bridges, side) in [(&ctx.i_bridges, &ctx.i), (&ctx.j_bridges, &ctx.j)] {
        for &(x, y) in bridges {
            for z in d.elements() {
                let (a, b) = (d.join(x, z), d.join(y, z));
                if a != b && !(ctx.b.contains(&a) && side.contains(&b) && d.covers(a, b)) {
                    return Err(violation(
                        "joins with a bridge stay bridges",
                        format!("bridge ({x}, {y}), z = {z}"),
                    ));
                }
            }
        }
    }
    Ok(())
}

/// `L̄` with its elements `⟨a, γ⟩` and the projection onto `L`.
#[derive(Clone, Debug)]
pub struct ExpandedLattice {
    pub base: Arc<LatticeDiagram>,
    /// `elements[k] = (a, γ)` for element `k` of `base`.
    pub elements: Vec<(usize, Tag)>,
    pub projection: LatticeMap,
    pub context: ExpansionContext,
}

impl ExpandedLattice {
    pub fn block(&self, k: usize) -> Block {
        match self.elements[k].1 {
            Tag::One => Block::T,
            Tag::Zero => Block::B,
            Tag::Alpha => Block::I,
            Tag::Beta => Block::J,
        }
    }

    pub fn index_of(&self, a: usize, tag: Tag) -> Option<usize> {
        self.elements.iter().position(|&e| e == (a, tag))
    }
}

/// Expands at the first maximal pair.
pub fn one_step_expansion(d: &LatticeDiagram) -> Result<ExpandedLattice> {
    one_step_expansion_with(d, 0)
}

/// Expands at maximal pair number `choice` (taken modulo their count).
pub fn one_step_expansion_with(d: &LatticeDiagram, choice: usize) -> Result<ExpandedLattice> {
    let pairs = maximal_upper_adjacent_pairs(d);
    if pairs.is_empty() {
        return Err(LatticeError::AlreadyModular);
    }
    let pair = &pairs[choice % pairs.len()];
    let ctx = decompose(d, pair)?;
    expand_at(d, ctx)
}

fn product_leq(d: &LatticeDiagram, (a, g): (usize, Tag), (b, h): (usize, Tag)) -> bool {
    d.leq(a, b) && g.leq(h)
}

fn expand_at(d: &LatticeDiagram, ctx: ExpansionContext) -> Result<ExpandedLattice> {
    let mut elements: Vec<(usize, Tag)> = Vec::new();
    for (block, tag) in [
        (&ctx.b, Tag::Zero),
        (&ctx.i, Tag::Alpha),
        (&ctx.j, Tag::Beta),
        (&ctx.t, Tag::One),
    ] {
        elements.extend(block.iter().map(|&a| (a, tag)));
    }
    let n = elements.len();
    let lt = |p: usize, q: usize| p != q && product_leq(d, elements[p], elements[q]);
    // transitive reduction of the product order on the chosen elements
    let mut up: Vec<Vec<usize>> = (0..n)
        .map(|p| {
            (0..n)
                .filter(|&q| lt(p, q) && !(0..n).any(|r| lt(p, r) && lt(r, q)))
                .collect()
        })
        .collect();

    // cover characterization: product covers and bridges only
    let is_bridge = |x: usize, y: usize| ctx.i_bridges.contains(&(x, y)) || ctx.j_bridges.contains(&(x, y));
    for p in 0..n {
        for &q in &up[p] {
            let ((x, g), (y, h)) = (elements[p], elements[q]);
            let product_cover = (x == y && g.covers(h)) || (g == h && d.covers(x, y));
            if !product_cover && !is_bridge(x, y) {
                return Err(violation(
                    "covers of the expansion are product covers or bridges",
                    format!("<{x},{}> -> <{y},{}>", g.symbol(), h.symbol()),
                ));
            }
        }
    }
    for p in 0..n {
        for q in 0..n {
            let ((x, g), (y, h)) = (elements[p], elements[q]);
            let bridge = match (g, h) {
                (Tag::Zero, Tag::Alpha) => ctx.i_bridges.contains(&(x, y)),
                (Tag::Zero, Tag::Beta) => ctx.j_bridges.contains(&(x, y)),
                _ => false,
            };
            let wanted = (x == y && g.covers(h)) || (g == h && d.covers(x, y)) || bridge;
            if wanted && !up[p].contains(&q) {
                return Err(violation(
                    "product covers and bridges are covers of the expansion",
                    format!("<{x},{}> -> <{y},{}>", g.symbol(), h.symbol()),
                ));
            }
        }
    }

    // join-closure inside L × C2²
    for p in 0..n {
        for q in p + 1..n {
            let ((x, g), (y, h)) = (elements[p], elements[q]);
            let j = (d.join(x, y), g.join(h));
            if !elements.contains(&j) {
                return Err(violation(
                    "the expansion is a join-subsemilattice of L × C2²",
                    format!("join of elements {p} and {q}"),
                ));
            }
        }
    }

    // embedding: inherit the order of L, fan bridges by tag, and put the
    // vertical edges on the outside of each side chain
    for p in 0..n {
        let (x, g) = elements[p];
        let key = |q: &usize| {
            let (y, h) = elements[*q];
            if y == x {
                return (if g == Tag::Beta { 0 } else { 2 }, 0, 0);
            }
            let idx = d.up(x).iter().position(|&c| c == y).unwrap_or(usize::MAX);
            (1, idx, h.rank())
        };
        up[p].sort_by(|a, b| key(a).cmp(&key(b)).then(Ordering::Equal));
    }
    let labels = elements
        .iter()
        .map(|&(a, g)| Some(format!("{}.{}", d.name(a), g.symbol())))
        .collect();
    let raw = RawDiagram::from_up_lists(up, labels);
    let base = LatticeDiagram::from_raw(raw).map_err(|e| violation("the expansion is planar", e.to_string()))?;
    let base = Arc::new(base);

    if !base.is_semimodular() {
        return Err(violation("the expansion is semimodular", String::new()));
    }
    if !is_slim(&base) {
        return Err(violation("the expansion is slim", String::new()));
    }
    let before = count_pairs(d);
    let after = count_pairs(&base);
    if after + 1 != before {
        return Err(violation(
            "the expansion has one fewer upper-adjacent pair",
            format!("{before} pairs before, {after} after"),
        ));
    }
    let table = elements.iter().map(|&(a, _)| a).collect();
    let projection = LatticeMap::new(base.clone(), Arc::new(d.clone()), table)?;
    if !projection.is_surjective() || !projection.is_cover_preserving()? {
        return Err(violation(
            "the projection is a cover-preserving join-homomorphism onto L",
            String::new(),
        ));
    }
    Ok(ExpandedLattice {
        base,
        elements,
        projection,
        context: ctx,
    })
}

/// Result of expanding until no upper-adjacent pair is left.
#[derive(Clone, Debug)]
pub struct FullExpansion {
    pub distributive: Arc<LatticeDiagram>,
    /// From the distributive lattice onto the input.
    pub phi: LatticeMap,
    pub steps: Vec<ExpandedLattice>,
}

pub fn full_expansion(d: &LatticeDiagram) -> Result<FullExpansion> {
    full_expansion_with(d, 0)
}

/// As [`full_expansion`], passing `choice` to every step.
pub fn full_expansion_with(d: &LatticeDiagram, choice: usize) -> Result<FullExpansion> {
    if !is_slim(d) || !d.is_semimodular() {
        return Err(LatticeError::Precondition(
            "expansion needs a slim semimodular lattice".into(),
        ));
    }
    let start = Arc::new(d.clone());
    let budget = count_pairs(d);
    let mut phi = LatticeMap::identity(start.clone());
    let mut cur = start;
    let mut steps = Vec::new();
    while count_pairs(&cur) > 0 {
        if steps.len() == budget {
            return Err(violation(
                "at most as many steps as upper-adjacent pairs",
                format!("{budget} pairs"),
            ));
        }
        let step = one_step_expansion_with(&cur, choice)?;
        phi = step.projection.then(&phi)?;
        cur = step.base.clone();
        steps.push(step);
    }
    if !(is_slim(&cur) && cur.is_modular() && cur.is_distributive()) {
        return Err(violation("the final lattice is distributive", String::new()));
    }
    if !phi.is_surjective() || !phi.is_cover_preserving()? {
        return Err(violation(
            "the composite is a cover-preserving join-homomorphism onto L",
            String::new(),
        ));
    }
    Ok(FullExpansion {
        distributive: cur,
        phi,
        steps,
    })
}

impl ExpansionContext {
    /// The two cells of the pair.
    pub fn cells(&self) -> (&Cell, &Cell) {
        (&self.pair.a, &self.pair.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::upper_adjacent_pairs;
    use crate::fixtures;
    use crate::lattice::is_isomorphic;

    fn names(d: &LatticeDiagram, v: &[usize]) -> Vec<String> {
        let mut s: Vec<String> = v.iter().map(|&x| d.name(x)).collect();
        s.sort();
        s
    }

    fn set(v: &[&str]) -> Vec<String> {
        let mut s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        s.sort();
        s
    }

    #[test]
    fn tag_order() {
        assert!(Tag::Zero.leq(Tag::Alpha) && Tag::Alpha.leq(Tag::One));
        assert!(!Tag::Alpha.leq(Tag::Beta));
        assert_eq!(Tag::Alpha.join(Tag::Beta), Tag::One);
    }

    #[test]
    fn s7_decomposition() {
        let s = fixtures::s7();
        let pair = &upper_adjacent_pairs(&s)[0];
        let ctx = decompose(&s, pair).unwrap();
        assert_eq!(ctx.c.chain, vec![s.top()]);
        assert_eq!(ctx.d.chain, vec![s.top()]);
        assert_eq!(s.name(ctx.v_plus), "b1");
        assert_eq!(s.name(ctx.w_plus), "b2");
        assert_eq!(names(&s, &ctx.t), set(&["1"]));
        assert_eq!(names(&s, &ctx.b), set(&["0", "a1", "a2", "m"]));
        assert_eq!(names(&s, &ctx.i), set(&["b1", "1"]));
        assert_eq!(names(&s, &ctx.j), set(&["b2", "1"]));
        let named = |v: &[(usize, usize)]| -> Vec<(String, String)> {
            v.iter().map(|&(x, y)| (s.name(x), s.name(y))).collect()
        };
        let ib = named(&ctx.i_bridges);
        assert!(ib.contains(&("a1".into(), "b1".into())));
        assert!(ib.contains(&("m".into(), "1".into())));
        assert_eq!(ib.len(), 2);
        let jb = named(&ctx.j_bridges);
        assert!(jb.contains(&("a2".into(), "b2".into())));
        assert_eq!(jb.len(), 2);
        check_bridge_stability(&s, &ctx).unwrap();
    }

    #[test]
    fn s7_expands_to_grid() {
        let e = one_step_expansion(&fixtures::s7()).unwrap();
        assert_eq!(e.base.len(), 9);
        assert!(is_isomorphic(&*e.base, &fixtures::grid(3, 3)));
        let sizes: Vec<usize> = e.projection.kernel_classes().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![3]);
        assert_eq!(e.projection.collapsed_covers().len(), 2);
    }

    #[test]
    fn s7_lift_cover() {
        let s = fixtures::s7();
        let e = one_step_expansion(&s).unwrap();
        let (a1, b1) = (s.by_label("a1").unwrap(), s.by_label("b1").unwrap());
        let (a, b) = e.projection.lift_cover(a1, b1).unwrap();
        assert_eq!(e.elements[a], (a1, Tag::Zero));
        assert_eq!(e.elements[b], (b1, Tag::Alpha));
    }

    #[test]
    fn modular_input_rejected() {
        assert!(matches!(
            one_step_expansion(&fixtures::grid(3, 3)),
            Err(LatticeError::AlreadyModular)
        ));
        let f = full_expansion(&fixtures::grid(3, 3)).unwrap();
        assert!(f.steps.is_empty());
        assert_eq!(f.phi.table(), &(0..9).collect::<Vec<_>>()[..]);
    }

    #[test]
    fn non_slim_rejected() {
        assert!(full_expansion(&fixtures::s7_plus()).is_err());
    }

    #[test]
    fn full_expansion_of_s7() {
        let f = full_expansion(&fixtures::s7()).unwrap();
        assert_eq!(f.steps.len(), 1);
        assert!(is_isomorphic(&*f.distributive, &fixtures::grid(3, 3)));
    }

    #[test]
    fn s7_with_new_top() {
        // S7 under a further top: the side chains stop at the pair's top
        let d = LatticeDiagram::from_up_lists(vec![
            vec![1, 2],
            vec![3, 4],
            vec![4, 5],
            vec![6],
            vec![6],
            vec![6],
            vec![7],
            vec![],
        ])
        .unwrap();
        let f = full_expansion(&d).unwrap();
        assert_eq!(f.steps.len(), 1);
        assert_eq!(f.distributive.len(), 10);
    }

    #[test]
    fn two_pair_has_two_maximal_pairs() {
        let d = fixtures::two_pair();
        assert_eq!(count_pairs(&d), 2);
        let maximal = maximal_upper_adjacent_pairs(&d);
        assert_eq!(maximal.len(), 2);
        let (s, t) = (maximal[0].top, maximal[1].top);
        assert!(!d.leq(s, t) && !d.leq(t, s));
    }

    #[test]
    fn two_pair_expands_in_two_steps_either_way() {
        let d = fixtures::two_pair();
        for choice in 0..2 {
            let step = one_step_expansion_with(&d, choice).unwrap();
            assert_eq!(count_pairs(&step.base), 1);
            let ctx = decompose(&d, &maximal_upper_adjacent_pairs(&d)[choice]).unwrap();
            let sizes = ctx.t.len() + ctx.b.len() + ctx.i.len() + ctx.j.len();
            // I and J share their bottom, and each meets T in its side chain
            assert!(sizes >= d.len());
            let f = full_expansion_with(&d, choice).unwrap();
            assert_eq!(f.steps.len(), 2);
            assert!(f.distributive.is_distributive());
            assert!(crate::grid::recognize_grid_minus_corners(&f.distributive).is_ok());
        }
    }

    #[test]
    fn fan4_pairs_share_a_top() {
        let d = fixtures::fan4();
        let maximal = maximal_upper_adjacent_pairs(&d);
        assert_eq!(maximal.len(), 2);
        assert_eq!(maximal[0].top, maximal[1].top);
        let f = full_expansion(&d).unwrap();
        assert_eq!((f.steps.len(), f.distributive.len()), (2, 16));
    }
}
