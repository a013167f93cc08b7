use alloc::vec::Vec;

use crate::blowup::Weighting;
use crate::count::{BigCount, CliqueCounter};
use crate::error::{Error, Result};
use crate::families::{build_multipartite, hall_level_matching, LevelDirection, MultipartiteSpec, SpernerGraph};
use crate::graph::{
    bit, elimination_ordering_in, is_clique_mask, mask_of, max_independent_superset_in, members, Graph, Mask,
};
use crate::shift::{multi_shift, ShiftMode, ShiftSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// Simultaneous shift, checked against the independent-B conditions.
    Shift { spec: ShiftSpec },
    /// One unit of weight from the heaviest to the lightest vertex of an
    /// independent set carrying all the weight.
    Balance { from: usize, to: usize },
    /// Moves the weights of an independent support onto another independent
    /// set of at least the same size, in order; the count is unchanged.
    Relocate { from: Vec<usize>, to: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub kind: StepKind,
    pub before: BigCount,
    pub after: BigCount,
    /// Weighting after the step.
    pub weighting: Weighting,
}

/// The weightings visited by a structured minimizer, with π_k before and
/// after every step. Steps that would leave the weighting unchanged are not
/// recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftTrace {
    pub k: usize,
    pub initial: Weighting,
    pub initial_value: BigCount,
    pub steps: Vec<TraceStep>,
    pub final_weighting: Weighting,
    pub final_value: BigCount,
}

impl ShiftTrace {
    /// Each step chains from the previous one and never increases π_k.
    pub fn is_monotone(&self) -> bool {
        let mut value = &self.initial_value;
        for step in &self.steps {
            if step.before != *value || step.after > step.before {
                return false;
            }
            value = &step.after;
        }
        *value == self.final_value
    }
}

struct Tracer<'a> {
    g: &'a Graph,
    counter: CliqueCounter,
    k: usize,
    initial: Weighting,
    initial_value: BigCount,
    current: Weighting,
    value: BigCount,
    steps: Vec<TraceStep>,
}

impl<'a> Tracer<'a> {
    fn new(g: &'a Graph, start: &Weighting, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::CliqueSize { k, min: 1 });
        }
        start.check_against(g)?;
        let counter = CliqueCounter::new(g, g.all_mask(), k, start.total());
        let value = counter.count(start.weights());
        Ok(Self {
            g,
            counter,
            k,
            initial: start.clone(),
            initial_value: value.clone(),
            current: start.clone(),
            value,
            steps: Vec::new(),
        })
    }

    fn record(&mut self, kind: StepKind, next: Weighting) {
        if next == self.current {
            return;
        }
        let after = self.counter.count(next.weights());
        self.steps.push(TraceStep {
            kind,
            before: self.value.clone(),
            after: after.clone(),
            weighting: next.clone(),
        });
        self.current = next;
        self.value = after;
    }

    fn shift(&mut self, spec: ShiftSpec) -> Result<()> {
        let next = multi_shift(self.g, &self.current, &spec, ShiftMode::Lemma3)?;
        self.record(StepKind::Shift { spec }, next);
        Ok(())
    }

    fn balance(&mut self, set: &[usize]) {
        if set.is_empty() {
            return;
        }
        loop {
            let w = &self.current;
            let heavy = *set.iter().rev().max_by_key(|&&v| w.get(v)).expect("non-empty");
            let light = *set.iter().min_by_key(|&&v| w.get(v)).expect("non-empty");
            if w.get(heavy) <= w.get(light) + 1 {
                break;
            }
            let mut next = w.clone();
            next.transfer(heavy, light, 1);
            self.record(StepKind::Balance { from: heavy, to: light }, next);
        }
    }

    fn relocate(&mut self, from: Vec<usize>, to: Vec<usize>) {
        let mut next = self.current.clone();
        for &s in &from {
            next.set(s, 0);
        }
        for (&s, &t) in from.iter().zip(&to) {
            next.set(t, self.current.get(s));
        }
        self.record(StepKind::Relocate { from, to }, next);
    }

    fn finish(self) -> ShiftTrace {
        ShiftTrace {
            k: self.k,
            initial: self.initial,
            initial_value: self.initial_value,
            steps: self.steps,
            final_value: self.value,
            final_weighting: self.current,
        }
    }
}

/// Evens out `start` on `set` by unit moves from the heaviest to the lightest
/// vertex (first index on ties) until all weights differ by at most one.
/// `set` must be independent and carry all the weight.
pub fn balance_on(g: &Graph, start: &Weighting, set: &[usize], k: usize) -> Result<ShiftTrace> {
    let within = g.checked_mask(set)?;
    if members(within).any(|v| g.adjacency()[v] & within != 0) || start.support_mask() & !within != 0 {
        return Err(Error::MalformedShift("balancing needs an independent set holding all weight".into()));
    }
    let mut t = Tracer::new(g, start, k)?;
    let sorted: Vec<usize> = members(within).collect();
    t.balance(&sorted);
    Ok(t.finish())
}

/// Drives `start` on `B_n` to a weighting uniform on the middle level
/// ⌈n/2⌉. The lowest occupied level below the middle is lifted along a
/// saturating matching into the next level; once none remain, the highest
/// occupied level above the middle is lowered the same way. Finally the
/// middle level is balanced.
pub fn minimize_sperner(b: &SpernerGraph, start: &Weighting, k: usize) -> Result<ShiftTrace> {
    let g = &b.graph;
    let mut t = Tracer::new(g, start, k)?;
    let mid = b.middle();
    let occupied = |w: &Weighting| -> Vec<usize> { w.support().into_iter().map(|v| b.level(v)).collect() };
    while let Some(low) = occupied(&t.current).into_iter().min().filter(|&l| l < mid) {
        let matching = hall_level_matching(b, low, LevelDirection::Up)?;
        t.shift(spec_of(&matching.pairs)?)?;
    }
    while let Some(high) = occupied(&t.current).into_iter().max().filter(|&l| l > mid) {
        let matching = hall_level_matching(b, high, LevelDirection::Down)?;
        t.shift(spec_of(&matching.pairs)?)?;
    }
    t.balance(&b.level_vertices(mid));
    Ok(t.finish())
}

fn spec_of(pairs: &[(usize, usize)]) -> Result<ShiftSpec> {
    ShiftSpec::new(pairs.iter().map(|p| p.0).collect(), pairs.iter().map(|p| p.1).collect())
}

/// [`minimize_multipartite_parts`] for the layout of [`build_multipartite`].
pub fn minimize_multipartite(g: &Graph, spec: &MultipartiteSpec, start: &Weighting, k: usize) -> Result<ShiftTrace> {
    if !g.same_edges(&build_multipartite(spec)?) {
        return Err(Error::MultipartiteMismatch);
    }
    minimize_multipartite_parts(g, &spec.parts(), start, k)
}

/// Drives `start` on a complete multipartite graph to a weighting uniform on
/// a largest part. Parts are taken largest first (stable on ties); the last
/// occupied part `I_s` is shifted onto the first `|I_s|` vertices of
/// `I_{s-1}` until only `I_1` carries weight, which is then balanced.
pub fn minimize_multipartite_parts(g: &Graph, parts: &[Vec<usize>], start: &Weighting, k: usize) -> Result<ShiftTrace> {
    let mut parts: Vec<Vec<usize>> = parts.to_vec();
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.sort_by_key(|p| core::cmp::Reverse(p.len()));
    check_multipartite(g, &parts)?;
    let mut t = Tracer::new(g, start, k)?;
    while let Some(s) = (1..parts.len()).rev().find(|&s| parts[s].iter().any(|&v| t.current.get(v) > 0)) {
        let a = parts[s].clone();
        let b = parts[s - 1][..a.len()].to_vec();
        t.shift(ShiftSpec::new(a, b)?)?;
    }
    t.balance(&parts[0]);
    Ok(t.finish())
}

fn check_multipartite(g: &Graph, parts: &[Vec<usize>]) -> Result<()> {
    let mut seen: Mask = 0;
    let mut part_of = alloc::vec![usize::MAX; g.n()];
    for (i, p) in parts.iter().enumerate() {
        if p.is_empty() {
            return Err(Error::EmptyMultipartite);
        }
        let m = g.checked_mask(p)?;
        if m & seen != 0 || m.count_ones() as usize != p.len() {
            return Err(Error::MultipartiteMismatch);
        }
        seen |= m;
        for &v in p {
            part_of[v] = i;
        }
    }
    if seen != g.all_mask() {
        return Err(Error::MultipartiteMismatch);
    }
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if g.has_edge(u, v) != (part_of[u] != part_of[v]) {
                return Err(Error::MultipartiteMismatch);
            }
        }
    }
    Ok(())
}

/// Drives `start` on a chordal graph to a weighting uniform on a maximum
/// independent set.
///
/// Repeatedly takes the first vertex `v` of a perfect elimination ordering
/// of the remaining graph. An isolated `v` is set aside; otherwise the weight
/// of its first neighbour `u` in the ordering is shifted onto `v` and `u` is
/// deleted. When the remaining graph is edgeless the support is independent.
/// If it extends to a maximum independent set the weight is balanced there;
/// otherwise it is first relocated onto the lexicographically smallest one.
pub fn minimize_chordal(g: &Graph, start: &Weighting, k: usize) -> Result<ShiftTrace> {
    let adj = g.adjacency();
    if elimination_ordering_in(adj, g.all_mask()).is_none() {
        return Err(Error::NotChordal);
    }
    let mut t = Tracer::new(g, start, k)?;
    let mut alive = g.all_mask();
    while members(alive).any(|v| adj[v] & alive != 0) {
        let order = elimination_ordering_in(adj, alive).expect("induced subgraphs of chordal graphs are chordal");
        let v = order[0];
        let Some(&u) = order[1..].iter().find(|&&u| adj[v] & bit(u) != 0) else {
            alive &= !bit(v);
            continue;
        };
        debug_assert!(is_clique_mask(adj, adj[v] & alive));
        if t.current.get(u) > 0 {
            t.shift(ShiftSpec::single(u, v)?)?;
        }
        alive &= !bit(u);
    }
    let support = t.current.support_mask();
    let target = match max_independent_superset_in(adj, g.all_mask(), support) {
        Some(set) => set,
        None => {
            let set = max_independent_superset_in(adj, g.all_mask(), 0).expect("the empty set extends");
            let from: Vec<usize> = members(support).collect();
            let to = set[..from.len()].to_vec();
            t.relocate(from, to);
            set
        }
    };
    debug_assert_eq!(t.current.support_mask() & !mask_of(&target), 0);
    t.balance(&target);
    Ok(t.finish())
}
