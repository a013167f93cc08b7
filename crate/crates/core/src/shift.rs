//! Weight shifting.
//!
//! A single-edge shift `w_ab` moves all weight of `a` onto its neighbour `b`.
//! For k >= 3 a single shift can increase the k-clique count, so the main
//! tool is the simultaneous shift along disjoint pairs `(a_i, b_i)`: when
//!
//! 1. every `a_i b_i` is an edge,
//! 2. `B` is independent (or, in the relaxed mode, every edge `b_i b_j`
//!    comes with the edges `a_i a_j`, `a_i b_j`, `a_j b_i`), and
//! 3. `N(b_i) \ (A ∪ {v : w(v) = 0}) ⊆ N(a_i)` for every `i`,
//!
//! moving each `w(a_i)` onto `b_i` never increases π_k for any k. The
//! [`build_injection_certificate`] routine checks this on explicit blow-ups
//! by constructing the vertex bijection and the induced clique injection.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::blowup::{build_blowup, count_edges_formula, BlowupVertex, Weighting};
use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::{bit, for_each_clique, is_clique_mask, mask_of, members, Graph};

/// Disjoint vertex lists `A = (a_1..a_r)` and `B = (b_1..b_r)`; weight moves
/// from `a_i` to `b_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftSpec {
    a: Vec<usize>,
    b: Vec<usize>,
}

impl ShiftSpec {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::MalformedShift(format!(
                "A has {} vertices but B has {}",
                a.len(),
                b.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for &v in a.iter().chain(&b) {
            if !seen.insert(v) {
                return Err(Error::MalformedShift(format!(
                    "vertex {v} appears more than once in A ∪ B"
                )));
            }
        }
        Ok(Self { a, b })
    }

    pub fn empty() -> Self {
        Self {
            a: Vec::new(),
            b: Vec::new(),
        }
    }

    pub fn single(a: usize, b: usize) -> Result<Self> {
        Self::new(alloc::vec![a], alloc::vec![b])
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn r(&self) -> usize {
        self.a.len()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.a.iter().copied().zip(self.b.iter().copied())
    }

    fn check_range(&self, g: &Graph) -> Result<()> {
        for &v in self.a.iter().chain(&self.b) {
            g.check_vertex(v)?;
        }
        Ok(())
    }
}

/// Which form of the second condition to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftMode {
    /// `B` is an independent set.
    Lemma3,
    /// For every edge `b_i b_j`: `a_i a_j`, `a_i b_j`, `a_j b_i` are edges.
    Lemma4,
}

impl ShiftMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ShiftMode::Lemma3 => "lemma3",
            ShiftMode::Lemma4 => "lemma4",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShiftCondition {
    Edges,
    BCondition,
    Neighborhood,
}

/// One violated condition. `index` is the 1-based pair index `i`; `vertex`
/// is the offending vertex when there is one (`b_j` for the second
/// condition, the uncovered neighbour of `b_i` for the third).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConditionFailure {
    pub condition: ShiftCondition,
    pub index: usize,
    pub vertex: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftValidation {
    pub mode: ShiftMode,
    pub cond_edges: bool,
    pub cond_b: bool,
    pub cond_neighborhood: bool,
    /// Not a precondition; reported so that specs with edges inside `A` can
    /// be audited.
    pub a_independent: bool,
    pub failures: Vec<ConditionFailure>,
}

impl ShiftValidation {
    pub fn is_valid(&self) -> bool {
        self.cond_edges && self.cond_b && self.cond_neighborhood
    }
}

/// `w_ab`: zero at `a`, `w(a) + w(b)` at `b`.
pub fn shift_edge(g: &Graph, w: &Weighting, a: usize, b: usize) -> Result<Weighting> {
    w.check_against(g)?;
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if !g.has_edge(a, b) {
        return Err(Error::NotAnEdge { u: a, v: b });
    }
    let mut out = w.clone();
    out.transfer(a, b, w.get(a));
    Ok(out)
}

/// Whichever of `w_ab`, `w_ba` has the smaller π_2 (`w_ab` on ties).
pub fn katona_best_edge_shift(g: &Graph, w: &Weighting, a: usize, b: usize) -> Result<Weighting> {
    let ab = shift_edge(g, w, a, b)?;
    let ba = shift_edge(g, w, b, a)?;
    if count_edges_formula(g, &ba)? < count_edges_formula(g, &ab)? {
        Ok(ba)
    } else {
        Ok(ab)
    }
}

/// Checks the three shift conditions literally against `g` and the current
/// weighting `w`.
pub fn validate_shift(g: &Graph, w: &Weighting, spec: &ShiftSpec, mode: ShiftMode) -> Result<ShiftValidation> {
    w.check_against(g)?;
    spec.check_range(g)?;
    let adj = g.adjacency();
    let a_mask = mask_of(&spec.a);
    let zeros = (0..g.n()).filter(|&v| w.get(v) == 0).fold(0, |m, v| m | bit(v));
    let mut failures = Vec::new();

    for (i, (a, b)) in spec.pairs().enumerate() {
        if !g.has_edge(a, b) {
            failures.push(ConditionFailure {
                condition: ShiftCondition::Edges,
                index: i + 1,
                vertex: None,
            });
        }
    }

    for (i, (ai, bi)) in spec.pairs().enumerate() {
        for (j, (aj, bj)) in spec.pairs().enumerate() {
            if i == j || !g.has_edge(bi, bj) {
                continue;
            }
            let ok = match mode {
                ShiftMode::Lemma3 => false,
                ShiftMode::Lemma4 => g.has_edge(ai, aj) && g.has_edge(ai, bj) && g.has_edge(aj, bi),
            };
            if !ok {
                failures.push(ConditionFailure {
                    condition: ShiftCondition::BCondition,
                    index: i + 1,
                    vertex: Some(bj),
                });
            }
        }
    }

    for (i, (a, b)) in spec.pairs().enumerate() {
        let uncovered = adj[b] & !a_mask & !zeros & !adj[a];
        for v in members(uncovered) {
            failures.push(ConditionFailure {
                condition: ShiftCondition::Neighborhood,
                index: i + 1,
                vertex: Some(v),
            });
        }
    }

    let holds = |c: ShiftCondition| failures.iter().all(|f| f.condition != c);
    Ok(ShiftValidation {
        mode,
        cond_edges: holds(ShiftCondition::Edges),
        cond_b: holds(ShiftCondition::BCondition),
        cond_neighborhood: holds(ShiftCondition::Neighborhood),
        a_independent: members(a_mask).all(|v| adj[v] & a_mask == 0),
        failures,
    })
}

/// Unchecked simultaneous shift: `w'(a_i) = 0`, `w'(b_i) = w(b_i) + w(a_i)`.
pub(crate) fn apply_shift(w: &Weighting, spec: &ShiftSpec) -> Weighting {
    let mut out = w.clone();
    for (a, b) in spec.pairs() {
        out.transfer(a, b, w.get(a));
    }
    out
}

/// Simultaneous shift along `spec`; refuses when the conditions fail, since
/// the count inequality is only guaranteed under them.
pub fn multi_shift(g: &Graph, w: &Weighting, spec: &ShiftSpec, mode: ShiftMode) -> Result<Weighting> {
    let validation = validate_shift(g, w, spec, mode)?;
    if !validation.is_valid() {
        return Err(Error::InvalidShift(Box::new(validation)));
    }
    Ok(apply_shift(w, spec))
}

/// The vertex bijection `φ: V(G(w')) → V(G(w))` and the verdicts of checking
/// that it induces an injection of k-cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectionCertificate {
    pub k: usize,
    pub shifted: Weighting,
    /// `((v, i), φ(v, i))` for every vertex of `G(w')`, in blow-up order.
    pub vertex_map: Vec<(BlowupVertex, BlowupVertex)>,
    /// π_k(G(w')).
    pub domain_cliques: BigCount,
    /// π_k(G(w)).
    pub codomain_cliques: BigCount,
    pub phi_bijective: bool,
    pub cliques_preserved: bool,
    pub injective: bool,
}

impl InjectionCertificate {
    pub fn verified(&self) -> bool {
        self.phi_bijective && self.cliques_preserved && self.injective
    }
}

/// `φ(b_j, i) = (a_j, i − w(b_j))` for the copies `i ∈ [w(b_j) + w(a_j)] \ [w(b_j)]`
/// that `b_j` received; every other vertex maps to itself.
fn phi(w: &Weighting, spec: &ShiftSpec, v: BlowupVertex) -> BlowupVertex {
    for (a, b) in spec.pairs() {
        if v.vertex == b && v.copy > w.get(b) && v.copy <= w.get(b) + w.get(a) {
            return BlowupVertex {
                vertex: a,
                copy: v.copy - w.get(b),
            };
        }
    }
    v
}

/// Builds `G(w)` and `G(w')`, maps every k-clique of `G(w')` through `φ`,
/// and checks bijectivity of `φ`, that images are k-cliques of `G(w)`, and
/// that distinct cliques have distinct images.
pub fn build_injection_certificate(
    g: &Graph,
    w: &Weighting,
    spec: &ShiftSpec,
    mode: ShiftMode,
    k: usize,
) -> Result<InjectionCertificate> {
    if k == 0 {
        return Err(Error::CliqueSize { k, min: 1 });
    }
    let shifted = multi_shift(g, w, spec, mode)?;
    let before = build_blowup(g, w)?;
    let after = build_blowup(g, &shifted)?;

    let vertex_map: Vec<(BlowupVertex, BlowupVertex)> =
        after.vertices.iter().map(|&v| (v, phi(w, spec, v))).collect();
    let images: Option<Vec<usize>> = vertex_map.iter().map(|&(_, img)| before.index_of(img)).collect();
    let phi_bijective = match &images {
        Some(idx) => {
            let distinct: BTreeSet<usize> = idx.iter().copied().collect();
            distinct.len() == idx.len() && idx.len() == before.vertices.len()
        }
        None => false,
    };

    let mut domain = 0u64;
    let mut cliques_preserved = true;
    let mut image_set = BTreeSet::new();
    if let Some(idx) = &images {
        let target_adj = before.graph.adjacency();
        for_each_clique(after.graph.adjacency(), after.graph.all_mask(), k, &mut |c| {
            domain += 1;
            let image = c.iter().fold(0u64, |m, &x| m | bit(idx[x]));
            if image.count_ones() as usize != k || !is_clique_mask(target_adj, image) {
                cliques_preserved = false;
            }
            image_set.insert(image);
        });
    } else {
        cliques_preserved = false;
    }
    let injective = images.is_some() && image_set.len() as u64 == domain;
    let codomain = crate::graph::count_cliques(&before.graph, k);

    let cert = InjectionCertificate {
        k,
        shifted,
        vertex_map,
        domain_cliques: BigCount::from(domain),
        codomain_cliques: BigCount::from(codomain),
        phi_bijective,
        cliques_preserved,
        injective,
    };
    if !cert.verified() {
        return Err(Error::CertificateFailed(format!(
            "bijective={} preserved={} injective={}",
            cert.phi_bijective, cert.cliques_preserved, cert.injective
        )));
    }
    Ok(cert)
}
