//! The extremal families `F_k` and `F*_k`.
//!
//! `F_k` consists of the chains `G(m_1, ..., m_{k-1})`: blocks isomorphic to
//! the complement of a perfect matching on `2 m_i` vertices, consecutive
//! blocks glued at vertices that are non-adjacent inside their block.
//!
//! `F*_2` is `{ co((m+1)K2), co(mK2 ∪ K3), co(mK2 ∪ P3) : m ≥ 1 }`. For
//! `k ≥ 3`, `F*_k` is the union of
//! - `F'_k`: a member of `F_{k1}` glued at a diametrical vertex to a member
//!   of `F*_{k2}` at an identifiable vertex, `k1 + k2 - 1 = k`;
//! - `F''_3` (only for `k = 3`): `G(m1, m2)` plus a twin `u'` of its cut
//!   vertex `u`, non-adjacent (`G¹`) or adjacent (`G²`) to `u`.
//!
//! Identifiable vertices of a member are its critical vertices when `k = 2`,
//! and its critical diametrical vertices when `k ≥ 3`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::criticality::CriticalityProfile;
use crate::error::{Error, Result, MAX_VERTICES};
use crate::graph::{coalesce, CanonicalForm, Graph};
use crate::vertex_set::VertexSet;

/// Parameters `(m_1, ..., m_{k-1})` of `G(m_1, ..., m_{k-1}) ∈ F_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FkParams {
    m: Vec<usize>,
}

impl FkParams {
    pub fn new(m: Vec<usize>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::InvalidParameter("F_k needs k ≥ 2".into()));
        }
        if let Some(&bad) = m.iter().find(|&&mi| mi < 2) {
            return Err(Error::InvalidParameter(format!(
                "every m_i must be at least 2, got {bad}"
            )));
        }
        Ok(FkParams { m })
    }

    pub fn k(&self) -> usize {
        self.m.len() + 1
    }

    pub fn m(&self) -> &[usize] {
        &self.m
    }

    /// `Σ 2 m_i - (k - 2)`.
    pub fn order(&self) -> usize {
        self.m.iter().map(|&mi| 2 * mi).sum::<usize>() + 1 - self.m.len()
    }

    /// The chain read in the direction with the lexicographically smaller
    /// m-vector.
    pub fn canonical(&self) -> FkParams {
        let rev: Vec<usize> = self.m.iter().rev().copied().collect();
        FkParams {
            m: self.m.clone().min(rev),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "m")]
pub enum Fstar2Variant {
    /// `co((m+1) K2)`
    Matching(usize),
    /// `co(m K2 ∪ K3)`
    MatchingPlusK3(usize),
    /// `co(m K2 ∪ P3)`
    MatchingPlusP3(usize),
}

impl Fstar2Variant {
    pub fn m(self) -> usize {
        match self {
            Fstar2Variant::Matching(m)
            | Fstar2Variant::MatchingPlusK3(m)
            | Fstar2Variant::MatchingPlusP3(m) => m,
        }
    }

    pub fn order(self) -> usize {
        match self {
            Fstar2Variant::Matching(m) => 2 * m + 2,
            Fstar2Variant::MatchingPlusK3(m) | Fstar2Variant::MatchingPlusP3(m) => 2 * m + 3,
        }
    }
}

/// `G¹(m1, m2)` or `G²(m1, m2) = G¹(m1, m2) + uu'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Fpp3Variant {
    #[serde(rename = "G1")]
    NonAdjacentTwin,
    #[serde(rename = "G2")]
    AdjacentTwin,
}

impl Fpp3Variant {
    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Fpp3Variant::NonAdjacentTwin),
            2 => Ok(Fpp3Variant::AdjacentTwin),
            _ => Err(Error::InvalidParameter(format!(
                "F''_3 variant must be 1 or 2, got {i}"
            ))),
        }
    }
}

/// How a [`FamilyInstance`] was built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum Construction {
    Fk {
        m: Vec<usize>,
    },
    Fstar2 {
        variant: Fstar2Variant,
    },
    Fpp3 {
        m1: usize,
        m2: usize,
        variant: Fpp3Variant,
    },
    /// Vertex `left_vertex` of the `F_{k1}` member `left` identified with
    /// vertex `right_vertex` of the `F*_{k2}` member `right`.
    Coalesced {
        k1: usize,
        k2: usize,
        left: Box<Construction>,
        left_vertex: usize,
        right: Box<Construction>,
        right_vertex: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub graph: Graph,
    pub k: usize,
    pub construction: Construction,
    /// `u_1, v_{k-1}` for `F_k` chains; otherwise a diametrical pair.
    pub endpoints: Vec<usize>,
    /// Chain order for `F_k`; increasing otherwise.
    pub cut_vertices: Vec<usize>,
    pub identifiable: VertexSet,
}

impl FamilyInstance {
    fn finish(graph: Graph, k: usize, construction: Construction) -> Self {
        let endpoints = diametrical_pair(&graph);
        let cut_vertices = graph
            .cut_vertices()
            .expect("family members are connected")
            .to_vec();
        let identifiable = identifiable_in(&graph, k);
        FamilyInstance {
            graph,
            k,
            construction,
            endpoints,
            cut_vertices,
            identifiable,
        }
    }

    /// JSON sidecar: graph6 string plus construction metadata.
    pub fn sidecar_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("family instances serialize")
    }
}

fn diametrical_pair(g: &Graph) -> Vec<usize> {
    let Some(diam) = g.diameter() else {
        return Vec::new();
    };
    for u in 0..g.order() {
        if let Some(v) = g.distance_layer(u, diam).first() {
            return vec![u, v];
        }
    }
    Vec::new()
}

/// Identifiable vertices of a graph regarded as a member of `F*_k`.
pub fn identifiable_in(g: &Graph, k: usize) -> VertexSet {
    let minus = CriticalityProfile::compute(g).partition.minus;
    if k == 2 {
        minus
    } else {
        minus.intersection(g.diametrical_vertices().unwrap_or_default())
    }
}

pub fn identifiable_vertices(inst: &FamilyInstance) -> VertexSet {
    identifiable_in(&inst.graph, inst.k)
}

/// `co(m K2)` with non-edges `{2t, 2t+1}`.
fn cocktail_party(m: usize) -> Result<Graph> {
    Ok(Graph::copies(&Graph::complete(2)?, m)?.complement())
}

pub fn build_fk(params: &FkParams) -> Result<FamilyInstance> {
    if params.order() > MAX_VERTICES {
        return Err(Error::TooManyVertices(params.order()));
    }
    // u_i = 0 and v_i = 1 inside each block.
    let mut graph = cocktail_party(params.m[0])?;
    let first = 0;
    let mut last = 1;
    let mut cuts = Vec::new();
    for &mi in &params.m[1..] {
        let block = cocktail_party(mi)?;
        let c = coalesce(&graph, last, &block, 0)?;
        cuts.push(c.merged_vertex);
        last = c.map2[1];
        graph = c.graph;
    }
    let identifiable = identifiable_in(&graph, params.k());
    Ok(FamilyInstance {
        graph,
        k: params.k(),
        construction: Construction::Fk {
            m: params.m.clone(),
        },
        endpoints: vec![first, last],
        cut_vertices: cuts,
        identifiable,
    })
}

pub fn build_fstar2(variant: Fstar2Variant) -> Result<FamilyInstance> {
    if variant.m() < 1 {
        return Err(Error::InvalidParameter("F*_2 needs m ≥ 1".into()));
    }
    if variant.order() > MAX_VERTICES {
        return Err(Error::TooManyVertices(variant.order()));
    }
    let k2 = Graph::complete(2)?;
    let graph = match variant {
        Fstar2Variant::Matching(m) => Graph::copies(&k2, m + 1)?.complement(),
        Fstar2Variant::MatchingPlusK3(m) => {
            Graph::disjoint_union(&[Graph::copies(&k2, m)?, Graph::complete(3)?])?.complement()
        }
        Fstar2Variant::MatchingPlusP3(m) => {
            Graph::disjoint_union(&[Graph::copies(&k2, m)?, Graph::path(3)?])?.complement()
        }
    };
    Ok(FamilyInstance::finish(
        graph,
        2,
        Construction::Fstar2 { variant },
    ))
}

pub fn build_fpp3(m1: usize, m2: usize, variant: Fpp3Variant) -> Result<FamilyInstance> {
    let base = build_fk(&FkParams::new(vec![m1, m2])?)?;
    let u = base.cut_vertices[0];
    let n = base.graph.order();
    if n + 1 > MAX_VERTICES {
        return Err(Error::TooManyVertices(n + 1));
    }
    let mut edges: Vec<(usize, usize)> = base.graph.edges().collect();
    edges.extend(base.graph.neighbors(u).iter().map(|w| (w, n)));
    if variant == Fpp3Variant::AdjacentTwin {
        edges.push((u, n));
    }
    let graph = Graph::from_edges(n + 1, edges)?;
    Ok(FamilyInstance::finish(
        graph,
        3,
        Construction::Fpp3 { m1, m2, variant },
    ))
}

/// Glues `h1 ∈ F_{k1}` at diametrical `u1` to `h2 ∈ F*_{k2}` at identifiable
/// `x2`.
pub fn build_fstar_k(
    h1: &FamilyInstance,
    u1: usize,
    h2: &FamilyInstance,
    x2: usize,
) -> Result<FamilyInstance> {
    let rec = recognize_fk(&h1.graph)
        .ok_or_else(|| Error::InvalidParameter("the first graph is not a member of F_k".into()))?;
    if rec.params.k() != h1.k {
        return Err(Error::InvalidParameter(format!(
            "first graph recognized with k = {}, instance says {}",
            rec.params.k(),
            h1.k
        )));
    }
    if u1 >= h1.graph.order() || !h1.graph.diametrical_vertices()?.contains(u1) {
        return Err(Error::InvalidParameter(format!(
            "vertex {u1} is not diametrical in the F_k member"
        )));
    }
    if !identifiable_vertices(h2).contains(x2) {
        return Err(Error::InvalidParameter(format!(
            "vertex {x2} is not identifiable in the F*_k member"
        )));
    }
    let c = coalesce(&h1.graph, u1, &h2.graph, x2)?;
    Ok(FamilyInstance::finish(
        c.graph,
        h1.k + h2.k - 1,
        Construction::Coalesced {
            k1: h1.k,
            k2: h2.k,
            left: Box::new(h1.construction.clone()),
            left_vertex: u1,
            right: Box::new(h2.construction.clone()),
            right_vertex: x2,
        },
    ))
}

/// Every m-vector of length `k - 1` whose chain has at most `max_order`
/// vertices, in lexicographic order.
fn fk_parameter_vectors(k: usize, max_order: usize) -> Vec<FkParams> {
    fn rec(len: usize, budget: isize, prefix: &mut Vec<usize>, out: &mut Vec<FkParams>) {
        if prefix.len() == len {
            out.push(FkParams { m: prefix.clone() });
            return;
        }
        let left = (len - prefix.len() - 1) as isize;
        // each remaining block needs at least 2·2 vertices, one of them shared
        let mut mi = 2;
        while (2 * mi as isize - 1) + left * 3 <= budget {
            prefix.push(mi);
            rec(len, budget - (2 * mi as isize - 1), prefix, out);
            prefix.pop();
            mi += 1;
        }
    }
    let mut out = Vec::new();
    if k >= 2 {
        // order = Σ (2 m_i - 1) + 1
        rec(k - 1, max_order as isize - 1, &mut Vec::new(), &mut out);
    }
    out
}

fn dedup_sorted(instances: impl IntoIterator<Item = FamilyInstance>) -> Vec<FamilyInstance> {
    let mut seen: BTreeMap<(usize, CanonicalForm), FamilyInstance> = BTreeMap::new();
    for inst in instances {
        let key = (inst.graph.order(), inst.graph.canonical_form());
        seen.entry(key).or_insert(inst);
    }
    seen.into_values().collect()
}

/// Members of `F_k` with at most `max_order` vertices, one per isomorphism
/// class, ordered by order then canonical form.
pub fn enumerate_fk(k: usize, max_order: usize) -> Vec<FamilyInstance> {
    dedup_sorted(
        fk_parameter_vectors(k, max_order.min(MAX_VERTICES))
            .iter()
            .map(|p| build_fk(p).expect("parameters are in range")),
    )
}

/// Members of `F*_k` with at most `max_order` vertices, one per isomorphism
/// class, ordered by order then canonical form.
pub fn enumerate_fstar_k(k: usize, max_order: usize) -> Vec<FamilyInstance> {
    let max_order = max_order.min(MAX_VERTICES);
    let mut by_k: Vec<Vec<FamilyInstance>> = vec![Vec::new(); k.max(2) + 1];
    for kk in 2..=k {
        by_k[kk] = fstar_level(kk, max_order, &by_k);
    }
    if k < 2 {
        Vec::new()
    } else {
        by_k.swap_remove(k)
    }
}

fn fstar_level(k: usize, max_order: usize, lower: &[Vec<FamilyInstance>]) -> Vec<FamilyInstance> {
    let mut found = Vec::new();
    if k == 2 {
        for m in 1.. {
            let variants = [
                Fstar2Variant::Matching(m),
                Fstar2Variant::MatchingPlusK3(m),
                Fstar2Variant::MatchingPlusP3(m),
            ];
            let fitting: Vec<_> = variants
                .into_iter()
                .filter(|v| v.order() <= max_order)
                .collect();
            if fitting.is_empty() {
                break;
            }
            for v in fitting {
                found.push(build_fstar2(v).expect("valid F*_2 parameters"));
            }
        }
        return dedup_sorted(found);
    }
    found.extend(enumerate_fk(k, max_order));
    if k == 3 {
        for m1 in 2.. {
            if 2 * m1 + 4 > max_order {
                break;
            }
            for m2 in m1.. {
                if 2 * m1 + 2 * m2 > max_order {
                    break;
                }
                for variant in [Fpp3Variant::NonAdjacentTwin, Fpp3Variant::AdjacentTwin] {
                    found.push(build_fpp3(m1, m2, variant).expect("valid F''_3 parameters"));
                }
            }
        }
    }
    for k1 in 2..k {
        let k2 = k + 1 - k1;
        for h1 in enumerate_fk(k1, max_order.saturating_sub(3)) {
            let diametrical = h1.graph.diametrical_vertices().expect("connected");
            for h2 in &lower[k2] {
                if h1.graph.order() + h2.graph.order() - 1 > max_order {
                    continue;
                }
                for u1 in diametrical {
                    for x2 in h2.identifiable {
                        found.push(build_fstar_k(&h1, u1, h2, x2).expect("valid attachment"));
                    }
                }
            }
        }
    }
    dedup_sorted(found)
}

/// Block chain of a recognized `F_k` member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FkRecognition {
    /// Oriented so that the m-vector is the lexicographically smaller one.
    pub params: FkParams,
    /// Blocks in chain order.
    pub blocks: Vec<VertexSet>,
    /// `cut_vertices[i]` joins `blocks[i]` and `blocks[i + 1]`.
    pub cut_vertices: Vec<usize>,
    /// `u_1` and `v_{k-1}`: the partners of the outermost cut vertices.
    pub endpoints: (usize, usize),
}

/// The unique non-neighbor of `v` inside `block`, when the block is a
/// complement of a perfect matching.
fn partner(g: &Graph, block: VertexSet, v: usize) -> Option<usize> {
    let missing = block.difference(g.neighbors(v)).without(v);
    (missing.len() == 1).then(|| missing.first().expect("one element"))
}

/// Decides membership in `F_k`: the block-cut tree is a path, every block is
/// a complement of a perfect matching on at least four vertices, and inner
/// blocks meet their two neighbors at non-adjacent vertices.
pub fn recognize_fk(g: &Graph) -> Option<FkRecognition> {
    if g.order() < 4 || !g.is_connected() {
        return None;
    }
    let dec = g.block_decomposition().ok()?;
    for &b in &dec.blocks {
        if b.len() < 4 || b.len() % 2 == 1 {
            return None;
        }
        if b.iter()
            .any(|v| g.neighbors(v).intersection(b).len() != b.len() - 2)
        {
            return None;
        }
    }
    let cuts = dec.cut_vertices;
    let cut_count = |b: VertexSet| b.intersection(cuts).len();
    if dec.blocks.iter().any(|&b| cut_count(b) > 2) {
        return None;
    }
    if cuts
        .iter()
        .any(|c| dec.blocks.iter().filter(|b| b.contains(c)).count() != 2)
    {
        return None;
    }
    // walk the chain from an end block
    let mut chain = Vec::with_capacity(dec.blocks.len());
    let mut chain_cuts = Vec::new();
    let mut current = if dec.blocks.len() == 1 {
        dec.blocks[0]
    } else {
        *dec.blocks.iter().find(|&&b| cut_count(b) == 1)?
    };
    let mut entered_at: Option<usize> = None;
    loop {
        chain.push(current);
        let exit = current
            .intersection(cuts)
            .iter()
            .find(|&c| Some(c) != entered_at);
        let Some(c) = exit else { break };
        if let Some(e) = entered_at {
            if g.has_edge(e, c) {
                return None;
            }
        }
        chain_cuts.push(c);
        current = *dec
            .blocks
            .iter()
            .find(|&&b| b != current && b.contains(c))?;
        entered_at = Some(c);
    }
    if chain.len() != dec.blocks.len() {
        return None;
    }
    let endpoints = if chain.len() == 1 {
        let b = chain[0];
        let u = b.first()?;
        (u, partner(g, b, u)?)
    } else {
        (
            partner(g, chain[0], chain_cuts[0])?,
            partner(g, *chain.last()?, *chain_cuts.last()?)?,
        )
    };
    let m: Vec<usize> = chain.iter().map(|b| b.len() / 2).collect();
    let rev: Vec<usize> = m.iter().rev().copied().collect();
    let mut rec = FkRecognition {
        params: FkParams { m: m.clone() },
        blocks: chain,
        cut_vertices: chain_cuts,
        endpoints,
    };
    if rev < m {
        rec.params = FkParams { m: rev };
        rec.blocks.reverse();
        rec.cut_vertices.reverse();
        rec.endpoints = (rec.endpoints.1, rec.endpoints.0);
    }
    Some(rec)
}

/// Components of the complement, when each is `K2` except for at most one
/// `K3` or `P3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementShape {
    pub k2_count: usize,
    pub extra: Option<ExtraComponent>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExtraComponent {
    K3,
    P3,
}

pub fn complement_shape(g: &Graph) -> Option<ComplementShape> {
    let co = g.complement();
    let mut shape = ComplementShape {
        k2_count: 0,
        extra: None,
    };
    for comp in co.components() {
        let edges: usize = comp.iter().map(|v| co.degree(v)).sum::<usize>() / 2;
        let found = match (comp.len(), edges) {
            (2, 1) => {
                shape.k2_count += 1;
                continue;
            }
            (3, 3) => ExtraComponent::K3,
            (3, 2) => ExtraComponent::P3,
            _ => return None,
        };
        if shape.extra.replace(found).is_some() {
            return None;
        }
    }
    Some(shape)
}

/// Matches `g` against the closed forms of `F*_2`.
pub fn recognize_fstar2(g: &Graph) -> Option<Fstar2Variant> {
    let shape = complement_shape(g)?;
    match (shape.extra, shape.k2_count) {
        (None, a) if a >= 2 => Some(Fstar2Variant::Matching(a - 1)),
        (Some(ExtraComponent::K3), a) if a >= 1 => Some(Fstar2Variant::MatchingPlusK3(a)),
        (Some(ExtraComponent::P3), a) if a >= 1 => Some(Fstar2Variant::MatchingPlusP3(a)),
        _ => None,
    }
}

/// Parse tree showing how a graph arises in `F*_k`. Vertex labels inside a
/// nested certificate refer to the induced subgraph on the listed vertices,
/// relabeled in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape")]
pub enum FstarCertificate {
    Fk {
        params: FkParams,
    },
    Fstar2 {
        variant: Fstar2Variant,
    },
    Fpp3 {
        m1: usize,
        m2: usize,
        variant: Fpp3Variant,
        /// The cut vertex `u` of `G(m1, m2)` and its twin `u'`.
        cut_vertex: usize,
        twin: usize,
    },
    Coalesced {
        k: usize,
        cut_vertex: usize,
        fk_vertices: Vec<usize>,
        fk_params: FkParams,
        other_vertices: Vec<usize>,
        other: Box<FstarCertificate>,
    },
}

impl FstarCertificate {
    pub fn k(&self) -> usize {
        match self {
            FstarCertificate::Fk { params } => params.k(),
            FstarCertificate::Fstar2 { .. } => 2,
            FstarCertificate::Fpp3 { .. } => 3,
            FstarCertificate::Coalesced { k, .. } => *k,
        }
    }
}

fn recognize_fpp3(g: &Graph) -> Option<FstarCertificate> {
    for (a, b) in g.twins() {
        for (u, twin) in [(a, b), (b, a)] {
            let sub = g.delete_vertex(twin).ok()?;
            let Some(rec) = recognize_fk(&sub.graph) else {
                continue;
            };
            if rec.params.k() != 3 || sub.original[rec.cut_vertices[0]] != u {
                continue;
            }
            let variant = if g.has_edge(u, twin) {
                Fpp3Variant::AdjacentTwin
            } else {
                Fpp3Variant::NonAdjacentTwin
            };
            return Some(FstarCertificate::Fpp3 {
                m1: rec.params.m[0],
                m2: rec.params.m[1],
                variant,
                cut_vertex: u,
                twin,
            });
        }
    }
    None
}

/// Decides membership in `F*_k` for some `k`, returning the parse tree.
pub fn recognize_fstar_k(g: &Graph) -> Option<FstarCertificate> {
    if g.order() < 4 || !g.is_connected() {
        return None;
    }
    if let Some(rec) = recognize_fk(g) {
        return Some(FstarCertificate::Fk { params: rec.params });
    }
    if let Some(variant) = recognize_fstar2(g) {
        return Some(FstarCertificate::Fstar2 { variant });
    }
    let cuts = g.cut_vertices().ok()?;
    if cuts.is_empty() {
        return recognize_fpp3(g);
    }
    for x in cuts {
        let rest = g.vertices().without(x);
        let mut comps = Vec::new();
        let mut left = rest;
        while let Some(v) = left.first() {
            let c = g.component_within(v, left);
            left = left.difference(c);
            comps.push(c);
        }
        for mask in 1u32..(1 << comps.len()) - 1 {
            let side: VertexSet = comps
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(VertexSet::EMPTY, |acc, (_, c)| acc.union(*c));
            let fk_side = side.with(x);
            let other_side = rest.difference(side).with(x);
            if let Some(cert) = try_split(g, x, fk_side, other_side) {
                return Some(cert);
            }
        }
    }
    None
}

fn try_split(
    g: &Graph,
    x: usize,
    fk_side: VertexSet,
    other_side: VertexSet,
) -> Option<FstarCertificate> {
    let h1 = g.induced(fk_side);
    let rec1 = recognize_fk(&h1.graph)?;
    let x1 = h1.original.iter().position(|&v| v == x)?;
    if !h1.graph.diametrical_vertices().ok()?.contains(x1) {
        return None;
    }
    let h2 = g.induced(other_side);
    let cert2 = recognize_fstar_k(&h2.graph)?;
    let x2 = h2.original.iter().position(|&v| v == x)?;
    if !identifiable_in(&h2.graph, cert2.k()).contains(x2) {
        return None;
    }
    Some(FstarCertificate::Coalesced {
        k: rec1.params.k() + cert2.k() - 1,
        cut_vertex: x,
        fk_vertices: h1.original,
        fk_params: rec1.params,
        other_vertices: h2.original,
        other: Box::new(cert2),
    })
}
