//! Mechanical checks of the diameter bounds, family characterizations and
//! coalescence facts, over exhaustive scans, family enumerations and a
//! seeded random coalescence sweep.
//!
//! Every check has three outcomes per subject: skipped (hypothesis false),
//! pass, or fail with a diagnostic. Reports list counterexamples in scan
//! order, so they are identical for any thread count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::criticality::{
    critical_within, find_sufficient_pairs, neighborhood_containment_pairs, weak_bicritical_within,
    CriticalityProfile,
};
use crate::domination::{Exact, GammaOracle, DEFAULT_BUDGET};
use crate::enumerate::{graphs_by_order, MAX_ENUMERATION_ORDER};
use crate::error::{Error, Result};
use crate::families::{
    build_fpp3, complement_shape, enumerate_fk, enumerate_fstar_k, identifiable_in, recognize_fk,
    recognize_fstar_k, ExtraComponent, Fpp3Variant,
};
use crate::graph::{coalesce, CanonicalForm, Graph};
use crate::parallel::Execution;
use crate::vertex_set::VertexSet;

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_SWEEP_PAIRS: usize = 1000;
/// Counterexamples kept per check; the counts are always complete.
pub const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// Connected k-critical, k ≥ 2: diam ≤ 2k − 2.
    #[serde(rename = "ThmA")]
    CriticalDiameterBound,
    /// Existence of k-bicritical graphs of large diameter. Its witnesses are
    /// external constructions, so it is always reported as skipped.
    #[serde(rename = "ThmB")]
    BicriticalConstructions,
    /// Connected k-bicritical, k ≥ 3: diam ≤ 2k − 3.
    #[serde(rename = "ThmC")]
    BicriticalDiameterBound,
    /// Connected weak k-bicritical, k ≥ 2: diam ≤ 2k − 2.
    #[serde(rename = "ThmD")]
    WeakBicriticalDiameterBound,
    /// Connected k-critical: diam = 2k − 2 iff the graph is in `F_k`.
    #[serde(rename = "ThmE")]
    CriticalExtremal,
    /// Connected weak k-bicritical: diam ≤ 2k − 2, with equality iff the
    /// graph is in `F*_k`.
    #[serde(rename = "Thm1")]
    WeakBicriticalExtremal,
    /// A weak bicritical coalescence has a critical part glued to a weak
    /// bicritical part at a critical vertex, and γ drops by one.
    #[serde(rename = "Thm2_1_fwd")]
    CoalescenceNecessary,
    /// Critical part glued to a weak bicritical part at a critical vertex
    /// gives a weak bicritical coalescence.
    #[serde(rename = "Thm2_1_bwd")]
    CoalescenceSufficient,
    /// Weak k-bicritical, k ≥ 3, with a diametrical `x` whose layers 1..=3
    /// are critical and whose second layer has two vertices: diam ≤ 2k − 3.
    #[serde(rename = "Thm3_1")]
    CriticalLayersBound,
    /// `N[u] ⊆ N[v]` with `u ≠ v` makes `v` non-critical.
    #[serde(rename = "Lem1_1")]
    NeighborhoodContainment,
    /// Components of order ≥ 3 of a weak bicritical graph have δ ≥ 2.
    #[serde(rename = "Lem1_2")]
    WeakBicriticalMinDegree,
    /// Weak 2-bicritical graphs are exactly the three complement shapes,
    /// and 2-critical graphs are exactly the cocktail party graphs.
    #[serde(rename = "Lem1_22")]
    WeakTwoBicriticalShapes,
    /// `γ(H1) + γ(H2) − 1 ≤ γ(G) ≤ γ(H1) + γ(H2)`, with the lower value
    /// when an attach vertex is critical.
    #[serde(rename = "Lem1_3_i")]
    CoalescenceGamma,
    /// Both attach vertices critical: the critical vertices of the
    /// coalescence are those of the parts, and G is critical iff both are.
    #[serde(rename = "Lem1_3_ii")]
    CoalescenceCriticalVertices,
    /// A 3-sufficient pair in a connected weak k-bicritical graph, k ≥ 3,
    /// forces diam ≤ 2k − 2.
    #[serde(rename = "Lem3A_l3")]
    SufficientPairBound3,
    /// A 4-sufficient pair forces diam ≤ 2k − 3.
    #[serde(rename = "Lem3A_l4")]
    SufficientPairBound4,
    /// `F_k` equals the set of gluings of `F_{k1}` and `F_{k2}` members at
    /// diametrical vertices, `k1 + k2 − 1 = k`.
    #[serde(rename = "Obs1_2_1")]
    ChainGluing,
    /// Every component of a disconnected weak bicritical graph is weak
    /// bicritical, and all but at most one are critical.
    #[serde(rename = "ComponentsWB")]
    WeakBicriticalComponents,
    /// `F_k` members are k-critical, not bicritical, of diameter 2k − 2.
    #[serde(rename = "FkFacts")]
    ChainFamilyFacts,
    /// `F*_k` members are weak k-bicritical, not bicritical, of diameter
    /// 2k − 2, have an identifiable vertex, and are critical only in `F_k`.
    #[serde(rename = "FstarFacts")]
    ExtremalFamilyFacts,
    /// The twin graphs are weak 3-bicritical of diameter 4 and recognized.
    #[serde(rename = "Fpp3Facts")]
    TwinFamilyFacts,
}

impl TheoremId {
    pub const ALL: [TheoremId; 21] = [
        TheoremId::CriticalDiameterBound,
        TheoremId::BicriticalConstructions,
        TheoremId::BicriticalDiameterBound,
        TheoremId::WeakBicriticalDiameterBound,
        TheoremId::CriticalExtremal,
        TheoremId::WeakBicriticalExtremal,
        TheoremId::CoalescenceNecessary,
        TheoremId::CoalescenceSufficient,
        TheoremId::CriticalLayersBound,
        TheoremId::NeighborhoodContainment,
        TheoremId::WeakBicriticalMinDegree,
        TheoremId::WeakTwoBicriticalShapes,
        TheoremId::CoalescenceGamma,
        TheoremId::CoalescenceCriticalVertices,
        TheoremId::SufficientPairBound3,
        TheoremId::SufficientPairBound4,
        TheoremId::ChainGluing,
        TheoremId::WeakBicriticalComponents,
        TheoremId::ChainFamilyFacts,
        TheoremId::ExtremalFamilyFacts,
        TheoremId::TwinFamilyFacts,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            TheoremId::CriticalDiameterBound => "ThmA",
            TheoremId::BicriticalConstructions => "ThmB",
            TheoremId::BicriticalDiameterBound => "ThmC",
            TheoremId::WeakBicriticalDiameterBound => "ThmD",
            TheoremId::CriticalExtremal => "ThmE",
            TheoremId::WeakBicriticalExtremal => "Thm1",
            TheoremId::CoalescenceNecessary => "Thm2_1_fwd",
            TheoremId::CoalescenceSufficient => "Thm2_1_bwd",
            TheoremId::CriticalLayersBound => "Thm3_1",
            TheoremId::NeighborhoodContainment => "Lem1_1",
            TheoremId::WeakBicriticalMinDegree => "Lem1_2",
            TheoremId::WeakTwoBicriticalShapes => "Lem1_22",
            TheoremId::CoalescenceGamma => "Lem1_3_i",
            TheoremId::CoalescenceCriticalVertices => "Lem1_3_ii",
            TheoremId::SufficientPairBound3 => "Lem3A_l3",
            TheoremId::SufficientPairBound4 => "Lem3A_l4",
            TheoremId::ChainGluing => "Obs1_2_1",
            TheoremId::WeakBicriticalComponents => "ComponentsWB",
            TheoremId::ChainFamilyFacts => "FkFacts",
            TheoremId::ExtremalFamilyFacts => "FstarFacts",
            TheoremId::TwinFamilyFacts => "Fpp3Facts",
        }
    }

    fn kind(self) -> CheckKind {
        use TheoremId::*;
        match self {
            BicriticalConstructions => CheckKind::Unsupported,
            CoalescenceNecessary
            | CoalescenceSufficient
            | CoalescenceGamma
            | CoalescenceCriticalVertices => CheckKind::Coalescence,
            ChainGluing => CheckKind::Gluing,
            ChainFamilyFacts | ExtremalFamilyFacts | TwinFamilyFacts => CheckKind::Family,
            _ => CheckKind::Graph,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum CheckKind {
    Graph,
    Coalescence,
    Gluing,
    Family,
    Unsupported,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Result of one check on one subject.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Skipped,
    Pass,
    Fail(String),
}

impl Outcome {
    fn from_violation(violation: Option<String>) -> Self {
        match violation {
            Some(d) => Outcome::Fail(d),
            None => Outcome::Pass,
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    Fk,
    Fstar,
}

/// What a check was evaluated on. Enough to re-run it standalone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Subject {
    Graph {
        graph: Graph,
    },
    Coalescence {
        h1: Graph,
        x1: usize,
        h2: Graph,
        x2: usize,
    },
    FamilyMember {
        graph: Graph,
        k: usize,
        family: FamilyTag,
    },
    Gluing {
        graph: Graph,
        k: usize,
        k1: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub subject: Subject,
    pub diagnostic: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub theorem_id: TheoremId,
    pub status: Status,
    pub hypothesis_count: u64,
    pub pass_count: u64,
    pub fail_count: u64,
    pub skipped_count: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl TheoremCheck {
    fn new(theorem_id: TheoremId) -> Self {
        TheoremCheck {
            theorem_id,
            status: Status::Skipped,
            hypothesis_count: 0,
            pass_count: 0,
            fail_count: 0,
            skipped_count: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, outcome: Outcome, subject: impl FnOnce() -> Subject) {
        match outcome {
            Outcome::Skipped => self.skipped_count += 1,
            Outcome::Pass => {
                self.hypothesis_count += 1;
                self.pass_count += 1;
            }
            Outcome::Fail(diagnostic) => {
                self.hypothesis_count += 1;
                self.fail_count += 1;
                if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                    self.counterexamples.push(Counterexample {
                        subject: subject(),
                        diagnostic,
                    });
                }
            }
        }
    }

    fn finish(mut self) -> Self {
        self.status = if self.fail_count > 0 {
            Status::Fail
        } else if self.hypothesis_count > 0 {
            Status::Pass
        } else {
            Status::Skipped
        };
        self
    }
}

/// Where the per-graph checks get their graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "graphs", rename_all = "kebab-case")]
pub enum ScanSource {
    /// Every non-isomorphic graph of order `0..=n_max`.
    EnumeratedAll,
    /// Members of `F*_k` (which include `F_k`) of order at most `n_max`.
    FamilyGenerated,
    /// An explicit list, e.g. read from a file.
    File(Vec<Graph>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub n_max: usize,
    pub connected_only: bool,
    pub source: ScanSource,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            n_max: 7,
            connected_only: false,
            source: ScanSource::EnumeratedAll,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub theorems: Vec<TheoremId>,
    pub scan: ScanConfig,
    pub seed: u64,
    /// Random graph pairs in the coalescence sweep; every attach choice of
    /// each pair is checked.
    pub sweep_pairs: usize,
    /// Order cap for `F_k` members in the family checks.
    pub fk_max_order: usize,
    /// Order cap for `F*_k` members and chain gluings.
    pub fstar_max_order: usize,
    /// Largest k in the family checks.
    pub family_max_k: usize,
    pub budget: u128,
    #[serde(skip)]
    pub execution: Execution,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            theorems: TheoremId::ALL.to_vec(),
            scan: ScanConfig::default(),
            seed: DEFAULT_SEED,
            sweep_pairs: DEFAULT_SWEEP_PAIRS,
            fk_max_order: 14,
            fstar_max_order: 12,
            family_max_k: 4,
            budget: DEFAULT_BUDGET,
            execution: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCount {
    pub order: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: VerifyConfig,
    /// Graphs of each order processed by the per-graph checks.
    pub scanned: Vec<OrderCount>,
    pub checks: Vec<TheoremCheck>,
}

impl VerificationReport {
    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.fail_count).sum()
    }

    pub fn check(&self, id: TheoremId) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.theorem_id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Everything the per-graph checks need about one graph.
pub struct GraphFacts<'a> {
    pub graph: &'a Graph,
    pub connected: bool,
    pub diameter: Option<usize>,
    pub profile: CriticalityProfile,
}

impl<'a> GraphFacts<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        GraphFacts {
            graph,
            connected: graph.is_connected(),
            diameter: graph.diameter(),
            profile: CriticalityProfile::compute(graph),
        }
    }

    fn k(&self) -> usize {
        self.profile.gamma
    }

    fn diam(&self) -> usize {
        self.diameter.expect("connected graphs have a diameter")
    }
}

fn bound_check(diam: usize, bound: usize) -> Outcome {
    Outcome::from_violation(
        (diam > bound).then(|| format!("diameter {diam} exceeds bound {bound}")),
    )
}

fn has_critical_layers(f: &GraphFacts) -> bool {
    let minus = f.profile.partition.minus;
    let Ok(diametrical) = f.graph.diametrical_vertices() else {
        return false;
    };
    diametrical.iter().any(|x| {
        let layers = f.graph.bfs_layers(x);
        let upto3 = (1..=3)
            .filter_map(|i| layers.get(i))
            .fold(VertexSet::EMPTY, |a, l| a.union(*l));
        upto3.is_subset(minus) && layers.get(2).is_some_and(|l| l.len() >= 2)
    })
}

/// Graphs in `{co(mK2), co(mK2 ∪ K3), co((m−1)K2 ∪ P3) : m ≥ 1}`.
pub fn is_weak_two_bicritical_shape(g: &Graph) -> bool {
    match complement_shape(g) {
        Some(s) => match s.extra {
            None => s.k2_count >= 1,
            Some(ExtraComponent::K3) => s.k2_count >= 1,
            Some(ExtraComponent::P3) => true,
        },
        None => false,
    }
}

/// Graphs `co(mK2)`, `m ≥ 1`.
pub fn is_cocktail_party(g: &Graph) -> bool {
    complement_shape(g).is_some_and(|s| s.extra.is_none() && s.k2_count >= 1)
}

/// Evaluates a per-graph check.
pub fn check_graph(id: TheoremId, f: &GraphFacts, budget: u128) -> Result<Outcome> {
    use TheoremId::*;
    let p = &f.profile;
    let k = f.k();
    let connected_nonempty = f.connected && f.graph.order() > 0;
    Ok(match id {
        CriticalDiameterBound => {
            if !(connected_nonempty && p.is_critical && k >= 2) {
                return Ok(Outcome::Skipped);
            }
            bound_check(f.diam(), 2 * k - 2)
        }
        BicriticalDiameterBound => {
            if !(connected_nonempty && p.is_bicritical && k >= 3) {
                return Ok(Outcome::Skipped);
            }
            bound_check(f.diam(), 2 * k - 3)
        }
        WeakBicriticalDiameterBound => {
            if !(connected_nonempty && p.is_weak_bicritical && k >= 2) {
                return Ok(Outcome::Skipped);
            }
            bound_check(f.diam(), 2 * k - 2)
        }
        CriticalExtremal => {
            if !(connected_nonempty && p.is_critical && k >= 2) {
                return Ok(Outcome::Skipped);
            }
            let member = recognize_fk(f.graph).is_some_and(|r| r.params.k() == k);
            extremal_outcome(f.diam(), k, member, "F_k")
        }
        WeakBicriticalExtremal => {
            if !(connected_nonempty && p.is_weak_bicritical && k >= 2) {
                return Ok(Outcome::Skipped);
            }
            let member = recognize_fstar_k(f.graph).is_some_and(|c| c.k() == k);
            extremal_outcome(f.diam(), k, member, "F*_k")
        }
        CriticalLayersBound => {
            if !(connected_nonempty && p.is_weak_bicritical && k >= 3 && has_critical_layers(f)) {
                return Ok(Outcome::Skipped);
            }
            bound_check(f.diam(), 2 * k - 3)
        }
        SufficientPairBound3 | SufficientPairBound4 => {
            let l = if id == SufficientPairBound3 { 3 } else { 4 };
            if !(connected_nonempty && p.is_weak_bicritical && k >= 3) {
                return Ok(Outcome::Skipped);
            }
            let pairs = find_sufficient_pairs(f.graph, l, budget)?;
            let Some(first) = pairs.first() else {
                return Ok(Outcome::Skipped);
            };
            let bound = 2 * k + 1 - l;
            match bound_check(f.diam(), bound) {
                Outcome::Fail(d) => {
                    Outcome::Fail(format!("{d}; pair (x={}, j={})", first.x, first.j))
                }
                o => o,
            }
        }
        NeighborhoodContainment => {
            let pairs = neighborhood_containment_pairs(f.graph);
            if pairs.is_empty() {
                return Ok(Outcome::Skipped);
            }
            Outcome::from_violation(
                pairs
                    .iter()
                    .find(|&&(_, v)| p.partition.minus.contains(v))
                    .map(|(u, v)| format!("N[{u}] ⊆ N[{v}] but {v} is critical")),
            )
        }
        WeakBicriticalMinDegree => {
            if !p.is_weak_bicritical {
                return Ok(Outcome::Skipped);
            }
            Outcome::from_violation(
                f.graph
                    .components()
                    .into_iter()
                    .filter(|c| c.len() >= 3)
                    .flat_map(|c| c.iter())
                    .find(|&v| f.graph.degree(v) < 2)
                    .map(|v| format!("vertex {v} has degree {}", f.graph.degree(v))),
            )
        }
        WeakTwoBicriticalShapes => {
            let wb2 = p.is_weak_bicritical && k == 2;
            let shape = is_weak_two_bicritical_shape(f.graph);
            let crit2 = p.is_critical && k == 2;
            let cocktail = is_cocktail_party(f.graph);
            Outcome::from_violation(if wb2 != shape {
                Some(format!(
                    "weak 2-bicritical = {wb2}, complement shape = {shape}"
                ))
            } else if crit2 != cocktail {
                Some(format!("2-critical = {crit2}, cocktail party = {cocktail}"))
            } else {
                None
            })
        }
        WeakBicriticalComponents => {
            if !(p.is_weak_bicritical && !f.connected) {
                return Ok(Outcome::Skipped);
            }
            let comps = f.graph.components();
            let bad = comps
                .iter()
                .find(|&&c| !weak_bicritical_within(f.graph, c, &Exact));
            let non_critical = comps
                .iter()
                .filter(|&&c| !critical_within(f.graph, c, &Exact))
                .count();
            Outcome::from_violation(if let Some(c) = bad {
                Some(format!("component {c} is not weak bicritical"))
            } else if non_critical > 1 {
                Some(format!("{non_critical} components are not critical"))
            } else {
                None
            })
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "{id} is not a per-graph check"
            )));
        }
    })
}

fn extremal_outcome(diam: usize, k: usize, member: bool, family: &str) -> Outcome {
    let bound = 2 * k - 2;
    Outcome::from_violation(if diam > bound {
        Some(format!("diameter {diam} exceeds bound {bound}"))
    } else if (diam == bound) != member {
        Some(format!(
            "diameter {diam} (bound {bound}) but {family} membership is {member}"
        ))
    } else {
        None
    })
}

/// γ, vertex classes and weak bicriticality, without the pair deletions.
struct BasicFacts {
    gamma: usize,
    minus: VertexSet,
    critical: bool,
    weak_bicritical: bool,
}

impl BasicFacts {
    fn new(g: &Graph) -> Self {
        let alive = g.vertices();
        let gamma = Exact.gamma_within(g, alive);
        let mut minus = VertexSet::EMPTY;
        let mut weak_bicritical = true;
        for x in alive {
            let rest = alive.without(x);
            let after = Exact.gamma_within(g, rest);
            if after < gamma {
                minus.insert(x);
            } else if after > gamma || !critical_within(g, rest, &Exact) {
                weak_bicritical = false;
            }
        }
        BasicFacts {
            gamma,
            minus,
            critical: minus == alive,
            weak_bicritical,
        }
    }
}

struct PairFacts {
    h1: Graph,
    h2: Graph,
    f1: BasicFacts,
    f2: BasicFacts,
}

impl PairFacts {
    fn new(h1: Graph, h2: Graph) -> Self {
        let f1 = BasicFacts::new(&h1);
        let f2 = BasicFacts::new(&h2);
        PairFacts { h1, h2, f1, f2 }
    }
}

fn check_coalescence_with(
    ids: &[TheoremId],
    pf: &PairFacts,
    x1: usize,
    x2: usize,
) -> Result<Vec<Outcome>> {
    if x1 >= pf.h1.order() || x2 >= pf.h2.order() {
        return Err(Error::InvalidParameter("attach vertex out of range".into()));
    }
    if pf.h1.is_isolated(x1) || pf.h2.is_isolated(x2) {
        return Ok(vec![Outcome::Skipped; ids.len()]);
    }
    let c = coalesce(&pf.h1, x1, &pf.h2, x2)?;
    let g = BasicFacts::new(&c.graph);
    let (f1, f2) = (&pf.f1, &pf.f2);
    let c1 = f1.critical && f2.weak_bicritical && f2.minus.contains(x2);
    let c2 = f2.critical && f1.weak_bicritical && f1.minus.contains(x1);
    let low = f1.gamma + f2.gamma - 1;
    let crit1 = f1.minus.contains(x1);
    let crit2 = f2.minus.contains(x2);
    ids.iter()
        .map(|&id| {
            Ok(match id {
                TheoremId::CoalescenceNecessary => {
                    if !g.weak_bicritical {
                        Outcome::Skipped
                    } else if !(c1 || c2) {
                        Outcome::Fail(
                            "weak bicritical but neither side satisfies the conditions".into(),
                        )
                    } else if g.gamma != low {
                        Outcome::Fail(format!("γ(G) = {} but γ(H1) + γ(H2) − 1 = {low}", g.gamma))
                    } else {
                        Outcome::Pass
                    }
                }
                TheoremId::CoalescenceSufficient => {
                    if !(c1 || c2) {
                        Outcome::Skipped
                    } else {
                        Outcome::from_violation(
                            (!g.weak_bicritical).then(|| {
                                "conditions hold but G is not weak bicritical".to_string()
                            }),
                        )
                    }
                }
                TheoremId::CoalescenceGamma => {
                    Outcome::from_violation(if g.gamma < low || g.gamma > low + 1 {
                        Some(format!("γ(G) = {} outside [{low}, {}]", g.gamma, low + 1))
                    } else if (crit1 || crit2) && g.gamma != low {
                        Some(format!(
                            "attach vertex critical but γ(G) = {} ≠ {low}",
                            g.gamma
                        ))
                    } else {
                        None
                    })
                }
                TheoremId::CoalescenceCriticalVertices => {
                    if !(crit1 && crit2) {
                        Outcome::Skipped
                    } else {
                        let expected: VertexSet = f1
                            .minus
                            .without(x1)
                            .iter()
                            .map(|v| c.map1[v])
                            .chain(f2.minus.without(x2).iter().map(|v| c.map2[v]))
                            .chain([c.merged_vertex])
                            .collect();
                        Outcome::from_violation(if g.minus != expected {
                            Some(format!("V⁻(G) = {} but the parts give {expected}", g.minus))
                        } else if g.critical != (f1.critical && f2.critical) {
                            Some(format!(
                                "G critical = {}, H1 critical = {}, H2 critical = {}",
                                g.critical, f1.critical, f2.critical
                            ))
                        } else {
                            None
                        })
                    }
                }
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "{id} is not a coalescence check"
                    )))
                }
            })
        })
        .collect()
}

/// Evaluates a coalescence check on `(H1 • H2)(x1, x2)`.
pub fn check_coalescence(
    id: TheoremId,
    h1: &Graph,
    x1: usize,
    h2: &Graph,
    x2: usize,
) -> Result<Outcome> {
    let pf = PairFacts::new(h1.clone(), h2.clone());
    Ok(check_coalescence_with(&[id], &pf, x1, x2)?.remove(0))
}

/// Evaluates a family-member check. `family` says which family the graph was
/// generated in.
pub fn check_family_member(
    id: TheoremId,
    g: &Graph,
    k: usize,
    family: FamilyTag,
) -> Result<Outcome> {
    if !g.is_connected() || g.order() == 0 {
        return Ok(Outcome::Fail("family member is not connected".into()));
    }
    let p = CriticalityProfile::compute(g);
    let diam = g.diameter().expect("connected");
    let mut problems = Vec::new();
    if p.gamma != k {
        problems.push(format!("γ = {} ≠ {k}", p.gamma));
    }
    if diam != 2 * k - 2 {
        problems.push(format!("diameter {diam} ≠ {}", 2 * k - 2));
    }
    if p.is_bicritical {
        problems.push("bicritical".to_string());
    }
    match (id, family) {
        (TheoremId::ChainFamilyFacts, FamilyTag::Fk) => {
            if !p.is_critical {
                problems.push("not critical".to_string());
            }
        }
        (TheoremId::ChainFamilyFacts, FamilyTag::Fstar) => return Ok(Outcome::Skipped),
        (TheoremId::ExtremalFamilyFacts, _) | (TheoremId::TwinFamilyFacts, _) => {
            if !p.is_weak_bicritical {
                problems.push("not weak bicritical".to_string());
            }
            let in_fk = recognize_fk(g).is_some_and(|r| r.params.k() == k);
            if p.is_critical && !in_fk {
                problems.push("critical but not in F_k".to_string());
            }
            if identifiable_in(g, k).is_empty() {
                problems.push("no identifiable vertex".to_string());
            }
            if id == TheoremId::TwinFamilyFacts && !recognize_fstar_k(g).is_some_and(|c| c.k() == k)
            {
                problems.push("not recognized in F*_k".to_string());
            }
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "{id} is not a family check"
            )))
        }
    }
    Ok(if problems.is_empty() {
        Outcome::Pass
    } else {
        Outcome::Fail(problems.join("; "))
    })
}

/// Whether `g` is a gluing of an `F_{k1}` member and an `F_{k2}` member at
/// diametrical vertices of both.
pub fn is_diametrical_chain_gluing(g: &Graph, k1: usize, k2: usize) -> bool {
    let Ok(cuts) = g.cut_vertices() else {
        return false;
    };
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
            let fits = |part: VertexSet, want: usize| {
                let h = g.induced(part.with(x));
                let xi = h.original.iter().position(|&v| v == x).expect("x kept");
                recognize_fk(&h.graph).is_some_and(|r| r.params.k() == want)
                    && h.graph.diametrical_vertices().is_ok_and(|d| d.contains(xi))
            };
            if fits(side, k1) && fits(rest.difference(side), k2) {
                return true;
            }
        }
    }
    false
}

/// Evaluates the chain-gluing check: membership in `F_k` must coincide with
/// being a diametrical gluing of `F_{k1}` and `F_{k+1-k1}` members.
pub fn check_gluing(g: &Graph, k: usize, k1: usize) -> Outcome {
    let in_fk = recognize_fk(g).is_some_and(|r| r.params.k() == k);
    let glued = is_diametrical_chain_gluing(g, k1, k + 1 - k1);
    Outcome::from_violation((in_fk != glued).then(|| {
        format!(
            "F_{k} membership = {in_fk}, gluing of F_{k1} and F_{} = {glued}",
            k + 1 - k1
        )
    }))
}

/// Re-runs the check that produced a counterexample; true when the
/// violation reproduces.
pub fn recheck(id: TheoremId, cx: &Counterexample, budget: u128) -> Result<bool> {
    let outcome = match &cx.subject {
        Subject::Graph { graph } => check_graph(id, &GraphFacts::new(graph), budget)?,
        Subject::Coalescence { h1, x1, h2, x2 } => check_coalescence(id, h1, *x1, h2, *x2)?,
        Subject::FamilyMember { graph, k, family } => check_family_member(id, graph, *k, *family)?,
        Subject::Gluing { graph, k, k1 } => check_gluing(graph, *k, *k1),
    };
    Ok(outcome.is_fail())
}

fn random_connected(rng: &mut ChaCha8Rng) -> Graph {
    loop {
        let n = rng.random_range(2..=6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("valid edges");
        if g.is_connected() {
            return g;
        }
    }
}

/// The random coalescence sweep: each side is drawn half the time from the
/// connected weak bicritical graphs of order 2..=6 (so the conditions are
/// met often enough to matter) and otherwise is a random connected graph.
pub fn sweep_pairs(seed: u64, count: usize, exec: Execution) -> Result<Vec<(Graph, Graph)>> {
    let pool: Vec<Graph> = graphs_by_order(6, true, exec)?
        .into_iter()
        .skip(2)
        .flatten()
        .filter(|g| BasicFacts::new(g).weak_bicritical)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        if rng.random_bool(0.5) {
            pool[rng.random_range(0..pool.len())].clone()
        } else {
            random_connected(rng)
        }
    };
    Ok((0..count)
        .map(|_| {
            let a = draw(&mut rng);
            let b = draw(&mut rng);
            (a, b)
        })
        .collect())
}

fn scan_graphs(config: &ScanConfig, family_max_k: usize, exec: Execution) -> Result<Vec<Graph>> {
    Ok(match &config.source {
        ScanSource::EnumeratedAll => {
            if config.n_max > MAX_ENUMERATION_ORDER {
                return Err(Error::OrderCapExceeded {
                    requested: config.n_max,
                    cap: MAX_ENUMERATION_ORDER,
                });
            }
            graphs_by_order(config.n_max, config.connected_only, exec)?
                .into_iter()
                .flatten()
                .collect()
        }
        ScanSource::FamilyGenerated => {
            let mut all: BTreeMap<(usize, CanonicalForm), Graph> = BTreeMap::new();
            for k in 2..=family_max_k {
                for inst in enumerate_fstar_k(k, config.n_max) {
                    all.entry((inst.graph.order(), inst.graph.canonical_form()))
                        .or_insert(inst.graph);
                }
            }
            all.into_values().collect()
        }
        ScanSource::File(graphs) => graphs
            .iter()
            .filter(|g| !config.connected_only || g.is_connected())
            .cloned()
            .collect(),
    })
}

fn family_members(config: &VerifyConfig) -> Vec<(Graph, usize, FamilyTag)> {
    let mut out = Vec::new();
    for k in 2..=config.family_max_k {
        out.extend(
            enumerate_fk(k, config.fk_max_order)
                .into_iter()
                .map(|i| (i.graph, k, FamilyTag::Fk)),
        );
    }
    for k in 2..=config.family_max_k {
        out.extend(
            enumerate_fstar_k(k, config.fstar_max_order)
                .into_iter()
                .map(|i| (i.graph, k, FamilyTag::Fstar)),
        );
    }
    out
}

fn twin_members() -> Vec<Graph> {
    let mut out = Vec::new();
    for m1 in 2..=4 {
        for m2 in 2..=4 {
            for variant in [Fpp3Variant::NonAdjacentTwin, Fpp3Variant::AdjacentTwin] {
                out.push(build_fpp3(m1, m2, variant).expect("valid parameters").graph);
            }
        }
    }
    out
}

/// `F_k` members and all diametrical gluings of smaller chains, per split.
fn gluing_subjects(config: &VerifyConfig) -> Vec<(Graph, usize, usize)> {
    let max = config.fstar_max_order;
    let mut out = Vec::new();
    for k in 3..=config.family_max_k {
        for k1 in 2..k {
            let k2 = k + 1 - k1;
            let mut seen: BTreeMap<(usize, CanonicalForm), Graph> = BTreeMap::new();
            for inst in enumerate_fk(k, max) {
                seen.entry((inst.graph.order(), inst.graph.canonical_form()))
                    .or_insert(inst.graph);
            }
            for a in enumerate_fk(k1, max) {
                for b in enumerate_fk(k2, max) {
                    if a.graph.order() + b.graph.order() - 1 > max {
                        continue;
                    }
                    let da = a.graph.diametrical_vertices().expect("connected");
                    let db = b.graph.diametrical_vertices().expect("connected");
                    for x1 in da {
                        for x2 in db {
                            let g = coalesce(&a.graph, x1, &b.graph, x2).expect("fits").graph;
                            seen.entry((g.order(), g.canonical_form())).or_insert(g);
                        }
                    }
                }
            }
            out.extend(seen.into_values().map(|g| (g, k, k1)));
        }
    }
    out
}

fn aggregate<S: Sync>(
    ids: &[TheoremId],
    items: &[S],
    exec: Execution,
    eval: impl Fn(&S) -> Result<Vec<Vec<(Outcome, Subject)>>> + Sync + Send,
) -> Result<Vec<TheoremCheck>> {
    let mut checks: Vec<TheoremCheck> = ids.iter().map(|&id| TheoremCheck::new(id)).collect();
    for per_item in exec.map(items, eval) {
        for rows in per_item? {
            for (check, (outcome, subject)) in checks.iter_mut().zip(rows) {
                check.record(outcome, || subject);
            }
        }
    }
    Ok(checks)
}

/// Runs the selected checks. Deterministic for a given configuration.
pub fn run(config: &VerifyConfig) -> Result<VerificationReport> {
    let exec = config.execution;
    let mut ids = config.theorems.clone();
    ids.sort();
    ids.dedup();
    let of_kind = |kind: CheckKind| -> Vec<TheoremId> {
        ids.iter().copied().filter(|id| id.kind() == kind).collect()
    };
    let mut checks = Vec::new();
    let mut scanned = Vec::new();

    let graph_ids = of_kind(CheckKind::Graph);
    if !graph_ids.is_empty() {
        let graphs = scan_graphs(&config.scan, config.family_max_k, exec)?;
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for g in &graphs {
            *counts.entry(g.order()).or_default() += 1;
        }
        scanned = counts
            .into_iter()
            .map(|(order, count)| OrderCount { order, count })
            .collect();
        checks.extend(aggregate(&graph_ids, &graphs, exec, |g| {
            let facts = GraphFacts::new(g);
            let row = graph_ids
                .iter()
                .map(|&id| {
                    Ok((
                        check_graph(id, &facts, config.budget)?,
                        Subject::Graph { graph: g.clone() },
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(vec![row])
        })?);
    }

    let pair_ids = of_kind(CheckKind::Coalescence);
    if !pair_ids.is_empty() {
        let pairs = sweep_pairs(config.seed, config.sweep_pairs, exec)?;
        checks.extend(aggregate(&pair_ids, &pairs, exec, |(h1, h2)| {
            let pf = PairFacts::new(h1.clone(), h2.clone());
            let mut rows = Vec::new();
            for x1 in 0..h1.order() {
                for x2 in 0..h2.order() {
                    let outcomes = check_coalescence_with(&pair_ids, &pf, x1, x2)?;
                    rows.push(
                        outcomes
                            .into_iter()
                            .map(|o| {
                                let subject = Subject::Coalescence {
                                    h1: h1.clone(),
                                    x1,
                                    h2: h2.clone(),
                                    x2,
                                };
                                (o, subject)
                            })
                            .collect(),
                    );
                }
            }
            Ok(rows)
        })?);
    }

    let family_ids = of_kind(CheckKind::Family);
    if !family_ids.is_empty() {
        let mut members = family_members(config);
        let twins_from = members.len();
        members.extend(twin_members().into_iter().map(|g| (g, 3, FamilyTag::Fstar)));
        let indexed: Vec<(usize, &(Graph, usize, FamilyTag))> =
            members.iter().enumerate().collect();
        checks.extend(aggregate(
            &family_ids,
            &indexed,
            exec,
            |&(i, (g, k, family))| {
                let is_twin = i >= twins_from;
                let row = family_ids
                    .iter()
                    .map(|&id| {
                        let outcome = match id {
                            TheoremId::TwinFamilyFacts if !is_twin => Outcome::Skipped,
                            TheoremId::ChainFamilyFacts | TheoremId::ExtremalFamilyFacts
                                if is_twin =>
                            {
                                Outcome::Skipped
                            }
                            _ => check_family_member(id, g, *k, *family)?,
                        };
                        let subject = Subject::FamilyMember {
                            graph: g.clone(),
                            k: *k,
                            family: *family,
                        };
                        Ok((outcome, subject))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(vec![row])
            },
        )?);
    }

    if ids.contains(&TheoremId::ChainGluing) {
        let subjects = gluing_subjects(config);
        checks.extend(aggregate(
            &[TheoremId::ChainGluing],
            &subjects,
            exec,
            |(g, k, k1)| {
                let subject = Subject::Gluing {
                    graph: g.clone(),
                    k: *k,
                    k1: *k1,
                };
                Ok(vec![vec![(check_gluing(g, *k, *k1), subject)]])
            },
        )?);
    }

    if ids.contains(&TheoremId::BicriticalConstructions) {
        checks.push(TheoremCheck::new(TheoremId::BicriticalConstructions));
    }

    let mut checks: Vec<TheoremCheck> = checks.into_iter().map(TheoremCheck::finish).collect();
    checks.sort_by_key(|c| c.theorem_id);
    Ok(VerificationReport {
        config: config.clone(),
        scanned,
        checks,
    })
}
