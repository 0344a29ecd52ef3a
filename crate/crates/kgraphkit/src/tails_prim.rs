//! Maximal tails of the vertex set, the periodicity verdict of the
//! subgraph each tail spans, and the catalogue of primitive-ideal data
//! those subgraphs induce.

use std::collections::BTreeSet;

use crate::budget::BudgetConfig;
use crate::error::Result;
use crate::ideals::{
    absorbed_by_paths, classify_subset, downstream, enumerate_hs_lattice, subgraph_remove,
    VertexSet,
};
use crate::periodicity::{aperiodicity, h_per, per_group, PerGroupResult, PeriodicityVerdict};
use crate::skeleton::KGraph;

/// Cap on the hereditary saturated lattice size during enumeration.
pub const LATTICE_CAP: usize = 4096;

/// A maximal tail: a nonempty vertex set that is closed upstream, loses no
/// member to a path-family saturation step over its complement (checked up
/// to the recorded bound), and has pairwise common downstreams inside
/// itself. Recorded with its complement, which is hereditary and saturated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalTail {
    pub members: VertexSet,
    pub complement: VertexSet,
    /// The extent bound used for the absorption check.
    pub checked_bound: Vec<u32>,
}

/// Enumerates the maximal tails by testing each complement of a hereditary
/// saturated set.
///
/// Upstream closure is automatic for such complements. The absorption
/// condition is checked through whole maximal path families up to the
/// budget's saturation bound, which strengthens the single-color
/// saturation the complement already satisfies. The common-downstream
/// condition requires the meeting vertex to lie inside the tail itself.
pub fn maximal_tails(g: &KGraph, budget: &BudgetConfig) -> Result<Vec<MaximalTail>> {
    let lattice = enumerate_hs_lattice(g, LATTICE_CAP)?;
    let down: Vec<VertexSet> = (0..g.vertex_count()).map(|v| downstream(g, v)).collect();
    let bound = &budget.saturation_bound;
    let mut out = Vec::new();
    for h in &lattice.elements {
        let members: VertexSet = (0..g.vertex_count()).filter(|v| !h.contains(v)).collect();
        if members.is_empty() {
            continue;
        }
        let report = classify_subset(g, h);
        debug_assert!(report.hereditary && report.saturated);
        let mut absorbed = false;
        for &v in &members {
            if absorbed_by_paths(g, v, h, bound)? {
                absorbed = true;
                break;
            }
        }
        if absorbed {
            continue;
        }
        let mut pairwise = true;
        'pairs: for &v in &members {
            for &w in &members {
                if w < v {
                    continue;
                }
                if !down[v]
                    .intersection(&down[w])
                    .any(|z| members.contains(z))
                {
                    pairwise = false;
                    break 'pairs;
                }
            }
        }
        if !pairwise {
            continue;
        }
        out.push(MaximalTail {
            members,
            complement: h.clone(),
            checked_bound: bound.clone(),
        });
    }
    out.sort_by(|a, b| {
        (a.members.len(), &a.members).cmp(&(b.members.len(), &b.members))
    });
    Ok(out)
}

/// A maximal tail together with the periodicity verdict of the subgraph it
/// spans, the witness pair rendered in that subgraph's identifiers when
/// periodic.
#[derive(Debug, Clone)]
pub struct TailVerdict {
    pub tail: MaximalTail,
    pub verdict: PeriodicityVerdict,
    pub witness: Option<(String, String)>,
}

/// Runs the aperiodicity decision on the subgraph spanned by each maximal
/// tail.
pub fn aperiodic_tails(g: &KGraph, budget: &BudgetConfig) -> Result<Vec<TailVerdict>> {
    let mut out = Vec::new();
    for tail in maximal_tails(g, budget)? {
        let sub = subgraph_remove(g, &tail.complement)?;
        let verdict = aperiodicity(&sub, budget)?;
        let witness = match &verdict {
            PeriodicityVerdict::Periodic(mu, nu) => {
                Some((sub.path_string(mu), sub.path_string(nu)))
            }
            _ => None,
        };
        out.push(TailVerdict {
            tail,
            verdict,
            witness,
        });
    }
    Ok(out)
}

/// A relation sample: two equivalent paths of the tail subgraph whose range
/// lies where periodicity is uniform, with the sampled character's phase on
/// their degree difference as a rational multiple of a full turn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseRelation {
    pub mu: String,
    pub nu: String,
    pub phase: (i64, i64),
}

/// Catalogue record for one maximal tail: the periodicity subgroup of its
/// subgraph, the rank of the character torus, a sampled character (the
/// trivial one), the vertex projections generating the associated ideal,
/// and sampled relations with their phases.
#[derive(Debug, Clone)]
pub struct PrimIdeal {
    pub tail: MaximalTail,
    pub per: PerGroupResult,
    pub character_rank: usize,
    /// One rational per subgroup generator; the trivial sample assigns 0/1.
    pub sample_character: Vec<(i64, i64)>,
    /// Vertex projections of the complement, which generate the ideal.
    pub generator_description: Vec<String>,
    /// Vertices of the tail subgraph at which periodicity is uniform,
    /// rendered as labels, with the exactness of that computation.
    pub uniform_vertices: BTreeSet<String>,
    pub uniform_exact: bool,
    pub relations: Vec<PhaseRelation>,
}

const RELATION_CAP: usize = 16;

/// Builds the primitive-ideal catalogue: one record per maximal tail.
pub fn prim_catalogue(g: &KGraph, budget: &BudgetConfig) -> Result<Vec<PrimIdeal>> {
    let mut out = Vec::new();
    for tail in maximal_tails(g, budget)? {
        let sub = subgraph_remove(g, &tail.complement)?;
        let per = per_group(&sub, budget)?;
        let uniform = h_per(&sub, &per.subgroup, budget)?;
        let character_rank = per.subgroup.rank();
        let sample_character = vec![(0i64, 1i64); character_rank];
        let generator_description = tail
            .complement
            .iter()
            .map(|&v| format!("s_{}", g.vertex_id(v)))
            .collect();
        let relations = per
            .yes_pairs
            .iter()
            .filter(|(mu, _)| uniform.vertices.contains(&mu.range))
            .take(RELATION_CAP)
            .map(|(mu, nu)| PhaseRelation {
                mu: sub.path_string(mu),
                nu: sub.path_string(nu),
                phase: (0, 1),
            })
            .collect();
        let uniform_vertices = uniform
            .vertices
            .iter()
            .map(|&v| sub.vertex_id(v).to_string())
            .collect();
        out.push(PrimIdeal {
            tail,
            character_rank,
            sample_character,
            generator_description,
            uniform_vertices,
            uniform_exact: uniform.exact,
            relations,
            per,
        });
    }
    Ok(out)
}

/// Classification flags for one catalogue record.
#[derive(Debug, Clone)]
pub struct PrimRecordClass {
    pub tail: MaximalTail,
    pub verdict: PeriodicityVerdict,
    /// The tail subgraph is certified aperiodic, so the ideal is decided by
    /// its vertex set alone.
    pub gauge_invariant: bool,
    /// The tail is minimal among maximal tails, which suffices for the
    /// corresponding ideal to be maximal.
    pub maximal_ideal: bool,
}

/// Graph-level and per-record classification of the catalogue.
#[derive(Debug, Clone)]
pub struct PrimClassification {
    pub records: Vec<PrimRecordClass>,
    /// The hereditary saturated lattice is trivial.
    pub cofinal_graph: bool,
    /// Every quotient by a proper lattice element is certified aperiodic.
    pub strongly_aperiodic: bool,
}

pub fn classify_prim(g: &KGraph, budget: &BudgetConfig) -> Result<PrimClassification> {
    let verdicts = aperiodic_tails(g, budget)?;
    let mut records = Vec::new();
    for tv in &verdicts {
        let minimal = !verdicts.iter().any(|other| {
            other.tail.members.len() < tv.tail.members.len()
                && other.tail.members.is_subset(&tv.tail.members)
        });
        records.push(PrimRecordClass {
            tail: tv.tail.clone(),
            verdict: tv.verdict.clone(),
            gauge_invariant: matches!(tv.verdict, PeriodicityVerdict::Aperiodic),
            maximal_ideal: minimal,
        });
    }
    let lattice = enumerate_hs_lattice(g, LATTICE_CAP)?;
    let cofinal_graph = lattice.elements.len() <= 2;
    let mut strongly_aperiodic = true;
    for h in &lattice.elements {
        if h.len() == g.vertex_count() {
            continue;
        }
        let sub = subgraph_remove(g, h)?;
        if aperiodicity(&sub, budget)? != PeriodicityVerdict::Aperiodic {
            strongly_aperiodic = false;
            break;
        }
    }
    Ok(PrimClassification {
        records,
        cofinal_graph,
        strongly_aperiodic,
    })
}
