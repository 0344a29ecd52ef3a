//! Hereditary and saturated vertex sets, the lattice they form, and the
//! subgraphs they induce.

use std::collections::BTreeSet;

use crate::degree::DegreeVector;
use crate::error::{Error, Result};
use crate::skeleton::{KGraph, KGraphSpec};

pub type VertexSet = BTreeSet<usize>;

/// Smallest downstream-closed superset: follow edges from range to source.
pub fn hereditary_closure(g: &KGraph, seed: &VertexSet) -> VertexSet {
    let mut set = seed.clone();
    let mut stack: Vec<usize> = set.iter().copied().collect();
    while let Some(v) = stack.pop() {
        for c in 0..g.rank() {
            for &e in g.out_edges(v, c) {
                let s = g.edge(e).source;
                if set.insert(s) {
                    stack.push(s);
                }
            }
        }
    }
    set
}

/// Vertices reachable from `v`, including `v`.
pub fn downstream(g: &KGraph, v: usize) -> VertexSet {
    let mut seed = VertexSet::new();
    seed.insert(v);
    hereditary_closure(g, &seed)
}

/// Witnessed classification of a vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetReport {
    pub hereditary: bool,
    pub saturated: bool,
    /// Edge leaving the set from inside, when not hereditary.
    pub hereditary_witness: Option<String>,
    /// Vertex outside the set forced in by saturation, when not saturated.
    pub saturation_witness: Option<String>,
}

/// A set is saturated when it absorbs every vertex all of whose
/// continuations in some available color land in the set.
fn saturation_violation(g: &KGraph, set: &VertexSet) -> Option<usize> {
    for v in 0..g.vertex_count() {
        if set.contains(&v) {
            continue;
        }
        for c in 0..g.rank() {
            let es = g.out_edges(v, c);
            if !es.is_empty() && es.iter().all(|&e| set.contains(&g.edge(e).source)) {
                return Some(v);
            }
        }
    }
    None
}

pub fn classify_subset(g: &KGraph, set: &VertexSet) -> SubsetReport {
    let mut hereditary_witness = None;
    'outer: for &v in set {
        for c in 0..g.rank() {
            for &e in g.out_edges(v, c) {
                if !set.contains(&g.edge(e).source) {
                    hereditary_witness = Some(g.edge(e).id.clone());
                    break 'outer;
                }
            }
        }
    }
    let saturation_witness =
        saturation_violation(g, set).map(|v| g.vertex_id(v).to_string());
    SubsetReport {
        hereditary: hereditary_witness.is_none(),
        saturated: saturation_witness.is_none(),
        hereditary_witness,
        saturation_witness,
    }
}

/// Single-color fixpoint saturation: repeatedly add any vertex that has an
/// available color whose every continuation lands in the set.
pub fn saturate(g: &KGraph, set: &VertexSet) -> VertexSet {
    let mut set = set.clone();
    loop {
        match saturation_violation(g, &set) {
            Some(v) => {
                set.insert(v);
            }
            None => return set,
        }
    }
}

/// Whether one path-family saturation step over `set` absorbs `v`: some
/// nonzero extent within `bound` has a nonempty family of maximal paths
/// from `v` whose sources all lie in `set`.
pub fn absorbed_by_paths(g: &KGraph, v: usize, set: &VertexSet, bound: &[u32]) -> Result<bool> {
    if bound.len() != g.rank() {
        return Err(Error::BadDegree {
            expected: g.rank(),
            got: bound.len(),
        });
    }
    for n in DegreeVector(bound.to_vec()).box_iter() {
        if n.is_zero() {
            continue;
        }
        let family = g.le_paths(v, &n)?;
        if !family.is_empty() && family.iter().all(|p| set.contains(&p.source)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Saturation driven by whole maximal path families instead of single
/// colors: adds v when the sources of all maximal paths from v of extent at
/// most n lie in the set, for some n up to `bound`. Agrees with `saturate`
/// on locally convex graphs; exposed as a cross-check.
pub fn saturate_via_paths(g: &KGraph, set: &VertexSet, bound: &[u32]) -> Result<VertexSet> {
    if bound.len() != g.rank() {
        return Err(Error::BadDegree {
            expected: g.rank(),
            got: bound.len(),
        });
    }
    let mut set = set.clone();
    loop {
        let mut grew = false;
        for v in 0..g.vertex_count() {
            if !set.contains(&v) && absorbed_by_paths(g, v, &set, bound)? {
                set.insert(v);
                grew = true;
            }
        }
        if !grew {
            return Ok(set);
        }
    }
}

/// Lattice of hereditary saturated vertex sets. Meets are intersections;
/// joins saturate the union. Elements are sorted by size then content.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    pub elements: Vec<VertexSet>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
}

impl IdealLattice {
    pub fn index_of(&self, set: &VertexSet) -> Option<usize> {
        self.elements.iter().position(|e| e == set)
    }
}

/// Every hereditary saturated set is a join of saturated downstream cones,
/// so closing the cone generators under joins enumerates the lattice.
pub fn enumerate_hs_lattice(g: &KGraph, cap: usize) -> Result<IdealLattice> {
    let mut generators: Vec<VertexSet> = Vec::new();
    for v in 0..g.vertex_count() {
        let cone = saturate(g, &downstream(g, v));
        if !generators.contains(&cone) {
            generators.push(cone);
        }
    }
    let mut elements: BTreeSet<VertexSet> = BTreeSet::new();
    elements.insert(VertexSet::new());
    let mut work: Vec<VertexSet> = vec![VertexSet::new()];
    while let Some(x) = work.pop() {
        for gen in &generators {
            let mut u = x.clone();
            u.extend(gen.iter().copied());
            let joined = saturate(g, &u);
            if elements.insert(joined.clone()) {
                if elements.len() > cap {
                    return Err(Error::TooLarge(format!(
                        "hereditary saturated lattice exceeds cap {cap}"
                    )));
                }
                work.push(joined);
            }
        }
    }
    let mut elements: Vec<VertexSet> = elements.into_iter().collect();
    elements.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));
    let n = elements.len();
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let inter: VertexSet = elements[i].intersection(&elements[j]).copied().collect();
            meet[i][j] = elements
                .iter()
                .position(|e| *e == inter)
                .ok_or_else(|| Error::Precondition("meet escaped the lattice".into()))?;
            let mut u = elements[i].clone();
            u.extend(elements[j].iter().copied());
            let jn = saturate(g, &u);
            join[i][j] = elements
                .iter()
                .position(|e| *e == jn)
                .ok_or_else(|| Error::Precondition("join escaped the lattice".into()))?;
        }
    }
    Ok(IdealLattice {
        elements,
        meet,
        join,
    })
}

/// The subgraph on the complement of a hereditary set: keeps vertices
/// outside the set and edges whose source stays outside. For hereditary
/// saturated sets this preserves validity and local convexity.
pub fn subgraph_remove(g: &KGraph, set: &VertexSet) -> Result<KGraph> {
    let report = classify_subset(g, set);
    if !report.hereditary {
        return Err(Error::NotHereditary(report.hereditary_witness.unwrap()));
    }
    let keep_v: Vec<bool> = (0..g.vertex_count()).map(|v| !set.contains(&v)).collect();
    filter_graph(g, &keep_v)
}

/// The subgraph on a hereditary set: every edge from inside stays inside.
pub fn subgraph_restrict(g: &KGraph, set: &VertexSet) -> Result<KGraph> {
    let report = classify_subset(g, set);
    if !report.hereditary {
        return Err(Error::NotHereditary(report.hereditary_witness.unwrap()));
    }
    let keep_v: Vec<bool> = (0..g.vertex_count()).map(|v| set.contains(&v)).collect();
    filter_graph(g, &keep_v)
}

/// Vertex-induced subgraph: keeps flagged vertices, edges between them, and
/// squares whose four edges survive.
pub(crate) fn filter_graph(g: &KGraph, keep_v: &[bool]) -> Result<KGraph> {
    let spec = g.spec();
    let kept_edge = |id: &str| {
        let e = g.edge(g.edge_idx(id).expect("edge from own spec"));
        keep_v[e.range] && keep_v[e.source]
    };
    let filtered = KGraphSpec {
        rank: spec.rank,
        vertices: spec
            .vertices
            .into_iter()
            .filter(|v| keep_v[g.vertex_idx(v).expect("vertex from own spec")])
            .collect(),
        edges: spec
            .edges
            .into_iter()
            .filter(|e| kept_edge(&e.id))
            .collect(),
        squares: spec
            .squares
            .into_iter()
            .filter(|s| kept_edge(&s.f) && kept_edge(&s.g) && kept_edge(&s.g2) && kept_edge(&s.f2))
            .collect(),
    };
    KGraph::build(&filtered)
}

/// A graph is cofinal when every vertex reaches every boundary path. For
/// finite locally convex row-finite graphs this holds exactly when the
/// hereditary saturated lattice is trivial: a vertex set missing some
/// boundary path is a proper nontrivial hereditary saturated set, and
/// conversely the complement of a proper nontrivial one carries a boundary
/// path no inside vertex reaches.
pub fn is_cofinal_graph(g: &KGraph, cap: usize) -> Result<bool> {
    Ok(enumerate_hs_lattice(g, cap)?.elements.len() <= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skeleton::{omega_graph, EdgeSpec};

    fn vs(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    /// v carries a loop and an edge down to w, which carries a loop.
    fn loop_to_loop() -> KGraph {
        KGraph::build(&KGraphSpec {
            rank: 1,
            vertices: vec!["v".into(), "w".into()],
            edges: vec![
                EdgeSpec {
                    id: "e".into(),
                    color: 0,
                    range: "v".into(),
                    source: "v".into(),
                },
                EdgeSpec {
                    id: "m".into(),
                    color: 0,
                    range: "v".into(),
                    source: "w".into(),
                },
                EdgeSpec {
                    id: "f".into(),
                    color: 0,
                    range: "w".into(),
                    source: "w".into(),
                },
            ],
            squares: vec![],
        })
        .unwrap()
    }

    fn two_isolated_loops() -> KGraph {
        KGraph::build(&KGraphSpec {
            rank: 1,
            vertices: vec!["p".into(), "q".into()],
            edges: vec![
                EdgeSpec {
                    id: "e".into(),
                    color: 0,
                    range: "p".into(),
                    source: "p".into(),
                },
                EdgeSpec {
                    id: "h".into(),
                    color: 0,
                    range: "q".into(),
                    source: "q".into(),
                },
            ],
            squares: vec![],
        })
        .unwrap()
    }

    #[test]
    fn closures_follow_arrows() {
        let g = loop_to_loop();
        let v = g.vertex_idx("v").unwrap();
        let w = g.vertex_idx("w").unwrap();
        assert_eq!(downstream(&g, v), vs(&[v, w]));
        assert_eq!(downstream(&g, w), vs(&[w]));
    }

    #[test]
    fn classification_with_witnesses() {
        let g = loop_to_loop();
        let v = g.vertex_idx("v").unwrap();
        let w = g.vertex_idx("w").unwrap();
        let r = classify_subset(&g, &vs(&[w]));
        assert!(r.hereditary && r.saturated);
        let r = classify_subset(&g, &vs(&[v]));
        assert!(!r.hereditary);
        assert_eq!(r.hereditary_witness.as_deref(), Some("m"));
    }

    #[test]
    fn saturation_climbs_the_grid() {
        let g = omega_graph(&DegreeVector(vec![1, 1])).unwrap();
        let corner = vs(&[g.vertex_idx("1_1").unwrap()]);
        let sat = saturate(&g, &corner);
        assert_eq!(sat.len(), 4);
        let r = classify_subset(&g, &corner);
        assert!(r.hereditary && !r.saturated);
        assert_eq!(r.saturation_witness.as_deref(), Some("0_1"));
    }

    #[test]
    fn path_saturation_agrees() {
        for g in [
            loop_to_loop(),
            two_isolated_loops(),
            omega_graph(&DegreeVector(vec![1, 1])).unwrap(),
            omega_graph(&DegreeVector(vec![2, 1])).unwrap(),
        ] {
            let bound = vec![g.vertex_count() as u32; g.rank()];
            for v in 0..g.vertex_count() {
                let seed = downstream(&g, v);
                assert_eq!(
                    saturate(&g, &seed),
                    saturate_via_paths(&g, &seed, &bound).unwrap()
                );
            }
        }
    }

    #[test]
    fn lattice_of_loop_to_loop() {
        let g = loop_to_loop();
        let w = g.vertex_idx("w").unwrap();
        let lat = enumerate_hs_lattice(&g, 100).unwrap();
        assert_eq!(lat.elements.len(), 3);
        assert_eq!(lat.elements[0], VertexSet::new());
        assert_eq!(lat.elements[1], vs(&[w]));
        assert_eq!(lat.elements[2].len(), 2);
        let i = lat.index_of(&vs(&[w])).unwrap();
        assert_eq!(lat.meet[i][2], i);
        assert_eq!(lat.join[i][0], i);
        assert!(!is_cofinal_graph(&g, 100).unwrap());
    }

    #[test]
    fn lattice_of_grid_is_trivial() {
        let g = omega_graph(&DegreeVector(vec![1, 1])).unwrap();
        let lat = enumerate_hs_lattice(&g, 100).unwrap();
        assert_eq!(lat.elements.len(), 2);
        assert!(is_cofinal_graph(&g, 100).unwrap());
    }

    #[test]
    fn lattice_of_disjoint_pieces_is_boolean() {
        let g = two_isolated_loops();
        let lat = enumerate_hs_lattice(&g, 100).unwrap();
        assert_eq!(lat.elements.len(), 4);
        assert!(!is_cofinal_graph(&g, 100).unwrap());
    }

    #[test]
    fn subgraphs_split_loop_to_loop() {
        let g = loop_to_loop();
        let w = g.vertex_idx("w").unwrap();
        let inner = subgraph_restrict(&g, &vs(&[w])).unwrap();
        assert_eq!(inner.vertex_count(), 1);
        assert_eq!(inner.edge_count(), 1);
        assert!(inner.edge_idx("f").is_ok());
        let outer = subgraph_remove(&g, &vs(&[w])).unwrap();
        assert_eq!(outer.vertex_count(), 1);
        assert_eq!(outer.edge_count(), 1);
        assert!(outer.edge_idx("e").is_ok());
        let v = g.vertex_idx("v").unwrap();
        assert!(subgraph_remove(&g, &vs(&[v])).is_err());
    }

    #[test]
    fn removing_saturated_sets_keeps_local_convexity() {
        let g = omega_graph(&DegreeVector(vec![2, 2])).unwrap();
        let corner = saturate(&g, &downstream(&g, g.vertex_idx("2_2").unwrap()));
        // The saturated cone of the far corner swallows the whole grid.
        assert_eq!(corner.len(), g.vertex_count());
        let lat = enumerate_hs_lattice(&g, 100).unwrap();
        for h in &lat.elements {
            let sub = subgraph_remove(&g, h).unwrap();
            assert!(sub.is_locally_convex());
        }
    }
}
