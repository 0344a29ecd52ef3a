//! The source-removing cover: canonical class representatives, projection,
//! embedding, and finite-window materialization.
//!
//! Morphisms of the cover are triples (core, a, b): a path of the base graph
//! together with a range-side and a source-side excess, recording how far a
//! position overshoots the blocked colors at each end. The triple is a
//! complete class invariant, so equality is structural.

use std::collections::HashMap;

use crate::boundary::{self, BoundaryPath};
use crate::degree::{DegreeVector, ExtDegree, ExtEntry};
use crate::error::{Error, Result};
use crate::ideals::filter_graph;
use crate::skeleton::{EdgeSpec, KGraph, KGraphSpec, Path, SquareSpec};

/// A vertex of the cover: a base vertex plus an excess vector supported on
/// colors the base vertex is blocked on.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DesVertex {
    pub base: usize,
    pub excess: DegreeVector,
}

impl DesVertex {
    pub fn new(g: &KGraph, base: usize, excess: DegreeVector) -> Result<DesVertex> {
        if excess.rank() != g.rank() {
            return Err(Error::BadDegree {
                expected: g.rank(),
                got: excess.rank(),
            });
        }
        if !boundary::avoiding_boundary_exists(g, base, &excess.support()) {
            return Err(Error::Precondition(format!(
                "vertex `{}` still extends in a color of the excess {}",
                g.vertex_id(base),
                excess
            )));
        }
        Ok(DesVertex { base, excess })
    }

    pub fn label(&self, g: &KGraph) -> String {
        if self.excess.is_zero() {
            g.vertex_id(self.base).to_string()
        } else {
            format!("{}+{}", g.vertex_id(self.base), csv(&self.excess))
        }
    }
}

fn csv(d: &DegreeVector) -> String {
    d.0.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// A morphism of the cover.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DesElement {
    pub core: Path,
    pub range_excess: DegreeVector,
    pub source_excess: DegreeVector,
}

impl DesElement {
    /// Validates the triple: excesses ordered, range excess disjoint from
    /// the core degree, and both endpoint vertices valid.
    pub fn new(
        g: &KGraph,
        core: Path,
        range_excess: DegreeVector,
        source_excess: DegreeVector,
    ) -> Result<DesElement> {
        if range_excess.rank() != g.rank() || source_excess.rank() != g.rank() {
            return Err(Error::BadDegree {
                expected: g.rank(),
                got: range_excess.rank(),
            });
        }
        if !range_excess.le(&source_excess) {
            return Err(Error::Precondition(
                "range excess must be at most the source excess".into(),
            ));
        }
        for i in range_excess.support() {
            if core.degree.get(i) > 0 {
                return Err(Error::Precondition(format!(
                    "range excess uses color {i} that the core also uses"
                )));
            }
        }
        DesVertex::new(g, core.range, range_excess.clone())?;
        DesVertex::new(g, core.source, source_excess.clone())?;
        Ok(DesElement {
            core,
            range_excess,
            source_excess,
        })
    }

    pub fn degree(&self) -> DegreeVector {
        self.core
            .degree
            .add(&self.source_excess)
            .checked_sub(&self.range_excess)
            .expect("range excess is at most source excess")
    }

    pub fn range_vertex(&self) -> DesVertex {
        DesVertex {
            base: self.core.range,
            excess: self.range_excess.clone(),
        }
    }

    pub fn source_vertex(&self) -> DesVertex {
        DesVertex {
            base: self.core.source,
            excess: self.source_excess.clone(),
        }
    }

    pub fn is_vertex(&self) -> bool {
        self.core.is_vertex() && self.range_excess == self.source_excess
    }
}

fn meet_ext(m: &DegreeVector, ext: &ExtDegree) -> DegreeVector {
    DegreeVector(
        m.0.iter()
            .zip(&ext.0)
            .map(|(&c, e)| match e {
                ExtEntry::Inf => c,
                ExtEntry::Fin(n) => c.min(*n),
            })
            .collect(),
    )
}

/// Canonical representative of the class of (x; (m, n)): the witnessed part
/// of the path between the clamped heights, plus the overshoots as excesses.
pub fn canonicalize_element(
    g: &KGraph,
    x: &BoundaryPath,
    m: &DegreeVector,
    n: &DegreeVector,
) -> Result<DesElement> {
    if !m.le(n) {
        return Err(Error::OutOfRange {
            requested: m.0.clone(),
            degree: n.0.clone(),
        });
    }
    let ext = boundary::ext_degree(x);
    let m_clamp = meet_ext(m, &ext);
    let n_clamp = meet_ext(n, &ext);
    let core = boundary::segment(g, x, &m_clamp, &n_clamp)?;
    DesElement::new(
        g,
        core,
        m.checked_sub(&m_clamp)?,
        n.checked_sub(&n_clamp)?,
    )
}

/// The projection onto the base graph: forget the excesses.
pub fn project_pi(e: &DesElement) -> Path {
    e.core.clone()
}

/// The base graph sits inside the cover as the excess-zero layer.
pub fn embed(g: &KGraph, lam: &Path) -> DesElement {
    DesElement {
        core: lam.clone(),
        range_excess: DegreeVector::zero(g.rank()),
        source_excess: DegreeVector::zero(g.rank()),
    }
}

/// Composition: cores compose, outer excesses survive. Requires the source
/// vertex of `e1` to equal the range vertex of `e2`, excess included.
pub fn des_compose(g: &KGraph, e1: &DesElement, e2: &DesElement) -> Result<DesElement> {
    if e1.source_vertex() != e2.range_vertex() {
        return Err(Error::NotComposable(
            e1.source_vertex().label(g),
            e2.range_vertex().label(g),
        ));
    }
    Ok(DesElement {
        core: g.compose(&e1.core, &e2.core)?,
        range_excess: e1.range_excess.clone(),
        source_excess: e2.source_excess.clone(),
    })
}

/// Splits an element as a degree-`m` head followed by the complementary
/// tail. The head consumes as much of the core as the heights allow; the
/// rest of `m` becomes excess at the split vertex.
pub fn des_factorize(
    g: &KGraph,
    e: &DesElement,
    m: &DegreeVector,
) -> Result<(DesElement, DesElement)> {
    if !m.le(&e.degree()) {
        return Err(Error::OutOfRange {
            requested: m.0.clone(),
            degree: e.degree().0.clone(),
        });
    }
    let q = e.range_excess.add(m).meet(&e.core.degree);
    let (head_core, tail_core) = g.factorize(&e.core, &q)?;
    let mid = e.range_excess.add(m).checked_sub(&q)?;
    Ok((
        DesElement::new(g, head_core, e.range_excess.clone(), mid.clone())?,
        DesElement::new(g, tail_core, mid, e.source_excess.clone())?,
    ))
}

/// The finite full subgraph of the cover on vertices with excess at most
/// `bound`, as a graph whose ids encode base and excess.
#[derive(Debug, Clone)]
pub struct DesWindow {
    pub graph: KGraph,
    pub bound: DegreeVector,
    vertices: Vec<DesVertex>,
    elements: Vec<DesElement>,
}

impl DesWindow {
    /// The cover vertex behind a window vertex index.
    pub fn vertex_info(&self, v: usize) -> &DesVertex {
        &self.vertices[v]
    }

    /// The cover morphism behind a window edge index.
    pub fn element(&self, e: usize) -> &DesElement {
        &self.elements[e]
    }

    /// Interior vertices have excess strictly below the bound in every
    /// color; only truncation-boundary vertices may be window sources.
    pub fn is_interior(&self, v: usize) -> bool {
        self.vertices[v]
            .excess
            .0
            .iter()
            .zip(&self.bound.0)
            .all(|(&p, &n)| p < n)
    }

    /// The graph induced on the interior; equals the window at bound-1.
    pub fn interior_graph(&self) -> Result<KGraph> {
        let keep: Vec<bool> = (0..self.graph.vertex_count())
            .map(|v| self.is_interior(v))
            .collect();
        filter_graph(&self.graph, &keep)
    }
}

fn carried_label(g: &KGraph, e: usize, p: &DegreeVector) -> String {
    if p.is_zero() {
        g.edge(e).id.clone()
    } else {
        format!("{}+{}", g.edge(e).id, csv(p))
    }
}

fn increment_label(g: &KGraph, w: usize, p: &DegreeVector, color: usize) -> String {
    format!("{}+{}^{}", g.vertex_id(w), csv(p), color)
}

/// Rewrites an element of the cover as a path of the window graph, provided
/// every excess it touches stays within the window bound. Splitting off one
/// degree at a time yields exactly the carried-edge and increment-edge steps
/// the window materializes.
pub fn element_to_window_path(g: &KGraph, win: &DesWindow, el: &DesElement) -> Result<Path> {
    if el.degree().is_zero() {
        let v = win.graph.vertex_idx(&el.range_vertex().label(g))?;
        return Ok(win.graph.vertex_path(v));
    }
    let mut ids: Vec<String> = Vec::new();
    let mut cur = el.clone();
    while !cur.degree().is_zero() {
        let c = cur.degree().support()[0];
        let unit = DegreeVector::unit(g.rank(), c);
        let (head, tail) = des_factorize(g, &cur, &unit)?;
        if head.core.is_vertex() {
            ids.push(increment_label(g, head.core.range, &head.range_excess, c));
        } else {
            ids.push(carried_label(g, head.core.edges[0], &head.range_excess));
        }
        cur = tail;
    }
    let refs: Vec<&str> = ids.iter().map(|s| s.as_str()).collect();
    win.graph.path_from_edge_ids(&refs)
}

/// Materializes the window. Edges are the degree-one elements between
/// retained vertices: base edges carried at a constant excess, and excess
/// increments at vertices blocked on the incremented color. Squares are
/// computed by composing and refactoring; the intermediate excesses never
/// exceed the endpoints', so the window is square-complete.
pub fn des_window(g: &KGraph, bound: &DegreeVector) -> Result<DesWindow> {
    if bound.rank() != g.rank() {
        return Err(Error::BadDegree {
            expected: g.rank(),
            got: bound.rank(),
        });
    }
    let excesses = bound.box_iter();
    let mut vertices: Vec<DesVertex> = Vec::new();
    for w in 0..g.vertex_count() {
        for p in &excesses {
            if g.blocked_on_all(w, &p.support()) {
                vertices.push(DesVertex {
                    base: w,
                    excess: p.clone(),
                });
            }
        }
    }
    let mut edge_specs: Vec<(String, DesElement)> = Vec::new();
    for e in 0..g.edge_count() {
        let edge = g.edge(e);
        for p in &excesses {
            if p.get(edge.color) == 0 && g.blocked_on_all(edge.range, &p.support()) {
                edge_specs.push((
                    carried_label(g, e, p),
                    DesElement {
                        core: g.edge_path(e),
                        range_excess: p.clone(),
                        source_excess: p.clone(),
                    },
                ));
            }
        }
    }
    for w in 0..g.vertex_count() {
        for p in &excesses {
            for c in 0..g.rank() {
                if p.get(c) + 1 > bound.get(c) {
                    continue;
                }
                let mut supp = p.support();
                if !supp.contains(&c) {
                    supp.push(c);
                }
                if g.blocked_on_all(w, &supp) {
                    edge_specs.push((
                        increment_label(g, w, p, c),
                        DesElement {
                            core: g.vertex_path(w),
                            range_excess: p.clone(),
                            source_excess: p.add(&DegreeVector::unit(g.rank(), c)),
                        },
                    ));
                }
            }
        }
    }
    let element_ids: HashMap<DesElement, String> = edge_specs
        .iter()
        .map(|(id, el)| (el.clone(), id.clone()))
        .collect();
    let by_range: HashMap<DesVertex, Vec<usize>> = {
        let mut m: HashMap<DesVertex, Vec<usize>> = HashMap::new();
        for (i, (_, el)) in edge_specs.iter().enumerate() {
            m.entry(el.range_vertex()).or_default().push(i);
        }
        m
    };
    let mut squares = Vec::new();
    for (_, e1) in &edge_specs {
        let c1 = e1.degree().support()[0];
        if let Some(succ) = by_range.get(&e1.source_vertex()) {
            for &j in succ {
                let e2 = &edge_specs[j].1;
                let c2 = e2.degree().support()[0];
                if c1 >= c2 {
                    continue;
                }
                let both = des_compose(g, e1, e2)?;
                let (g2, f2) = des_factorize(g, &both, &DegreeVector::unit(g.rank(), c2))?;
                squares.push(SquareSpec {
                    f: element_ids[e1].clone(),
                    g: element_ids[e2].clone(),
                    g2: element_ids
                        .get(&g2)
                        .expect("refactored edge stays within the window")
                        .clone(),
                    f2: element_ids
                        .get(&f2)
                        .expect("refactored edge stays within the window")
                        .clone(),
                });
            }
        }
    }
    let spec = KGraphSpec {
        rank: g.rank(),
        vertices: vertices.iter().map(|dv| dv.label(g)).collect(),
        edges: edge_specs
            .iter()
            .map(|(id, el)| EdgeSpec {
                id: id.clone(),
                color: el.degree().support()[0],
                range: el.range_vertex().label(g),
                source: el.source_vertex().label(g),
            })
            .collect(),
        squares,
    };
    let graph = KGraph::build(&spec)?;
    let mut sorted_vertices = vec![None; vertices.len()];
    for dv in vertices {
        let idx = graph.vertex_idx(&dv.label(g))?;
        sorted_vertices[idx] = Some(dv);
    }
    let mut sorted_elements = vec![None; edge_specs.len()];
    for (id, el) in edge_specs {
        let idx = graph.edge_idx(&id)?;
        sorted_elements[idx] = Some(el);
    }
    Ok(DesWindow {
        graph,
        bound: bound.clone(),
        vertices: sorted_vertices.into_iter().map(Option::unwrap).collect(),
        elements: sorted_elements.into_iter().map(Option::unwrap).collect(),
    })
}
