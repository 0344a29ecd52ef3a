//! Boundary paths: finitely presented maximal paths of the form
//! `prefix . cycle^infinity`.

use std::collections::BTreeSet;

use crate::degree::{DegreeVector, ExtDegree, ExtEntry};
use crate::error::{Error, Result};
use crate::ideals::hereditary_closure;
use crate::skeleton::{KGraph, Path};

/// An eventually periodic maximal path. `cycle` is a loop at the source of
/// `prefix`; a vertex-path cycle presents a finite boundary path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryPath {
    pub prefix: Path,
    pub cycle: Path,
}

impl BoundaryPath {
    /// Validates the presentation and the maximality condition.
    pub fn new(g: &KGraph, prefix: Path, cycle: Path) -> Result<BoundaryPath> {
        let bp = BoundaryPath { prefix, cycle };
        validate_boundary(g, &bp)?;
        Ok(bp)
    }

    pub fn range(&self) -> usize {
        self.prefix.range
    }

    pub fn is_finite(&self) -> bool {
        self.cycle.is_vertex()
    }
}

/// Degree in (N ∪ {∞})^k: infinite exactly on the colors the cycle uses.
pub fn ext_degree(bp: &BoundaryPath) -> ExtDegree {
    ExtDegree(
        bp.prefix
            .degree
            .0
            .iter()
            .zip(&bp.cycle.degree.0)
            .map(|(&p, &c)| if c > 0 { ExtEntry::Inf } else { ExtEntry::Fin(p) })
            .collect(),
    )
}

fn unroll(g: &KGraph, bp: &BoundaryPath, copies: u32) -> Path {
    let mut p = bp.prefix.clone();
    for _ in 0..copies {
        p = g.compose(&p, &bp.cycle).expect("cycle is a loop at the prefix source");
    }
    p
}

/// Copies of the cycle needed so the unrolled path reaches degree `b`.
fn copies_for(bp: &BoundaryPath, b: &DegreeVector) -> u32 {
    let mut t = 0;
    for (i, &c) in bp.cycle.degree.0.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let have = bp.prefix.degree.get(i);
        let want = b.get(i);
        if want > have {
            t = t.max((want - have).div_ceil(c));
        }
    }
    t
}

/// Checks composability of the presentation and that every position which
/// exhausts a finite coordinate sits at a vertex blocked on that color. The
/// check runs over the window prefix+cycle; beyond it the path repeats.
pub fn validate_boundary(g: &KGraph, bp: &BoundaryPath) -> Result<()> {
    if bp.prefix.source != bp.cycle.range {
        return Err(Error::NotComposable(
            g.vertex_id(bp.prefix.source).to_string(),
            g.vertex_id(bp.cycle.range).to_string(),
        ));
    }
    if bp.cycle.range != bp.cycle.source {
        return Err(Error::Precondition("cycle part must be a loop".into()));
    }
    let window = bp.prefix.degree.add(&bp.cycle.degree);
    let unrolled = unroll(g, bp, 1);
    let finite: Vec<usize> = (0..g.rank())
        .filter(|&i| bp.cycle.degree.get(i) == 0)
        .collect();
    for p in window.box_iter() {
        let hits: Vec<usize> = finite
            .iter()
            .copied()
            .filter(|&i| p.get(i) == window.get(i))
            .collect();
        if hits.is_empty() {
            continue;
        }
        let at = g.segment_path(&unrolled, &p, &p)?;
        for i in hits {
            if !g.blocked(at.range, i) {
                return Err(Error::Precondition(format!(
                    "vertex `{}` at offset {} can still extend in color {}",
                    g.vertex_id(at.range),
                    p,
                    i
                )));
            }
        }
    }
    Ok(())
}

/// The finite sub-path between positions `a <= b`.
pub fn segment(g: &KGraph, bp: &BoundaryPath, a: &DegreeVector, b: &DegreeVector) -> Result<Path> {
    if !a.le(b) {
        return Err(Error::OutOfRange {
            requested: a.0.clone(),
            degree: b.0.clone(),
        });
    }
    if !ext_degree(bp).dominates(b) {
        return Err(Error::OutOfRange {
            requested: b.0.clone(),
            degree: bp.prefix.degree.0.clone(),
        });
    }
    let unrolled = unroll(g, bp, copies_for(bp, b));
    g.segment_path(&unrolled, a, b)
}

/// The vertex at position `p`.
pub fn vertex_at(g: &KGraph, bp: &BoundaryPath, p: &DegreeVector) -> Result<usize> {
    Ok(segment(g, bp, p, p)?.range)
}

/// Removes the initial segment of degree `m`. The new prefix runs from `m`
/// to `m ∨ d(prefix)`; past that point the path is periodic, so the cycle is
/// re-read off the following window.
pub fn shift(g: &KGraph, bp: &BoundaryPath, m: &DegreeVector) -> Result<BoundaryPath> {
    if !ext_degree(bp).dominates(m) {
        return Err(Error::OutOfRange {
            requested: m.0.clone(),
            degree: bp.prefix.degree.0.clone(),
        });
    }
    let k = m.join(&bp.prefix.degree);
    let prefix = segment(g, bp, m, &k)?;
    let cycle = segment(g, bp, &k, &k.add(&bp.cycle.degree))?;
    Ok(BoundaryPath { prefix, cycle })
}

/// Extends the boundary path backward along `p`. In a locally convex graph
/// the result is again maximal.
pub fn prepend(g: &KGraph, p: &Path, bp: &BoundaryPath) -> Result<BoundaryPath> {
    Ok(BoundaryPath {
        prefix: g.compose(p, &bp.prefix)?,
        cycle: bp.cycle.clone(),
    })
}

fn parallel(a: &DegreeVector, b: &DegreeVector) -> bool {
    let n = a.rank();
    (0..n).all(|i| {
        (0..n).all(|j| (a.get(i) as u64) * (b.get(j) as u64) == (a.get(j) as u64) * (b.get(i) as u64))
    })
}

fn lcm(a: u32, b: u32) -> u32 {
    if a == 0 || b == 0 {
        return a.max(b);
    }
    let g = gcd(a, b);
    a / g * b
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Equality of boundary paths. Exact whenever the cycle degrees are parallel
/// vectors (always for rank 1; in particular whenever the degrees coincide):
/// cycles are raised to a common degree L and the paths compared on the
/// window `join(prefixes) + L`, which pins both tails. For non-parallel
/// cycle degrees the same window comparison is a conservative heuristic:
/// disagreement proves the paths distinct.
pub fn boundary_eq(g: &KGraph, x: &BoundaryPath, y: &BoundaryPath) -> bool {
    if x.range() != y.range() || ext_degree(x) != ext_degree(y) {
        return false;
    }
    let lx = &x.cycle.degree;
    let ly = &y.cycle.degree;
    let window_l = if lx == ly {
        lx.clone()
    } else if parallel(lx, ly) {
        DegreeVector(
            lx.0.iter()
                .zip(&ly.0)
                .map(|(&a, &b)| lcm(a, b))
                .collect(),
        )
    } else {
        lx.add(ly).add(&DegreeVector(
            lx.0.iter().zip(&ly.0).map(|(&a, &b)| lcm(a, b)).collect(),
        ))
    };
    let p = x.prefix.degree.join(&y.prefix.degree);
    let w = p.add(&window_l);
    let sx = segment(g, x, &DegreeVector::zero(g.rank()), &w);
    let sy = segment(g, y, &DegreeVector::zero(g.rank()), &w);
    match (sx, sy) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// Whether every vertex of the graph reaches some vertex on the path.
pub fn is_cofinal_path(g: &KGraph, bp: &BoundaryPath) -> Result<bool> {
    let window = bp.prefix.degree.add(&bp.cycle.degree);
    let mut visited = BTreeSet::new();
    for p in window.box_iter() {
        visited.insert(vertex_at(g, bp, &p)?);
    }
    for v in 0..g.vertex_count() {
        let mut seed = BTreeSet::new();
        seed.insert(v);
        if hereditary_closure(g, &seed).is_disjoint(&visited) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether some boundary path from `v` avoids every color in `colors`.
/// A path of zero extent in color c forces every vertex along it, starting
/// with `v`, to be blocked on c; conversely blocked colors stay blocked
/// along any path (the factorization property pushes the missing color to
/// sources of outgoing edges), so a maximal path inside the blocked region
/// exists. The check is therefore local.
pub fn avoiding_boundary_exists(g: &KGraph, v: usize, colors: &[usize]) -> bool {
    g.blocked_on_all(v, colors)
}

/// All boundary-path classes with range `v` admitting a presentation whose
/// size — the total degree of the prefix plus the total degree of the cycle —
/// is at most `bound`. Deduplicated, smallest presentation first.
pub fn enumerate_boundary(g: &KGraph, v: usize, bound: u32) -> Result<Vec<BoundaryPath>> {
    let full = DegreeVector(vec![bound; g.rank()]);
    let mut candidates = Vec::new();
    for a in full.box_iter() {
        if a.total() > u64::from(bound) {
            continue;
        }
        for prefix in g.paths_of_degree(v, &a)? {
            for c in full.box_iter() {
                if a.total() + c.total() > u64::from(bound) {
                    continue;
                }
                for cycle in g.paths_of_degree(prefix.source, &c)? {
                    if cycle.source != cycle.range {
                        continue;
                    }
                    let bp = BoundaryPath {
                        prefix: prefix.clone(),
                        cycle,
                    };
                    if validate_boundary(g, &bp).is_ok() {
                        candidates.push(bp);
                    }
                }
            }
        }
    }
    candidates.sort_by_key(|bp| {
        (
            bp.prefix.degree.total() + bp.cycle.degree.total(),
            bp.prefix.clone(),
            bp.cycle.clone(),
        )
    });
    let mut classes: Vec<BoundaryPath> = Vec::new();
    for bp in candidates {
        if !classes.iter().any(|c| boundary_eq(g, c, &bp)) {
            classes.push(bp);
        }
    }
    Ok(classes)
}
