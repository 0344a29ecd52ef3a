//! Degree periodicity: when do two paths act identically on every boundary
//! path, what subgroup of Z^k do the degree differences of such pairs span,
//! is the graph aperiodic, at which vertices is the periodicity uniform, and
//! how do these notions transfer to the source-free cover.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::boundary::{
    boundary_eq, enumerate_boundary, ext_degree, prepend, validate_boundary, BoundaryPath,
};
use crate::budget::BudgetConfig;
use crate::degree::{DegreeVector, ExtEntry};
use crate::desourcify::{des_window, element_to_window_path, project_pi, DesElement};
use crate::error::{Error, Result};
use crate::ideals::downstream;
use crate::skeleton::{KGraph, Path};

/// A subgroup of Z^k held as a canonical echelon generator matrix: pivots
/// positive, pivot columns strictly ascending, entries above each pivot
/// reduced into `[0, pivot)`, no zero rows. Two subgroups are equal exactly
/// when their matrices are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntSubgroup {
    ambient: usize,
    rows: Vec<Vec<i64>>,
}

impl IntSubgroup {
    pub fn trivial(ambient: usize) -> IntSubgroup {
        IntSubgroup {
            ambient,
            rows: Vec::new(),
        }
    }

    /// Canonicalizes an arbitrary generator list by integer row reduction.
    pub fn from_generators(ambient: usize, generators: &[Vec<i64>]) -> Result<IntSubgroup> {
        for r in generators {
            if r.len() != ambient {
                return Err(Error::BadDegree {
                    expected: ambient,
                    got: r.len(),
                });
            }
        }
        let mut m: Vec<Vec<i64>> = generators
            .iter()
            .filter(|r| r.iter().any(|&x| x != 0))
            .cloned()
            .collect();
        let mut top = 0usize;
        for col in 0..ambient {
            loop {
                let mut best: Option<usize> = None;
                for (i, row) in m.iter().enumerate().skip(top) {
                    if row[col] != 0 && best.map_or(true, |b: usize| row[col].abs() < m[b][col].abs())
                    {
                        best = Some(i);
                    }
                }
                let Some(b) = best else { break };
                m.swap(top, b);
                let mut remainder_left = false;
                for i in top + 1..m.len() {
                    if m[i][col] != 0 {
                        let q = m[i][col] / m[top][col];
                        for j in 0..ambient {
                            m[i][j] -= q * m[top][j];
                        }
                        if m[i][col] != 0 {
                            remainder_left = true;
                        }
                    }
                }
                if !remainder_left {
                    break;
                }
            }
            if top < m.len() && m[top][col] != 0 {
                if m[top][col] < 0 {
                    for j in 0..ambient {
                        m[top][j] = -m[top][j];
                    }
                }
                let p = m[top][col];
                for i in 0..top {
                    let q = m[i][col].div_euclid(p);
                    if q != 0 {
                        for j in 0..ambient {
                            m[i][j] -= q * m[top][j];
                        }
                    }
                }
                top += 1;
            }
        }
        m.truncate(top);
        Ok(IntSubgroup { ambient, rows: m })
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    /// Canonical generator rows, one per free rank.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut w = v.to_vec();
        for row in &self.rows {
            let col = row
                .iter()
                .position(|&x| x != 0)
                .expect("canonical rows are nonzero");
            if w[col] != 0 {
                if w[col] % row[col] != 0 {
                    return false;
                }
                let q = w[col] / row[col];
                for j in 0..self.ambient {
                    w[j] -= q * row[j];
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for IntSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "{{0}}");
        }
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Outcome of an equivalence query: a certified yes, a refuted no with the
/// reason, or undecided within the budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equiv {
    Yes,
    No(String),
    Unknown,
}

impl Equiv {
    pub fn is_yes(&self) -> bool {
        matches!(self, Equiv::Yes)
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Equiv::No(_))
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, Equiv::Unknown)
    }
}

/// When every vertex downstream of `v` offers at most one edge per color,
/// `v` has exactly one boundary path, and this returns its presentation:
/// the walk that repeatedly appends the unique edge of each available color
/// in ascending color order must revisit a vertex (or halt at a fully
/// blocked one), and by uniqueness of continuations the revisit closes a
/// genuine cycle of the boundary path. Returns `None` when some downstream
/// vertex branches, or when the constructed presentation fails validation
/// (possible only without local convexity).
pub fn unique_boundary_path(g: &KGraph, v: usize) -> Result<Option<BoundaryPath>> {
    for &w in downstream(g, v).iter() {
        for c in 0..g.rank() {
            if g.out_edges(w, c).len() > 1 {
                return Ok(None);
            }
        }
    }
    let round = |u: usize| -> Result<Path> {
        let mut p = g.vertex_path(u);
        for c in 0..g.rank() {
            if let Some(&e) = g.out_edges(p.source, c).first() {
                p = g.compose(&p, &g.edge_path(e))?;
            }
        }
        Ok(p)
    };
    let compose_seq = |start: usize, pieces: &[Path]| -> Result<Path> {
        let mut p = g.vertex_path(start);
        for q in pieces {
            p = g.compose(&p, q)?;
        }
        Ok(p)
    };
    let mut pieces: Vec<Path> = Vec::new();
    let mut seen: Vec<usize> = vec![v];
    let mut u = v;
    loop {
        let p = round(u)?;
        if p.is_vertex() {
            let prefix = compose_seq(v, &pieces)?;
            let bp = BoundaryPath::new(g, prefix, g.vertex_path(u))?;
            return Ok(validate_boundary(g, &bp).ok().map(|_| bp));
        }
        u = p.source;
        pieces.push(p);
        if let Some(pos) = seen.iter().position(|&s| s == u) {
            let prefix = compose_seq(v, &pieces[..pos])?;
            let cycle = compose_seq(seen[pos], &pieces[pos..])?;
            let bp = BoundaryPath::new(g, prefix, cycle)?;
            return Ok(validate_boundary(g, &bp).ok().map(|_| bp));
        }
        seen.push(u);
    }
}

/// Two distinct ultimately periodic boundary paths from `v` through the
/// nearest downstream branching vertex, for rank-one graphs. Empty when no
/// downstream vertex branches.
fn branch_witnesses(g: &KGraph, v: usize) -> Result<Vec<BoundaryPath>> {
    let mut stem: Vec<usize> = Vec::new();
    let mut branch: Option<usize> = None;
    {
        let mut prev: HashMap<usize, (usize, usize)> = HashMap::new();
        let mut visited: HashSet<usize> = HashSet::new();
        visited.insert(v);
        let mut queue = VecDeque::new();
        queue.push_back(v);
        while let Some(w) = queue.pop_front() {
            if g.out_edges(w, 0).len() >= 2 {
                branch = Some(w);
                break;
            }
            for &e in g.out_edges(w, 0) {
                let s = g.edge(e).source;
                if visited.insert(s) {
                    prev.insert(s, (w, e));
                    queue.push_back(s);
                }
            }
        }
        let Some(z) = branch else {
            return Ok(Vec::new());
        };
        let mut cur = z;
        while cur != v {
            let (p, e) = prev[&cur];
            stem.push(e);
            cur = p;
        }
        stem.reverse();
    }
    let z = branch.expect("branch vertex found above");
    let mut witnesses = Vec::new();
    for &first in g.out_edges(z, 0).iter().take(2) {
        let mut walk = stem.clone();
        walk.push(first);
        let mut verts = vec![v];
        for &e in &walk {
            verts.push(g.edge(e).source);
        }
        let bp = loop {
            let cur = *verts.last().unwrap();
            let earlier = verts[..verts.len() - 1].iter().position(|&x| x == cur);
            if let Some(p) = earlier {
                let prefix = if p == 0 {
                    g.vertex_path(v)
                } else {
                    g.path_from_edges(&walk[..p])?
                };
                let cycle = g.path_from_edges(&walk[p..])?;
                break BoundaryPath::new(g, prefix, cycle)?;
            }
            match g.out_edges(cur, 0).first() {
                Some(&e) => {
                    walk.push(e);
                    verts.push(g.edge(e).source);
                }
                None => {
                    let prefix = g.path_from_edges(&walk)?;
                    break BoundaryPath::new(g, prefix, g.vertex_path(cur))?;
                }
            }
        };
        witnesses.push(bp);
    }
    Ok(witnesses)
}

/// Decides whether appending any boundary path to `mu` and to `nu` always
/// yields the same boundary path.
///
/// Certified answers only: a No is always backed by a concrete reason (a
/// mismatch of endpoints or degrees that some boundary path witnesses, an
/// acyclic graph whose finite boundary paths expose the degree difference,
/// or an explicit distinguishing continuation); a Yes is issued only when
/// the shared source has a unique boundary path, which is then the only
/// continuation to test. For rank-one graphs the answer is never Unknown:
/// either the downstream of the source is deterministic (unique boundary
/// path), or it branches, and two distinct continuations through the branch
/// cannot both equal the periodic repetition that agreement would force.
pub fn equivalent_paths(g: &KGraph, mu: &Path, nu: &Path, budget: &BudgetConfig) -> Result<Equiv> {
    if mu.source != nu.source {
        return Ok(Equiv::No("the paths have different sources".into()));
    }
    if mu.range != nu.range {
        return Ok(Equiv::No("the paths have different ranges".into()));
    }
    if mu == nu {
        return Ok(Equiv::Yes);
    }
    if mu.degree == nu.degree {
        return Ok(Equiv::No(
            "distinct paths of equal degree differ after appending any boundary path".into(),
        ));
    }
    if g.is_acyclic() {
        return Ok(Equiv::No(
            "every boundary path of an acyclic graph is finite and witnesses the degree difference"
                .into(),
        ));
    }
    let u = mu.source;
    if let Some(x0) = unique_boundary_path(g, u)? {
        let a = prepend(g, mu, &x0)?;
        let b = prepend(g, nu, &x0)?;
        return Ok(if boundary_eq(g, &a, &b) {
            Equiv::Yes
        } else {
            Equiv::No("the unique boundary path at the shared source distinguishes them".into())
        });
    }
    if g.rank() == 1 {
        for x in branch_witnesses(g, u)? {
            if !boundary_eq(g, &prepend(g, mu, &x)?, &prepend(g, nu, &x)?) {
                return Ok(Equiv::No(
                    "a continuation through a downstream branch distinguishes them".into(),
                ));
            }
        }
    }
    for x in enumerate_boundary(g, u, budget.presentation_bound)? {
        if !boundary_eq(g, &prepend(g, mu, &x)?, &prepend(g, nu, &x)?) {
            return Ok(Equiv::No(
                "a bounded ultimately periodic continuation distinguishes them".into(),
            ));
        }
    }
    Ok(Equiv::Unknown)
}

/// How the pairs at one source vertex are decided.
enum SourceInfo {
    /// The downstream is deterministic; the unique boundary path decides
    /// every pair exactly.
    Det(BoundaryPath),
    /// Rank one with a downstream branch: no distinct pair is equivalent,
    /// because two continuations through the branch cannot both equal the
    /// periodic repetition that agreement would force.
    BranchingLine,
    /// Bounded probing only: equal probe outcomes leave a pair undecided.
    Probes(Vec<BoundaryPath>),
}

fn source_info(g: &KGraph, u: usize, budget: &BudgetConfig) -> Result<SourceInfo> {
    if let Some(x0) = unique_boundary_path(g, u)? {
        return Ok(SourceInfo::Det(x0));
    }
    if g.rank() == 1 {
        return Ok(SourceInfo::BranchingLine);
    }
    Ok(SourceInfo::Probes(enumerate_boundary(
        g,
        u,
        budget.presentation_bound,
    )?))
}

type Fingerprint = (Vec<usize>, Vec<Option<u32>>);

/// A window of the boundary path `mu . probe` wide enough that two paths of
/// degree at most `dmax` prepended to the same probe agree on the window if
/// and only if they agree outright.
fn probe_fingerprint(
    g: &KGraph,
    mu: &Path,
    probe: &BoundaryPath,
    dmax: &DegreeVector,
) -> Result<Fingerprint> {
    let y = prepend(g, mu, probe)?;
    let k = dmax
        .add(&probe.prefix.degree)
        .add(&probe.cycle.degree);
    let ext = ext_degree(&y);
    let clamp = DegreeVector(
        (0..g.rank())
            .map(|i| match ext.0[i] {
                ExtEntry::Fin(f) => f.min(k.get(i)),
                ExtEntry::Inf => k.get(i),
            })
            .collect(),
    );
    let window = crate::boundary::segment(g, &y, &DegreeVector::zero(g.rank()), &clamp)?;
    let ext_sig = ext
        .0
        .iter()
        .map(|e| match e {
            ExtEntry::Fin(f) => Some(*f),
            ExtEntry::Inf => None,
        })
        .collect();
    Ok((window.edges, ext_sig))
}

/// The subgroup of Z^k spanned by the degree differences of certified
/// equivalent pairs, with honesty flags.
#[derive(Debug, Clone)]
pub struct PerGroupResult {
    pub subgroup: IntSubgroup,
    /// Every examined pair was decided and the generator span did not grow
    /// at the last degree layer.
    pub exact: bool,
    /// The span from pairs one degree below the bound already equals the
    /// full span.
    pub stabilized: bool,
    /// No pair was left undecided.
    pub decided_all: bool,
    /// Whether the whole vertex set has pairwise common futures; the
    /// reported set is only guaranteed to be a subgroup in that case.
    pub lambda0_is_maximal_tail: bool,
    /// A sample of certified pairs (capped).
    pub yes_pairs: Vec<(Path, Path)>,
    pub unknown_pairs: u64,
}

const YES_PAIR_CAP: usize = 64;

/// Generates the periodicity subgroup from all path pairs of degree at most
/// the budget's degree bound.
///
/// Deterministic downstreams are decided exactly through their unique
/// boundary path; rank-one branching sources contribute nothing (no
/// distinct pair there is equivalent); remaining sources are probed with
/// every bounded ultimately periodic continuation, which can refute but
/// not certify, so surviving pairs count as undecided. An acyclic graph
/// short-circuits to the trivial subgroup: all its boundary paths are
/// finite and witness every degree difference.
pub fn per_group(g: &KGraph, budget: &BudgetConfig) -> Result<PerGroupResult> {
    let k = g.rank();
    if budget.degree_bound.rank() != k {
        return Err(Error::BadDegree {
            expected: k,
            got: budget.degree_bound.rank(),
        });
    }
    let lambda0_is_maximal_tail = lambda0_common_futures(g);
    if g.is_acyclic() {
        return Ok(PerGroupResult {
            subgroup: IntSubgroup::trivial(k),
            exact: true,
            stabilized: true,
            decided_all: true,
            lambda0_is_maximal_tail,
            yes_pairs: Vec::new(),
            unknown_pairs: 0,
        });
    }
    let dmax = &budget.degree_bound;
    let dprev = DegreeVector(dmax.0.iter().map(|&x| x.saturating_sub(1)).collect());
    let mut buckets: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
    for v in 0..g.vertex_count() {
        for m in dmax.box_iter() {
            for p in g.paths_of_degree(v, &m)? {
                let s = p.source;
                buckets.entry((v, s)).or_default().push(p);
            }
        }
    }
    let mut info: HashMap<usize, SourceInfo> = HashMap::new();
    let mut gens: Vec<Vec<i64>> = Vec::new();
    let mut gens_prev: Vec<Vec<i64>> = Vec::new();
    let mut yes_pairs: Vec<(Path, Path)> = Vec::new();
    let mut unknown_pairs: u64 = 0;
    for ((_, u), paths) in &buckets {
        if paths.len() < 2 {
            continue;
        }
        if !info.contains_key(u) {
            info.insert(*u, source_info(g, *u, budget)?);
        }
        let diff = |a: &Path, b: &Path| -> Vec<i64> {
            (0..k)
                .map(|i| i64::from(a.degree.get(i)) - i64::from(b.degree.get(i)))
                .collect()
        };
        match &info[u] {
            SourceInfo::BranchingLine => {}
            SourceInfo::Det(x0) => {
                let mut groups: BTreeMap<Fingerprint, Vec<&Path>> = BTreeMap::new();
                for p in paths {
                    groups
                        .entry(probe_fingerprint(g, p, x0, dmax)?)
                        .or_default()
                        .push(p);
                }
                for members in groups.values() {
                    let rep = members[0];
                    for p in &members[1..] {
                        gens.push(diff(p, rep));
                        if yes_pairs.len() < YES_PAIR_CAP {
                            yes_pairs.push(((*p).clone(), rep.clone()));
                        }
                    }
                    let small: Vec<&&Path> = members
                        .iter()
                        .filter(|p| p.degree.le(&dprev))
                        .collect();
                    if small.len() >= 2 {
                        for p in &small[1..] {
                            gens_prev.push(diff(p, small[0]));
                        }
                    }
                }
            }
            SourceInfo::Probes(probes) => {
                let mut groups: BTreeMap<Vec<Fingerprint>, Vec<&Path>> = BTreeMap::new();
                for p in paths {
                    let mut key = Vec::with_capacity(probes.len());
                    for probe in probes {
                        key.push(probe_fingerprint(g, p, probe, dmax)?);
                    }
                    groups.entry(key).or_default().push(p);
                }
                for members in groups.values() {
                    let n = members.len() as u64;
                    unknown_pairs += n * (n - 1) / 2;
                }
            }
        }
    }
    let subgroup = IntSubgroup::from_generators(k, &gens)?;
    let prev_subgroup = IntSubgroup::from_generators(k, &gens_prev)?;
    let stabilized = subgroup == prev_subgroup;
    let decided_all = unknown_pairs == 0;
    Ok(PerGroupResult {
        exact: decided_all && stabilized,
        subgroup,
        stabilized,
        decided_all,
        lambda0_is_maximal_tail,
        yes_pairs,
        unknown_pairs,
    })
}

/// Whether every two vertices share a common downstream vertex.
fn lambda0_common_futures(g: &KGraph) -> bool {
    let down: Vec<BTreeSet<usize>> = (0..g.vertex_count()).map(|v| downstream(g, v)).collect();
    for v in 0..g.vertex_count() {
        for w in v + 1..g.vertex_count() {
            if down[v].intersection(&down[w]).next().is_none() {
                return false;
            }
        }
    }
    true
}

/// The aperiodicity verdict. `Periodic` carries a certified equivalent pair
/// of distinct paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeriodicityVerdict {
    Aperiodic,
    Periodic(Path, Path),
    Unknown,
}

impl PeriodicityVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            PeriodicityVerdict::Aperiodic => "aperiodic",
            PeriodicityVerdict::Periodic(_, _) => "periodic",
            PeriodicityVerdict::Unknown => "unknown",
        }
    }
}

/// Decides aperiodicity where an exact criterion applies.
///
/// An acyclic graph is aperiodic: all boundary paths are finite. A vertex
/// whose downstream is deterministic and contains a cycle is periodic: its
/// unique boundary path eventually repeats, and the repetition makes the
/// walk up to the cycle equivalent to the walk including it. For rank one
/// these two criteria are exhaustive — a periodic pair forces a
/// deterministic downstream cycle, since any branch below the shared source
/// yields a distinguishing continuation — so rank-one verdicts are never
/// Unknown. Higher-rank graphs that are cyclic and branch everywhere
/// relevant stay Unknown.
pub fn aperiodicity(g: &KGraph, _budget: &BudgetConfig) -> Result<PeriodicityVerdict> {
    if g.is_acyclic() {
        return Ok(PeriodicityVerdict::Aperiodic);
    }
    for v in 0..g.vertex_count() {
        if let Some(x0) = unique_boundary_path(g, v)? {
            if !x0.is_finite() {
                let nu = x0.prefix.clone();
                let mu = g.compose(&x0.prefix, &x0.cycle)?;
                return Ok(PeriodicityVerdict::Periodic(mu, nu));
            }
        }
    }
    if g.rank() == 1 {
        return Ok(PeriodicityVerdict::Aperiodic);
    }
    Ok(PeriodicityVerdict::Unknown)
}

/// Vertices at which the periodicity is uniform, with an exactness flag.
#[derive(Debug, Clone)]
pub struct HPerResult {
    pub vertices: BTreeSet<usize>,
    pub exact: bool,
}

/// The vertices `v` such that every path with range `v` admits, for every
/// generator step of `per` in either direction that keeps the degree
/// non-negative, an equivalent path of the stepped degree.
///
/// For the trivial subgroup the condition is vacuous and every vertex
/// qualifies exactly. Otherwise paths with range `v` are examined up to the
/// budget's degree bound; the flag is exact when every equivalence query
/// was decided and the membership already agrees with the check one degree
/// layer below the bound.
pub fn h_per(g: &KGraph, per: &IntSubgroup, budget: &BudgetConfig) -> Result<HPerResult> {
    if per.ambient_rank() != g.rank() {
        return Err(Error::BadDegree {
            expected: g.rank(),
            got: per.ambient_rank(),
        });
    }
    if per.is_trivial() {
        return Ok(HPerResult {
            vertices: (0..g.vertex_count()).collect(),
            exact: true,
        });
    }
    let mut steps: Vec<Vec<i64>> = per.rows().to_vec();
    steps.extend(
        per.rows()
            .iter()
            .map(|r| r.iter().map(|&x| -x).collect::<Vec<i64>>()),
    );
    let dmax = &budget.degree_bound;
    let dprev = DegreeVector(dmax.0.iter().map(|&x| x.saturating_sub(1)).collect());
    let mut vertices = BTreeSet::new();
    let mut exact = true;
    for v in 0..g.vertex_count() {
        let (member, decided) = h_per_vertex(g, v, &steps, dmax, budget)?;
        let (member_prev, _) = h_per_vertex(g, v, &steps, &dprev, budget)?;
        if member {
            vertices.insert(v);
        }
        if !decided || member != member_prev {
            exact = false;
        }
    }
    Ok(HPerResult { vertices, exact })
}

fn h_per_vertex(
    g: &KGraph,
    v: usize,
    steps: &[Vec<i64>],
    dmax: &DegreeVector,
    budget: &BudgetConfig,
) -> Result<(bool, bool)> {
    let k = g.rank();
    for m in dmax.box_iter() {
        for lam in g.paths_of_degree(v, &m)? {
            for step in steps {
                let target: Vec<i64> = (0..k)
                    .map(|i| i64::from(lam.degree.get(i)) + step[i])
                    .collect();
                if target.iter().any(|&x| x < 0) {
                    continue;
                }
                let tdeg = DegreeVector(target.iter().map(|&x| x as u32).collect());
                let mut found = false;
                let mut all_decided = true;
                for cand in g.paths_of_degree(v, &tdeg)? {
                    if cand.source != lam.source {
                        continue;
                    }
                    match equivalent_paths(g, &cand, &lam, budget)? {
                        Equiv::Yes => {
                            found = true;
                            break;
                        }
                        Equiv::No(_) => {}
                        Equiv::Unknown => all_decided = false,
                    }
                }
                if !found {
                    return Ok((false, all_decided));
                }
            }
        }
    }
    Ok((true, true))
}

/// Compares equivalence of two cover elements inside a materialized window
/// against equivalence of their projections plus equality of their excess
/// growth.
#[derive(Debug, Clone)]
pub struct TransferReport {
    pub window_bound: DegreeVector,
    pub window_side: Equiv,
    pub core_side: Equiv,
    pub excess_match: bool,
    /// True when either side is undecided, otherwise whether the window
    /// answer equals (core answer AND excess growth equality).
    pub consistent: bool,
}

/// Evaluates the transfer of path equivalence to the source-free cover on
/// the two given elements. Both elements must share their range vertex.
pub fn transfer_check(
    g: &KGraph,
    a: &DesElement,
    b: &DesElement,
    budget: &BudgetConfig,
) -> Result<TransferReport> {
    if a.range_vertex() != b.range_vertex() {
        return Err(Error::Precondition(
            "the compared elements must share their range".into(),
        ));
    }
    let bound = a
        .source_excess
        .join(&b.source_excess)
        .join(&a.degree())
        .join(&b.degree());
    let win = des_window(g, &bound)?;
    let pa = element_to_window_path(g, &win, a)?;
    let pb = element_to_window_path(g, &win, b)?;
    let window_side = equivalent_paths(&win.graph, &pa, &pb, budget)?;
    let core_side = equivalent_paths(g, &project_pi(a), &project_pi(b), budget)?;
    let ga = a
        .source_excess
        .checked_sub(&a.range_excess)
        .expect("source excess dominates range excess");
    let gb = b
        .source_excess
        .checked_sub(&b.range_excess)
        .expect("source excess dominates range excess");
    let excess_match = ga == gb;
    let consistent = match (&window_side, &core_side) {
        (Equiv::Unknown, _) | (_, Equiv::Unknown) => true,
        (w, c) => w.is_yes() == (c.is_yes() && excess_match),
    };
    Ok(TransferReport {
        window_bound: bound,
        window_side,
        core_side,
        excess_match,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skeleton::{product_1graphs, EdgeSpec, KGraphSpec};

    fn graph_1(vertices: &[&str], edges: &[(&str, &str, &str)]) -> KGraph {
        KGraph::build(&KGraphSpec {
            rank: 1,
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            edges: edges
                .iter()
                .map(|(id, r, s)| EdgeSpec {
                    id: id.to_string(),
                    color: 0,
                    range: r.to_string(),
                    source: s.to_string(),
                })
                .collect(),
            squares: vec![],
        })
        .unwrap()
    }

    fn single_loop() -> KGraph {
        graph_1(&["v"], &[("f", "v", "v")])
    }

    fn two_loops() -> KGraph {
        graph_1(&["v"], &[("f", "v", "v"), ("g", "v", "v")])
    }

    fn two_cycle() -> KGraph {
        graph_1(&["u", "w"], &[("a", "u", "w"), ("b", "w", "u")])
    }

    fn loop_to_loop() -> KGraph {
        graph_1(
            &["v", "w"],
            &[("f", "v", "v"), ("a", "v", "w"), ("h", "w", "w")],
        )
    }

    fn torus() -> KGraph {
        let a = single_loop();
        let b = graph_1(&["w"], &[("h", "w", "w")]);
        product_1graphs(&a, &b).unwrap()
    }

    #[test]
    fn canonical_form_and_membership() {
        let s = IntSubgroup::from_generators(2, &[vec![2, 4], vec![0, 6]]).unwrap();
        assert_eq!(s.rows(), &[vec![2, 4], vec![0, 6]]);
        assert!(s.contains(&[2, 10]));
        assert!(s.contains(&[-2, 2]));
        assert!(!s.contains(&[1, 0]));
        assert!(!s.contains(&[2, 5]));
        let t = IntSubgroup::from_generators(2, &[vec![2, 10], vec![-2, 2], vec![0, -6]]).unwrap();
        assert_eq!(s, t);
        let z2 = IntSubgroup::from_generators(2, &[vec![1, 0], vec![0, 1], vec![3, 5]]).unwrap();
        assert_eq!(z2.rows(), &[vec![1, 0], vec![0, 1]]);
        assert_eq!(z2.rank(), 2);
        assert!(IntSubgroup::from_generators(3, &[vec![0, 0, 0]])
            .unwrap()
            .is_trivial());
        let reduced = IntSubgroup::from_generators(2, &[vec![5, 7], vec![0, 3]]).unwrap();
        assert_eq!(reduced.rows(), &[vec![5, 1], vec![0, 3]]);
        assert_eq!(format!("{}", reduced), "[[5,1],[0,3]]");
        assert_eq!(format!("{}", IntSubgroup::trivial(2)), "{0}");
    }

    #[test]
    fn unique_boundary_path_shapes() {
        let g = single_loop();
        let x0 = unique_boundary_path(&g, 0).unwrap().unwrap();
        assert!(x0.prefix.is_vertex());
        assert_eq!(g.path_string(&x0.cycle), "f");
        let g = two_loops();
        assert!(unique_boundary_path(&g, 0).unwrap().is_none());
        let g = loop_to_loop();
        let w = g.vertex_idx("w").unwrap();
        let v = g.vertex_idx("v").unwrap();
        assert!(unique_boundary_path(&g, v).unwrap().is_none());
        let xw = unique_boundary_path(&g, w).unwrap().unwrap();
        assert_eq!(g.path_string(&xw.cycle), "h");
    }

    #[test]
    fn equivalence_on_a_single_loop() {
        let g = single_loop();
        let b = g.default_budget();
        let f = g.edge_path(0);
        let v = g.vertex_path(0);
        let ff = g.compose(&f, &f).unwrap();
        assert_eq!(equivalent_paths(&g, &f, &v, &b).unwrap(), Equiv::Yes);
        assert_eq!(equivalent_paths(&g, &ff, &f, &b).unwrap(), Equiv::Yes);
    }

    #[test]
    fn equivalence_with_branching_is_refuted() {
        let g = two_loops();
        let b = g.default_budget();
        let f = g.path_from_edge_ids(&["f"]).unwrap();
        let gg = g.path_from_edge_ids(&["g"]).unwrap();
        let v = g.vertex_path(0);
        let ff = g.compose(&f, &f).unwrap();
        assert!(equivalent_paths(&g, &f, &gg, &b).unwrap().is_no());
        assert!(equivalent_paths(&g, &f, &v, &b).unwrap().is_no());
        assert!(equivalent_paths(&g, &ff, &f, &b).unwrap().is_no());
    }

    #[test]
    fn per_group_frozen_values() {
        let b1 = single_loop().default_budget();
        let r = per_group(&single_loop(), &b1).unwrap();
        assert_eq!(r.subgroup.rows(), &[vec![1]]);
        assert!(r.exact && r.decided_all && r.stabilized);
        assert!(r.lambda0_is_maximal_tail);

        let g = two_loops();
        let r = per_group(&g, &g.default_budget()).unwrap();
        assert!(r.subgroup.is_trivial());
        assert!(r.exact);

        let g = two_cycle();
        let r = per_group(&g, &g.default_budget()).unwrap();
        assert_eq!(r.subgroup.rows(), &[vec![2]]);
        assert!(r.exact);

        let g = torus();
        let mut budget = g.default_budget();
        budget.degree_bound = DegreeVector(vec![3, 3]);
        let r = per_group(&g, &budget).unwrap();
        assert_eq!(r.subgroup.rows(), &[vec![1, 0], vec![0, 1]]);
        assert!(r.exact);

        let g = loop_to_loop();
        let r = per_group(&g, &g.default_budget()).unwrap();
        assert_eq!(r.subgroup.rows(), &[vec![1]]);
        assert!(r.exact);
    }

    #[test]
    fn per_group_undecided_branching_product() {
        let a = two_loops();
        let b = graph_1(&["w"], &[("h", "w", "w")]);
        let g = product_1graphs(&a, &b).unwrap();
        let mut budget = g.default_budget();
        budget.degree_bound = DegreeVector(vec![2, 2]);
        budget.presentation_bound = 3;
        let r = per_group(&g, &budget).unwrap();
        assert!(!r.decided_all);
        assert!(!r.exact);
        assert!(r.unknown_pairs > 0);
    }

    #[test]
    fn aperiodicity_verdicts() {
        let g = single_loop();
        match aperiodicity(&g, &g.default_budget()).unwrap() {
            PeriodicityVerdict::Periodic(mu, nu) => {
                assert_eq!(g.path_string(&mu), "f");
                assert!(nu.is_vertex());
            }
            v => panic!("expected periodic, got {v:?}"),
        }
        let g = two_loops();
        assert_eq!(
            aperiodicity(&g, &g.default_budget()).unwrap(),
            PeriodicityVerdict::Aperiodic
        );
        let g = two_cycle();
        match aperiodicity(&g, &g.default_budget()).unwrap() {
            PeriodicityVerdict::Periodic(mu, nu) => {
                assert_eq!(mu.degree.get(0), 2);
                assert!(nu.is_vertex());
                assert_eq!(
                    equivalent_paths(&g, &mu, &nu, &g.default_budget()).unwrap(),
                    Equiv::Yes
                );
            }
            v => panic!("expected periodic, got {v:?}"),
        }
        let g = torus();
        assert!(matches!(
            aperiodicity(&g, &g.default_budget()).unwrap(),
            PeriodicityVerdict::Periodic(_, _)
        ));
    }

    #[test]
    fn h_per_examples() {
        let g = single_loop();
        let b = g.default_budget();
        let per = per_group(&g, &b).unwrap();
        let h = h_per(&g, &per.subgroup, &b).unwrap();
        assert_eq!(h.vertices, BTreeSet::from([0]));
        assert!(h.exact);

        let g = two_loops();
        let h = h_per(&g, &IntSubgroup::trivial(1), &g.default_budget()).unwrap();
        assert_eq!(h.vertices.len(), 1);
        assert!(h.exact);

        let g = loop_to_loop();
        let b = g.default_budget();
        let per = per_group(&g, &b).unwrap();
        let h = h_per(&g, &per.subgroup, &b).unwrap();
        let w = g.vertex_idx("w").unwrap();
        assert_eq!(h.vertices, BTreeSet::from([w]));
        assert!(h.exact);
    }

    #[test]
    fn transfer_matches_on_excess_elements() {
        let a = single_loop();
        let line = graph_1(&["p", "q"], &[("c", "p", "q")]);
        let g = product_1graphs(&a, &line).unwrap();
        let b = g.default_budget();
        let vq = g.vertex_idx("v,q").unwrap();
        let loop_at_q = g.path_from_edge_ids(&["f,q"]).unwrap();
        let mu = DesElement::new(
            &g,
            loop_at_q,
            DegreeVector(vec![0, 0]),
            DegreeVector(vec![0, 1]),
        )
        .unwrap();
        let nu = DesElement::new(
            &g,
            g.vertex_path(vq),
            DegreeVector(vec![0, 0]),
            DegreeVector(vec![0, 1]),
        )
        .unwrap();
        let rep = transfer_check(&g, &mu, &nu, &b).unwrap();
        assert_eq!(rep.window_side, Equiv::Yes);
        assert_eq!(rep.core_side, Equiv::Yes);
        assert!(rep.excess_match);
        assert!(rep.consistent);

        let skew = DesElement::new(
            &g,
            g.vertex_path(vq),
            DegreeVector(vec![0, 1]),
            DegreeVector(vec![0, 1]),
        )
        .unwrap();
        assert!(transfer_check(&g, &mu, &skew, &b).is_err());
    }
}
