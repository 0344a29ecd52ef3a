use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::degree::DegreeVector;
use crate::error::{Error, Result};

/// Input description of an edge: `range --color--> source`, i.e. paths
/// traverse from range toward source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSpec {
    pub id: String,
    pub color: usize,
    pub range: String,
    pub source: String,
}

/// Input description of a commuting square `f g = g2 f2` where
/// color(f) = color(f2) < color(g) = color(g2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareSpec {
    pub f: String,
    pub g: String,
    pub g2: String,
    pub f2: String,
}

/// Raw presentation of a higher-rank graph: a colored graph plus a complete
/// associative collection of commuting squares.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KGraphSpec {
    pub rank: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
    pub squares: Vec<SquareSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub color: usize,
    pub range: usize,
    pub source: usize,
}

/// A validated higher-rank graph. Vertices and edges are indexed in id-sorted
/// order, so every derived listing is deterministic.
#[derive(Debug, Clone)]
pub struct KGraph {
    rank: usize,
    vertices: Vec<String>,
    vertex_index: HashMap<String, usize>,
    edges: Vec<Edge>,
    edge_index: HashMap<String, usize>,
    out: Vec<Vec<Vec<usize>>>,
    into: Vec<Vec<Vec<usize>>>,
    swap_asc: HashMap<(usize, usize), (usize, usize)>,
    swap_desc: HashMap<(usize, usize), (usize, usize)>,
    squares: Vec<(usize, usize, usize, usize)>,
    locally_convex: bool,
    acyclic: bool,
}

/// A morphism, stored in normal form: edge indices with ascending colors,
/// `edges[0]` at the range end. Vertex paths have no edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub range: usize,
    pub source: usize,
    pub degree: DegreeVector,
    pub edges: Vec<usize>,
}

impl Path {
    pub fn vertex(v: usize, rank: usize) -> Path {
        Path {
            range: v,
            source: v,
            degree: DegreeVector::zero(rank),
            edges: Vec::new(),
        }
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Structural summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeReport {
    pub rank: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub edges_per_color: Vec<usize>,
    pub square_count: usize,
    pub locally_convex: bool,
    pub acyclic: bool,
    pub sources: Vec<String>,
}

const HEXAGON_TRIPLE_CAP: u64 = 1_000_000;

fn check_id(id: &str) -> Result<()> {
    if id.is_empty() || id.contains(char::is_whitespace) || id.contains('#') {
        return Err(Error::Parse {
            line: 0,
            col: 0,
            msg: format!("id `{id}` is empty or contains whitespace or `#`"),
        });
    }
    Ok(())
}

impl KGraph {
    /// Validates a presentation: id uniqueness, reference integrity, square
    /// shape, completeness of the square collection in both color orders, and
    /// (for rank at least 3) associativity of tri-colored factorizations.
    pub fn build(spec: &KGraphSpec) -> Result<KGraph> {
        if spec.rank == 0 {
            return Err(Error::BadRank(0));
        }
        let rank = spec.rank;

        let mut vertices = spec.vertices.clone();
        vertices.sort();
        let mut seen: HashSet<&str> = HashSet::new();
        for v in &vertices {
            check_id(v)?;
            if !seen.insert(v) {
                return Err(Error::DuplicateId(v.clone()));
            }
        }
        let vertex_index: HashMap<String, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();

        let mut edge_specs = spec.edges.clone();
        edge_specs.sort_by(|a, b| a.id.cmp(&b.id));
        let mut edges = Vec::with_capacity(edge_specs.len());
        for e in &edge_specs {
            check_id(&e.id)?;
            if seen.contains(e.id.as_str()) {
                return Err(Error::DuplicateId(e.id.clone()));
            }
            if e.color >= rank {
                return Err(Error::BadColor {
                    edge: e.id.clone(),
                    color: e.color,
                    rank,
                });
            }
            let range = *vertex_index.get(&e.range).ok_or_else(|| Error::DanglingReference {
                edge: e.id.clone(),
                vertex: e.range.clone(),
            })?;
            let source = *vertex_index.get(&e.source).ok_or_else(|| Error::DanglingReference {
                edge: e.id.clone(),
                vertex: e.source.clone(),
            })?;
            edges.push(Edge {
                id: e.id.clone(),
                color: e.color,
                range,
                source,
            });
        }
        for e in &edges {
            seen.insert(&e.id);
        }
        drop(seen);
        let mut edge_seen: HashSet<&str> = HashSet::new();
        for e in &edges {
            if !edge_seen.insert(&e.id) {
                return Err(Error::DuplicateId(e.id.clone()));
            }
        }
        let edge_index: HashMap<String, usize> = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.clone(), i))
            .collect();

        let mut out = vec![vec![Vec::new(); rank]; vertices.len()];
        let mut into = vec![vec![Vec::new(); rank]; vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            out[e.range][e.color].push(i);
            into[e.source][e.color].push(i);
        }

        let mut swap_asc = HashMap::new();
        let mut swap_desc = HashMap::new();
        let mut squares = Vec::with_capacity(spec.squares.len());
        for sq in &spec.squares {
            let lookup = |id: &str| {
                edge_index.get(id).copied().ok_or_else(|| Error::UnknownEdge(id.to_string()))
            };
            let f = lookup(&sq.f)?;
            let g = lookup(&sq.g)?;
            let g2 = lookup(&sq.g2)?;
            let f2 = lookup(&sq.f2)?;
            let bad = |msg: &str| {
                Error::InvalidSquare(
                    sq.f.clone(),
                    sq.g.clone(),
                    sq.g2.clone(),
                    sq.f2.clone(),
                    msg.to_string(),
                )
            };
            let (ef, eg, eg2, ef2) = (&edges[f], &edges[g], &edges[g2], &edges[f2]);
            if ef.color != ef2.color || eg.color != eg2.color {
                return Err(bad("colors of paired edges differ"));
            }
            if ef.color >= eg.color {
                return Err(bad("first color must be strictly smaller"));
            }
            if ef.source != eg.range {
                return Err(bad("f and g are not composable"));
            }
            if eg2.source != ef2.range {
                return Err(bad("g2 and f2 are not composable"));
            }
            if ef.range != eg2.range {
                return Err(bad("ranges differ"));
            }
            if eg.source != ef2.source {
                return Err(bad("sources differ"));
            }
            if swap_asc.insert((f, g), (g2, f2)).is_some() {
                return Err(Error::DuplicateSquare(sq.f.clone(), sq.g.clone()));
            }
            if swap_desc.insert((g2, f2), (f, g)).is_some() {
                return Err(Error::DuplicateSquare(sq.g2.clone(), sq.f2.clone()));
            }
            squares.push((f, g, g2, f2));
        }
        squares.sort();

        // Completeness: every composable bi-colored pair factors both ways.
        for (i, a) in edges.iter().enumerate() {
            for (j, b) in edges.iter().enumerate() {
                if a.source != b.range || a.color == b.color {
                    continue;
                }
                if a.color < b.color {
                    if !swap_asc.contains_key(&(i, j)) {
                        return Err(Error::MissingSquare(a.id.clone(), b.id.clone()));
                    }
                } else if !swap_desc.contains_key(&(i, j)) {
                    return Err(Error::MissingSquare(a.id.clone(), b.id.clone()));
                }
            }
        }

        let g = KGraph {
            rank,
            vertices,
            vertex_index,
            edges,
            edge_index,
            out,
            into,
            swap_asc,
            swap_desc,
            squares,
            locally_convex: false,
            acyclic: false,
        };
        if rank >= 3 {
            g.check_hexagons()?;
        }
        let locally_convex = g.compute_locally_convex();
        let acyclic = g.compute_acyclic();
        Ok(KGraph {
            locally_convex,
            acyclic,
            ..g
        })
    }

    /// Tri-colored composable words must sort to the same normal form along
    /// both elementary transposition routes.
    fn check_hexagons(&self) -> Result<()> {
        let mut count: u64 = 0;
        for (i1, h1) in self.edges.iter().enumerate() {
            for &i2 in self.out[h1.source].iter().flatten() {
                let h2 = &self.edges[i2];
                if h2.color >= h1.color {
                    continue;
                }
                for &i3 in self.out[h2.source].iter().flatten() {
                    let h3 = &self.edges[i3];
                    if h3.color >= h2.color {
                        continue;
                    }
                    count += 1;
                    if count > HEXAGON_TRIPLE_CAP {
                        return Err(Error::TooLarge(
                            "too many tri-colored triples to check associativity".into(),
                        ));
                    }
                    // Route A: transpose (0,1), (1,2), (0,1).
                    let (a1, b1) = self.swap_desc[&(i1, i2)];
                    let (b2, c2) = self.swap_desc[&(b1, i3)];
                    let (a3, b3) = self.swap_desc[&(a1, b2)];
                    let route_a = (a3, b3, c2);
                    // Route B: transpose (1,2), (0,1), (1,2).
                    let (x1, y1) = self.swap_desc[&(i2, i3)];
                    let (x2, y2) = self.swap_desc[&(i1, x1)];
                    let (y3, z3) = self.swap_desc[&(y2, y1)];
                    let route_b = (x2, y3, z3);
                    if route_a != route_b {
                        return Err(Error::AssociativityViolation(
                            h1.id.clone(),
                            h2.id.clone(),
                            h3.id.clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// A graph is locally convex when an edge of one color never leads to a
    /// vertex missing another color that its range has.
    fn compute_locally_convex(&self) -> bool {
        for v in 0..self.vertices.len() {
            for i in 0..self.rank {
                for j in 0..self.rank {
                    if i == j || self.out[v][j].is_empty() {
                        continue;
                    }
                    for &e in &self.out[v][i] {
                        if self.out[self.edges[e].source][j].is_empty() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn compute_acyclic(&self) -> bool {
        // Iterative three-color DFS over the full 1-skeleton.
        let n = self.vertices.len();
        let mut state = vec![0u8; n];
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            state[start] = 1;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                let succ: Vec<usize> = self.out[v]
                    .iter()
                    .flatten()
                    .map(|&e| self.edges[e].source)
                    .collect();
                if *next < succ.len() {
                    let w = succ[*next];
                    *next += 1;
                    match state[w] {
                        0 => {
                            state[w] = 1;
                            stack.push((w, 0));
                        }
                        1 => return false,
                        _ => {}
                    }
                } else {
                    state[v] = 2;
                    stack.pop();
                }
            }
        }
        true
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_idx(&self, id: &str) -> Result<usize> {
        self.vertex_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_idx(&self, id: &str) -> Result<usize> {
        self.edge_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(id.to_string()))
    }

    pub fn out_edges(&self, v: usize, color: usize) -> &[usize] {
        &self.out[v][color]
    }

    pub fn in_edges(&self, v: usize, color: usize) -> &[usize] {
        &self.into[v][color]
    }

    /// Square list as (f, g, g2, f2) edge indices, sorted.
    pub fn squares(&self) -> &[(usize, usize, usize, usize)] {
        &self.squares
    }

    pub fn is_locally_convex(&self) -> bool {
        self.locally_convex
    }

    pub fn is_acyclic(&self) -> bool {
        self.acyclic
    }

    /// No outgoing edge of the given color.
    pub fn blocked(&self, v: usize, color: usize) -> bool {
        self.out[v][color].is_empty()
    }

    pub fn blocked_on_all(&self, v: usize, colors: &[usize]) -> bool {
        colors.iter().all(|&c| self.blocked(v, c))
    }

    /// Vertices missing at least one color of outgoing edge.
    pub fn source_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&v| (0..self.rank).any(|c| self.blocked(v, c)))
            .collect()
    }

    pub fn shape(&self) -> ShapeReport {
        let mut edges_per_color = vec![0; self.rank];
        for e in &self.edges {
            edges_per_color[e.color] += 1;
        }
        ShapeReport {
            rank: self.rank,
            vertex_count: self.vertices.len(),
            edge_count: self.edges.len(),
            edges_per_color,
            square_count: self.squares.len(),
            locally_convex: self.locally_convex,
            acyclic: self.acyclic,
            sources: self
                .source_vertices()
                .into_iter()
                .map(|v| self.vertices[v].clone())
                .collect(),
        }
    }

    pub fn default_budget(&self) -> crate::budget::BudgetConfig {
        crate::budget::BudgetConfig::defaults(self.rank, self.vertices.len())
    }

    pub fn vertex_path(&self, v: usize) -> Path {
        Path::vertex(v, self.rank)
    }

    pub fn edge_path(&self, e: usize) -> Path {
        let edge = &self.edges[e];
        Path {
            range: edge.range,
            source: edge.source,
            degree: DegreeVector::unit(self.rank, edge.color),
            edges: vec![e],
        }
    }

    /// Sorts a composable edge word into ascending colors by applying
    /// commuting squares to adjacent descending pairs.
    fn normalize(&self, mut word: Vec<usize>) -> Vec<usize> {
        let n = word.len();
        loop {
            let mut swapped = false;
            for i in 1..n {
                let (a, b) = (word[i - 1], word[i]);
                if self.edges[a].color > self.edges[b].color {
                    let (f, g) = self.swap_desc[&(a, b)];
                    word[i - 1] = f;
                    word[i] = g;
                    swapped = true;
                }
            }
            if !swapped {
                return word;
            }
        }
    }

    /// Builds the path for a composable edge word (any color order).
    pub fn path_from_edges(&self, word: &[usize]) -> Result<Path> {
        if word.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut degree = DegreeVector::zero(self.rank);
        for w in word.windows(2) {
            let (a, b) = (&self.edges[w[0]], &self.edges[w[1]]);
            if a.source != b.range {
                return Err(Error::NotComposable(
                    self.vertices[a.source].clone(),
                    self.vertices[b.range].clone(),
                ));
            }
        }
        for &e in word {
            let c = self.edges[e].color;
            degree.0[c] += 1;
        }
        let range = self.edges[word[0]].range;
        let source = self.edges[*word.last().unwrap()].source;
        let edges = self.normalize(word.to_vec());
        Ok(Path {
            range,
            source,
            degree,
            edges,
        })
    }

    pub fn path_from_edge_ids(&self, ids: &[&str]) -> Result<Path> {
        let word: Vec<usize> = ids
            .iter()
            .map(|id| self.edge_idx(id))
            .collect::<Result<_>>()?;
        self.path_from_edges(&word)
    }

    pub fn compose(&self, a: &Path, b: &Path) -> Result<Path> {
        if a.source != b.range {
            return Err(Error::NotComposable(
                self.vertices[a.source].clone(),
                self.vertices[b.range].clone(),
            ));
        }
        let mut word = a.edges.clone();
        word.extend_from_slice(&b.edges);
        Ok(Path {
            range: a.range,
            source: b.source,
            degree: a.degree.add(&b.degree),
            edges: self.normalize(word),
        })
    }

    /// Splits `p` as head of degree `m` followed by the complementary tail.
    /// The head is peeled off the range end color by color: the leftmost edge
    /// of the wanted color is bubbled to the front through squares.
    pub fn factorize(&self, p: &Path, m: &DegreeVector) -> Result<(Path, Path)> {
        if m.rank() != self.rank {
            return Err(Error::BadDegree {
                expected: self.rank,
                got: m.rank(),
            });
        }
        if !m.le(&p.degree) {
            return Err(Error::OutOfRange {
                requested: m.0.clone(),
                degree: p.degree.0.clone(),
            });
        }
        let mut word = p.edges.clone();
        let mut head = Vec::new();
        for c in 0..self.rank {
            for _ in 0..m.get(c) {
                let pos = word
                    .iter()
                    .position(|&e| self.edges[e].color == c)
                    .expect("degree accounts for every color");
                for i in (0..pos).rev() {
                    let (a, b) = (word[i], word[i + 1]);
                    let (g2, f2) = self.swap_asc[&(a, b)];
                    word[i] = g2;
                    word[i + 1] = f2;
                }
                head.push(word.remove(0));
            }
        }
        let mid = if let Some(&e) = head.last() {
            self.edges[e].source
        } else {
            p.range
        };
        let tail_degree = p.degree.checked_sub(m)?;
        Ok((
            Path {
                range: p.range,
                source: mid,
                degree: m.clone(),
                edges: head,
            },
            Path {
                range: mid,
                source: p.source,
                degree: tail_degree,
                edges: word,
            },
        ))
    }

    /// The sub-path of `p` between degrees `a` and `b`.
    pub fn segment_path(&self, p: &Path, a: &DegreeVector, b: &DegreeVector) -> Result<Path> {
        if !a.le(b) {
            return Err(Error::OutOfRange {
                requested: a.0.clone(),
                degree: b.0.clone(),
            });
        }
        let (head, _) = self.factorize(p, b)?;
        let (_, mid) = self.factorize(&head, a)?;
        Ok(mid)
    }

    /// All paths with the given range and degree, in normal-form order.
    pub fn paths_of_degree(&self, v: usize, m: &DegreeVector) -> Result<Vec<Path>> {
        if m.rank() != self.rank {
            return Err(Error::BadDegree {
                expected: self.rank,
                got: m.rank(),
            });
        }
        let mut acc = Vec::new();
        let mut word = Vec::new();
        self.paths_rec(v, v, m, &mut DegreeVector::zero(self.rank), &mut word, &mut acc);
        Ok(acc)
    }

    fn paths_rec(
        &self,
        range: usize,
        cur: usize,
        m: &DegreeVector,
        taken: &mut DegreeVector,
        word: &mut Vec<usize>,
        acc: &mut Vec<Path>,
    ) {
        let c = match (0..self.rank).find(|&c| taken.get(c) < m.get(c)) {
            None => {
                acc.push(Path {
                    range,
                    source: cur,
                    degree: m.clone(),
                    edges: word.clone(),
                });
                return;
            }
            Some(c) => c,
        };
        for &e in &self.out[cur][c] {
            taken.0[c] += 1;
            word.push(e);
            self.paths_rec(range, self.edges[e].source, m, taken, word, acc);
            word.pop();
            taken.0[c] -= 1;
        }
    }

    /// All paths p with range v, degree at most n, whose source is blocked on
    /// every color where the degree falls short of n.
    pub fn le_paths(&self, v: usize, n: &DegreeVector) -> Result<Vec<Path>> {
        if n.rank() != self.rank {
            return Err(Error::BadDegree {
                expected: self.rank,
                got: n.rank(),
            });
        }
        let mut acc = Vec::new();
        let mut word = Vec::new();
        self.le_paths_rec(v, v, 0, n, &mut DegreeVector::zero(self.rank), &mut word, &mut acc);
        Ok(acc)
    }

    fn le_paths_rec(
        &self,
        range: usize,
        cur: usize,
        min_color: usize,
        n: &DegreeVector,
        taken: &mut DegreeVector,
        word: &mut Vec<usize>,
        acc: &mut Vec<Path>,
    ) {
        let maximal = (0..self.rank).all(|c| taken.get(c) == n.get(c) || self.blocked(cur, c));
        if maximal {
            acc.push(Path {
                range,
                source: cur,
                degree: taken.clone(),
                edges: word.clone(),
            });
        }
        for c in min_color..self.rank {
            if taken.get(c) >= n.get(c) {
                continue;
            }
            for &e in &self.out[cur][c] {
                taken.0[c] += 1;
                word.push(e);
                self.le_paths_rec(range, self.edges[e].source, c, n, taken, word, acc);
                word.pop();
                taken.0[c] -= 1;
            }
        }
    }

    pub fn path_string(&self, p: &Path) -> String {
        if p.is_vertex() {
            self.vertices[p.range].clone()
        } else {
            p.edges
                .iter()
                .map(|&e| self.edges[e].id.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    pub fn spec(&self) -> KGraphSpec {
        KGraphSpec {
            rank: self.rank,
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeSpec {
                    id: e.id.clone(),
                    color: e.color,
                    range: self.vertices[e.range].clone(),
                    source: self.vertices[e.source].clone(),
                })
                .collect(),
            squares: self
                .squares
                .iter()
                .map(|&(f, g, g2, f2)| SquareSpec {
                    f: self.edges[f].id.clone(),
                    g: self.edges[g].id.clone(),
                    g2: self.edges[g2].id.clone(),
                    f2: self.edges[f2].id.clone(),
                })
                .collect(),
        }
    }
}

impl fmt::Display for KGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank-{} graph: {} vertices, {} edges, {} squares",
            self.rank,
            self.vertices.len(),
            self.edges.len(),
            self.squares.len()
        )
    }
}

/// Grid graph on {p : p <= shape} with one edge of color c from p to p + e_c.
pub fn omega_graph(shape: &DegreeVector) -> Result<KGraph> {
    let rank = shape.rank();
    if rank == 0 {
        return Err(Error::BadRank(0));
    }
    let mut total: u64 = 1;
    for &c in &shape.0 {
        total = total.saturating_mul(c as u64 + 1);
        if total > 100_000 {
            return Err(Error::TooLarge("grid graph exceeds 100000 vertices".into()));
        }
    }
    let mut coords = vec![vec![0u32; rank]];
    for c in 0..rank {
        let mut next = Vec::new();
        for base in &coords {
            for val in 0..=shape.get(c) {
                let mut p = base.clone();
                p[c] = val;
                next.push(p);
            }
        }
        coords = next;
    }
    let name = |p: &[u32]| {
        p.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join("_")
    };
    let vertices: Vec<String> = coords.iter().map(|p| name(p)).collect();
    let mut edges = Vec::new();
    for p in &coords {
        for c in 0..rank {
            if p[c] < shape.get(c) {
                let mut q = p.clone();
                q[c] += 1;
                edges.push(EdgeSpec {
                    id: format!("c{}_{}", c, name(p)),
                    color: c,
                    range: name(p),
                    source: name(&q),
                });
            }
        }
    }
    let mut squares = Vec::new();
    for p in &coords {
        for i in 0..rank {
            for j in (i + 1)..rank {
                if p[i] < shape.get(i) && p[j] < shape.get(j) {
                    let mut pi = p.clone();
                    pi[i] += 1;
                    let mut pj = p.clone();
                    pj[j] += 1;
                    squares.push(SquareSpec {
                        f: format!("c{}_{}", i, name(p)),
                        g: format!("c{}_{}", j, name(&pi)),
                        g2: format!("c{}_{}", j, name(p)),
                        f2: format!("c{}_{}", i, name(&pj)),
                    });
                }
            }
        }
    }
    KGraph::build(&KGraphSpec {
        rank,
        vertices,
        edges,
        squares,
    })
}

/// Product of two rank-1 graphs: vertices are pairs, color 0 moves in the
/// first factor, color 1 in the second, squares are the evident grid squares.
pub fn product_1graphs(g1: &KGraph, g2: &KGraph) -> Result<KGraph> {
    if g1.rank() != 1 || g2.rank() != 1 {
        return Err(Error::Precondition(
            "product factors must have rank 1".into(),
        ));
    }
    let pair = |a: &str, b: &str| format!("{a},{b}");
    let mut vertices = Vec::new();
    for v1 in g1.vertex_ids() {
        for v2 in g2.vertex_ids() {
            vertices.push(pair(v1, v2));
        }
    }
    let mut edges = Vec::new();
    for e in g1.edges() {
        for v2 in g2.vertex_ids() {
            edges.push(EdgeSpec {
                id: pair(&e.id, v2),
                color: 0,
                range: pair(g1.vertex_id(e.range), v2),
                source: pair(g1.vertex_id(e.source), v2),
            });
        }
    }
    for v1 in g1.vertex_ids() {
        for f in g2.edges() {
            edges.push(EdgeSpec {
                id: pair(v1, &f.id),
                color: 1,
                range: pair(v1, g2.vertex_id(f.range)),
                source: pair(v1, g2.vertex_id(f.source)),
            });
        }
    }
    let mut squares = Vec::new();
    for e in g1.edges() {
        for f in g2.edges() {
            squares.push(SquareSpec {
                f: pair(&e.id, g2.vertex_id(f.range)),
                g: pair(g1.vertex_id(e.source), &f.id),
                g2: pair(g1.vertex_id(e.range), &f.id),
                f2: pair(&e.id, g2.vertex_id(f.source)),
            });
        }
    }
    KGraph::build(&KGraphSpec {
        rank: 2,
        vertices,
        edges,
        squares,
    })
}
