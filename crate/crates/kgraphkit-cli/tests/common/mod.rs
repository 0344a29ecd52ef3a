//! Shared fixture corpus for the integration suites: a set of small named
//! graphs with well-understood invariants, plus two seeded random families
//! (products of 1-graphs, and crossed 2-graphs whose squares are induced by
//! a vertex involution with optional twists on parallel edges).

#![allow(dead_code)]

use kgraphkit::degree::DegreeVector;
use kgraphkit::skeleton::{
    omega_graph, product_1graphs, EdgeSpec, KGraph, KGraphSpec, SquareSpec,
};

pub fn vx(id: &str) -> String {
    id.to_string()
}

pub fn ed(id: &str, color: usize, range: &str, source: &str) -> EdgeSpec {
    EdgeSpec {
        id: id.into(),
        color,
        range: range.into(),
        source: source.into(),
    }
}

pub fn sq(f: &str, g: &str, g2: &str, f2: &str) -> SquareSpec {
    SquareSpec {
        f: f.into(),
        g: g.into(),
        g2: g2.into(),
        f2: f2.into(),
    }
}

pub fn build(rank: usize, vertices: Vec<String>, edges: Vec<EdgeSpec>, squares: Vec<SquareSpec>) -> KGraph {
    let spec = KGraphSpec {
        rank,
        vertices,
        edges,
        squares,
    };
    KGraph::build(&spec).expect("fixture builds")
}

/// One vertex, one loop.
pub fn single_loop() -> KGraph {
    build(1, vec![vx("v")], vec![ed("f", 0, "v", "v")], vec![])
}

/// One vertex, two parallel loops.
pub fn two_loops() -> KGraph {
    build(
        1,
        vec![vx("v")],
        vec![ed("f", 0, "v", "v"), ed("g", 0, "v", "v")],
        vec![],
    )
}

/// Two vertices on one directed 2-cycle.
pub fn two_cycle() -> KGraph {
    build(
        1,
        vec![vx("v"), vx("w")],
        vec![ed("f", 0, "v", "w"), ed("g", 0, "w", "v")],
        vec![],
    )
}

/// A single edge between two vertices; `w` is blocked.
pub fn single_edge() -> KGraph {
    build(1, vec![vx("v"), vx("w")], vec![ed("f", 0, "v", "w")], vec![])
}

/// Loop at `v`, bridge to `w`, loop at `w`.
pub fn loop_to_loop() -> KGraph {
    build(
        1,
        vec![vx("v"), vx("w")],
        vec![
            ed("f", 0, "v", "v"),
            ed("g", 0, "v", "w"),
            ed("h", 0, "w", "w"),
        ],
        vec![],
    )
}

/// `n` vertices, no edges.
pub fn isolated(n: usize) -> KGraph {
    build(
        1,
        (0..n).map(|i| vx(&format!("v{i}"))).collect(),
        vec![],
        vec![],
    )
}

/// The box graph with the given per-color extent.
pub fn omega(shape: &[u32]) -> KGraph {
    omega_graph(&DegreeVector(shape.to_vec())).expect("box graph builds")
}

/// Product of two independent single loops: one vertex, one loop per color.
pub fn torus() -> KGraph {
    product_1graphs(&single_loop(), &single_loop()).expect("product builds")
}

/// Named rank-1 fixtures.
pub fn rank1_fixtures() -> Vec<(&'static str, KGraph)> {
    vec![
        ("single_loop", single_loop()),
        ("two_loops", two_loops()),
        ("two_cycle", two_cycle()),
        ("single_edge", single_edge()),
        ("loop_to_loop", loop_to_loop()),
        ("two_isolated", isolated(2)),
        ("three_isolated", isolated(3)),
        ("four_isolated", isolated(4)),
        ("line_2", omega(&[2])),
    ]
}

/// Named fixtures of every rank.
pub fn named_fixtures() -> Vec<(String, KGraph)> {
    let mut out: Vec<(String, KGraph)> = rank1_fixtures()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .collect();
    out.push(("torus".into(), torus()));
    out.push(("grid_1_1".into(), omega(&[1, 1])));
    out.push(("cube_1_1_1".into(), omega(&[1, 1, 1])));
    out
}

/// xorshift64* generator; deterministic across platforms.
pub struct Rng64(u64);

impl Rng64 {
    pub fn new(seed: u64) -> Rng64 {
        Rng64(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    /// Uniform draw from `0..n`.
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.next_u64() % den < num
    }
}

/// Random 1-graph: up to `max_v` vertices, at most 2 parallel edges per
/// ordered pair, per-vertex out-degree at most 2.
pub fn random_1graph(rng: &mut Rng64, max_v: usize, tag: &str) -> KGraph {
    let n = 1 + rng.below(max_v);
    let vertices: Vec<String> = (0..n).map(|i| format!("{tag}{i}")).collect();
    let mut edges = Vec::new();
    let mut out_deg = vec![0usize; n];
    let attempts = 1 + rng.below(2 * n);
    for a in 0..attempts {
        let v = rng.below(n);
        let w = rng.below(n);
        if out_deg[v] >= 2 {
            continue;
        }
        out_deg[v] += 1;
        edges.push(ed(
            &format!("{tag}e{a}"),
            0,
            &format!("{tag}{v}"),
            &format!("{tag}{w}"),
        ));
    }
    build(1, vertices, edges, vec![])
}

/// Thirty seeded products of pairs of random 1-graphs (at most 6 vertices).
pub fn random_products() -> Vec<KGraph> {
    let mut out = Vec::new();
    let mut rng = Rng64::new(0x9e37_79b9_7f4a_7c15);
    while out.len() < 30 {
        let a = random_1graph(&mut rng, 3, "a");
        let b = random_1graph(&mut rng, 2, "b");
        if a.vertex_count() * b.vertex_count() > 6 {
            continue;
        }
        out.push(product_1graphs(&a, &b).expect("random product builds"));
    }
    out
}

/// Twenty seeded crossed 2-graphs. Color 1 realizes an involution `sigma`
/// of the vertex set (one out-edge per vertex); the color-0 edge multiset
/// is closed under `sigma`, and each commuting square pairs a color-0 edge
/// with its `sigma`-translate, optionally twisted on parallel pairs. Both
/// factorization directions are bijective by construction, so the result
/// is a complete, locally convex 2-graph.
pub fn random_crossed() -> Vec<KGraph> {
    let mut out = Vec::new();
    let mut rng = Rng64::new(0xa076_1d64_78bd_642f);
    while out.len() < 20 {
        let n = 1 + rng.below(4);
        // sigma: identity, or swap two distinct vertices.
        let mut sigma: Vec<usize> = (0..n).collect();
        if n >= 2 && rng.chance(1, 2) {
            let i = rng.below(n);
            let mut j = rng.below(n);
            while j == i {
                j = rng.below(n);
            }
            sigma.swap(i, j);
        }
        // Color-0 edge counts per (range, source), closed under sigma.
        let mut counts = std::collections::BTreeMap::<(usize, usize), usize>::new();
        let seeds = 1 + rng.below(2 * n);
        for _ in 0..seeds {
            let v = rng.below(n);
            let w = rng.below(n);
            let mirror = (sigma[v], sigma[w]);
            let c1 = *counts.get(&(v, w)).unwrap_or(&0);
            let c2 = *counts.get(&mirror).unwrap_or(&0);
            if c1 >= 2 || c2 >= 2 {
                continue;
            }
            *counts.entry((v, w)).or_insert(0) += 1;
            if mirror != (v, w) {
                *counts.entry(mirror).or_insert(0) += 1;
            }
        }
        let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut edges: Vec<EdgeSpec> = (0..n)
            .map(|i| ed(&format!("b{i}"), 1, &format!("v{i}"), &format!("v{}", sigma[i])))
            .collect();
        let name = |v: usize, w: usize, i: usize| format!("r{v}_{w}_{i}");
        for (&(v, w), &c) in &counts {
            for i in 0..c {
                edges.push(ed(&name(v, w, i), 0, &format!("v{v}"), &format!("v{w}")));
            }
        }
        // Squares: e followed by the color-1 edge at its source equals the
        // color-1 edge at its range followed by phi(e).
        let mut squares = Vec::new();
        for (&(v, w), &c) in &counts {
            let twist = c == 2 && rng.chance(1, 2);
            for i in 0..c {
                let img = if twist { c - 1 - i } else { i };
                squares.push(sq(
                    &name(v, w, i),
                    &format!("b{w}"),
                    &format!("b{v}"),
                    &name(sigma[v], sigma[w], img),
                ));
            }
        }
        out.push(build(2, vertices, edges, squares));
    }
    out
}

/// The full random corpus: products first, crossed graphs after.
pub fn random_corpus() -> Vec<KGraph> {
    let mut out = random_products();
    out.extend(random_crossed());
    out
}
