//! Splitting a graph into a direct sum: the delta/omega split of nested
//! hereditary saturated sets, the succession relation it induces, chains of
//! successive sets, and the decomposition a maximal chain produces.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ideals::{
    classify_subset, downstream, enumerate_hs_lattice, saturate, subgraph_remove, VertexSet,
};
use crate::skeleton::KGraph;
use crate::tails_prim::LATTICE_CAP;

/// The split of `H1` over a nested `H2`: `delta` collects the members of
/// `H1` with no future in `H2`, `omega` the remaining members outside
/// `H2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaOmega {
    pub delta: VertexSet,
    pub omega: VertexSet,
}

fn require_hs(g: &KGraph, set: &VertexSet) -> Result<()> {
    let report = classify_subset(g, set);
    if !report.hereditary {
        return Err(Error::NotHereditary(report.hereditary_witness.unwrap()));
    }
    if !report.saturated {
        return Err(Error::Precondition(format!(
            "set is not saturated: vertex `{}` is forced in",
            report.saturation_witness.unwrap()
        )));
    }
    Ok(())
}

/// Computes the delta/omega split of two nested hereditary saturated sets.
/// `delta` is itself hereditary: a future of a vertex with no future in
/// `H2` has none either.
pub fn delta_omega(g: &KGraph, h1: &VertexSet, h2: &VertexSet) -> Result<DeltaOmega> {
    require_hs(g, h1)?;
    require_hs(g, h2)?;
    if !h2.is_subset(h1) {
        return Err(Error::NotNested);
    }
    let mut delta = VertexSet::new();
    for &v in h1 {
        if downstream(g, v).intersection(h2).next().is_none() {
            delta.insert(v);
        }
    }
    let omega: VertexSet = h1
        .iter()
        .copied()
        .filter(|v| !h2.contains(v) && !delta.contains(v))
        .collect();
    Ok(DeltaOmega { delta, omega })
}

/// Whether `H1` succeeds `H2`: the sets are nested, some member of `H1`
/// has no future in `H2`, and every remaining member outside `H2` is
/// swallowed by saturating `H2` together with the futureless part.
pub fn succeeds(g: &KGraph, h1: &VertexSet, h2: &VertexSet) -> Result<bool> {
    require_hs(g, h1)?;
    require_hs(g, h2)?;
    if !h2.is_subset(h1) {
        return Ok(false);
    }
    let split = delta_omega(g, h1, h2)?;
    if split.delta.is_empty() {
        return Ok(false);
    }
    let mut seed = h2.clone();
    seed.extend(split.delta.iter().copied());
    let closure = saturate(g, &seed);
    Ok(split.omega.is_subset(&closure))
}

/// Searches the hereditary saturated lattice for two disjoint nonempty
/// elements whose union saturates to the whole vertex set. Such a pair
/// witnesses that the graph splits as a direct sum.
pub fn decomposability(g: &KGraph) -> Result<Option<(VertexSet, VertexSet)>> {
    let lattice = enumerate_hs_lattice(g, LATTICE_CAP)?;
    let n = g.vertex_count();
    for (i, a) in lattice.elements.iter().enumerate() {
        if a.is_empty() {
            continue;
        }
        for b in lattice.elements.iter().skip(i + 1) {
            if b.is_empty() || a.intersection(b).next().is_some() {
                continue;
            }
            let mut u = a.clone();
            u.extend(b.iter().copied());
            if saturate(g, &u).len() == n {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

/// All maximal chains of nonempty hereditary saturated sets starting at
/// the whole vertex set, each consecutive pair in the succession relation.
/// A chain is maximal when no nonempty set can be appended below its last
/// element and none inserted between consecutive elements.
pub fn chains(g: &KGraph) -> Result<Vec<Vec<VertexSet>>> {
    let lattice = enumerate_hs_lattice(g, LATTICE_CAP)?;
    let elements: Vec<VertexSet> = lattice
        .elements
        .iter()
        .filter(|e| !e.is_empty())
        .cloned()
        .collect();
    let full: VertexSet = (0..g.vertex_count()).collect();
    let top = elements
        .iter()
        .position(|e| *e == full)
        .ok_or_else(|| Error::Precondition("vertex set missing from lattice".into()))?;
    let mut succ_cache: HashMap<(usize, usize), bool> = HashMap::new();
    let succ = |a: usize, b: usize, cache: &mut HashMap<(usize, usize), bool>| -> Result<bool> {
        if let Some(&v) = cache.get(&(a, b)) {
            return Ok(v);
        }
        let v = succeeds(g, &elements[a], &elements[b])?;
        cache.insert((a, b), v);
        Ok(v)
    };
    let mut complete: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![top]];
    while let Some(chain) = stack.pop() {
        let last = *chain.last().unwrap();
        let mut extended = false;
        for (i, e) in elements.iter().enumerate() {
            if e.len() < elements[last].len()
                && e.is_subset(&elements[last])
                && succ(last, i, &mut succ_cache)?
            {
                let mut next = chain.clone();
                next.push(i);
                stack.push(next);
                extended = true;
            }
        }
        if !extended {
            complete.push(chain);
        }
    }
    let mut maximal: Vec<Vec<VertexSet>> = Vec::new();
    'chains: for chain in complete {
        for w in chain.windows(2) {
            let (a, b) = (w[0], w[1]);
            for (i, e) in elements.iter().enumerate() {
                if e.len() < elements[a].len()
                    && elements[b].len() < e.len()
                    && e.is_subset(&elements[a])
                    && elements[b].is_subset(e)
                    && succ(a, i, &mut succ_cache)?
                    && succ(i, b, &mut succ_cache)?
                {
                    continue 'chains;
                }
            }
        }
        maximal.push(chain.iter().map(|&i| elements[i].clone()).collect());
    }
    maximal.sort();
    maximal.dedup();
    Ok(maximal)
}

/// A direct-sum decomposition derived from a maximal chain, with the
/// invariants it was checked against.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    /// The maximal chain the decomposition came from.
    pub chain: Vec<VertexSet>,
    /// The summand seeds: saturated futureless parts of consecutive chain
    /// steps, the last chain element verbatim.
    pub summands: Vec<VertexSet>,
    /// The summand subgraphs, each obtained by removing the saturation of
    /// all the other summands.
    pub components: Vec<KGraph>,
    pub n: usize,
    pub summands_disjoint: bool,
    /// The union of the summands saturates to the whole vertex set.
    pub union_saturates_to_all: bool,
    /// Each chain element is recovered as the saturation of the summands
    /// from its position on.
    pub chain_recovered: bool,
    /// Every maximal chain yields the same summand multiset.
    pub summands_unique_across_chains: bool,
}

/// Builds the summands and components from one maximal chain, without
/// cross-chain uniqueness information.
pub fn decompose_from_chain(g: &KGraph, chain: &[VertexSet]) -> Result<DecompositionReport> {
    if chain.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = chain.len();
    let mut summands: Vec<VertexSet> = Vec::with_capacity(n);
    for i in 0..n {
        if i + 1 < n {
            let split = delta_omega(g, &chain[i], &chain[i + 1])?;
            summands.push(saturate(g, &split.delta));
        } else {
            summands.push(chain[i].clone());
        }
    }
    let mut summands_disjoint = true;
    for i in 0..n {
        for j in i + 1..n {
            if summands[i].intersection(&summands[j]).next().is_some() {
                summands_disjoint = false;
            }
        }
    }
    let saturate_union = |parts: &[&VertexSet]| {
        let mut u = VertexSet::new();
        for p in parts {
            u.extend(p.iter().copied());
        }
        saturate(g, &u)
    };
    let all: Vec<&VertexSet> = summands.iter().collect();
    let union_saturates_to_all = saturate_union(&all).len() == g.vertex_count();
    let mut chain_recovered = true;
    for i in 0..n {
        let tail: Vec<&VertexSet> = summands[i..].iter().collect();
        if saturate_union(&tail) != chain[i] {
            chain_recovered = false;
        }
    }
    let mut components = Vec::with_capacity(n);
    for i in 0..n {
        let others: Vec<&VertexSet> = summands
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, s)| s)
            .collect();
        let removed = saturate_union(&others);
        components.push(subgraph_remove(g, &removed)?);
    }
    Ok(DecompositionReport {
        chain: chain.to_vec(),
        summands,
        components,
        n,
        summands_disjoint,
        union_saturates_to_all,
        chain_recovered,
        summands_unique_across_chains: true,
    })
}

/// Decomposes the graph along its first maximal chain and certifies that
/// every other maximal chain yields the same summand multiset.
pub fn decompose(g: &KGraph) -> Result<DecompositionReport> {
    let all_chains = chains(g)?;
    let first = all_chains
        .first()
        .ok_or_else(|| Error::Precondition("no maximal chain found".into()))?;
    let mut report = decompose_from_chain(g, first)?;
    let mut sorted = report.summands.clone();
    sorted.sort();
    for other in &all_chains[1..] {
        let alt = decompose_from_chain(g, other)?;
        let mut alt_sorted = alt.summands;
        alt_sorted.sort();
        if alt_sorted != sorted {
            report.summands_unique_across_chains = false;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skeleton::{EdgeSpec, KGraphSpec};

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

    fn vs(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    fn single_loop() -> KGraph {
        graph_1(&["v"], &[("f", "v", "v")])
    }

    fn two_isolated() -> KGraph {
        graph_1(&["v", "w"], &[])
    }

    fn four_isolated() -> KGraph {
        graph_1(&["a", "b", "c", "d"], &[])
    }

    fn loop_to_loop() -> KGraph {
        graph_1(
            &["v", "w"],
            &[("f", "v", "v"), ("a", "v", "w"), ("h", "w", "w")],
        )
    }

    #[test]
    fn split_of_loop_chain_has_empty_delta() {
        let g = loop_to_loop();
        let w = g.vertex_idx("w").unwrap();
        let full = vs(&[0, 1]);
        let split = delta_omega(&g, &full, &vs(&[w])).unwrap();
        assert!(split.delta.is_empty());
        assert_eq!(split.omega, vs(&[g.vertex_idx("v").unwrap()]));
        assert!(!succeeds(&g, &full, &vs(&[w])).unwrap());
        assert!(delta_omega(&g, &vs(&[w]), &full) == Err(Error::NotNested));
    }

    #[test]
    fn whole_set_succeeds_empty_set() {
        let g = single_loop();
        assert!(succeeds(&g, &vs(&[0]), &VertexSet::new()).unwrap());
    }

    #[test]
    fn rejects_unsaturated_input() {
        let g = graph_1(&["v", "w"], &[("a", "v", "w")]);
        let w = g.vertex_idx("w").unwrap();
        // {w} is hereditary but not saturated: v's only continuation lands in it.
        assert!(matches!(
            delta_omega(&g, &vs(&[0, 1]), &vs(&[w])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn loop_and_isolated_pair_decompose() {
        let g = single_loop();
        assert_eq!(decomposability(&g).unwrap(), None);
        let ch = chains(&g).unwrap();
        assert_eq!(ch, vec![vec![vs(&[0])]]);
        let rep = decompose(&g).unwrap();
        assert_eq!(rep.n, 1);
        assert_eq!(rep.summands, vec![vs(&[0])]);
        assert!(rep.summands_disjoint && rep.union_saturates_to_all && rep.chain_recovered);
        assert!(rep.summands_unique_across_chains);

        let g = two_isolated();
        let (a, b) = decomposability(&g).unwrap().unwrap();
        assert_eq!((a, b), (vs(&[0]), vs(&[1])));
        let ch = chains(&g).unwrap();
        assert_eq!(ch.len(), 2);
        assert!(ch.iter().all(|c| c.len() == 2));
        let rep = decompose(&g).unwrap();
        assert_eq!(rep.n, 2);
        let mut sorted = rep.summands.clone();
        sorted.sort();
        assert_eq!(sorted, vec![vs(&[0]), vs(&[1])]);
        assert!(rep.summands_unique_across_chains);
        assert_eq!(rep.components.len(), 2);
        assert!(rep
            .components
            .iter()
            .all(|c| c.vertex_count() == 1 && c.edge_count() == 0));
    }

    #[test]
    fn four_pieces_give_four_summands() {
        let g = four_isolated();
        let rep = decompose(&g).unwrap();
        assert_eq!(rep.n, 4);
        assert!(rep.summands_disjoint && rep.union_saturates_to_all && rep.chain_recovered);
        assert!(rep.summands_unique_across_chains);
        let ch = chains(&g).unwrap();
        assert!(ch.iter().all(|c| c.len() == 4));
        assert_eq!(ch.len(), 24);
    }

    #[test]
    fn loop_chain_is_indecomposable() {
        let g = loop_to_loop();
        assert_eq!(decomposability(&g).unwrap(), None);
        let rep = decompose(&g).unwrap();
        assert_eq!(rep.n, 1);
        assert_eq!(rep.summands, vec![vs(&[0, 1])]);
        assert_eq!(rep.components.len(), 1);
        assert_eq!(rep.components[0].vertex_count(), 2);
    }
}
