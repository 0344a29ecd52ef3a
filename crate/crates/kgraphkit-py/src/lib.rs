//! Python bindings: parse the text format and expose the headline analyses
//! (shape summary, periodicity subgroup, aperiodicity verdict, direct-sum
//! summand count) with the graph's default budget.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use kgraphkit::budget::BudgetConfig;
use kgraphkit::format::parse_kgraph;
use kgraphkit::skeleton::KGraph;

fn load(text: &str) -> PyResult<(KGraph, BudgetConfig)> {
    let (spec, partial) = parse_kgraph(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let graph = KGraph::build(&spec).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let budget = partial
        .resolve(graph.rank(), graph.vertex_count())
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((graph, budget))
}

/// (rank, vertex count, edge count) of the graph described by `text`.
#[pyfunction]
fn shape(text: &str) -> PyResult<(usize, usize, usize)> {
    let (g, _) = load(text)?;
    Ok((g.rank(), g.vertex_count(), g.edge_count()))
}

/// Generator rows of the periodicity subgroup, in canonical form.
#[pyfunction]
fn per(text: &str) -> PyResult<Vec<Vec<i64>>> {
    let (g, budget) = load(text)?;
    let pg = kgraphkit::periodicity::per_group(&g, &budget)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(pg.subgroup.rows().to_vec())
}

/// "aperiodic", "periodic", or "unknown".
#[pyfunction]
fn verdict(text: &str) -> PyResult<String> {
    let (g, budget) = load(text)?;
    let v = kgraphkit::periodicity::aperiodicity(&g, &budget)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(v.kind().to_string())
}

/// Number of summands in the direct-sum decomposition.
#[pyfunction]
fn summand_count(text: &str) -> PyResult<usize> {
    let (g, _) = load(text)?;
    let rep =
        kgraphkit::decompose::decompose(&g).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(rep.n)
}

#[pymodule]
fn kgraphkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(shape, m)?)?;
    m.add_function(wrap_pyfunction!(per, m)?)?;
    m.add_function(wrap_pyfunction!(verdict, m)?)?;
    m.add_function(wrap_pyfunction!(summand_count, m)?)?;
    Ok(())
}
