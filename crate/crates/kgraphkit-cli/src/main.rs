//! Command-line interface over the kgraphkit library: parses the text
//! format, resolves analysis budgets (defaults, then KGRAPHKIT_BUDGET, then
//! the file's budget line, then flags), runs one analysis per subcommand,
//! and prints a deterministic report as key/value text or JSON.

use std::process::ExitCode;

use clap::{Arg, ArgAction, ArgMatches, Command};
use serde_json::{json, Value};

use kgraphkit::budget::{BudgetConfig, PartialBudget};
use kgraphkit::decompose::{chains, decomposability, decompose};
use kgraphkit::degree::DegreeVector;
use kgraphkit::desourcify::des_window;
use kgraphkit::dot::{decomposition_dot, graph_dot, window_dot};
use kgraphkit::format::parse_kgraph;
use kgraphkit::ideals::{enumerate_hs_lattice, VertexSet};
use kgraphkit::periodicity::{aperiodicity, h_per, per_group, PeriodicityVerdict};
use kgraphkit::skeleton::KGraph;
use kgraphkit::tails_prim::{aperiodic_tails, classify_prim, prim_catalogue, LATTICE_CAP};

const SCHEMA: &str = "kgraphkit/1";

fn common(cmd: Command) -> Command {
    cmd.arg(
        Arg::new("file")
            .required(true)
            .value_name("FILE")
            .help("Graph description file"),
    )
    .arg(
        Arg::new("json")
            .long("json")
            .action(ArgAction::SetTrue)
            .help("Emit the report as JSON"),
    )
    .arg(
        Arg::new("dot")
            .long("dot")
            .value_name("PATH")
            .help("Write a DOT rendering to PATH"),
    )
    .arg(
        Arg::new("budget-degree")
            .long("budget-degree")
            .value_name("A,B,...")
            .help("Per-color path degree bound"),
    )
    .arg(
        Arg::new("budget-presentation")
            .long("budget-presentation")
            .value_name("N")
            .help("Total size bound for boundary-path presentations"),
    )
    .arg(
        Arg::new("budget-saturation")
            .long("budget-saturation")
            .value_name("A,B,...")
            .help("Per-color extent bound for saturation checks"),
    )
}

fn cli() -> Command {
    Command::new("kgraphkit")
        .about("Combinatorial invariants of finite higher-rank graphs")
        .subcommand_required(true)
        .arg_required_else_help(true)
        .subcommand(common(Command::new("validate").about("Parse and validate a graph file")))
        .subcommand(common(Command::new("shape").about("Summarize the graph's shape")))
        .subcommand(
            common(Command::new("paths").about("List paths of a given degree from a vertex"))
                .arg(
                    Arg::new("from")
                        .long("from")
                        .value_name("VERTEX")
                        .required(true)
                        .help("Range vertex of the listed paths"),
                )
                .arg(
                    Arg::new("degree")
                        .long("degree")
                        .value_name("A,B,...")
                        .required(true)
                        .help("Degree of the listed paths"),
                ),
        )
        .subcommand(common(
            Command::new("ideals").about("Enumerate the hereditary saturated lattice"),
        ))
        .subcommand(common(
            Command::new("tails").about("List maximal tails and their periodicity verdicts"),
        ))
        .subcommand(common(
            Command::new("periodicity")
                .about("Compute the periodicity subgroup and the aperiodicity verdict"),
        ))
        .subcommand(common(
            Command::new("prim").about("Catalogue primitive-ideal data per maximal tail"),
        ))
        .subcommand(common(
            Command::new("decompose").about("Split the graph into a direct sum"),
        ))
        .subcommand(
            common(Command::new("desourcify").about("Materialize a window of the source-free cover"))
                .arg(
                    Arg::new("window")
                        .long("window")
                        .value_name("N")
                        .default_value("1")
                        .help("Per-color excess bound of the window"),
                ),
        )
        .subcommand(common(
            Command::new("chains").about("List maximal succession chains of nonempty ideals"),
        ))
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>, String> {
    let parts: Result<Vec<u32>, _> = s.split(',').map(|c| c.trim().parse::<u32>()).collect();
    match parts {
        Ok(v) if !v.is_empty() => Ok(v),
        _ => Err(format!("expected a comma-separated list of numbers, got `{s}`")),
    }
}

/// A single component broadcasts to every color.
fn broadcast(v: &[u32], rank: usize) -> Result<Vec<u32>, String> {
    if v.len() == rank {
        Ok(v.to_vec())
    } else if v.len() == 1 {
        Ok(vec![v[0]; rank])
    } else {
        Err(format!(
            "expected 1 or {rank} components, got {}",
            v.len()
        ))
    }
}

fn csv(v: &[u32]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn set_braces(g: &KGraph, set: &VertexSet) -> String {
    let labels: Vec<&str> = set.iter().map(|&v| g.vertex_id(v)).collect();
    format!("{{{}}}", labels.join(","))
}

fn set_json(g: &KGraph, set: &VertexSet) -> Value {
    Value::Array(
        set.iter()
            .map(|&v| Value::String(g.vertex_id(v).to_string()))
            .collect(),
    )
}

fn budget_line(b: &BudgetConfig) -> String {
    format!(
        "budget: degree={} presentation={} saturation={}",
        csv(&b.degree_bound.0),
        b.presentation_bound,
        csv(&b.saturation_bound)
    )
}

fn budget_json(b: &BudgetConfig) -> Value {
    json!({
        "degree": b.degree_bound.0,
        "presentation": b.presentation_bound,
        "saturation": b.saturation_bound,
    })
}

struct Loaded {
    graph: KGraph,
    budget: BudgetConfig,
}

/// Parses the file, builds the graph, and resolves the budget in layer
/// order: defaults, KGRAPHKIT_BUDGET, the file's budget line, flags.
fn load(m: &ArgMatches) -> Result<Loaded, String> {
    let path = m.get_one::<String>("file").expect("required arg");
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    let (spec, file_budget) = parse_kgraph(&text).map_err(|e| e.to_string())?;
    let graph = KGraph::build(&spec).map_err(|e| e.to_string())?;
    let mut partial = PartialBudget::default();
    if let Ok(env) = std::env::var("KGRAPHKIT_BUDGET") {
        let env_budget = PartialBudget::from_env_str(&env)
            .map_err(|e| format!("KGRAPHKIT_BUDGET: {e}"))?;
        partial = partial.overlay(&env_budget);
    }
    partial = partial.overlay(&file_budget);
    let mut flags = PartialBudget::default();
    if let Some(s) = m.get_one::<String>("budget-degree") {
        flags.degree_bound = Some(parse_u32_list(s).map_err(|e| format!("--budget-degree: {e}"))?);
    }
    if let Some(s) = m.get_one::<String>("budget-presentation") {
        flags.presentation_bound = Some(
            s.parse::<u32>()
                .map_err(|_| format!("--budget-presentation: expected a number, got `{s}`"))?,
        );
    }
    if let Some(s) = m.get_one::<String>("budget-saturation") {
        flags.saturation_bound =
            Some(parse_u32_list(s).map_err(|e| format!("--budget-saturation: {e}"))?);
    }
    partial = partial.overlay(&flags);
    let budget = partial
        .resolve(graph.rank(), graph.vertex_count())
        .map_err(|e| format!("budget: {e}"))?;
    Ok(Loaded { graph, budget })
}

fn write_dot(m: &ArgMatches, dot: &str) -> Result<(), String> {
    if let Some(path) = m.get_one::<String>("dot") {
        std::fs::write(path, dot).map_err(|e| format!("cannot write {path}: {e}"))?;
    }
    Ok(())
}

fn emit(m: &ArgMatches, human: String, json_value: Value) {
    use std::io::Write;
    let out = if m.get_flag("json") {
        let mut s = serde_json::to_string_pretty(&json_value).expect("serializable report");
        s.push('\n');
        s
    } else {
        human
    };
    let mut stdout = std::io::stdout().lock();
    // A closed pipe (e.g. `kgraphkit ... | head`) is a normal way for the
    // reader to stop early, not a failure of the analysis.
    if stdout.write_all(out.as_bytes()).is_err() {
        std::process::exit(0);
    }
    let _ = stdout.flush();
}

fn shape_facts(g: &KGraph) -> (String, Value) {
    let mut by_color = vec![0usize; g.rank()];
    for e in 0..g.edge_count() {
        by_color[g.edge(e).color] += 1;
    }
    let mut blocked: Vec<(String, Vec<usize>)> = Vec::new();
    for v in 0..g.vertex_count() {
        let colors: Vec<usize> = (0..g.rank())
            .filter(|&c| g.out_edges(v, c).is_empty())
            .collect();
        if !colors.is_empty() {
            blocked.push((g.vertex_id(v).to_string(), colors));
        }
    }
    let mut human = String::new();
    human.push_str(&format!("rank: {}\n", g.rank()));
    human.push_str(&format!("vertices: {}\n", g.vertex_count()));
    human.push_str(&format!("edges: {}\n", g.edge_count()));
    human.push_str(&format!(
        "edges_by_color: {}\n",
        by_color
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    ));
    human.push_str(&format!("squares: {}\n", g.squares().len()));
    human.push_str(&format!("locally_convex: {}\n", g.is_locally_convex()));
    human.push_str(&format!("acyclic: {}\n", g.is_acyclic()));
    if blocked.is_empty() {
        human.push_str("blocked_vertices: none\n");
    } else {
        human.push_str("blocked_vertices:\n");
        for (label, colors) in &blocked {
            human.push_str(&format!(
                "  {label}: {}\n",
                colors
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ));
        }
    }
    let value = json!({
        "rank": g.rank(),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "edges_by_color": by_color,
        "squares": g.squares().len(),
        "locally_convex": g.is_locally_convex(),
        "acyclic": g.is_acyclic(),
        "blocked_vertices": blocked
            .iter()
            .map(|(label, colors)| json!({"vertex": label, "colors": colors}))
            .collect::<Vec<_>>(),
    });
    (human, value)
}

fn cmd_validate(m: &ArgMatches) -> Result<(), String> {
    let path = m.get_one::<String>("file").expect("required arg");
    let outcome = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {path}: {e}"))
        .and_then(|text| parse_kgraph(&text).map_err(|e| e.to_string()))
        .and_then(|(spec, _)| KGraph::build(&spec).map_err(|e| e.to_string()));
    match outcome {
        Ok(g) => {
            let (shape_human, shape_value) = shape_facts(&g);
            let human = format!("valid: true\n{shape_human}");
            let mut value = json!({"schema": SCHEMA, "command": "validate", "valid": true});
            value["shape"] = shape_value;
            write_dot(m, &graph_dot(&g))?;
            emit(m, human, value);
            Ok(())
        }
        Err(e) => {
            let human = format!("valid: false\nerror: {e}\n");
            let value =
                json!({"schema": SCHEMA, "command": "validate", "valid": false, "error": e});
            emit(m, human, value);
            Err(String::new())
        }
    }
}

fn cmd_shape(m: &ArgMatches) -> Result<(), String> {
    let loaded = load(m)?;
    let (human, shape_value) = shape_facts(&loaded.graph);
    let mut value = json!({"schema": SCHEMA, "command": "shape"});
    value["shape"] = shape_value;
    write_dot(m, &graph_dot(&loaded.graph))?;
    emit(m, human, value);
    Ok(())
}

fn cmd_paths(m: &ArgMatches) -> Result<(), String> {
    let loaded = load(m)?;
    let g = &loaded.graph;
    let from = m.get_one::<String>("from").expect("required arg");
    let v = g.vertex_idx(from).map_err(|e| e.to_string())?;
    let raw = parse_u32_list(m.get_one::<String>("degree").expect("required arg"))
        .map_err(|e| format!("--degree: {e}"))?;
    let degree = DegreeVector(broadcast(&raw, g.rank()).map_err(|e| format!("--degree: {e}"))?);
    let paths = g.paths_of_degree(v, &degree).map_err(|e| e.to_string())?;
    let mut human = String::new();
    human.push_str(&format!("from: {from}\n"));
    human.push_str(&format!("degree: {}\n", csv(&degree.0)));
    human.push_str(&format!("count: {}\n", paths.len()));
    for p in &paths {
        human.push_str(&format!("path: {} -> {}\n", g.path_string(p), g.vertex_id(p.source)));
    }
    let value = json!({
        "schema": SCHEMA,
        "command": "paths",
        "from": from,
        "degree": degree.0,
        "count": paths.len(),
        "paths": paths
            .iter()
            .map(|p| json!({"path": g.path_string(p), "source": g.vertex_id(p.source)}))
            .collect::<Vec<_>>(),
    });
    write_dot(m, &graph_dot(g))?;
    emit(m, human, value);
    Ok(())
}

fn cmd_ideals(m: &ArgMatches) -> Result<(), String> {
    let loaded = load(m)?;
    let g = &loaded.graph;
    let lattice = enumerate_hs_lattice(g, LATTICE_CAP).map_err(|e| e.to_string())?;
    let cofinal = lattice.elements.len() <= 2;
    let mut human = String::new();
    human.push_str(&format!("elements: {}\n", lattice.elements.len()));
    human.push_str(&format!("cofinal: {cofinal}\n"));
    for (i, e) in lattice.elements.iter().enumerate() {
        human.push_str(&format!("element {i}: {}\n", set_braces(g, e)));
    }
    let value = json!({
        "schema": SCHEMA,
        "command": "ideals",
        "elements": lattice.elements.iter().map(|e| set_json(g, e)).collect::<Vec<_>>(),
        "cofinal": cofinal,
    });
    write_dot(m, &graph_dot(g))?;
    emit(m, human, value);
    Ok(())
}

fn verdict_fields(
    g: &KGraph,
    verdict: &PeriodicityVerdict,
    human: &mut String,
    value: &mut Value,
) {
    human.push_str(&format!("verdict: {}\n", verdict.kind()));
    value["verdict"] = Value::String(verdict.kind().to_string());
    if let PeriodicityVerdict::Periodic(mu, nu) = verdict {
        let (ms, ns) = (g.path_string(mu), g.path_string(nu));
        human.push_str(&format!("witness_mu: {ms}\n"));
        human.push_str(&format!("witness_nu: {ns}\n"));
        value["witness"] = json!({"mu": ms, "nu": ns});
    }
}

fn cmd_tails(m: &ArgMatches) -> Result<(), String> {
    let loaded = load(m)?;
    let g = &loaded.graph;
    let verdicts = aperiodic_tails(g, &loaded.budget).map_err(|e| e.to_string())?;
    let mut human = String::new();
    human.push_str(&format!("{}\n", budget_line(&loaded.budget)));
    human.push_str(&format!("tails: {}\n", verdicts.len()));
    let mut records = Vec::new();
    for (i, tv) in verdicts.iter().enumerate() {
        human.push_str(&format!("tail {}:\n", i + 1));
        human.push_str(&format!("  members: {}\n", set_braces(g, &tv.tail.members)));
        human.push_str(&format!(
            "  complement: {}\n",
            set_braces(g, &tv.tail.complement)
        ));
        human.push_str(&format!("  verdict: {}\n", tv.verdict.kind()));
        let mut rec = json!({
            "members": set_json(g, &tv.tail.members),
            "complement": set_json(g, &tv.tail.complement),
            "verdict": tv.verdict.kind(),
        });
        if let Some((mu, nu)) = &tv.witness {
            human.push_str(&format!("  witness_mu: {mu}\n"));
            human.push_str(&format!("  witness_nu: {nu}\n"));
            rec["witness"] = json!({"mu": mu, "nu": nu});
        }
        records.push(rec);
    }
    let value = json!({
        "schema": SCHEMA,
        "command": "tails",
        "budget": budget_json(&loaded.budget),
        "tails": records,
    });
    write_dot(m, &graph_dot(g))?;
    emit(m, human, value);
    Ok(())
}

fn cmd_periodicity(m: &ArgMatches) -> Result<(), String> {
    let loaded = load(m)?;
    let g = &loaded.graph;
    let b = &loaded.budget;
    let per = per_group(g, b).map_err(|e| e.to_string())?;
    let verdict = aperiodicity(g, b).map_err(|e| e.to_string())?;
    let uniform = h_per(g, &per.subgroup, b).map_err(|e| e.to_string())?;
    let mut human = String::new();
    human.push_str(&format!("{}\n", budget_line(b)));
    human.push_str(&format!("subgroup: {}\n", per.subgroup));
    human.push_str(&format!("subgroup_rank: {}\n", per.subgroup.rank()));
    human.push_str(&format!("exact: {}\n", per.exact));
    human.push_str(&format!("stabilized: {}\n", per.stabilized));
    human.push_str(&format!("decided_all: {}\n", per.decided_all));
    human.push_str(&format!("unknown_pairs: {}\n", per.unknown_pairs));
    human.push_str(&format!(
        "vertex_set_is_maximal_tail: {}\n",
        per.lambda0_is_maximal_tail
    ));
    let mut value = json!({
        "schema": SCHEMA,
        "command": "periodicity",
        "budget": budget_json(b),
        "subgroup": per.subgroup.rows(),
        "subgroup_rank": per.subgroup.rank(),
        "exact": per.exact,
        "stabilized": per.stabilized,
        "decided_all": per.decided_all,
        "unknown_pairs": per.unknown_pairs,
        "vertex_set_is_maximal_tail": per.lambda0_is_maximal_tail,
    });
    verdict_fields(g, &verdict, &mut human, &mut value);
    let uniform_labels: Vec<String> = uniform
        .vertices
        .iter()
        .map(|&v| g.vertex_id(v).to_string())
        .collect();
    human.push_str(&format!(
        "uniform_vertices: {{{}}}\n",
        uniform_labels.join(",")
    ));
    human.push_str(&format!("uniform_exact: {}\n", uniform.exact));
    for (mu, nu) in per.yes_pairs.iter().take(8) {
        human.push_str(&format!(
            "pair: {} ~ {}\n",
            g.path_string(mu),
            g.path_string(nu)
        ));
    }
    value["uniform_vertices"] = json!(uniform_labels);
    value["uniform_exact"] = json!(uniform.exact);
    value["pairs"] = json!(per
        .yes_pairs
        .iter()
        .take(8)
        .map(|(mu, nu)| json!({"mu": g.path_string(mu), "nu": g.path_string(nu)}))
        .collect::<Vec<_>>());
    write_dot(m, &graph_dot(g))?;
    emit(m, human, value);
    Ok(())
}

fn cmd_prim(m: &ArgMatches) -> Result<(), String> {
    let loaded = load(m)?;
    let g = &loaded.graph;
    let b = &loaded.budget;
    let catalogue = prim_catalogue(g, b).map_err(|e| e.to_string())?;
    let class = classify_prim(g, b).map_err(|e| e.to_string())?;
    let mut human = String::new();
    human.push_str(&format!("{}\n", budget_line(b)));
    human.push_str(&format!("records: {}\n", catalogue.len()));
    let mut records = Vec::new();
    for (i, rec) in catalogue.iter().enumerate() {
        let flags = &class.records[i];
        human.push_str(&format!("record {}:\n", i + 1));
        human.push_str(&format!("  tail: {}\n", set_braces(g, &rec.tail.members)));
        human.push_str(&format!(
            "  complement: {}\n",
            set_braces(g, &rec.tail.complement)
        ));
        human.push_str(&format!("  subgroup: {}\n", rec.per.subgroup));
        human.push_str(&format!("  character_rank: {}\n", rec.character_rank));
        human.push_str(&format!(
            "  sample_character: {}\n",
            if rec.sample_character.is_empty() {
                "trivial".to_string()
            } else {
                rec.sample_character
                    .iter()
                    .map(|(n, d)| format!("{n}/{d}"))
                    .collect::<Vec<_>>()
                    .join(",")
            }
        ));
        human.push_str(&format!(
            "  generators: {}\n",
            if rec.generator_description.is_empty() {
                "none".to_string()
            } else {
                rec.generator_description.join(" ")
            }
        ));
        human.push_str(&format!(
            "  uniform_vertices: {{{}}}\n",
            rec.uniform_vertices
                .iter()
                .cloned()
                .collect::<Vec<_>>()
                .join(",")
        ));
        for rel in &rec.relations {
            human.push_str(&format!(
                "  relation: {} ~ {} phase {}/{}\n",
                rel.mu, rel.nu, rel.phase.0, rel.phase.1
            ));
        }
        human.push_str(&format!("  verdict: {}\n", flags.verdict.kind()));
        human.push_str(&format!("  gauge_invariant: {}\n", flags.gauge_invariant));
        human.push_str(&format!("  maximal_ideal: {}\n", flags.maximal_ideal));
        records.push(json!({
            "tail": set_json(g, &rec.tail.members),
            "complement": set_json(g, &rec.tail.complement),
            "subgroup": rec.per.subgroup.rows(),
            "character_rank": rec.character_rank,
            "sample_character": rec.sample_character
                .iter()
                .map(|(n, d)| json!([n, d]))
                .collect::<Vec<_>>(),
            "generators": rec.generator_description,
            "uniform_vertices": rec.uniform_vertices.iter().cloned().collect::<Vec<_>>(),
            "relations": rec.relations
                .iter()
                .map(|r| json!({"mu": r.mu, "nu": r.nu, "phase": [r.phase.0, r.phase.1]}))
                .collect::<Vec<_>>(),
            "verdict": flags.verdict.kind(),
            "gauge_invariant": flags.gauge_invariant,
            "maximal_ideal": flags.maximal_ideal,
        }));
    }
    human.push_str(&format!("cofinal: {}\n", class.cofinal_graph));
    human.push_str(&format!(
        "strongly_aperiodic: {}\n",
        class.strongly_aperiodic
    ));
    let value = json!({
        "schema": SCHEMA,
        "command": "prim",
        "budget": budget_json(b),
        "records": records,
        "cofinal": class.cofinal_graph,
        "strongly_aperiodic": class.strongly_aperiodic,
    });
    write_dot(m, &graph_dot(g))?;
    emit(m, human, value);
    Ok(())
}

fn cmd_decompose(m: &ArgMatches) -> Result<(), String> {
    let loaded = load(m)?;
    let g = &loaded.graph;
    let witness = decomposability(g).map_err(|e| e.to_string())?;
    let report = decompose(g).map_err(|e| e.to_string())?;
    let mut human = String::new();
    human.push_str(&format!("n: {}\n", report.n));
    human.push_str(&format!("decomposable: {}\n", witness.is_some()));
    if let Some((a, bset)) = &witness {
        human.push_str(&format!(
            "witness: {} | {}\n",
            set_braces(g, a),
            set_braces(g, bset)
        ));
    }
    human.push_str(&format!(
        "chain: {}\n",
        report
            .chain
            .iter()
            .map(|h| set_braces(g, h))
            .collect::<Vec<_>>()
            .join(" > ")
    ));
    for (i, k) in report.summands.iter().enumerate() {
        human.push_str(&format!("summand {}: {}\n", i + 1, set_braces(g, k)));
    }
    for (i, comp) in report.components.iter().enumerate() {
        human.push_str(&format!(
            "component {}: vertices={} edges={}\n",
            i + 1,
            comp.vertex_count(),
            comp.edge_count()
        ));
    }
    human.push_str(&format!("summands_disjoint: {}\n", report.summands_disjoint));
    human.push_str(&format!(
        "union_saturates_to_all: {}\n",
        report.union_saturates_to_all
    ));
    human.push_str(&format!("chain_recovered: {}\n", report.chain_recovered));
    human.push_str(&format!(
        "unique_across_chains: {}\n",
        report.summands_unique_across_chains
    ));
    let value = json!({
        "schema": SCHEMA,
        "command": "decompose",
        "n": report.n,
        "decomposable": witness.is_some(),
        "witness": witness.as_ref().map(|(a, bset)| json!([set_json(g, a), set_json(g, bset)])),
        "chain": report.chain.iter().map(|h| set_json(g, h)).collect::<Vec<_>>(),
        "summands": report.summands.iter().map(|k| set_json(g, k)).collect::<Vec<_>>(),
        "components": report.components
            .iter()
            .map(|c| json!({"vertices": c.vertex_count(), "edges": c.edge_count()}))
            .collect::<Vec<_>>(),
        "summands_disjoint": report.summands_disjoint,
        "union_saturates_to_all": report.union_saturates_to_all,
        "chain_recovered": report.chain_recovered,
        "unique_across_chains": report.summands_unique_across_chains,
    });
    write_dot(m, &decomposition_dot(g, &report))?;
    emit(m, human, value);
    Ok(())
}

fn cmd_desourcify(m: &ArgMatches) -> Result<(), String> {
    let loaded = load(m)?;
    let g = &loaded.graph;
    let raw = parse_u32_list(m.get_one::<String>("window").expect("defaulted arg"))
        .map_err(|e| format!("--window: {e}"))?;
    let bound = DegreeVector(broadcast(&raw, g.rank()).map_err(|e| format!("--window: {e}"))?);
    let win = des_window(g, &bound).map_err(|e| e.to_string())?;
    let wg = &win.graph;
    let interior: Vec<usize> = (0..wg.vertex_count())
        .filter(|&v| win.is_interior(v))
        .collect();
    let interior_source_free = interior
        .iter()
        .all(|&v| (0..wg.rank()).all(|c| !wg.out_edges(v, c).is_empty()));
    let mut human = String::new();
    human.push_str(&format!("window: {}\n", csv(&bound.0)));
    human.push_str(&format!("vertices: {}\n", wg.vertex_count()));
    human.push_str(&format!("edges: {}\n", wg.edge_count()));
    human.push_str(&format!("interior_vertices: {}\n", interior.len()));
    human.push_str(&format!("interior_source_free: {interior_source_free}\n"));
    human.push_str(&format!("locally_convex: {}\n", wg.is_locally_convex()));
    let value = json!({
        "schema": SCHEMA,
        "command": "desourcify",
        "window": bound.0,
        "vertices": wg.vertex_count(),
        "edges": wg.edge_count(),
        "interior_vertices": interior.len(),
        "interior_source_free": interior_source_free,
        "locally_convex": wg.is_locally_convex(),
    });
    write_dot(m, &window_dot(&win))?;
    emit(m, human, value);
    Ok(())
}

fn cmd_chains(m: &ArgMatches) -> Result<(), String> {
    let loaded = load(m)?;
    let g = &loaded.graph;
    let all = chains(g).map_err(|e| e.to_string())?;
    let max_len = all.iter().map(|c| c.len()).max().unwrap_or(0);
    let equal = all.iter().all(|c| c.len() == max_len);
    let mut human = String::new();
    human.push_str(&format!("chains: {}\n", all.len()));
    human.push_str(&format!("max_length: {max_len}\n"));
    human.push_str(&format!("all_equal_length: {equal}\n"));
    for (i, chain) in all.iter().enumerate() {
        human.push_str(&format!(
            "chain {}: {}\n",
            i + 1,
            chain
                .iter()
                .map(|h| set_braces(g, h))
                .collect::<Vec<_>>()
                .join(" > ")
        ));
    }
    let value = json!({
        "schema": SCHEMA,
        "command": "chains",
        "chains": all
            .iter()
            .map(|chain| chain.iter().map(|h| set_json(g, h)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "max_length": max_len,
        "all_equal_length": equal,
    });
    write_dot(m, &graph_dot(g))?;
    emit(m, human, value);
    Ok(())
}

fn run(matches: &ArgMatches) -> Result<(), String> {
    match matches.subcommand().expect("subcommand required") {
        ("validate", m) => cmd_validate(m),
        ("shape", m) => cmd_shape(m),
        ("paths", m) => cmd_paths(m),
        ("ideals", m) => cmd_ideals(m),
        ("tails", m) => cmd_tails(m),
        ("periodicity", m) => cmd_periodicity(m),
        ("prim", m) => cmd_prim(m),
        ("decompose", m) => cmd_decompose(m),
        ("desourcify", m) => cmd_desourcify(m),
        ("chains", m) => cmd_chains(m),
        (other, _) => Err(format!("unknown subcommand `{other}`")),
    }
}

fn main() -> ExitCode {
    let matches = cli().get_matches();
    match run(&matches) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
    }
}
