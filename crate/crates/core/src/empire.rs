//! Empire graphs: a graph whose vertices (countries) are grouped into
//! empires that must all receive the same colour.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// A graph with every vertex assigned to an empire.
///
/// Empires are numbered densely in order of their first vertex; the
/// original ids are kept for reporting. Connectivity and simplicity are not
/// enforced here so that the verifiers can report on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpireGraph {
    graph: Graph,
    empire_of: Vec<usize>,
    empire_ids: Vec<String>,
}

impl EmpireGraph {
    /// `assignment[v]` names the empire of vertex `v`.
    pub fn new<S: AsRef<str>>(graph: Graph, assignment: &[S]) -> Result<Self> {
        if assignment.len() != graph.vertex_count() {
            return Err(Error::InvalidEmpires(format!(
                "{} assignments for {} vertices",
                assignment.len(),
                graph.vertex_count()
            )));
        }
        let mut index: HashMap<&str, usize> = HashMap::new();
        let mut empire_ids = Vec::new();
        let empire_of = assignment
            .iter()
            .map(|id| {
                *index.entry(id.as_ref()).or_insert_with(|| {
                    empire_ids.push(id.as_ref().to_string());
                    empire_ids.len() - 1
                })
            })
            .collect();
        Ok(EmpireGraph {
            graph,
            empire_of,
            empire_ids,
        })
    }

    /// Every vertex its own empire, named by its index.
    pub fn singletons(graph: Graph) -> Self {
        let ids: Vec<String> = graph.vertices().map(|v| v.to_string()).collect();
        EmpireGraph::new(graph, &ids).expect("one id per vertex")
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn empire_count(&self) -> usize {
        self.empire_ids.len()
    }

    pub fn empire_ids(&self) -> &[String] {
        &self.empire_ids
    }

    /// Dense empire index of `v`.
    pub fn empire_of(&self, v: VertexId) -> usize {
        self.empire_of[v]
    }

    pub fn empire_id(&self, v: VertexId) -> &str {
        &self.empire_ids[self.empire_of[v]]
    }

    pub fn assignment(&self) -> Vec<&str> {
        self.empire_of.iter().map(|&e| self.empire_ids[e].as_str()).collect()
    }

    pub fn members(&self, empire: usize) -> Vec<VertexId> {
        self.graph.vertices().filter(|&v| self.empire_of[v] == empire).collect()
    }

    pub fn empire_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.empire_count()];
        for &e in &self.empire_of {
            sizes[e] += 1;
        }
        sizes
    }

    /// Total degree of each empire's vertices in the base graph.
    pub fn empire_degrees(&self) -> Vec<usize> {
        let mut out = vec![0; self.empire_count()];
        for (v, d) in self.graph.degrees().into_iter().enumerate() {
            out[self.empire_of[v]] += d;
        }
        out
    }

    /// Same empires on a different base graph with the same vertices.
    pub fn with_graph(&self, graph: Graph) -> Result<Self> {
        if graph.vertex_count() != self.graph.vertex_count() {
            return Err(Error::InvalidEmpires("vertex count changed".into()));
        }
        Ok(EmpireGraph {
            graph,
            empire_of: self.empire_of.clone(),
            empire_ids: self.empire_ids.clone(),
        })
    }

    /// Disjoint union; empires with equal ids are merged.
    pub fn disjoint_union(&self, other: &EmpireGraph) -> EmpireGraph {
        let graph = self.graph.disjoint_union(&other.graph);
        let mut ids: Vec<&str> = self.assignment();
        ids.extend(other.assignment());
        EmpireGraph::new(graph, &ids).expect("assignment covers the union")
    }

    /// Every empire has at most `m` vertices.
    pub fn is_m_pire(&self, m: usize) -> bool {
        self.empire_sizes().iter().all(|&s| s <= m)
    }

    /// Identifies each empire to one vertex, dropping the loops and repeated
    /// edges this creates.
    pub fn collapse(&self) -> CollapsedEmpireGraph {
        let pairs: BTreeSet<(usize, usize)> = self
            .graph
            .edges()
            .iter()
            .filter_map(|&(u, v)| {
                let (a, b) = (self.empire_of[u], self.empire_of[v]);
                (a != b).then(|| (a.min(b), a.max(b)))
            })
            .collect();
        let labels = self.empire_ids.iter().cloned().map(Some).collect();
        let graph = Graph::from_edges(self.empire_count(), pairs)
            .and_then(|g| g.with_labels(labels))
            .expect("empire indices are in range");
        debug_assert!(graph.is_simple());
        CollapsedEmpireGraph {
            graph,
            origin: self.empire_ids.clone(),
        }
    }

    /// Number of base edges joining each unordered pair of distinct empires.
    fn pair_adjacencies(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for &(u, v) in self.graph.edges() {
            let (a, b) = (self.empire_of[u], self.empire_of[v]);
            if a != b {
                *out.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapsedEmpireGraph {
    /// One vertex per empire, labelled with the empire id.
    pub graph: Graph,
    /// Empire id of each vertex.
    pub origin: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// No loops and no parallel edges.
    Simple,
    /// Exactly `n` empires.
    EmpireCount,
    /// No empire larger than `m`.
    EmpireSize,
    /// Every pair of empires adjacent somewhere.
    PairsAdjacent,
    /// Every empire of size exactly `m`.
    ExactSize,
    /// Every pair of empires adjacent exactly once.
    PairsUnique,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Count { expected: usize, actual: usize },
    Edge { u: VertexId, v: VertexId },
    Empire { empire: String, size: usize },
    Pair { a: String, b: String, adjacencies: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub condition: Condition,
    pub passed: bool,
    /// First offending item on failure; the observed count for
    /// [`Condition::EmpireCount`] either way.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub m: usize,
    pub uniform: bool,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl VerificationReport {
    pub fn check(&self, condition: Condition) -> Option<&Check> {
        self.checks.iter().find(|c| c.condition == condition)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn report(n: usize, m: usize, uniform: bool, checks: Vec<Check>) -> VerificationReport {
    let passed = checks.iter().all(|c| c.passed);
    VerificationReport {
        n,
        m,
        uniform,
        checks,
        passed,
    }
}

fn jnm_checks(eg: &EmpireGraph, n: usize, m: usize) -> Vec<Check> {
    let g = eg.graph();
    let bad_edge = g
        .edges()
        .iter()
        .zip(g.edges().iter().skip(1).map(Some).chain([None]))
        .find(|&(&(u, v), next)| u == v || next == Some(&(u, v)))
        .map(|(&(u, v), _)| Witness::Edge { u, v });
    let sizes = eg.empire_sizes();
    let oversized = sizes.iter().position(|&s| s > m).map(|e| Witness::Empire {
        empire: eg.empire_ids()[e].clone(),
        size: sizes[e],
    });
    let adj = eg.pair_adjacencies();
    let k = eg.empire_count();
    let missing = (0..k)
        .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
        .find(|p| !adj.contains_key(p))
        .map(|(a, b)| Witness::Pair {
            a: eg.empire_ids()[a].clone(),
            b: eg.empire_ids()[b].clone(),
            adjacencies: 0,
        });
    vec![
        Check {
            condition: Condition::Simple,
            passed: bad_edge.is_none(),
            witness: bad_edge,
        },
        Check {
            condition: Condition::EmpireCount,
            passed: k == n,
            witness: Some(Witness::Count { expected: n, actual: k }),
        },
        Check {
            condition: Condition::EmpireSize,
            passed: oversized.is_none(),
            witness: oversized,
        },
        Check {
            condition: Condition::PairsAdjacent,
            passed: missing.is_none(),
            witness: missing,
        },
    ]
}

/// Checks the four sufficient conditions for a complete m-pire graph on `n`
/// empires: simple, `n` empires, at most `m` vertices each, and every pair
/// of empires adjacent. A graph passing all four needs exactly `n` colours.
pub fn verify_jnm(eg: &EmpireGraph, n: usize, m: usize) -> VerificationReport {
    report(n, m, false, jnm_checks(eg, n, m))
}

/// [`verify_jnm`] plus the uniform conditions: exactly `m` vertices per
/// empire and exactly one edge between each pair of empires.
pub fn verify_uniform_jnm(eg: &EmpireGraph, n: usize, m: usize) -> VerificationReport {
    let mut checks = jnm_checks(eg, n, m);
    let sizes = eg.empire_sizes();
    let wrong = sizes.iter().position(|&s| s != m).map(|e| Witness::Empire {
        empire: eg.empire_ids()[e].clone(),
        size: sizes[e],
    });
    checks.push(Check {
        condition: Condition::ExactSize,
        passed: wrong.is_none(),
        witness: wrong,
    });
    let repeated = eg
        .pair_adjacencies()
        .into_iter()
        .find(|&(_, c)| c > 1)
        .map(|((a, b), c)| Witness::Pair {
            a: eg.empire_ids()[a].clone(),
            b: eg.empire_ids()[b].clone(),
            adjacencies: c,
        });
    checks.push(Check {
        condition: Condition::PairsUnique,
        passed: repeated.is_none(),
        witness: repeated,
    });
    report(n, m, true, checks)
}

/// Whether the collapsed graph has a vertex of degree at most `6m − 1`,
/// which every empire graph of a spherical m-pire map must have.
pub fn empire_degree_bound_check(eg: &EmpireGraph, m: usize) -> bool {
    let c = eg.collapse().graph;
    c.degrees().into_iter().any(|d| d < 6 * m)
}

/// Whether the collapsed graph's average degree is below `6m`.
pub fn collapsed_average_degree_below(eg: &EmpireGraph, m: usize) -> bool {
    let c = eg.collapse().graph;
    c.vertex_count() > 0 && 2 * c.edge_count() < 6 * m * c.vertex_count()
}

/// Adjacency rows of the complete 2-pire graph on 14 empires drawn on the
/// triple torus, exactly as printed. Vertex `k'` is the second country of
/// empire `k`; empire 13 has one country.
pub const J14_2_TABLE: &[(&str, &[&str])] = &[
    ("0", &["1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12"]),
    ("0'", &["13'"]),
    ("1", &["0", "2", "4", "8'", "9'", "10'", "11"]),
    ("1'", &["3'", "5", "6", "7", "12'", "13"]),
    ("2", &["0", "1", "3", "7'", "9'", "10'", "12"]),
    ("2'", &["4'", "5", "6", "8", "11'", "13"]),
    ("3", &["0", "2", "4", "6", "10'", "11'", "12'"]),
    ("3'", &["1'", "5'", "7", "8", "9", "13"]),
    ("4", &["0", "1", "3", "5", "9'", "11'", "12'"]),
    ("4'", &["2'", "6'", "7", "8", "10", "13"]),
    ("5", &["0", "1'", "2'", "4", "6", "8", "12'"]),
    ("5'", &["3'", "7'", "9", "10", "11", "13"]),
    ("6", &["0", "1'", "2'", "3", "5", "7", "11'"]),
    ("6'", &["4'", "8'", "9", "10", "12", "13"]),
    ("7", &["0", "1'", "3'", "4'", "6", "8", "10"]),
    ("7'", &["2", "5'", "9'", "11", "12", "13"]),
    ("8", &["0", "2'", "3'", "5", "7", "9"]),
    ("8'", &["1", "4'", "6'", "10'", "11", "12", "13"]),
    ("9", &["0", "3'", "5'", "6'", "8", "10", "12"]),
    ("9'", &["1", "2", "4", "7'", "11'", "13"]),
    ("10", &["0", "4'", "5'", "6'", "7", "9", "11"]),
    ("10'", &["1", "2", "3", "8'", "12'", "13"]),
    ("11", &["0", "1", "5'", "7'", "8'", "10", "12"]),
    ("11'", &["2'", "3", "4", "6", "9'", "13"]),
    ("12", &["0", "2", "5", "6'", "7'", "8'", "9", "11"]),
    ("12'", &["1'", "3", "4", "10'", "13"]),
    (
        "13",
        &["0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12"],
    ),
];

/// A place where the printed table had to be reinterpreted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TranscriptionWarning {
    /// `from` lists a vertex that does not exist; its one-vertex empire is used.
    MissingVertex { from: String, listed: String, used: String },
    /// `from` lists `listed`, which does not list it back, but the other
    /// country `used` of that empire does.
    PrimeRepair { from: String, listed: String, used: String },
    /// One-sided entry kept as an edge.
    Symmetrized { from: String, listed: String },
}

fn empire_of_label(label: &str) -> &str {
    label.trim_end_matches('\'')
}

/// Builds an empire graph from adjacency rows whose labels name empires as
/// `k`, `k'`, `k''`, ... Rows are read as undirected adjacency. Entries that
/// only one side lists are repaired where the printed primes are evidently
/// wrong and symmetrized otherwise; each repair is reported.
pub fn from_adjacency_rows(rows: &[(&str, &[&str])]) -> Result<(EmpireGraph, Vec<TranscriptionWarning>)> {
    let ids: HashMap<&str, usize> = rows.iter().enumerate().map(|(i, &(l, _))| (l, i)).collect();
    if ids.len() != rows.len() {
        return Err(Error::Parse("repeated row label".into()));
    }
    let mut members: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (i, &(l, _)) in rows.iter().enumerate() {
        members.entry(empire_of_label(l)).or_default().push(i);
    }
    let mut warnings = Vec::new();
    let mut listed: Vec<(usize, usize)> = Vec::new();
    for (x, &(from, entries)) in rows.iter().enumerate() {
        for &entry in entries {
            let y = match ids.get(entry) {
                Some(&y) => y,
                None => match members.get(empire_of_label(entry)).map(Vec::as_slice) {
                    Some(&[only]) => {
                        warnings.push(TranscriptionWarning::MissingVertex {
                            from: from.into(),
                            listed: entry.into(),
                            used: rows[only].0.into(),
                        });
                        only
                    }
                    _ => return Err(Error::Parse(format!("row {from} lists unknown vertex {entry}"))),
                },
            };
            if y == x {
                return Err(Error::Parse(format!("row {from} lists itself")));
            }
            listed.push((x, y));
        }
    }
    let directed: BTreeSet<(usize, usize)> = listed.iter().copied().collect();
    let mut edges: BTreeSet<(usize, usize)> = directed
        .iter()
        .filter(|&&(x, y)| directed.contains(&(y, x)))
        .map(|&(x, y)| (x.min(y), x.max(y)))
        .collect();
    let one_sided: Vec<(usize, usize)> = listed
        .iter()
        .copied()
        .filter(|&(x, y)| !directed.contains(&(y, x)))
        .collect();
    let mut unresolved = Vec::new();
    for &(x, y) in &one_sided {
        let alt = members[empire_of_label(rows[y].0)]
            .iter()
            .copied()
            .find(|&y2| y2 != y && directed.contains(&(y2, x)));
        match alt {
            Some(y2) => {
                edges.insert((x.min(y2), x.max(y2)));
                warnings.push(TranscriptionWarning::PrimeRepair {
                    from: rows[x].0.into(),
                    listed: rows[y].0.into(),
                    used: rows[y2].0.into(),
                });
            }
            None => unresolved.push((x, y)),
        }
    }
    for (x, y) in unresolved {
        let e = (x.min(y), x.max(y));
        let partner_repaired = warnings.iter().any(|w| {
            matches!(w, TranscriptionWarning::PrimeRepair { from, used, .. }
                if from == rows[y].0 && used == rows[x].0)
        });
        if edges.contains(&e) && partner_repaired {
            continue;
        }
        if edges.insert(e) {
            warnings.push(TranscriptionWarning::Symmetrized {
                from: rows[x].0.into(),
                listed: rows[y].0.into(),
            });
        }
    }
    let labels = rows.iter().map(|&(l, _)| Some(l.to_string())).collect();
    let graph = Graph::from_edges(rows.len(), edges)?.with_labels(labels)?;
    let assignment: Vec<&str> = rows.iter().map(|&(l, _)| empire_of_label(l)).collect();
    Ok((EmpireGraph::new(graph, &assignment)?, warnings))
}

/// The 27-vertex complete 2-pire graph on 14 empires, with the repairs made
/// to the printed table.
pub fn builtin_j14_2_with_warnings() -> (EmpireGraph, Vec<TranscriptionWarning>) {
    from_adjacency_rows(J14_2_TABLE).expect("built-in table parses")
}

pub fn builtin_j14_2() -> EmpireGraph {
    builtin_j14_2_with_warnings().0
}
