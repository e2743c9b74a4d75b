//! JSON interchange and Graphviz export.
//!
//! Graphs are `{"vertices": [{"id": 0, "label": "x"}], "edges": [[0, 1]]}`
//! with ids `0..V` (any order) and edges written smaller endpoint first in
//! sorted order. Empire graphs add `"empires": {"<id>": "<empire>"}`.
//! Rotation systems are `{"graph": ..., "rotation": {"<id>": [...]}}` where
//! each entry is a neighbour id, or `{"neighbour": n, "edge": i}` naming the
//! edge by its index when the pair has parallel edges or a loop.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::colouring::Colouring;
use crate::empire::EmpireGraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::topology::{Dart, RotationSystem};
use crate::wessel::EmbeddedEmpireGraph;

#[derive(Debug, Serialize, Deserialize)]
struct VertexJson {
    id: VertexId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<VertexJson>,
    edges: Vec<[VertexId; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
struct EmpireGraphJson {
    #[serde(flatten)]
    graph: GraphJson,
    empires: BTreeMap<VertexId, String>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum RotationEntry {
    Neighbour(VertexId),
    Edge { neighbour: VertexId, edge: usize },
}

#[derive(Debug, Serialize, Deserialize)]
struct RotationJson {
    graph: GraphJson,
    rotation: BTreeMap<VertexId, Vec<RotationEntry>>,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn graph_json(g: &Graph) -> GraphJson {
    GraphJson {
        vertices: g
            .vertices()
            .map(|v| VertexJson {
                id: v,
                label: g.label(v).map(String::from),
            })
            .collect(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
    }
}

fn graph_from(j: GraphJson) -> Result<Graph> {
    let n = j.vertices.len();
    let mut labels = vec![None; n];
    let mut seen = vec![false; n];
    for v in j.vertices {
        if v.id >= n {
            return Err(Error::Parse(format!("vertex ids must be 0..{n}, found {}", v.id)));
        }
        if std::mem::replace(&mut seen[v.id], true) {
            return Err(Error::Parse(format!("vertex id {} repeated", v.id)));
        }
        labels[v.id] = v.label;
    }
    Graph::from_edges(n, j.edges.into_iter().map(|[u, v]| (u, v)))?.with_labels(labels)
}

pub fn graph_to_json(g: &Graph) -> Value {
    serde_json::to_value(graph_json(g)).expect("graphs serialize")
}

pub fn graph_from_json(v: &Value) -> Result<Graph> {
    graph_from(GraphJson::deserialize(v).map_err(parse_err)?)
}

pub fn empire_graph_to_json(eg: &EmpireGraph) -> Value {
    let j = EmpireGraphJson {
        graph: graph_json(eg.graph()),
        empires: eg
            .graph()
            .vertices()
            .map(|v| (v, eg.empire_id(v).to_string()))
            .collect(),
    };
    serde_json::to_value(j).expect("empire graphs serialize")
}

pub fn empire_graph_from_json(v: &Value) -> Result<EmpireGraph> {
    let j = EmpireGraphJson::deserialize(v).map_err(parse_err)?;
    let g = graph_from(j.graph)?;
    let assignment: Vec<&String> = g
        .vertices()
        .map(|v| {
            j.empires
                .get(&v)
                .ok_or_else(|| Error::InvalidEmpires(format!("vertex {v} has no empire")))
        })
        .collect::<Result<_>>()?;
    if j.empires.len() != g.vertex_count() {
        return Err(Error::InvalidEmpires(
            "empire assigned to a vertex not in the graph".into(),
        ));
    }
    EmpireGraph::new(g, &assignment)
}

pub fn rotation_to_json(rs: &RotationSystem) -> Value {
    let g = rs.graph();
    let mut pairs: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for &(u, v) in g.edges() {
        *pairs.entry((u, v)).or_default() += 1;
    }
    let rotation = g
        .vertices()
        .map(|v| {
            let entries = rs
                .rotation(v)
                .iter()
                .map(|&d| {
                    let u = rs.head(d);
                    let (a, b) = (u.min(v), u.max(v));
                    if a == b || pairs[&(a, b)] > 1 {
                        RotationEntry::Edge {
                            neighbour: u,
                            edge: d.edge(),
                        }
                    } else {
                        RotationEntry::Neighbour(u)
                    }
                })
                .collect();
            (v, entries)
        })
        .collect();
    serde_json::to_value(RotationJson {
        graph: graph_json(g),
        rotation,
    })
    .expect("rotation systems serialize")
}

pub fn rotation_from_json(v: &Value) -> Result<RotationSystem> {
    let j = RotationJson::deserialize(v).map_err(parse_err)?;
    let g = graph_from(j.graph)?;
    let n = g.vertex_count();
    if let Some(&bad) = j.rotation.keys().find(|&&v| v >= n) {
        return Err(Error::UnknownVertex(bad));
    }
    // darts named by edge index first, so plain entries take what is left
    let mut used = vec![false; 2 * g.edge_count()];
    let mut named: BTreeMap<(VertexId, usize), Dart> = BTreeMap::new();
    for (&v, entries) in &j.rotation {
        for (i, entry) in entries.iter().enumerate() {
            if let RotationEntry::Edge { neighbour, edge } = *entry {
                let &(a, b) = g
                    .edges()
                    .get(edge)
                    .ok_or_else(|| Error::InvalidRotation(format!("no edge with index {edge}")))?;
                if (a, b) != (v.min(neighbour), v.max(neighbour)) {
                    return Err(Error::InvalidRotation(format!(
                        "edge {edge} does not join {v} and {neighbour}"
                    )));
                }
                let forward = Dart::new(edge, false);
                let d = if a == b && used[forward.index()] {
                    forward.reverse()
                } else if v == a {
                    forward
                } else {
                    forward.reverse()
                };
                if used[d.index()] {
                    return Err(Error::InvalidRotation(format!("edge {edge} listed twice at {v}")));
                }
                used[d.index()] = true;
                named.insert((v, i), d);
            }
        }
    }
    let mut pool: HashMap<(VertexId, VertexId), VecDeque<Dart>> = HashMap::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        for (d, from, to) in [(Dart::new(e, false), a, b), (Dart::new(e, true), b, a)] {
            if !used[d.index()] {
                pool.entry((from, to)).or_default().push_back(d);
            }
        }
    }
    let mut rotation = vec![Vec::new(); n];
    for (&v, entries) in &j.rotation {
        for (i, entry) in entries.iter().enumerate() {
            let d = match *entry {
                RotationEntry::Edge { .. } => named[&(v, i)],
                RotationEntry::Neighbour(u) => pool
                    .get_mut(&(v, u))
                    .and_then(VecDeque::pop_front)
                    .ok_or_else(|| Error::InvalidRotation(format!("no unused edge {v} -- {u}")))?,
            };
            rotation[v].push(d);
        }
    }
    RotationSystem::new(g, rotation)
}

/// `{"empire_graph": ..., "rotation_system": ...}`.
pub fn embedded_to_json(eeg: &EmbeddedEmpireGraph) -> Value {
    let mut m = Map::new();
    m.insert("empire_graph".into(), empire_graph_to_json(&eeg.empire_graph));
    m.insert("rotation_system".into(), rotation_to_json(&eeg.rotation));
    Value::Object(m)
}

pub fn embedded_from_json(v: &Value) -> Result<EmbeddedEmpireGraph> {
    let part = |key: &str| v.get(key).ok_or_else(|| Error::Parse(format!("missing \"{key}\"")));
    let eg = empire_graph_from_json(part("empire_graph")?)?;
    let rs = rotation_from_json(part("rotation_system")?)?;
    EmbeddedEmpireGraph::new(eg, rs)
}

/// `{"colours": {"<id>": c}, "count": k}`; `ids[i]` names item `i`.
pub fn colouring_to_json(c: &Colouring, ids: &[String]) -> Value {
    let colours: Map<String, Value> = ids
        .iter()
        .zip(c.colours())
        .map(|(id, &k)| (id.clone(), Value::from(k)))
        .collect();
    let mut m = Map::new();
    m.insert("colours".into(), Value::Object(colours));
    m.insert("count".into(), Value::from(c.count()));
    Value::Object(m)
}

/// Item ids in the order written, and the colouring.
pub fn colouring_from_json(v: &Value) -> Result<(Vec<String>, Colouring)> {
    #[derive(Deserialize)]
    struct ColouringJson {
        colours: Map<String, Value>,
        count: usize,
    }
    let j = ColouringJson::deserialize(v).map_err(parse_err)?;
    let mut ids = Vec::new();
    let mut colours = Vec::new();
    for (id, c) in j.colours {
        let c = c
            .as_u64()
            .ok_or_else(|| Error::Parse(format!("colour of {id} is not a natural number")))?;
        ids.push(id);
        colours.push(c as usize);
    }
    let c = Colouring::new(colours);
    if c.count() != j.count {
        return Err(Error::Parse(format!(
            "count {} but {} colours used",
            j.count,
            c.count()
        )));
    }
    Ok((ids, c))
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected Graphviz source. With `colours`, vertices are filled with
/// evenly spaced hues, one per colour index.
pub fn to_dot(g: &Graph, colours: Option<&[usize]>) -> String {
    let mut out = String::from("graph G {\n");
    let hues = colours.map_or(0, |c| c.iter().max().map_or(0, |&k| k + 1));
    for v in g.vertices() {
        write!(out, "  {v} [label=\"{}\"", dot_escape(&g.display_name(v))).unwrap();
        if let Some(c) = colours {
            let h = c[v] as f64 / hues as f64;
            write!(out, ", style=filled, fillcolor=\"{h:.3} 0.450 0.950\"").unwrap();
        }
        out.push_str("];\n");
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// DOT for an empire graph: vertices coloured by the colour of their empire.
pub fn empire_graph_to_dot(eg: &EmpireGraph, empire_colours: Option<&Colouring>) -> String {
    let per_vertex: Option<Vec<usize>> =
        empire_colours.map(|c| eg.graph().vertices().map(|v| c.colour(eg.empire_of(v))).collect());
    to_dot(eg.graph(), per_vertex.as_deref())
}
