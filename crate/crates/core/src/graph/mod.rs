//! Finite undirected multigraphs on dense vertex indices.
//!
//! A [`Graph`] keeps loops and parallel edges as distinct entries so that
//! constructions which produce them (collapsing empires, duals of small
//! embeddings) can be represented before they are cleaned up. Edges are
//! always stored canonically: smaller endpoint first, sorted
//! lexicographically. An edge's index is its position in that order.

mod families;
mod path;

pub use families::{complete_bipartite, complete_graph, cycle_graph, petersen_graph};
pub use path::{hamiltonian_decomposition, Path};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An undirected edge stored as `(min, max)`.
pub type Edge = (VertexId, VertexId);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<Option<String>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// `n` isolated, unlabelled vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            labels: vec![None; n],
            edges: Vec::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut out = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Graph {
            labels: vec![None; n],
            edges: out,
        })
    }

    /// Replaces all labels; `labels.len()` must equal the vertex count.
    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> Result<Self> {
        if labels.len() != self.labels.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.labels.len()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.labels.len()
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(v).and_then(|l| l.as_deref())
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// Label if present, otherwise the numeric id.
    pub fn display_name(&self, v: VertexId) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_owned)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v < self.labels.len()
    }

    /// Number of incident edge-ends; a loop counts twice.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        if !self.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(self
            .edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum())
    }

    /// Degrees of all vertices in one pass.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.edges.windows(2).any(|w| w[0] == w[1])
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Neighbour lists with multiplicity; a loop at `v` lists `v` twice.
    pub fn adjacency(&self) -> Vec<Vec<VertexId>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Sorted, de-duplicated neighbours excluding `v` itself.
    pub fn neighbours(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| match (a == v, b == v) {
                (true, false) => Some(b),
                (false, true) => Some(a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut slot = vec![usize::MAX; n];
        let mut comps: Vec<Vec<VertexId>> = Vec::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[slot[r]].push(v);
        }
        comps
    }

    /// The empty graph is not considered connected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().len() == 1
    }

    /// Removes loops and collapses parallel edges.
    pub fn simplified(&self) -> Graph {
        let mut edges: Vec<Edge> = self.edges.iter().copied().filter(|&(a, b)| a != b).collect();
        edges.dedup();
        Graph {
            labels: self.labels.clone(),
            edges,
        }
    }

    /// Deletes `v` and its incident edges; later vertices shift down by one.
    pub fn remove_vertex(&self, v: VertexId) -> Result<Graph> {
        if !self.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        let shift = |x: VertexId| if x > v { x - 1 } else { x };
        let mut labels = self.labels.clone();
        labels.remove(v);
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        Ok(Graph { labels, edges })
    }

    /// Deletes the edge at canonical index `index`.
    pub fn remove_edge(&self, index: usize) -> Result<Graph> {
        if index >= self.edges.len() {
            return Err(Error::InvalidArgument(format!("no edge with index {index}")));
        }
        let mut edges = self.edges.clone();
        edges.remove(index);
        Ok(Graph {
            labels: self.labels.clone(),
            edges,
        })
    }

    /// Adds one edge, keeping canonical order.
    pub fn with_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        for x in [u, v] {
            if !self.contains(x) {
                return Err(Error::UnknownVertex(x));
            }
        }
        let e = (u.min(v), u.max(v));
        let mut edges = self.edges.clone();
        let at = edges.partition_point(|&x| x <= e);
        edges.insert(at, e);
        Ok(Graph {
            labels: self.labels.clone(),
            edges,
        })
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.vertex_count();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + off, b + off)));
        edges.sort_unstable();
        Graph { labels, edges }
    }
}
