use std::collections::BTreeSet;

use super::{Edge, VertexId};
use crate::error::{Error, Result};

/// A walk through distinct vertices; consecutive vertices are joined by the
/// path's edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    vertices: Vec<VertexId>,
}

impl Path {
    /// Rejects empty sequences and repeated vertices. Distinct vertices also
    /// make the edges distinct.
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidPath("no vertices".into()));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::InvalidPath(format!("repeated vertex in {vertices:?}")));
        }
        Ok(Path { vertices })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        self.vertices[self.vertices.len() - 1]
    }

    /// Edges in walk order, each as `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges().collect()
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }
}

/// Splits `K_{2n}` into `n` edge-disjoint Hamiltonian paths.
///
/// Walecki's zigzag on `Z_{2n}`: path `k` is
/// `k, k+1, k-1, k+2, k-2, ..., k+n`. Every edge of path `k` has endpoint
/// sum `2k` or `2k+1` modulo `2n`, so different paths never share an edge,
/// and path `k` ends at `k` and `k+n`, so every vertex is an endpoint once.
pub fn hamiltonian_decomposition(n: usize) -> Result<Vec<Path>> {
    if n == 0 {
        return Err(Error::InvalidArgument("decomposition of K_0".into()));
    }
    let order = 2 * n;
    let paths = (0..n)
        .map(|k| {
            let mut seq = Vec::with_capacity(order);
            seq.push(k);
            for j in 1..=n {
                seq.push((k + j) % order);
                if seq.len() < order {
                    seq.push((k + order - j) % order);
                }
            }
            Path::new(seq).expect("zigzag visits distinct residues")
        })
        .collect();
    Ok(paths)
}
