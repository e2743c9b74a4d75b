//! Rotation systems: the combinatorial form of a cellular embedding of a
//! graph in a closed orientable surface.
//!
//! Each edge `e = (u, v)` (canonical order, `u <= v`) owns two darts:
//! `2e` runs `u -> v` and `2e + 1` runs `v -> u`. The rotation at a vertex is
//! the cyclic counterclockwise order of the darts leaving it. Faces are
//! traced by following a dart `u -> v` with the successor of `v -> u` in the
//! rotation at `v`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use super::Surface;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(usize);

impl Dart {
    pub fn new(edge: usize, reversed: bool) -> Self {
        Dart(2 * edge + usize::from(reversed))
    }

    pub fn from_index(index: usize) -> Self {
        Dart(index)
    }

    pub fn index(self) -> usize {
        self.0
    }

    pub fn edge(self) -> usize {
        self.0 / 2
    }

    pub fn is_reversed(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn reverse(self) -> Dart {
        Dart(self.0 ^ 1)
    }
}

/// A closed boundary walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
    /// Tail of each dart, in walk order.
    pub vertices: Vec<VertexId>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    graph: Graph,
    rotation: Vec<Vec<Dart>>,
    position: Vec<usize>,
}

impl RotationSystem {
    /// Checks that every dart occurs exactly once, in its tail's rotation.
    pub fn new(graph: Graph, rotation: Vec<Vec<Dart>>) -> Result<Self> {
        if rotation.len() != graph.vertex_count() {
            return Err(Error::InvalidRotation(format!(
                "{} rotations for {} vertices",
                rotation.len(),
                graph.vertex_count()
            )));
        }
        let darts = 2 * graph.edge_count();
        let mut position = vec![usize::MAX; darts];
        for (v, cycle) in rotation.iter().enumerate() {
            for (i, &d) in cycle.iter().enumerate() {
                if d.0 >= darts {
                    return Err(Error::InvalidRotation(format!("dart {} out of range", d.0)));
                }
                if position[d.0] != usize::MAX {
                    return Err(Error::InvalidRotation(format!("dart {} listed twice", d.0)));
                }
                if tail_of(&graph, d) != v {
                    return Err(Error::InvalidRotation(format!(
                        "dart {} listed at {v} but leaves {}",
                        d.0,
                        tail_of(&graph, d)
                    )));
                }
                position[d.0] = i;
            }
        }
        if let Some(missing) = position.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidRotation(format!("dart {missing} missing")));
        }
        Ok(RotationSystem {
            graph,
            rotation,
            position,
        })
    }

    /// Builds from neighbour orders. Parallel darts between the same pair of
    /// vertices are consumed in edge-index order; for a loop the first
    /// occurrence is the forward dart.
    pub fn from_neighbour_orders(graph: Graph, orders: Vec<Vec<VertexId>>) -> Result<Self> {
        if orders.len() != graph.vertex_count() {
            return Err(Error::InvalidRotation(format!(
                "{} rotations for {} vertices",
                orders.len(),
                graph.vertex_count()
            )));
        }
        let mut pool: HashMap<(VertexId, VertexId), VecDeque<Dart>> = HashMap::new();
        for (e, &(u, v)) in graph.edges().iter().enumerate() {
            pool.entry((u, v)).or_default().push_back(Dart::new(e, false));
            pool.entry((v, u)).or_default().push_back(Dart::new(e, true));
        }
        let mut rotation = Vec::with_capacity(orders.len());
        for (v, order) in orders.iter().enumerate() {
            let mut cycle = Vec::with_capacity(order.len());
            for &u in order {
                let d = pool
                    .get_mut(&(v, u))
                    .and_then(VecDeque::pop_front)
                    .ok_or_else(|| Error::InvalidRotation(format!("no unused edge {v} -- {u}")))?;
                cycle.push(d);
            }
            rotation.push(cycle);
        }
        RotationSystem::new(graph, rotation)
    }

    /// Recovers the embedding of a simple graph from its faces.
    ///
    /// Each face is a cyclic vertex sequence. Faces may be listed in either
    /// direction: they are oriented consistently first (each edge must be
    /// used once in each direction), then the rotation at `v` is read off
    /// the corners `x -> v -> y`.
    pub fn from_faces(graph: Graph, faces: &[Vec<VertexId>]) -> Result<Self> {
        if !graph.is_simple() {
            return Err(Error::NotSimple);
        }
        let oriented = orient_faces(&graph, faces)?;
        let mut succ: HashMap<(VertexId, VertexId), VertexId> = HashMap::new();
        for face in &oriented {
            let k = face.len();
            for i in 0..k {
                let (x, v, y) = (face[(i + k - 1) % k], face[i], face[(i + 1) % k]);
                if succ.insert((v, x), y).is_some() {
                    return Err(Error::InconsistentFaces(format!("corner {x} -> {v} used twice")));
                }
            }
        }
        let mut orders = Vec::with_capacity(graph.vertex_count());
        for v in graph.vertices() {
            let nbrs = graph.neighbours(v);
            let Some(&start) = nbrs.first() else {
                orders.push(Vec::new());
                continue;
            };
            let mut order = vec![start];
            let mut cur = start;
            loop {
                cur = *succ
                    .get(&(v, cur))
                    .ok_or_else(|| Error::InconsistentFaces(format!("no corner after {cur} at {v}")))?;
                if cur == start {
                    break;
                }
                if order.len() == nbrs.len() {
                    return Err(Error::InconsistentFaces(format!("rotation at {v} does not close")));
                }
                order.push(cur);
            }
            if order.len() != nbrs.len() {
                return Err(Error::InconsistentFaces(format!(
                    "faces around {v} form more than one cycle"
                )));
            }
            orders.push(order);
        }
        RotationSystem::from_neighbour_orders(graph, orders)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rotation[v]
    }

    pub fn tail(&self, d: Dart) -> VertexId {
        tail_of(&self.graph, d)
    }

    pub fn head(&self, d: Dart) -> VertexId {
        tail_of(&self.graph, d.reverse())
    }

    /// The dart after `d` on its face.
    pub fn next_on_face(&self, d: Dart) -> Dart {
        let r = d.reverse();
        let cycle = &self.rotation[self.head(d)];
        cycle[(self.position[r.0] + 1) % cycle.len()]
    }

    /// Rotation at each vertex as neighbour ids.
    pub fn neighbour_orders(&self) -> Vec<Vec<VertexId>> {
        self.rotation
            .iter()
            .map(|cycle| cycle.iter().map(|&d| self.head(d)).collect())
            .collect()
    }

    /// Faces in order of their smallest dart. A connected graph with no
    /// edges has one empty face.
    pub fn trace_faces(&self) -> Result<Vec<Face>> {
        if !self.graph.is_connected() {
            return Err(Error::NotConnected);
        }
        if self.graph.edge_count() == 0 {
            return Ok(vec![Face {
                darts: Vec::new(),
                vertices: Vec::new(),
            }]);
        }
        Ok(self.walks())
    }

    /// Face walks of every component; isolated vertices contribute nothing.
    fn walks(&self) -> Vec<Face> {
        let total = 2 * self.graph.edge_count();
        let mut seen = vec![false; total];
        let mut faces = Vec::new();
        for start in 0..total {
            if seen[start] {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = Dart(start);
            while !seen[d.0] {
                seen[d.0] = true;
                darts.push(d);
                d = self.next_on_face(d);
            }
            let vertices = darts.iter().map(|&d| self.tail(d)).collect();
            faces.push(Face { darts, vertices });
        }
        faces
    }

    /// Genus of each connected component, in the order of
    /// [`Graph::components`]. Works on disconnected graphs.
    pub fn component_genera(&self) -> Vec<Surface> {
        let comps = self.graph.components();
        let mut which = vec![0; self.graph.vertex_count()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                which[v] = i;
            }
        }
        let mut chi: Vec<i64> = comps.iter().map(|c| c.len() as i64).collect();
        for &(u, _) in self.graph.edges() {
            chi[which[u]] -= 1;
        }
        let mut has_face = vec![false; comps.len()];
        for face in self.walks() {
            chi[which[face.vertices[0]]] += 1;
            has_face[which[face.vertices[0]]] = true;
        }
        chi.iter()
            .zip(has_face)
            .map(|(&x, f)| {
                Surface::from_euler_characteristic(if f { x } else { x + 1 })
                    .expect("face tracing gives an even χ <= 2 per component")
            })
            .collect()
    }

    /// Index into [`RotationSystem::trace_faces`] for every dart.
    pub fn face_of_darts(&self) -> Result<(Vec<Face>, Vec<usize>)> {
        let faces = self.trace_faces()?;
        let mut face_of = vec![0; 2 * self.graph.edge_count()];
        for (f, face) in faces.iter().enumerate() {
            for d in &face.darts {
                face_of[d.0] = f;
            }
        }
        Ok((faces, face_of))
    }

    pub fn euler_characteristic(&self) -> Result<i64> {
        let faces = self.trace_faces()?.len();
        Ok(super::euler_characteristic_from_counts(
            self.graph.vertex_count(),
            self.graph.edge_count(),
            faces,
        ))
    }

    /// Genus of the surface this embedding is cellular in.
    pub fn genus(&self) -> Result<Surface> {
        let chi = self.euler_characteristic()?;
        Ok(Surface::from_euler_characteristic(chi)
            .expect("face tracing of a connected rotation system gives an even χ <= 2"))
    }

    /// One vertex per face; one edge for each pair of distinct faces that
    /// share at least one edge. Always simple.
    pub fn dual_graph(&self) -> Result<Graph> {
        let (faces, face_of) = self.face_of_darts()?;
        let pairs: BTreeSet<(usize, usize)> = (0..self.graph.edge_count())
            .filter_map(|e| {
                let (a, b) = (face_of[2 * e], face_of[2 * e + 1]);
                (a != b).then(|| (a.min(b), a.max(b)))
            })
            .collect();
        let labels = (0..faces.len()).map(|f| Some(format!("f{f}"))).collect();
        Graph::from_edges(faces.len(), pairs)?.with_labels(labels)
    }

    /// Puts `other` beside `self`; its vertices are shifted past ours.
    pub fn disjoint_union(&self, other: &RotationSystem) -> RotationSystem {
        let mut orders = self.neighbour_orders();
        let off = self.graph.vertex_count();
        orders.extend(
            other
                .neighbour_orders()
                .into_iter()
                .map(|o| o.into_iter().map(|v| v + off).collect()),
        );
        let graph = self.graph.disjoint_union(&other.graph);
        RotationSystem::from_neighbour_orders(graph, orders).expect("union of valid rotation systems")
    }
}

fn tail_of(graph: &Graph, d: Dart) -> VertexId {
    let (u, v) = graph.edges()[d.edge()];
    if d.is_reversed() {
        v
    } else {
        u
    }
}

/// Flips faces so that every edge is traversed once in each direction.
fn orient_faces(graph: &Graph, faces: &[Vec<VertexId>]) -> Result<Vec<Vec<VertexId>>> {
    // occurrences of each undirected edge: (face, traversed low -> high)
    let mut uses: BTreeMap<(VertexId, VertexId), Vec<(usize, bool)>> = BTreeMap::new();
    for (f, face) in faces.iter().enumerate() {
        let k = face.len();
        if k < 2 {
            return Err(Error::InconsistentFaces(format!("face {f} has {k} vertices")));
        }
        for i in 0..k {
            let (a, b) = (face[i], face[(i + 1) % k]);
            if !graph.has_edge(a, b) || a == b {
                return Err(Error::InconsistentFaces(format!("face {f} uses non-edge {a} -- {b}")));
            }
            uses.entry((a.min(b), a.max(b))).or_default().push((f, a < b));
        }
    }
    for &(a, b) in graph.edges() {
        let n = uses.get(&(a, b)).map_or(0, Vec::len);
        if n != 2 {
            return Err(Error::InconsistentFaces(format!(
                "edge {a} -- {b} lies on {n} face sides"
            )));
        }
    }
    let mut flip: Vec<Option<bool>> = vec![None; faces.len()];
    let mut by_face: Vec<Vec<(usize, bool, usize, bool)>> = vec![Vec::new(); faces.len()];
    for occ in uses.values() {
        let ((f, df), (g, dg)) = (occ[0], occ[1]);
        by_face[f].push((f, df, g, dg));
        by_face[g].push((g, dg, f, df));
    }
    for root in 0..faces.len() {
        if flip[root].is_some() {
            continue;
        }
        flip[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            let ff = flip[f].expect("queued faces are oriented");
            for &(_, df, g, dg) in &by_face[f] {
                // effective directions must differ: (df ^ ff) != (dg ^ fg)
                let want = !(df ^ ff) ^ dg;
                match flip[g] {
                    None => {
                        flip[g] = Some(want);
                        queue.push_back(g);
                    }
                    Some(fg) if fg != want => {
                        return Err(Error::InconsistentFaces(format!(
                            "faces {f} and {g} cannot be oriented consistently"
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(faces
        .iter()
        .zip(flip)
        .map(|(face, fl)| {
            let mut face = face.clone();
            if fl == Some(true) {
                face.reverse();
            }
            face
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};

    fn toroidal_k7() -> RotationSystem {
        let orders = (0..7)
            .map(|i| [1, 3, 2, 6, 4, 5].iter().map(|k| (i + k) % 7).collect())
            .collect();
        RotationSystem::from_neighbour_orders(complete_graph(7).unwrap(), orders).unwrap()
    }

    #[test]
    fn toroidal_k7_has_fourteen_triangles() {
        let rs = toroidal_k7();
        let faces = rs.trace_faces().unwrap();
        assert_eq!(faces.len(), 14);
        assert!(faces.iter().all(|f| f.len() == 3));
        assert_eq!(rs.genus().unwrap(), Surface::TORUS);
    }

    #[test]
    fn single_edge_has_one_face() {
        let g = complete_graph(2).unwrap();
        let rs = RotationSystem::from_neighbour_orders(g, vec![vec![1], vec![0]]).unwrap();
        let faces = rs.trace_faces().unwrap();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].len(), 2);
        assert_eq!(rs.genus().unwrap(), Surface::SPHERE);
    }

    #[test]
    fn cycle_is_planar_and_dualizes_to_an_edge() {
        let g = cycle_graph(5).unwrap();
        let orders = (0..5).map(|i| vec![(i + 1) % 5, (i + 4) % 5]).collect();
        let rs = RotationSystem::from_neighbour_orders(g, orders).unwrap();
        assert_eq!(rs.genus().unwrap(), Surface::SPHERE);
        let dual = rs.dual_graph().unwrap();
        assert_eq!((dual.vertex_count(), dual.edges()), (2, &[(0, 1)][..]));
    }

    #[test]
    fn single_vertex() {
        let rs = RotationSystem::from_neighbour_orders(complete_graph(1).unwrap(), vec![vec![]]).unwrap();
        assert_eq!(rs.trace_faces().unwrap().len(), 1);
        assert_eq!(rs.genus().unwrap(), Surface::SPHERE);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let rs = RotationSystem::from_neighbour_orders(g, vec![vec![1], vec![0], vec![3], vec![2]]).unwrap();
        assert_eq!(rs.trace_faces(), Err(Error::NotConnected));
        assert_eq!(rs.genus(), Err(Error::NotConnected));
        assert_eq!(rs.dual_graph(), Err(Error::NotConnected));
    }

    #[test]
    fn genera_of_components() {
        let k4 = complete_graph(4).unwrap();
        let planar =
            RotationSystem::from_faces(k4, &[vec![0, 1, 2], vec![0, 1, 3], vec![1, 2, 3], vec![0, 2, 3]]).unwrap();
        let both = planar.disjoint_union(&toroidal_k7());
        assert_eq!(both.component_genera(), [Surface::SPHERE, Surface::TORUS]);
        let lone = RotationSystem::from_neighbour_orders(Graph::empty(2), vec![vec![], vec![]]).unwrap();
        assert_eq!(lone.component_genera(), [Surface::SPHERE; 2]);
    }

    #[test]
    fn validation() {
        let g = complete_graph(3).unwrap();
        assert!(RotationSystem::from_neighbour_orders(g.clone(), vec![vec![1, 2], vec![0, 2], vec![0]]).is_err());
        assert!(RotationSystem::from_neighbour_orders(g.clone(), vec![vec![1, 1], vec![0, 2], vec![0, 1]]).is_err());
        assert!(RotationSystem::new(
            g,
            vec![vec![Dart(0), Dart(2)], vec![Dart(1), Dart(4)], vec![Dart(3), Dart(0)]]
        )
        .is_err());
    }

    #[test]
    fn loops_and_parallel_edges_trace() {
        // a vertex with a loop, drawn as a petal: two faces on the sphere
        let g = Graph::from_edges(1, [(0, 0)]).unwrap();
        let rs = RotationSystem::new(g, vec![vec![Dart(0), Dart(1)]]).unwrap();
        assert_eq!(rs.trace_faces().unwrap().len(), 2);
        assert_eq!(rs.genus().unwrap(), Surface::SPHERE);
        // a digon
        let g = Graph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        let rs = RotationSystem::from_neighbour_orders(g, vec![vec![1, 1], vec![0, 0]]).unwrap();
        assert_eq!(rs.genus().unwrap(), Surface::SPHERE);
    }

    #[test]
    fn from_faces_tetrahedron() {
        let g = complete_graph(4).unwrap();
        // deliberately mixed orientations
        let faces = vec![vec![0, 1, 2], vec![0, 1, 3], vec![1, 2, 3], vec![0, 3, 2]];
        let rs = RotationSystem::from_faces(g, &faces).unwrap();
        assert_eq!(rs.genus().unwrap(), Surface::SPHERE);
        assert_eq!(rs.trace_faces().unwrap().len(), 4);
    }

    #[test]
    fn from_faces_round_trips_traced_faces() {
        let rs = toroidal_k7();
        let faces: Vec<Vec<usize>> = rs.trace_faces().unwrap().into_iter().map(|f| f.vertices).collect();
        let back = RotationSystem::from_faces(rs.graph().clone(), &faces).unwrap();
        assert_eq!(back.genus().unwrap(), Surface::TORUS);
    }

    #[test]
    fn from_faces_rejects_incomplete_lists() {
        let g = complete_graph(4).unwrap();
        let faces = vec![vec![0, 1, 2], vec![0, 1, 3], vec![1, 2, 3]];
        assert!(matches!(
            RotationSystem::from_faces(g, &faces),
            Err(Error::InconsistentFaces(_))
        ));
    }
}
