//! Planar complete empire graphs on `6m` empires of `m` countries.
//!
//! Three families `A`, `B`, `C` each take a Hamiltonian path decomposition
//! of `K_{2m}`; every path is drawn as its own copy, and country `k` of a
//! copy belongs to empire `Fk` of its family `F`. Path edges give all
//! adjacencies inside a family. Cross-family adjacencies come from joining
//! path endpoints to whole paths of the next family: since every label is
//! an endpoint of exactly one path, and every path visits every label, each
//! `A` empire then meets each `B` empire, and likewise `B`-`C` and `C`-`A`.
//!
//! Every construction carries its plane embedding as an explicit list of
//! faces, so genus 0 is checked rather than assumed.

use std::collections::BTreeSet;

use crate::empire::EmpireGraph;
use crate::error::{Error, Result};
use crate::graph::{hamiltonian_decomposition, Graph, Path, VertexId};
use crate::topology::{RotationSystem, Surface};

const FAMILIES: [char; 3] = ['A', 'B', 'C'];

/// An empire graph together with an embedding of its base graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedEmpireGraph {
    pub empire_graph: EmpireGraph,
    pub rotation: RotationSystem,
}

impl EmbeddedEmpireGraph {
    pub fn new(empire_graph: EmpireGraph, rotation: RotationSystem) -> Result<Self> {
        if empire_graph.graph() != rotation.graph() {
            return Err(Error::InvalidRotation("embedding is of a different graph".into()));
        }
        Ok(EmbeddedEmpireGraph { empire_graph, rotation })
    }

    pub fn graph(&self) -> &Graph {
        self.rotation.graph()
    }

    /// Every component is embedded in the sphere.
    pub fn is_spherical(&self) -> bool {
        self.rotation.component_genera().iter().all(|&s| s == Surface::SPHERE)
    }
}

/// Vertices, edges and faces collected before the embedding is built.
#[derive(Default)]
struct Builder {
    labels: Vec<String>,
    empires: Vec<String>,
    edges: Vec<(VertexId, VertexId)>,
    faces: Vec<Vec<VertexId>>,
}

impl Builder {
    /// Adds a copy of `path` as the path with index `tag` of `family`.
    fn path(&mut self, family: usize, path: &Path, tag: usize) -> Vec<VertexId> {
        let start = self.labels.len();
        for &k in path.vertices() {
            self.labels.push(format!("{}{k}.p{tag}", FAMILIES[family]));
            self.empires.push(format!("{}{k}", FAMILIES[family]));
        }
        let ids: Vec<VertexId> = (start..self.labels.len()).collect();
        self.edges.extend(ids.windows(2).map(|w| (w[0], w[1])));
        ids
    }

    fn fan(&mut self, apex: VertexId, targets: &[VertexId]) {
        self.edges.extend(targets.iter().map(|&t| (apex, t)));
    }

    /// Triangles between `apex` and consecutive targets.
    fn strip(&mut self, apex: VertexId, targets: &[VertexId]) {
        self.faces.extend(targets.windows(2).map(|w| vec![apex, w[0], w[1]]));
    }

    /// Takes over the vertices, edges and traced faces of an embedded piece.
    fn absorb(&mut self, piece: &EmbeddedEmpireGraph) -> usize {
        let off = self.labels.len();
        let g = piece.graph();
        self.labels.extend(g.vertices().map(|v| g.display_name(v)));
        self.empires
            .extend(piece.empire_graph.assignment().into_iter().map(String::from));
        self.edges.extend(g.edges().iter().map(|&(u, v)| (u + off, v + off)));
        let faces = piece.rotation.trace_faces().expect("pieces are connected");
        self.faces.extend(
            faces
                .into_iter()
                .map(|f| f.vertices.into_iter().map(|v| v + off).collect()),
        );
        off
    }

    fn take_face(&mut self, pred: impl Fn(&[VertexId]) -> bool) -> Result<Vec<VertexId>> {
        let i = self
            .faces
            .iter()
            .position(|f| pred(f))
            .ok_or_else(|| Error::InvalidRotation("expected face not found".into()))?;
        Ok(self.faces.remove(i))
    }

    /// Draws the component holding `apex` inside the host face whose vertex
    /// set is `host`, and joins `apex` to the vertices of `stretch`, which
    /// must run consecutively along that face. The guest's face through
    /// `apex` becomes its outer face. Both faces must be oriented as traced.
    fn nest(&mut self, host: &BTreeSet<VertexId>, stretch: &[VertexId], apex: VertexId) -> Result<()> {
        let walk = self.take_face(|f| f.iter().copied().collect::<BTreeSet<_>>() == *host)?;
        let guest = self.take_face(|f| f.contains(&apex))?;
        let inside: BTreeSet<VertexId> = stretch.iter().copied().collect();
        let n = walk.len();
        let start = (0..n)
            .find(|&i| inside.contains(&walk[i]) && !inside.contains(&walk[(i + n - 1) % n]))
            .ok_or_else(|| Error::InvalidRotation("stretch is not part of the face".into()))?;
        let w: Vec<VertexId> = (0..n).map(|i| walk[(start + i) % n]).collect();
        let k = stretch.len();
        if !w[..k].iter().all(|v| inside.contains(v)) {
            return Err(Error::InvalidRotation("stretch is not consecutive on the face".into()));
        }
        let at = guest.iter().position(|&v| v == apex).expect("guest face contains apex");
        let around: Vec<VertexId> = guest[at..].iter().chain(&guest[..at]).copied().collect();

        self.fan(apex, stretch);
        self.faces.extend(w[..k].windows(2).map(|p| vec![p[0], p[1], apex]));
        let mut big = vec![w[0]];
        big.extend(&around);
        big.push(apex);
        big.extend(&w[k - 1..]);
        self.faces.push(big);
        Ok(())
    }

    fn finish(self) -> Result<EmbeddedEmpireGraph> {
        let n = self.labels.len();
        let graph = Graph::from_edges(n, self.edges)?.with_labels(self.labels.into_iter().map(Some).collect())?;
        if !graph.is_simple() {
            return Err(Error::NotSimple);
        }
        let rotation = RotationSystem::from_faces(graph.clone(), &self.faces)?;
        let empire_graph = EmpireGraph::new(graph, &self.empires)?;
        EmbeddedEmpireGraph::new(empire_graph, rotation)
    }
}

fn check_family(pair: [&Path; 2], family: usize) -> Result<()> {
    let [p, q] = pair;
    if let Some(e) = p.edge_set().intersection(&q.edge_set()).next() {
        return Err(Error::PathsNotDisjoint(format!(
            "both {} paths use {}{} -- {}{}",
            FAMILIES[family], FAMILIES[family], e.0, FAMILIES[family], e.1
        )));
    }
    Ok(())
}

fn block_into(b: &mut Builder, paths: [[&Path; 2]; 3], tags: [usize; 2]) -> Result<()> {
    for (f, pair) in paths.iter().enumerate() {
        check_family(*pair, f)?;
    }
    let mut copies = Vec::new();
    for (f, pair) in paths.iter().enumerate() {
        for (s, p) in pair.iter().enumerate() {
            copies.push(b.path(f, p, tags[s]));
        }
    }
    let [a, a2, bp, b2, c, c2]: [Vec<VertexId>; 6] = copies.try_into().expect("six copies");
    let last = |p: &[VertexId]| p[p.len() - 1];

    // endpoints of each family see whole paths of the next
    for (x, x2, y, y2) in [(&a, &a2, &bp, &b2), (&bp, &b2, &c, &c2), (&c, &c2, &a, &a2)] {
        b.fan(x[0], y);
        b.fan(x2[0], y);
        b.fan(last(x), y2);
        b.fan(last(x2), y2);
    }

    // the four strips around the B copies
    b.strip(a[0], &bp);
    b.strip(a2[0], &bp);
    b.strip(last(&a), &b2);
    b.strip(last(&a2), &b2);
    // the two regions, one for each C copy, between the A and B strips
    for (cc, b_end, b2_end) in [(&c, bp[0], b2[0]), (&c2, last(&bp), last(&b2))] {
        let (c0, ce) = (cc[0], last(cc));
        b.strip(c0, &a);
        b.strip(ce, &a2);
        b.strip(b_end, cc);
        b.strip(b2_end, cc);
        b.faces.push(vec![b_end, a[0], c0]);
        b.faces.push(vec![b2_end, last(&a), c0]);
        b.faces.push(vec![b_end, a2[0], ce]);
        b.faces.push(vec![b2_end, last(&a2), ce]);
    }
    Ok(())
}

/// The planar block on two paths from each family.
///
/// The starts of both `A` paths are joined to all of the first `B` path and
/// their ends to all of the second; `B` to `C` and `C` to `A` likewise. The
/// result is a triangulation of the sphere. Paths in a family must be edge
/// disjoint. Copies are tagged as paths 0 and 1 of their family.
pub fn six_path_block(a: [&Path; 2], b: [&Path; 2], c: [&Path; 2]) -> Result<EmbeddedEmpireGraph> {
    let mut builder = Builder::default();
    block_into(&mut builder, [a, b, c], [0, 1])?;
    builder.finish()
}

fn block(d: &[Path], k: usize) -> Result<EmbeddedEmpireGraph> {
    let pair = [&d[2 * k], &d[2 * k + 1]];
    let mut builder = Builder::default();
    block_into(&mut builder, [pair, pair, pair], [2 * k, 2 * k + 1])?;
    builder.finish()
}

/// `m/2` disjoint blocks, pairing paths `(0, 1), (2, 3), ...` of one
/// decomposition of `K_{2m}` used for all three families. Not joined up;
/// see [`connectify`].
pub fn build_even(m: usize) -> Result<EmbeddedEmpireGraph> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "even construction needs even m >= 2, got {m}"
        )));
    }
    let d = hamiltonian_decomposition(m)?;
    let mut builder = Builder::default();
    for k in 0..m / 2 {
        builder.absorb(&block(&d, k)?);
    }
    builder.finish()
}

/// `(m − 1)/2` blocks plus a gadget on the last path of each family.
///
/// In the gadget both ends of the last `A` path see all of the last `B`
/// path, the start of `B` sees all of `C` and the start of `C` all of `A`.
/// The two loose ends are covered by other copies of their labels: block
/// 0's copy in its first `B` path is drawn inside the gadget face bounded by
/// the `C` path and joined to all of it, and block 1's copy in its first
/// `C` path sits in the face bounded by the `A` path and sees all of it.
/// Blocks from 2 on stay separate, so the graph is connected only for
/// `m = 5`.
pub fn build_odd(m: usize) -> Result<EmbeddedEmpireGraph> {
    if m < 5 || m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "odd construction needs odd m >= 5, got {m}"
        )));
    }
    let k = (m - 1) / 2;
    let d = hamiltonian_decomposition(m)?;
    let rest = &d[2 * k];

    let mut gadget = Builder::default();
    let ra = gadget.path(0, rest, 2 * k);
    let rb = gadget.path(1, rest, 2 * k);
    let rc = gadget.path(2, rest, 2 * k);
    let last = |p: &[VertexId]| p[p.len() - 1];
    gadget.fan(ra[0], &rb);
    gadget.fan(last(&ra), &rb);
    gadget.fan(rb[0], &rc);
    gadget.fan(rc[0], &ra);
    gadget.strip(ra[0], &rb);
    gadget.strip(last(&ra), &rb);
    gadget.strip(rc[0], &ra);
    gadget.strip(rb[0], &rc);
    gadget.faces.push(vec![rc[0], ra[0], rb[0]]);
    let mut around_c = rc.clone();
    around_c.extend([rb[0], last(&ra)]);
    gadget.faces.push(around_c.clone());
    let mut around_a = ra.clone();
    around_a.push(last(&rb));
    gadget.faces.push(around_a.clone());
    let gadget = gadget.finish()?;

    let mut builder = Builder::default();
    let mut offsets = Vec::new();
    for j in 0..k {
        offsets.push(builder.absorb(&block(&d, j)?));
    }
    let g_off = builder.absorb(&gadget);
    let shift = |vs: &[VertexId]| vs.iter().map(|&v| v + g_off).collect::<Vec<_>>();
    // the label ending the leftover path is missing its neighbour pairs
    // with both neighbouring families
    let loose = rest.last();
    // block j lays out A, A', B, B', C, C' copies of length 2m in that order
    let len = 2 * m;
    let b_copy = offsets[0] + 2 * len + position(&d[0], loose);
    let c_copy = offsets[1] + 4 * len + position(&d[2], loose);
    builder.nest(&shift(&around_c).into_iter().collect(), &shift(&rc), b_copy)?;
    builder.nest(&shift(&around_a).into_iter().collect(), &shift(&ra), c_copy)?;
    builder.finish()
}

fn position(path: &Path, label: VertexId) -> usize {
    path.vertices()
        .iter()
        .position(|&v| v == label)
        .expect("paths are Hamiltonian")
}

/// Joins components by a chain of bridges between their lowest-numbered
/// vertices. A bridge between two spherical components keeps the result
/// spherical wherever it sits in the rotations.
pub fn connectify(eeg: &EmbeddedEmpireGraph) -> Result<EmbeddedEmpireGraph> {
    if !eeg.is_spherical() {
        return Err(Error::InvalidArgument(
            "connectify needs every component on the sphere".into(),
        ));
    }
    let comps = eeg.graph().components();
    if comps.len() <= 1 {
        return Ok(eeg.clone());
    }
    let mut orders = eeg.rotation.neighbour_orders();
    let mut graph = eeg.graph().clone();
    for pair in comps.windows(2) {
        let (u, v) = (pair[0][0], pair[1][0]);
        graph = graph.with_edge(u, v)?;
        orders[u].push(v);
        orders[v].push(u);
    }
    let rotation = RotationSystem::from_neighbour_orders(graph.clone(), orders)?;
    EmbeddedEmpireGraph::new(eeg.empire_graph.with_graph(graph)?, rotation)
}

/// The planar complete m-pire graph on `6m` empires for `m = 2` and `m >= 4`,
/// optionally joined into one component.
pub fn wessel_graph(m: usize, connect: bool) -> Result<EmbeddedEmpireGraph> {
    let literal = match m {
        0 | 1 | 3 => {
            return Err(Error::InvalidArgument(format!(
                "no generator for m = {m} (supported: 2 and m >= 4)"
            )))
        }
        _ if m.is_multiple_of(2) => build_even(m)?,
        _ => build_odd(m)?,
    };
    if connect {
        connectify(&literal)
    } else {
        Ok(literal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::empire::verify_jnm;

    fn single(k: usize) -> Path {
        Path::new(vec![k]).unwrap()
    }

    #[test]
    fn single_vertex_paths_give_the_octahedron() {
        let (p, q) = (single(0), single(1));
        let eg = six_path_block([&p, &q], [&p, &q], [&p, &q]).unwrap();
        let g = eg.graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 12));
        assert!(g.degrees().iter().all(|&d| d == 4));
        assert_eq!(eg.rotation.genus().unwrap(), Surface::SPHERE);
    }

    #[test]
    fn block_of_four_vertex_paths() {
        let d = hamiltonian_decomposition(2).unwrap();
        let eg = six_path_block([&d[0], &d[1]], [&d[0], &d[1]], [&d[0], &d[1]]).unwrap();
        let g = eg.graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (24, 66));
        assert_eq!(eg.rotation.trace_faces().unwrap().len(), 44);
        assert_eq!(eg.rotation.genus().unwrap(), Surface::SPHERE);
        assert!(verify_jnm(&eg.empire_graph, 12, 2).passed);
    }

    #[test]
    fn block_rejects_shared_edges() {
        let p = Path::new(vec![0, 1, 2]).unwrap();
        let q = Path::new(vec![2, 1, 0]).unwrap();
        assert!(matches!(
            six_path_block([&p, &q], [&p, &q], [&p, &q]),
            Err(Error::PathsNotDisjoint(_))
        ));
    }

    #[test]
    fn labels_name_family_label_and_path() {
        let eg = build_even(2).unwrap();
        assert_eq!(eg.graph().label(0), Some("A0.p0"));
        assert_eq!(eg.empire_graph.empire_id(0), "A0");
        assert_eq!(eg.empire_graph.empire_count(), 12);
    }

    #[test]
    fn even_four() {
        let eg = build_even(4).unwrap();
        assert_eq!(eg.graph().vertex_count(), 96);
        assert_eq!(eg.graph().components().len(), 2);
        assert!(eg.is_spherical());
        assert!(verify_jnm(&eg.empire_graph, 24, 4).passed);
        let joined = connectify(&eg).unwrap();
        assert!(joined.graph().is_connected());
        assert_eq!(joined.rotation.genus().unwrap(), Surface::SPHERE);
        assert!(verify_jnm(&joined.empire_graph, 24, 4).passed);
    }

    #[test]
    fn odd_five_is_connected() {
        let eg = build_odd(5).unwrap();
        assert!(eg.graph().is_connected());
        assert_eq!(eg.rotation.genus().unwrap(), Surface::SPHERE);
        let r = verify_jnm(&eg.empire_graph, 30, 5);
        assert!(r.passed, "{r:?}");
        assert_eq!(connectify(&eg).unwrap(), eg);
    }

    #[test]
    fn argument_checks() {
        assert!(build_even(3).is_err());
        assert!(build_even(0).is_err());
        assert!(build_odd(3).is_err());
        assert!(build_odd(6).is_err());
        assert!(wessel_graph(3, true).is_err());
        assert!(wessel_graph(1, true).is_err());
    }

    #[test]
    fn connectify_two_triangles() {
        let tri = |off: usize| vec![vec![off + 1, off + 2], vec![off, off + 2], vec![off, off + 1]];
        let mut orders = tri(0);
        orders.extend(tri(3));
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        let rs = RotationSystem::from_neighbour_orders(g.clone(), orders).unwrap();
        let eeg = EmbeddedEmpireGraph::new(EmpireGraph::singletons(g), rs).unwrap();
        let joined = connectify(&eeg).unwrap();
        assert_eq!(joined.graph().edge_count(), 7);
        assert!(joined.graph().has_edge(0, 3));
        assert_eq!(joined.rotation.genus().unwrap(), Surface::SPHERE);
    }
}
