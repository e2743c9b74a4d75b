//! Exact and greedy vertex colouring, and colouring of empire graphs.

use crate::empire::EmpireGraph;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Colour index per vertex, numbered from 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Colouring {
    colours: Vec<usize>,
    count: usize,
}

impl Colouring {
    pub fn new(colours: Vec<usize>) -> Self {
        let mut distinct = colours.clone();
        distinct.sort_unstable();
        distinct.dedup();
        Colouring {
            count: distinct.len(),
            colours,
        }
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, v: VertexId) -> usize {
        self.colours[v]
    }

    /// Number of distinct colours used.
    pub fn count(&self) -> usize {
        self.count
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    /// Covers every vertex and no edge (loops included) is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colours.len() == g.vertex_count() && g.edges().iter().all(|&(u, v)| self.colours[u] != self.colours[v])
    }

    /// Vertices of each colour, by colour index.
    pub fn classes(&self) -> Vec<Vec<VertexId>> {
        let top = self.colours.iter().max().map_or(0, |&c| c + 1);
        let mut out = vec![Vec::new(); top];
        for (v, &c) in self.colours.iter().enumerate() {
            out[c].push(v);
        }
        out.retain(|c| !c.is_empty());
        out
    }
}

pub const DEFAULT_SOLVER_CAP: usize = 64;

/// Cap used by [`is_critical`], which runs the solver once per vertex and edge.
pub const CRITICAL_CAP: usize = 12;

/// Exact chromatic numbers by DSATUR-ordered branch and bound, seeded with
/// a greedy clique as lower bound and a DSATUR colouring as upper bound.
/// Ties are always broken towards the lowest vertex id, so results are
/// deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChromaticSolver {
    pub cap: usize,
}

impl Default for ChromaticSolver {
    fn default() -> Self {
        ChromaticSolver {
            cap: DEFAULT_SOLVER_CAP,
        }
    }
}

impl ChromaticSolver {
    pub fn new(cap: usize) -> Self {
        ChromaticSolver { cap }
    }

    /// Minimum number of colours, with a witness using exactly that many.
    pub fn solve(&self, g: &Graph) -> Result<(usize, Colouring)> {
        if !g.is_simple() {
            return Err(Error::NotSimple);
        }
        if g.vertex_count() > self.cap {
            return Err(Error::TooLarge {
                vertices: g.vertex_count(),
                cap: self.cap,
            });
        }
        let colours = Search::new(g).run();
        let c = Colouring::new(colours);
        debug_assert!(c.is_proper(g));
        Ok((c.count(), c))
    }

    pub fn chromatic_number(&self, g: &Graph) -> Result<usize> {
        Ok(self.solve(g)?.0)
    }

    /// Chromatic number of the collapsed graph; the witness colours empires
    /// in the order of [`EmpireGraph::empire_ids`].
    pub fn solve_empires(&self, eg: &EmpireGraph) -> Result<(usize, Colouring)> {
        self.solve(&eg.collapse().graph)
    }
}

pub fn chromatic_number(g: &Graph) -> Result<(usize, Colouring)> {
    ChromaticSolver::default().solve(g)
}

pub fn empire_chromatic_number(eg: &EmpireGraph) -> Result<(usize, Colouring)> {
    ChromaticSolver::default().solve_empires(eg)
}

/// Clique grown greedily from a highest-degree vertex.
pub fn greedy_clique(g: &Graph) -> Vec<VertexId> {
    let adj = matrix(g);
    let deg: Vec<usize> = (0..g.vertex_count())
        .map(|v| adj[v].iter().filter(|&&b| b).count())
        .collect();
    let best = |cands: &mut dyn Iterator<Item = VertexId>| cands.max_by_key(|&v| (deg[v], std::cmp::Reverse(v)));
    let mut clique = Vec::new();
    let mut next = best(&mut (0..g.vertex_count()));
    while let Some(v) = next {
        clique.push(v);
        next = best(&mut (0..g.vertex_count()).filter(|&u| clique.iter().all(|&c| adj[c][u])));
    }
    clique
}

fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        if u != v {
            adj[u][v] = true;
            adj[v][u] = true;
        }
    }
    adj
}

struct Search {
    n: usize,
    adj: Vec<Vec<VertexId>>,
    colour: Vec<Option<usize>>,
    /// `seen[v][c]`: neighbours of `v` currently coloured `c`.
    seen: Vec<Vec<usize>>,
    best: Vec<usize>,
    best_count: usize,
    lower: usize,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        Search {
            n,
            adj: g.vertices().map(|v| g.neighbours(v)).collect(),
            colour: vec![None; n],
            seen: vec![vec![0; n + 1]; n],
            best: Vec::new(),
            best_count: usize::MAX,
            lower: 0,
        }
    }

    fn run(mut self) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        let g_clique = {
            let edges = (0..self.n).flat_map(|u| self.adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)));
            greedy_clique(&Graph::from_edges(self.n, edges).expect("edges in range"))
        };
        self.lower = g_clique.len();
        let start = dsatur_order_colouring(&self.adj);
        self.best_count = start.iter().max().map_or(0, |&c| c + 1);
        self.best = start;
        if self.best_count > self.lower {
            for (c, &v) in g_clique.iter().enumerate() {
                self.set(v, c);
            }
            let used = g_clique.len();
            self.branch(used, self.n - used);
        }
        self.best
    }

    fn set(&mut self, v: VertexId, c: usize) {
        self.colour[v] = Some(c);
        for i in 0..self.adj[v].len() {
            let u = self.adj[v][i];
            self.seen[u][c] += 1;
        }
    }

    fn unset(&mut self, v: VertexId) {
        let c = self.colour[v].take().expect("vertex is coloured");
        for i in 0..self.adj[v].len() {
            let u = self.adj[v][i];
            self.seen[u][c] -= 1;
        }
    }

    fn pick(&self) -> VertexId {
        let mut best = None;
        let mut key = (0, 0);
        for v in 0..self.n {
            if self.colour[v].is_some() {
                continue;
            }
            let sat = self.seen[v].iter().filter(|&&k| k > 0).count();
            let free = self.adj[v].iter().filter(|&&u| self.colour[u].is_none()).count();
            if best.is_none() || (sat, free) > key {
                best = Some(v);
                key = (sat, free);
            }
        }
        best.expect("an uncoloured vertex remains")
    }

    fn branch(&mut self, used: usize, left: usize) {
        if left == 0 {
            self.best_count = used;
            self.best = self.colour.iter().map(|c| c.expect("all coloured")).collect();
            return;
        }
        let v = self.pick();
        for c in 0..=used {
            // a new colour class would reach the incumbent
            if c + 1 >= self.best_count {
                break;
            }
            if self.seen[v][c] > 0 {
                continue;
            }
            self.set(v, c);
            self.branch(used.max(c + 1), left - 1);
            self.unset(v);
            if self.best_count == self.lower {
                return;
            }
        }
    }
}

fn dsatur_order_colouring(adj: &[Vec<VertexId>]) -> Vec<usize> {
    let n = adj.len();
    let mut colour: Vec<Option<usize>> = vec![None; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v].is_none())
            .max_by_key(|&v| {
                let mut seen: Vec<usize> = adj[v].iter().filter_map(|&u| colour[u]).collect();
                seen.sort_unstable();
                seen.dedup();
                let free = adj[v].iter().filter(|&&u| colour[u].is_none()).count();
                (seen.len(), free, std::cmp::Reverse(v))
            })
            .expect("uncoloured vertex");
        colour[v] = Some(smallest_free(adj[v].iter().filter_map(|&u| colour[u])));
    }
    colour.into_iter().map(|c| c.expect("all coloured")).collect()
}

fn smallest_free(taken: impl Iterator<Item = usize>) -> usize {
    let mut taken: Vec<usize> = taken.collect();
    taken.sort_unstable();
    taken.dedup();
    taken
        .iter()
        .enumerate()
        .find(|&(i, &c)| i != c)
        .map_or(taken.len(), |(i, _)| i)
}

/// Vertex orders for greedy colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GreedyOrder {
    /// By vertex id.
    Natural,
    /// By decreasing degree.
    LargestFirst,
    /// Reverse of repeatedly deleting a minimum-degree vertex.
    SmallestLast,
    /// Highest saturation next.
    Dsatur,
    /// A caller-supplied permutation of the vertices.
    Custom(Vec<VertexId>),
}

/// Colours vertices one by one in the policy's order with the smallest free
/// colour.
pub fn greedy_colouring(g: &Graph, order: &GreedyOrder) -> Result<Colouring> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.vertex_count();
    let adj: Vec<Vec<VertexId>> = g.vertices().map(|v| g.neighbours(v)).collect();
    let seq: Vec<VertexId> = match order {
        GreedyOrder::Natural => (0..n).collect(),
        GreedyOrder::LargestFirst => {
            let mut s: Vec<VertexId> = (0..n).collect();
            s.sort_by_key(|&v| std::cmp::Reverse(adj[v].len()));
            s
        }
        GreedyOrder::SmallestLast => {
            let mut s = peel_order(&adj);
            s.reverse();
            s
        }
        GreedyOrder::Dsatur => return Ok(Colouring::new(dsatur_order_colouring(&adj))),
        GreedyOrder::Custom(seq) => {
            let mut check = seq.clone();
            check.sort_unstable();
            if check != (0..n).collect::<Vec<_>>() {
                return Err(Error::InvalidArgument(
                    "order is not a permutation of the vertices".into(),
                ));
            }
            seq.clone()
        }
    };
    let mut colour: Vec<Option<usize>> = vec![None; n];
    for v in seq {
        colour[v] = Some(smallest_free(adj[v].iter().filter_map(|&u| colour[u])));
    }
    Ok(Colouring::new(
        colour.into_iter().map(|c| c.expect("all coloured")).collect(),
    ))
}

pub fn greedy_upper_bound(g: &Graph, order: &GreedyOrder) -> Result<usize> {
    Ok(greedy_colouring(g, order)?.count())
}

/// Repeatedly removes a minimum-degree vertex (lowest id on ties); returns
/// the removal order and the degree of each vertex when it was removed.
fn peel(adj: &[Vec<VertexId>]) -> (Vec<VertexId>, Vec<usize>) {
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut gone = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut at = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !gone[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("vertex remains");
        gone[v] = true;
        order.push(v);
        at.push(deg[v]);
        for &u in &adj[v] {
            if !gone[u] {
                deg[u] -= 1;
            }
        }
    }
    (order, at)
}

fn peel_order(adj: &[Vec<VertexId>]) -> Vec<VertexId> {
    peel(adj).0
}

/// Colours the empires of an m-pire graph with at most `6m` colours.
///
/// Peels a minimum-degree vertex off the collapsed graph until none is
/// left, then puts them back in reverse order with the smallest free
/// colour. A spherical m-pire map always leaves a vertex of degree at most
/// `6m − 1` at every stage; if some stage has none the input cannot come
/// from the sphere and an error is returned.
pub fn six_m_colouring(eg: &EmpireGraph, m: usize) -> Result<Colouring> {
    let sizes = eg.empire_sizes();
    if let Some(e) = sizes.iter().position(|&s| s > m) {
        return Err(Error::NotMPire {
            empire: eg.empire_ids()[e].clone(),
            size: sizes[e],
            limit: m,
        });
    }
    let g = eg.collapse().graph;
    let adj: Vec<Vec<VertexId>> = g.vertices().map(|v| g.neighbours(v)).collect();
    let (order, at) = peel(&adj);
    if at.iter().any(|&d| d >= 6 * m) {
        return Err(Error::DegreePrecondition { bound: 6 * m });
    }
    let mut colour: Vec<Option<usize>> = vec![None; g.vertex_count()];
    for &v in order.iter().rev() {
        colour[v] = Some(smallest_free(adj[v].iter().filter_map(|&u| colour[u])));
    }
    let c = Colouring::new(colour.into_iter().map(|c| c.expect("all coloured")).collect());
    debug_assert!(c.count() <= 6 * m && c.is_proper(&g));
    Ok(c)
}

/// Removing any vertex or any edge lowers the chromatic number. Limited to
/// [`CRITICAL_CAP`] vertices. The graph with no vertices is not critical.
pub fn is_critical(g: &Graph) -> Result<bool> {
    let solver = ChromaticSolver::new(CRITICAL_CAP);
    let c = solver.chromatic_number(g)?;
    if g.vertex_count() == 0 {
        return Ok(false);
    }
    for v in g.vertices() {
        if solver.chromatic_number(&g.remove_vertex(v)?)? >= c {
            return Ok(false);
        }
    }
    for e in 0..g.edge_count() {
        if solver.chromatic_number(&g.remove_edge(e)?)? >= c {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, cycle_graph, petersen_graph};

    fn chi(g: &Graph) -> usize {
        let (k, w) = chromatic_number(g).unwrap();
        assert!(w.is_proper(g));
        assert_eq!(w.count(), k);
        k
    }

    #[test]
    fn small_families() {
        for n in 1..=8 {
            assert_eq!(chi(&complete_graph(n).unwrap()), n);
        }
        assert_eq!(chi(&cycle_graph(5).unwrap()), 3);
        assert_eq!(chi(&cycle_graph(6).unwrap()), 2);
        assert_eq!(chi(&petersen_graph()), 3);
        assert_eq!(chi(&complete_bipartite(3, 4).unwrap()), 2);
        assert_eq!(chi(&Graph::empty(0)), 0);
        assert_eq!(chi(&Graph::empty(5)), 1);
    }

    #[test]
    fn rejects_multigraphs_and_large_inputs() {
        let g = Graph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(chromatic_number(&g), Err(Error::NotSimple));
        let big = Graph::empty(65);
        assert_eq!(chromatic_number(&big), Err(Error::TooLarge { vertices: 65, cap: 64 }));
        assert_eq!(ChromaticSolver::new(100).chromatic_number(&big).unwrap(), 1);
    }

    #[test]
    fn parallel_edges_add_no_constraint() {
        let g = cycle_graph(5).unwrap();
        let (_, w) = chromatic_number(&g).unwrap();
        assert!(w.is_proper(&g.with_edge(0, 1).unwrap()));
    }

    fn crown(n: usize) -> Graph {
        let edges = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j)));
        Graph::from_edges(2 * n, edges).unwrap()
    }

    #[test]
    fn greedy_orders() {
        let k5 = complete_graph(5).unwrap();
        for order in [
            GreedyOrder::Natural,
            GreedyOrder::LargestFirst,
            GreedyOrder::SmallestLast,
            GreedyOrder::Dsatur,
        ] {
            assert_eq!(greedy_upper_bound(&k5, &order).unwrap(), 5);
        }
        let c4 = crown(4);
        // interleave the sides so each vertex meets the previous pair's colours
        let worst = GreedyOrder::Custom(vec![0, 4, 1, 5, 2, 6, 3, 7]);
        assert_eq!(greedy_upper_bound(&c4, &worst).unwrap(), 4);
        assert_eq!(greedy_upper_bound(&c4, &GreedyOrder::Natural).unwrap(), 2);
        assert_eq!(greedy_upper_bound(&Graph::empty(7), &GreedyOrder::Natural).unwrap(), 1);
        assert!(greedy_upper_bound(&c4, &GreedyOrder::Custom(vec![0, 1])).is_err());
    }

    #[test]
    fn greedy_clique_seeds_lower_bound() {
        assert_eq!(greedy_clique(&complete_graph(6).unwrap()).len(), 6);
        assert_eq!(greedy_clique(&petersen_graph()).len(), 2);
        assert!(greedy_clique(&Graph::empty(0)).is_empty());
    }

    #[test]
    fn critical_graphs() {
        for n in 2..=6 {
            assert!(is_critical(&complete_graph(n).unwrap()).unwrap());
        }
        let c5 = cycle_graph(5).unwrap();
        assert!(is_critical(&c5).unwrap());
        let pendant = Graph::from_edges(6, c5.edges().iter().copied().chain([(0, 5)])).unwrap();
        assert!(!is_critical(&pendant).unwrap());
        assert!(matches!(
            is_critical(&Graph::empty(13)),
            Err(Error::TooLarge { cap: 12, .. })
        ));
    }

    #[test]
    fn six_m_on_small_inputs() {
        let tree = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let c = six_m_colouring(&EmpireGraph::singletons(tree), 1).unwrap();
        assert!(c.count() <= 2);
        let k12 = EmpireGraph::singletons(complete_graph(12).unwrap());
        assert_eq!(six_m_colouring(&k12, 2).unwrap().count(), 12);
        assert_eq!(six_m_colouring(&k12, 1), Err(Error::DegreePrecondition { bound: 6 }));
        let eg = EmpireGraph::new(Graph::empty(3), &["a", "a", "a"]).unwrap();
        assert!(matches!(six_m_colouring(&eg, 2), Err(Error::NotMPire { .. })));
    }

    #[test]
    fn classes_partition_vertices() {
        let c = Colouring::new(vec![2, 0, 2, 5]);
        assert_eq!(c.count(), 3);
        assert_eq!(c.classes(), vec![vec![1], vec![0, 2], vec![3]]);
    }
}
