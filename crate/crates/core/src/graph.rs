//! Simple connected graphs and the metric primitives used by every scheme.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple connected undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept in ascending order; every traversal in the crate
/// relies on that for determinism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
            adj[u].push(v);
            adj[v].push(u);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        let g = Graph { adj, edges: list };
        if g.bfs(0).contains(&u32::MAX) {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n()
    }

    fn bfs(&self, s: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n()];
        let mut queue = VecDeque::from([s]);
        dist[s] = 0;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All-pairs hop distances by one BFS per vertex.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n();
        let mut d = Vec::with_capacity(n * n);
        for s in 0..n {
            d.extend(self.bfs(s));
        }
        DistanceMatrix { n, d }
    }

    /// Canonical shortest path from `a` to `b`: BFS from `a`, every vertex
    /// takes its smallest-id neighbor one step closer to `a` as parent.
    pub fn canonical_path(&self, dm: &DistanceMatrix, a: usize, b: usize) -> Vec<usize> {
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            let dc = dm.get(a, cur);
            cur = *self.adj[cur]
                .iter()
                .find(|&&w| dm.get(a, w) + 1 == dc)
                .expect("connected graph has a closer neighbor");
            path.push(cur);
        }
        path.reverse();
        path
    }
}

/// Hop distances between all vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Largest distance between two members of `set` (0 for fewer than two).
    pub fn set_diameter(&self, set: &[usize]) -> u32 {
        let mut best = 0;
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                best = best.max(self.get(a, b));
            }
        }
        best
    }

    /// Lexicographically smallest `(min, max)` pair attaining the diameter of
    /// `set`. A singleton yields `(v, v)`; the empty set yields `None`.
    pub fn diametral_pair(&self, set: &[usize]) -> Option<(usize, usize)> {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        let first = *sorted.first()?;
        let mut best = (first, first);
        let mut best_d = 0;
        for (i, &a) in sorted.iter().enumerate() {
            for &b in &sorted[i + 1..] {
                let d = self.get(a, b);
                if d > best_d {
                    best_d = d;
                    best = (a, b);
                }
            }
        }
        Some(best)
    }
}

/// The interval `I(u,v)`: vertices on some shortest `(u,v)`-path, ascending.
pub fn interval(dm: &DistanceMatrix, u: usize, v: usize) -> Vec<usize> {
    let duv = dm.get(u, v);
    (0..dm.n())
        .filter(|&z| dm.get(u, z) + dm.get(z, v) == duv)
        .collect()
}

/// `I(u,v) ∩ I(v,w) ∩ I(w,u)`; possibly empty, singleton in median graphs.
pub fn median(dm: &DistanceMatrix, u: usize, v: usize, w: usize) -> Vec<usize> {
    let on = |a: usize, b: usize, z: usize| dm.get(a, z) + dm.get(z, b) == dm.get(a, b);
    (0..dm.n())
        .filter(|&z| on(u, v, z) && on(v, w, z) && on(w, u, z))
        .collect()
}

/// The gate of `x` in `set`: the member lying on a shortest path from `x`
/// to every member of `set`.
pub fn gate(dm: &DistanceMatrix, set: &[usize], x: usize) -> Result<usize> {
    let nearest = *set
        .iter()
        .min_by_key(|&&s| (dm.get(x, s), s))
        .expect("gate of an empty set");
    let dx = dm.get(x, nearest);
    if set
        .iter()
        .all(|&y| dx + dm.get(nearest, y) == dm.get(x, y))
    {
        Ok(nearest)
    } else {
        Err(Error::NotGated(x))
    }
}

/// The sphere `S_r(x)`, ascending.
pub fn sphere(dm: &DistanceMatrix, x: usize, r: u32) -> Vec<usize> {
    (0..dm.n()).filter(|&z| dm.get(x, z) == r).collect()
}

/// The ball `B_r(x)` as an ascending vertex list.
pub fn ball_vertices(dm: &DistanceMatrix, x: usize, r: u32) -> Vec<usize> {
    (0..dm.n()).filter(|&z| dm.get(x, z) <= r).collect()
}

/// Biconnected decomposition of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTree {
    /// Vertex sets of the blocks, each ascending; blocks sorted by their
    /// vertex lists.
    pub blocks: Vec<Vec<usize>>,
    /// Cut vertices, ascending.
    pub cut_vertices: Vec<usize>,
    /// For every vertex, the indices of the blocks containing it.
    pub incidence: Vec<Vec<usize>>,
}

impl BlockTree {
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.incidence[v].len() >= 2
    }

    /// Index of the block containing both endpoints of edge `uv`.
    pub fn block_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.incidence[u]
            .iter()
            .copied()
            .find(|&b| self.blocks[b].binary_search(&v).is_ok())
    }
}

/// Hopcroft–Tarjan biconnected components, iterative.
pub fn block_cut_tree(g: &Graph) -> BlockTree {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    // frames: (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    disc[0] = 0;
    low[0] = 0;
    time += 1;
    while let Some(&(u, parent, idx)) = stack.last() {
        if idx < g.degree(u) {
            let w = g.neighbors(u)[idx];
            stack.last_mut().unwrap().2 += 1;
            if disc[w] == usize::MAX {
                disc[w] = time;
                low[w] = time;
                time += 1;
                edge_stack.push((u, w));
                stack.push((w, u, 0));
            } else if w != parent && disc[w] < disc[u] {
                edge_stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != usize::MAX {
                low[parent] = low[parent].min(low[u]);
                if low[u] >= disc[parent] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e.0);
                        block.push(e.1);
                        if e == (parent, u) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    blocks.push(block);
                }
            }
        }
    }
    if n == 1 {
        blocks.push(vec![0]);
    }
    blocks.sort();
    let mut incidence = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            incidence[v].push(i);
        }
    }
    let cut_vertices = (0..n).filter(|&v| incidence[v].len() >= 2).collect();
    BlockTree {
        blocks,
        cut_vertices,
        incidence,
    }
}

/// Vertices of a sphere `S_ρ(s)` of a tree listed in DFS discovery order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereOrder {
    pub root: usize,
    pub radius: u32,
    pub order: Vec<usize>,
    labels: Vec<Option<usize>>,
}

impl SphereOrder {
    /// Position of `v` in the order, if `v` lies on the sphere.
    pub fn label(&self, v: usize) -> Option<usize> {
        self.labels[v]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// DFS of tree `t` from `s`, children in ascending id, restricted to the
/// vertices at distance `rho` from `s`.
pub fn dfs_sphere_order(t: &Graph, s: usize, rho: u32) -> SphereOrder {
    let n = t.n();
    let mut labels = vec![None; n];
    let mut order = Vec::new();
    let mut stack = vec![(s, usize::MAX, 0u32)];
    while let Some((u, parent, depth)) = stack.pop() {
        if depth == rho {
            labels[u] = Some(order.len());
            order.push(u);
            continue;
        }
        for &w in t.neighbors(u).iter().rev() {
            if w != parent {
                stack.push((w, u, depth + 1));
            }
        }
    }
    SphereOrder {
        root: s,
        radius: rho,
        order,
        labels,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// The arc of the sphere inside `B_r(v)`.
    Inside,
    /// The arc of the sphere outside `B_r(v)`.
    Outside,
}

/// Last vertex of the circular arc of `so` lying inside (resp. outside)
/// `B_r(v)`; `so` must be the sphere of radius `r + 1`.
pub fn phi(dm: &DistanceMatrix, so: &SphereOrder, v: usize, r: u32, side: Side) -> Result<usize> {
    let k = so.order.len();
    let member: Vec<bool> = so
        .order
        .iter()
        .map(|&z| (dm.get(z, v) <= r) == (side == Side::Inside))
        .collect();
    let count = member.iter().filter(|&&b| b).count();
    if count == 0 || count == k {
        return Err(Error::Undefined);
    }
    let i = (0..k)
        .find(|&i| member[i] && !member[(i + 1) % k])
        .expect("a proper nonempty subset has a boundary");
    Ok(so.order[i])
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn star3() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Graph::new(3, &[(0, 1)]), Err(Error::Disconnected));
        assert_eq!(Graph::new(2, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::new(0, &[]), Err(Error::EmptyGraph));
        assert!(Graph::new(1, &[]).is_ok());
    }

    #[test]
    fn distances_on_small_graphs() {
        assert_eq!(path(3).distances().get(0, 2), 2);
        let k4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let d = k4.distances();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
        assert_eq!(cycle(6).distances().get(0, 3), 3);
    }

    #[test]
    fn intervals() {
        assert_eq!(interval(&path(5).distances(), 0, 4), vec![0, 1, 2, 3, 4]);
        let d = cycle(6).distances();
        assert_eq!(interval(&d, 0, 2), vec![0, 1, 2]);
        assert_eq!(interval(&d, 0, 3), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn medians() {
        assert_eq!(median(&star3().distances(), 1, 2, 3), vec![0]);
        assert_eq!(median(&path(5).distances(), 0, 2, 4), vec![2]);
        assert_eq!(median(&cycle(4).distances(), 0, 1, 2), vec![1]);
    }

    #[test]
    fn gates() {
        let d = path(5).distances();
        assert_eq!(gate(&d, &[3, 4], 0), Ok(3));
        assert_eq!(gate(&d, &[3, 4], 4), Ok(4));
        assert_eq!(gate(&cycle(4).distances(), &[0, 2], 1), Err(Error::NotGated(1)));
    }

    #[test]
    fn blocks() {
        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let bt = block_cut_tree(&bowtie);
        assert_eq!(bt.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(bt.cut_vertices, vec![2]);

        let bt = block_cut_tree(&path(4));
        assert_eq!(bt.blocks, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(bt.cut_vertices, vec![1, 2]);

        let bt = block_cut_tree(&cycle(6));
        assert_eq!(bt.blocks.len(), 1);
        assert!(bt.cut_vertices.is_empty());

        assert_eq!(block_cut_tree(&Graph::new(1, &[]).unwrap()).blocks, vec![vec![0]]);
    }

    #[test]
    fn spheres() {
        assert_eq!(sphere(&path(5).distances(), 0, 2), vec![2]);
        assert_eq!(sphere(&star3().distances(), 0, 1), vec![1, 2, 3]);
        assert_eq!(sphere(&cycle(5).distances(), 3, 0), vec![3]);
    }

    #[test]
    fn sphere_orders() {
        assert_eq!(dfs_sphere_order(&star3(), 1, 2).order, vec![2, 3]);
        assert_eq!(dfs_sphere_order(&path(5), 0, 2).order, vec![2]);
        assert!(dfs_sphere_order(&path(5), 2, 3).is_empty());
        let so = dfs_sphere_order(&star3(), 1, 2);
        assert_eq!(so.label(3), Some(1));
        assert_eq!(so.label(0), None);
    }

    #[test]
    fn phi_boundaries() {
        let t = star3();
        let d = t.distances();
        let so = dfs_sphere_order(&t, 1, 2);
        assert_eq!(phi(&d, &so, 2, 1, Side::Outside), Ok(3));
        assert_eq!(phi(&d, &so, 3, 1, Side::Inside), Ok(3));
        assert_eq!(phi(&d, &so, 0, 1, Side::Inside), Err(Error::Undefined));
    }

    #[test]
    fn canonical_path_prefers_small_parents() {
        let g = cycle(6);
        assert_eq!(g.canonical_path(&g.distances(), 0, 3), vec![0, 1, 2, 3]);
    }

    #[test]
    fn diametral_pair_tie_break() {
        let d = cycle(6).distances();
        assert_eq!(d.diametral_pair(&[0, 2, 3]), Some((0, 3)));
        assert_eq!(d.diametral_pair(&[4]), Some((4, 4)));
        assert_eq!(d.diametral_pair(&[]), None);
    }
}
