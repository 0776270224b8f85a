//! Labeled schemes for balls of cycles (size three) and of cacti (six
//! slots in three pairs).
//!
//! Between two vertices `a != b` of a cactus the blocks met by the path of
//! the block-cut tree form a chain `B_1, ..., B_k`. Writing `c_0 = a`,
//! `c_j = B_j ∩ B_{j+1}` and `c_k = b`, every vertex of the chain gets a
//! position: `2j` for `c_j`, and `2j - 1` for the other vertices of `B_j`.
//! Sub-chains between two vertices are then position ranges.

use std::collections::VecDeque;

use crate::ball::{enumerate_balls, Ball};
use crate::error::{Error, Result};
use crate::graph::{block_cut_tree, gate, BlockTree, DistanceMatrix, Graph};
use crate::sample::{CompressedSample, Sample, Sign};
use crate::verify::Scheme;

/// The edge `(x0, y0)` of the path `p` (from `a = p[0]` to `b = p[last]`)
/// with `d'(x0,b) - d'(x0,a) ∈ {1,2}` and `y0` one step farther from `a`.
pub fn locate_center_edge(p: &[usize]) -> (usize, usize) {
    let len = p.len() - 1;
    let i = (0..len)
        .find(|&i| matches!(len as isize - 2 * i as isize, 1 | 2))
        .expect("a path of positive length has a center edge");
    (p[i], p[i + 1])
}

/// Smallest `(radius, center)` ball containing every vertex.
fn covering_ball(dm: &DistanceMatrix) -> Ball {
    let c = (0..dm.n())
        .min_by_key(|&c| (dm.eccentricity(c), c))
        .expect("nonempty graph");
    Ball::new(dm, c, dm.eccentricity(c))
}

/// Vertices of a cycle graph in cyclic order starting at 0 toward its
/// smaller neighbor.
fn cycle_order(g: &Graph, vertices: &[usize]) -> Vec<usize> {
    let inside = |v: usize| vertices.binary_search(&v).is_ok();
    let start = vertices[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = *g.neighbors(start).iter().find(|&&w| inside(w)).unwrap();
    while cur != start {
        order.push(cur);
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| inside(w) && w != prev)
            .unwrap();
        prev = cur;
        cur = next;
    }
    order
}

/// The size-three scheme for balls of a cycle.
pub struct CycleScheme {
    n: usize,
    dm: DistanceMatrix,
    order: Vec<usize>,
    index: Vec<usize>,
}

impl CycleScheme {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n < 3 || g.m() != n || (0..n).any(|v| g.degree(v) != 2) {
            return Err(Error::NotCycle);
        }
        let order = cycle_order(g, &(0..n).collect::<Vec<_>>());
        let mut index = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        Ok(CycleScheme {
            n,
            dm: g.distances(),
            order,
            index,
        })
    }

    /// Arc from `u` to `v` following the cyclic order.
    fn arc(&self, u: usize, v: usize) -> Vec<usize> {
        let mut i = self.index[u];
        let mut out = vec![u];
        while self.order[i] != v {
            i = (i + 1) % self.n;
            out.push(self.order[i]);
        }
        out
    }
}

impl Scheme for CycleScheme {
    fn id(&self) -> String {
        "cycle".into()
    }

    fn compress(&self, x: &Sample) -> Result<CompressedSample> {
        let pos = x.positives();
        let neg = x.negatives();
        let plus = |vs: &[usize]| vs.iter().map(|&v| (v, Sign::Pos)).collect::<Vec<_>>();
        if pos.len() <= 1 || (pos.len() == 2 && neg.is_empty()) {
            return Ok(CompressedSample::from_entries(&plus(&pos)));
        }
        if neg.is_empty() {
            return Ok(CompressedSample::from_entries(&plus(&pos[..3])));
        }
        // The positives occupy an arc free of negatives; find its ends by
        // walking the support in cyclic order.
        let support: Vec<usize> = self.order.iter().copied().filter(|&v| x.get(v).is_some()).collect();
        let k = support.len();
        let start = (0..k)
            .find(|&i| {
                x.get(support[i]) == Some(Sign::Pos) && x.get(support[(i + k - 1) % k]) == Some(Sign::Neg)
            })
            .ok_or(Error::NotRealizable)?;
        let u = support[start];
        let v = support[(start + pos.len() - 1) % k];
        if (0..pos.len()).any(|j| x.get(support[(start + j) % k]) != Some(Sign::Pos)) {
            return Err(Error::NotRealizable);
        }
        let w = *neg
            .iter()
            .min_by_key(|&&w| (self.dm.get(u, w).min(self.dm.get(v, w)), w))
            .unwrap();
        Ok(CompressedSample::from_entries(&[(u, Sign::Pos), (v, Sign::Pos), (w, Sign::Neg)]))
    }

    fn reconstruct(&self, y: &CompressedSample) -> Result<Ball> {
        let pos = y.with_sign(Sign::Pos);
        let neg = y.with_sign(Sign::Neg);
        match (pos.as_slice(), neg.as_slice()) {
            ([], []) => Ok(Ball::empty(self.n)),
            ([u], []) => Ok(Ball::new(&self.dm, *u, 0)),
            ([_, _], []) | ([_, _, _], []) => Ok(covering_ball(&self.dm)),
            (&[a, b], &[w]) => {
                let p = {
                    let p = self.arc(a, b);
                    if p.contains(&w) {
                        self.arc(b, a)
                    } else {
                        p
                    }
                };
                let len = p.len() as u32 - 1;
                let r = len.div_ceil(2);
                let mut centers = vec![p[(len / 2) as usize], p[r as usize]];
                centers.sort_unstable();
                let c = centers
                    .into_iter()
                    .find(|&c| self.dm.get(c, w) > r)
                    .ok_or_else(|| Error::MalformedInput(format!("no center of the arc avoids {w}")))?;
                Ok(Ball::new(&self.dm, c, r))
            }
            _ => Err(Error::MalformedInput(format!("unexpected shape [{y}]"))),
        }
    }
}

/// Chain of blocks between two vertices, with vertex positions.
#[derive(Debug, Clone)]
pub struct Chain {
    /// Block indices `B_1..B_k`.
    pub blocks: Vec<usize>,
    /// `c_0..c_k`.
    pub points: Vec<usize>,
    /// Position of each vertex on the chain, if any.
    pub pos: Vec<Option<usize>>,
}

impl Chain {
    pub fn contains(&self, v: usize) -> bool {
        self.pos[v].is_some()
    }

    pub fn vertices(&self) -> Vec<usize> {
        (0..self.pos.len()).filter(|&v| self.pos[v].is_some()).collect()
    }

    /// Vertices with positions in `lo..=hi`.
    pub fn range(&self, lo: usize, hi: usize) -> Vec<usize> {
        (0..self.pos.len())
            .filter(|&v| self.pos[v].is_some_and(|p| lo <= p && p <= hi))
            .collect()
    }

    /// The vertex at an even position.
    pub fn point(&self, p: usize) -> usize {
        debug_assert!(p.is_multiple_of(2));
        self.points[p / 2]
    }
}

/// A cactus with its block structure and a fixed orientation of each cycle.
pub struct Cactus {
    g: Graph,
    dm: DistanceMatrix,
    bt: BlockTree,
    /// Clockwise order of each cycle block (empty for bridges).
    cycles: Vec<Vec<usize>>,
    /// Block-cut tree adjacency: nodes `0..blocks` are blocks, then one
    /// node per cut vertex.
    tree: Vec<Vec<usize>>,
    cut_node: Vec<Option<usize>>,
    family: Vec<Ball>,
}

impl Cactus {
    pub fn new(g: &Graph) -> Result<Self> {
        let bt = block_cut_tree(g);
        let mut cycles = Vec::with_capacity(bt.blocks.len());
        for b in &bt.blocks {
            let inner = g
                .edges()
                .iter()
                .filter(|e| b.binary_search(&e.0).is_ok() && b.binary_search(&e.1).is_ok())
                .count();
            match b.len() {
                1 | 2 => cycles.push(Vec::new()),
                len if inner == len => cycles.push(cycle_order(g, b)),
                _ => return Err(Error::NotCactus),
            }
        }
        let nb = bt.blocks.len();
        let mut cut_node = vec![None; g.n()];
        for (i, &c) in bt.cut_vertices.iter().enumerate() {
            cut_node[c] = Some(nb + i);
        }
        let mut tree = vec![Vec::new(); nb + bt.cut_vertices.len()];
        for &c in &bt.cut_vertices {
            let cn = cut_node[c].unwrap();
            for &b in &bt.incidence[c] {
                tree[cn].push(b);
                tree[b].push(cn);
            }
        }
        let dm = g.distances();
        let family = enumerate_balls(&dm, None);
        Ok(Cactus {
            g: g.clone(),
            dm,
            bt,
            cycles,
            tree,
            cut_node,
            family,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dm
    }

    fn node_of(&self, v: usize) -> usize {
        self.cut_node[v].unwrap_or(self.bt.incidence[v][0])
    }

    /// The chain of blocks between distinct vertices `a` and `b`.
    pub fn chain(&self, a: usize, b: usize) -> Chain {
        let (from, to) = (self.node_of(a), self.node_of(b));
        let mut parent = vec![usize::MAX; self.tree.len()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.tree[u] {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let mut nodes = vec![to];
        while *nodes.last().unwrap() != from {
            nodes.push(parent[*nodes.last().unwrap()]);
        }
        nodes.reverse();
        let nb = self.bt.blocks.len();
        let blocks: Vec<usize> = nodes.into_iter().filter(|&x| x < nb).collect();
        let mut points = vec![a];
        for w in blocks.windows(2) {
            let shared = self.bt.blocks[w[0]]
                .iter()
                .copied()
                .find(|v| self.bt.blocks[w[1]].binary_search(v).is_ok())
                .expect("consecutive blocks share a cut vertex");
            points.push(shared);
        }
        points.push(b);
        let mut pos = vec![None; self.g.n()];
        for (j, &bl) in blocks.iter().enumerate() {
            for &v in &self.bt.blocks[bl] {
                pos[v] = Some(2 * j + 1);
            }
        }
        for (j, &c) in points.iter().enumerate() {
            pos[c] = Some(2 * j);
        }
        Chain {
            blocks,
            points,
            pos,
        }
    }

    fn gate_in(&self, set: &[usize], z: usize) -> usize {
        gate(&self.dm, set, z).expect("chains and blocks of a cactus are gated")
    }

    /// Path along a cycle block from `a` to `b`, clockwise or not.
    fn cycle_path(&self, block: usize, a: usize, b: usize, clockwise: bool) -> Vec<usize> {
        let cyc = &self.cycles[block];
        let k = cyc.len();
        let mut i = cyc.iter().position(|&v| v == a).unwrap();
        let mut out = vec![a];
        while cyc[i] != b {
            i = if clockwise { (i + 1) % k } else { (i + k - 1) % k };
            out.push(cyc[i]);
        }
        out
    }

    fn r_star(&self, y: usize, pos: &[usize]) -> u32 {
        pos.iter().map(|&p| self.dm.get(y, p)).max().unwrap_or(0)
    }

    fn star_realizes(&self, y: usize, x: &Sample, pos: &[usize]) -> bool {
        let r = self.r_star(y, pos);
        x.is_realized_by(|v| self.dm.get(y, v) <= r)
    }

    /// Everything the compressor derives from a sample with at least two
    /// positives and one negative.
    pub fn analyze(&self, x: &Sample) -> Result<Analysis> {
        let pos = x.positives();
        let (up, vp) = self.dm.diametral_pair(&pos).ok_or(Error::NotRealizable)?;
        let chain = self.chain(up, vp);
        let region = chain.vertices();
        let ball = self
            .family
            .iter()
            .find(|b| b.realizes(x))
            .ok_or(Error::NotRealizable)?;
        let c0 = ball.center_vertex().unwrap();
        let center = self.gate_in(&region, c0);
        let radius = ball.radius().twice() / 2 - self.dm.get(c0, center);
        let pc = chain.pos[center].unwrap();
        let (ustar, vstar, block) = if pc.is_multiple_of(2) {
            (pc, pc, None)
        } else {
            (pc - 1, pc + 1, Some(chain.blocks[pc / 2]))
        };
        let support = x.support();
        let mut gp = vec![0; self.g.n()];
        for &w in &support {
            gp[w] = chain.pos[self.gate_in(&region, w)].unwrap();
        }
        let gate_pos = |w: usize| gp[w];
        let x_c: Vec<usize> = support
            .iter()
            .copied()
            .filter(|&w| {
                let p = gate_pos(w);
                ustar < p && p < vstar
            })
            .collect();
        let mut an = Analysis {
            u_plus: up,
            v_plus: vp,
            chain,
            center,
            radius,
            block,
            x_c: x_c.clone(),
            u0: 0,
            v0: 0,
            w1: None,
            w2: None,
            z1: None,
            z2: None,
            edge: None,
        };
        if x_c.is_empty() {
            let x_u: Vec<usize> = support.iter().copied().filter(|&w| gate_pos(w) <= ustar).collect();
            let x_v: Vec<usize> = support.iter().copied().filter(|&w| gate_pos(w) >= vstar).collect();
            let max_u = x_u.iter().map(|&w| gate_pos(w)).max().unwrap();
            let min_v = x_v.iter().map(|&w| gate_pos(w)).min().unwrap();
            an.u0 = max_u.div_ceil(2) * 2;
            an.v0 = min_v / 2 * 2;
            let pick = |set: &[usize], at: usize, near: usize| {
                set.iter()
                    .copied()
                    .find(|&w| gate_pos(w) == at)
                    .or_else(|| set.iter().copied().find(|&w| gate_pos(w) == near))
            };
            an.w1 = pick(&x_u, an.u0, an.u0.wrapping_sub(1));
            an.w2 = pick(&x_v, an.v0, an.v0 + 1);
            let closest = |set: &[usize]| {
                set.iter()
                    .copied()
                    .filter(|&w| x.get(w) == Some(Sign::Neg))
                    .min_by_key(|&w| (self.dm.get(center, w), w))
            };
            an.z1 = closest(&x_u);
            an.z2 = closest(&x_v);
            return Ok(an);
        }
        let block = block.expect("vertices strictly inside C exist only for a cycle");
        let cyc = &self.cycles[block];
        let k = cyc.len();
        for i in 0..k {
            let a = cyc[i];
            if !self.star_realizes(a, x, &pos) {
                continue;
            }
            for b in [cyc[(i + 1) % k], cyc[(i + k - 1) % k]] {
                if !self.star_realizes(b, x, &pos) {
                    an.edge = Some((a, b));
                    return Ok(an);
                }
            }
        }
        Ok(an)
    }

    /// Checks the structural facts the reconstructor relies on for this
    /// sample; returns a description of the first violation.
    pub fn check_invariants(&self, x: &Sample) -> std::result::Result<(), String> {
        let pos = x.positives();
        let neg = x.negatives();
        if pos.len() < 2 || neg.is_empty() {
            return Ok(());
        }
        let an = self.analyze(x).map_err(|e| e.to_string())?;
        let r_y = |y: usize| self.dm.get(y, an.u_plus).max(self.dm.get(y, an.v_plus));
        if an.x_c.is_empty() {
            for y in an.chain.range(an.u0, an.v0) {
                let rs = self.r_star(y, &pos);
                if r_y(y) != rs {
                    return Err(format!("r_y != r*_y at {y}"));
                }
                let zs: Vec<usize> = [an.z1, an.z2].into_iter().flatten().collect();
                let hits = |v: usize| self.dm.get(y, v) <= rs;
                if !zs.iter().any(|&z| hits(z)) && neg.iter().any(|&z| hits(z)) {
                    return Err(format!("ball at {y} avoids z1, z2 but meets X-"));
                }
            }
        } else if let Some(block) = an.block {
            let cyc = &self.cycles[block];
            let k = cyc.len();
            for i in 0..k {
                let (a, b) = (cyc[i], cyc[(i + 1) % k]);
                for (a, b) in [(a, b), (b, a)] {
                    if !self.star_realizes(a, x, &pos) || self.star_realizes(b, x, &pos) {
                        continue;
                    }
                    let (ra, rb) = (self.r_star(a, &pos), self.r_star(b, &pos));
                    for &z in neg.iter().filter(|&&z| self.dm.get(b, z) <= rb) {
                        for &s in pos.iter().filter(|&&p| self.dm.get(b, p) == rb) {
                            let (dxz, dyz) = (self.dm.get(a, z), self.dm.get(b, z));
                            let (dxs, dys) = (self.dm.get(a, s), self.dm.get(b, s));
                            let patterns = [
                                rb == ra + 1 && dxz == dyz + 1 && dxs + 1 == dys,
                                rb == ra + 1 && dxz == dyz && dxs + 1 == dys,
                                rb == ra && dxz == dyz + 1 && dxs == dys,
                                rb == ra && dxz == dyz + 1 && dxs + 1 == dys,
                            ];
                            if patterns.iter().filter(|&&p| p).count() != 1 {
                                return Err(format!("edge {a}-{b} with z={z}, s={s} fits no single pattern"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Intermediate quantities of the cactus compressor.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub u_plus: usize,
    pub v_plus: usize,
    pub chain: Chain,
    /// Realizing center projected onto the chain, and its radius.
    pub center: usize,
    pub radius: u32,
    /// The cycle of the chain holding the center in its interior, if any.
    pub block: Option<usize>,
    /// Support vertices whose gate lies strictly inside that cycle.
    pub x_c: Vec<usize>,
    /// Positions bounding the centers allowed when `x_c` is empty.
    pub u0: usize,
    pub v0: usize,
    pub w1: Option<usize>,
    pub w2: Option<usize>,
    pub z1: Option<usize>,
    pub z2: Option<usize>,
    /// Adjacent centers: the first realizes with its smallest radius, the
    /// second does not.
    pub edge: Option<(usize, usize)>,
}

/// The six-slot scheme for balls of a cactus.
pub struct CactusScheme {
    cactus: Cactus,
}

const GROUPS: [usize; 3] = [2, 2, 2];

impl CactusScheme {
    pub fn new(g: &Graph) -> Result<Self> {
        Ok(CactusScheme {
            cactus: Cactus::new(g)?,
        })
    }

    pub fn cactus(&self) -> &Cactus {
        &self.cactus
    }

    fn gated_path(&self, block: usize, from: usize, to: usize, clockwise: bool) -> Vec<usize> {
        let c = &self.cactus;
        let bv = &c.bt.blocks[block];
        let (fg, tg) = (c.gate_in(bv, from), c.gate_in(bv, to));
        let mut p = c.g.canonical_path(&c.dm, from, fg);
        p.pop();
        p.extend(c.cycle_path(block, fg, tg, clockwise));
        let mut tail = c.g.canonical_path(&c.dm, tg, to);
        tail.remove(0);
        p.extend(tail);
        p
    }
}

impl Scheme for CactusScheme {
    fn id(&self) -> String {
        "cactus".into()
    }

    fn compress(&self, x: &Sample) -> Result<CompressedSample> {
        let c = &self.cactus;
        let mut out = CompressedSample::blank(&GROUPS);
        let pos = x.positives();
        let neg = x.negatives();
        if neg.is_empty() {
            return Ok(out);
        }
        out.slots[4] = Some((neg[0], Sign::Neg));
        if pos.len() <= 1 {
            out.slots[0] = pos.first().map(|&u| (u, Sign::Pos));
            return Ok(out);
        }
        let an = c.analyze(x)?;
        let signed = |v: usize| (v, x.get(v).unwrap());
        out.slots[0] = Some((an.u_plus, Sign::Pos));
        out.slots[1] = Some((an.v_plus, Sign::Pos));
        out.slots[4] = None;
        if an.x_c.is_empty() {
            out.slots[2] = an.w1.map(signed);
            out.slots[3] = an.w2.map(signed);
            out.slots[4] = an.z1.map(signed);
            out.slots[5] = an.z2.map(signed);
            return Ok(out);
        }
        let w = an.x_c[0];
        let region = an.chain.vertices();
        let Some((a, b)) = an.edge else {
            let wg = c.gate_in(&region, w);
            let rs = c.r_star(wg, &pos);
            let s = *pos.iter().find(|&&p| c.dm.get(wg, p) == rs).unwrap();
            out.slots[2] = Some(signed(w));
            out.slots[4] = Some(signed(s));
            return Ok(out);
        };
        let (ra, rb) = (c.r_star(a, &pos), c.r_star(b, &pos));
        let z = *neg.iter().find(|&&z| c.dm.get(b, z) <= rb).ok_or(Error::NotRealizable)?;
        let s = *pos.iter().find(|&&p| c.dm.get(b, p) == rb).unwrap();
        let t = if c.dm.get(a, s) == ra {
            s
        } else {
            *pos.iter().find(|&&p| c.dm.get(a, p) == ra).unwrap()
        };
        let other = if s == t { z } else { t };
        let block = an.block.unwrap();
        let bv = &c.bt.blocks[block];
        let cw = c.cycle_path(block, c.gate_in(bv, s), c.gate_in(bv, other), true);
        let on_cw = cw.windows(2).any(|e| (e[0], e[1]) == (a, b) || (e[0], e[1]) == (b, a));
        out.slots[if on_cw { 3 } else { 2 }] = Some(signed(w));
        out.slots[4] = Some(signed(s));
        out.slots[5] = Some(signed(other));
        Ok(out)
    }

    fn reconstruct(&self, y: &CompressedSample) -> Result<Ball> {
        y.expect_groups(&GROUPS)?;
        let c = &self.cactus;
        let v = |i: usize| y.vertex(i);
        let bad = || Error::MalformedInput(format!("unexpected shape [{y}]"));
        match (v(0), v(1), v(2), v(3), v(4), v(5)) {
            (None, None, None, None, None, None) => Ok(covering_ball(&c.dm)),
            (None, None, None, None, Some(_), None) => Ok(Ball::empty(c.g.n())),
            (Some(y1), None, None, None, Some(_), None) => Ok(Ball::new(&c.dm, y1, 0)),
            (Some(y1), Some(y2), Some(y3), Some(y4), _, _) => {
                let chain = c.chain(y1, y2);
                let region = chain.vertices();
                let g3 = chain.pos[c.gate_in(&region, y3)].unwrap();
                let g4 = chain.pos[c.gate_in(&region, y4)].unwrap();
                let u0 = if g3.is_multiple_of(2) { g3 } else { g3 + 1 };
                let v0 = if g4.is_multiple_of(2) { g4 } else { g4 - 1 };
                let avoid: Vec<usize> = [v(4), v(5)].into_iter().flatten().collect();
                chain
                    .range(u0.min(v0), u0.max(v0))
                    .into_iter()
                    .map(|y| (y, c.dm.get(y, y1).max(c.dm.get(y, y2))))
                    .find(|&(y, r)| avoid.iter().all(|&z| c.dm.get(y, z) > r))
                    .map(|(y, r)| Ball::new(&c.dm, y, r))
                    .ok_or_else(|| Error::MalformedInput("no admissible center".into()))
            }
            (Some(y1), Some(y2), w3, w4, Some(y5), y6) if w3.is_some() != w4.is_some() => {
                let chain = c.chain(y1, y2);
                let region = chain.vertices();
                let wg = c.gate_in(&region, w3.or(w4).unwrap());
                let Some(y6) = y6 else {
                    if w4.is_some() {
                        return Err(bad());
                    }
                    return Ok(Ball::new(&c.dm, wg, c.dm.get(wg, y5)));
                };
                let p = chain.pos[wg].unwrap();
                if p.is_multiple_of(2) {
                    return Err(bad());
                }
                let block = chain.blocks[p / 2];
                let path = self.gated_path(block, y5, y6, w4.is_some());
                let (x0, y0) = locate_center_edge(&path);
                let r = if y.slots[5].unwrap().1 == Sign::Pos {
                    c.dm.get(x0, y6)
                } else {
                    let along = path.iter().position(|&q| q == y0).unwrap() as u32;
                    let d = c.dm.get(y0, y5);
                    if along == d + 1 {
                        d
                    } else {
                        d.checked_sub(1).ok_or_else(bad)?
                    }
                };
                Ok(Ball::new(&c.dm, x0, r))
            }
            _ => Err(bad()),
        }
    }
}
