//! Cube-free median graphs: recognition, grid embeddings of intervals and
//! the 22-slot scheme (groups of 2, 4, 8 and 8).
//!
//! Coordinates are `(a, b)`, abscissa then ordinate, with `u = (0,0)` at
//! the lower left and `v` at the upper right of the embedded interval.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::ball::{enumerate_balls, Ball};
use crate::error::{Error, Result};
use crate::graph::{gate, interval, median, DistanceMatrix, Graph};
use crate::sample::{CompressedSample, Sample, Sign};
use crate::verify::Scheme;

/// Every triple has exactly one median and no 3-cube occurs.
pub fn is_cube_free_median(g: &Graph, dm: &DistanceMatrix) -> bool {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if median(dm, u, v, w).len() != 1 {
                    return false;
                }
            }
        }
    }
    // In a median graph three squares pairwise sharing an edge at a vertex
    // always close up into a cube.
    let square = |v: usize, a: usize, b: usize| {
        g.neighbors(a)
            .iter()
            .any(|&c| c != v && g.has_edge(c, b))
    };
    for v in 0..n {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if !square(v, a, b) {
                    continue;
                }
                for &c in &nb[j + 1..] {
                    if square(v, a, c) && square(v, b, c) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Isometric embedding of `I(u, v)` into the square grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridEmbedding {
    pub u: usize,
    pub v: usize,
    /// Sorted vertices of the interval.
    pub vertices: Vec<usize>,
    coords: Vec<Option<(usize, usize)>>,
}

impl GridEmbedding {
    pub fn coord(&self, z: usize) -> Option<(usize, usize)> {
        self.coords[z]
    }

    pub fn corner(&self) -> (usize, usize) {
        self.coords[self.v].unwrap()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a.max(b)] = a.min(b);
    }
}

/// Canonical embedding from the Θ-classes of the interval: classes that
/// cross get different axes, and in each component of the crossing graph
/// the class met first along the canonical `(u,v)`-path is horizontal.
pub fn embed_interval(g: &Graph, dm: &DistanceMatrix, u: usize, v: usize) -> Result<GridEmbedding> {
    let vertices = interval(dm, u, v);
    let inside = |z: usize| vertices.binary_search(&z).is_ok();
    // Edges oriented away from u.
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| inside(e.0) && inside(e.1))
        .map(|&(a, b)| if dm.get(u, a) < dm.get(u, b) { (a, b) } else { (b, a) })
        .collect();
    let mut uf = UnionFind((0..edges.len()).collect());
    for (i, &(x, y)) in edges.iter().enumerate() {
        for (j, &(p, q)) in edges.iter().enumerate().skip(i + 1) {
            if dm.get(x, p) + dm.get(y, q) != dm.get(x, q) + dm.get(y, p) {
                uf.union(i, j);
            }
        }
    }
    let mut class_of_root = HashMap::new();
    let mut reps = Vec::new();
    let mut edge_class = vec![0; edges.len()];
    for i in 0..edges.len() {
        let r = uf.find(i);
        edge_class[i] = *class_of_root.entry(r).or_insert_with(|| {
            reps.push(edges[i]);
            reps.len() - 1
        });
    }
    let k = reps.len();
    if k != dm.get(u, v) as usize {
        return Err(Error::NotMedian);
    }
    // far[c][z]: z lies on the v side of class c.
    let far: Vec<Vec<bool>> = reps
        .iter()
        .map(|&(x, y)| (0..g.n()).map(|z| dm.get(z, y) < dm.get(z, x)).collect())
        .collect();
    let crosses = |c: usize, d: usize| {
        let mut seen = [false; 4];
        for &z in &vertices {
            seen[usize::from(far[c][z]) * 2 + usize::from(far[d][z])] = true;
        }
        seen.iter().all(|&s| s)
    };
    let path = g.canonical_path(dm, u, v);
    let mut order: Vec<usize> = Vec::with_capacity(k);
    for w in path.windows(2) {
        let i = edges.iter().position(|&e| e == (w[0], w[1])).unwrap();
        order.push(edge_class[i]);
    }
    let mut axis: Vec<Option<bool>> = vec![None; k];
    for &start in &order {
        if axis[start].is_some() {
            continue;
        }
        axis[start] = Some(false);
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for d in 0..k {
                if d != c && crosses(c, d) {
                    let want = !axis[c].unwrap();
                    match axis[d] {
                        None => {
                            axis[d] = Some(want);
                            stack.push(d);
                        }
                        Some(a) if a != want => return Err(Error::NotMedian),
                        Some(_) => {}
                    }
                }
            }
        }
    }
    let mut coords = vec![None; g.n()];
    for &z in &vertices {
        let (mut a, mut b) = (0usize, 0usize);
        for c in 0..k {
            if far[c][z] {
                if axis[c] == Some(true) {
                    b += 1;
                } else {
                    a += 1;
                }
            }
        }
        coords[z] = Some((a, b));
    }
    for &p in &vertices {
        for &q in &vertices {
            let (pa, pb) = coords[p].unwrap();
            let (qa, qb) = coords[q].unwrap();
            if pa.abs_diff(qa) + pb.abs_diff(qb) != dm.get(p, q) as usize {
                return Err(Error::NotMedian);
            }
        }
    }
    Ok(GridEmbedding {
        u,
        v,
        vertices,
        coords,
    })
}

/// The four strips around a region, each bounded by one coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Strips {
    /// `b >= .`, `a >= .`, `b <= .`, `a <= .`
    bounds: [Option<usize>; 4],
}

impl Strips {
    fn in_region(&self, (a, b): (usize, usize)) -> bool {
        self.bounds[0].is_none_or(|w| b <= w)
            && self.bounds[1].is_none_or(|w| a <= w)
            && self.bounds[2].is_none_or(|w| b >= w)
            && self.bounds[3].is_none_or(|w| a >= w)
    }

    fn in_strip(&self, i: usize, (a, b): (usize, usize)) -> bool {
        match (i, self.bounds[i]) {
            (_, None) => false,
            (0, Some(w)) => b >= w,
            (1, Some(w)) => a >= w,
            (2, Some(w)) => b <= w,
            (_, Some(w)) => a <= w,
        }
    }

    /// Half of strip `i` cut by the line through `z`, numbered clockwise:
    /// `first` is the primed half.
    fn in_half(&self, i: usize, first: bool, z: (usize, usize), t: (usize, usize)) -> bool {
        if !self.in_strip(i, t) {
            return false;
        }
        // Upper strip: left then right; right strip: top then bottom; and so on.
        match (i, first) {
            (0, true) | (2, false) => t.0 <= z.0,
            (0, false) | (2, true) => t.0 >= z.0,
            (1, true) | (3, false) => t.1 >= z.1,
            _ => t.1 <= z.1,
        }
    }
}

/// Which half of strip `i` holds the furthest positive (the other holds
/// the coordinate-closest one).
const FAR_HALF: [bool; 4] = [true, false, true, false];

const GROUPS: [usize; 4] = [2, 4, 8, 8];

/// The 22-slot scheme for balls of a cube-free median graph.
pub struct CfMedianScheme {
    g: Graph,
    dm: DistanceMatrix,
    family: Vec<Ball>,
    cache: RwLock<HashMap<(usize, usize), Arc<GridEmbedding>>>,
}

/// Candidate center examined by the reconstructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Candidate {
    pub vertex: usize,
    pub coord: (usize, usize),
    /// Smallest radius covering the positive slots, when the positive
    /// placement constraints hold.
    pub covering: Option<u32>,
    /// Largest radius avoiding the negative slots, when the negative
    /// placement constraints hold.
    pub avoiding: Option<u32>,
}

impl CfMedianScheme {
    pub fn new(g: &Graph) -> Result<Self> {
        let dm = g.distances();
        if !is_cube_free_median(g, &dm) {
            return Err(Error::NotMedian);
        }
        let family = enumerate_balls(&dm, None);
        Ok(CfMedianScheme {
            g: g.clone(),
            dm,
            family,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn embedding(&self, u: usize, v: usize) -> Result<Arc<GridEmbedding>> {
        if let Some(e) = self.cache.read().unwrap().get(&(u, v)) {
            return Ok(e.clone());
        }
        let e = Arc::new(embed_interval(&self.g, &self.dm, u, v)?);
        self.cache.write().unwrap().insert((u, v), e.clone());
        Ok(e)
    }

    fn gate_coord(&self, emb: &GridEmbedding, z: usize) -> (usize, usize) {
        let g = gate(&self.dm, &emb.vertices, z).expect("intervals of median graphs are gated");
        emb.coord(g).unwrap()
    }

    /// Realizing center projected onto `I(u+, v+)`.
    pub fn projected_center(&self, x: &Sample, emb: &GridEmbedding) -> Result<(usize, u32)> {
        let ball = self
            .family
            .iter()
            .find(|b| b.realizes(x))
            .ok_or(Error::NotRealizable)?;
        let c = ball.center_vertex().unwrap();
        let p = gate(&self.dm, &emb.vertices, c)?;
        Ok((p, ball.radius().twice() / 2 - self.dm.get(c, p)))
    }

    /// Candidate centers of `R` in `(a, b)` order.
    pub fn candidates(&self, y: &CompressedSample) -> Result<Vec<Candidate>> {
        let (y1, y2) = (y.vertex(0).unwrap(), y.vertex(1).unwrap());
        let emb = self.embedding(y1, y2)?;
        let gc = |i: usize| y.vertex(i).map(|z| self.gate_coord(&emb, z));
        let strips = Strips {
            bounds: [gc(2).map(|c| c.1), gc(3).map(|c| c.0), gc(4).map(|c| c.1), gc(5).map(|c| c.0)],
        };
        let halves = |base: usize, at: (usize, usize)| {
            (0..8).all(|j| match gc(base + j) {
                None => true,
                Some(t) => strips.in_half(j / 2, slot_half(base, j), at, t),
            })
        };
        let mut out: Vec<Candidate> = emb
            .vertices
            .iter()
            .map(|&z| (z, emb.coord(z).unwrap()))
            .filter(|&(_, c)| strips.in_region(c))
            .map(|(z, c)| {
                let covering = halves(6, c).then(|| {
                    [0, 1]
                        .into_iter()
                        .chain(6..14)
                        .filter_map(|i| y.vertex(i))
                        .map(|p| self.dm.get(z, p))
                        .max()
                        .unwrap()
                });
                let avoiding = halves(14, c).then(|| {
                    (14..22)
                        .filter_map(|i| y.vertex(i))
                        .map(|q| self.dm.get(z, q))
                        .min()
                        .map_or(Some(self.dm.diameter()), |d| d.checked_sub(1))
                });
                Candidate {
                    vertex: z,
                    coord: c,
                    covering,
                    avoiding: avoiding.flatten(),
                }
            })
            .collect();
        out.sort_by_key(|c| c.coord);
        Ok(out)
    }

    /// Checks, for one sample, that the positive slots force every
    /// positive in and the negative slots keep every negative out.
    pub fn check_invariants(&self, x: &Sample) -> std::result::Result<(), String> {
        let pos = x.positives();
        if pos.len() < 2 {
            return Ok(());
        }
        let y = self.compress(x).map_err(|e| e.to_string())?;
        let emb = self.embedding(y.vertex(0).unwrap(), y.vertex(1).unwrap()).map_err(|e| e.to_string())?;
        let (c, r) = self.projected_center(x, &emb).map_err(|e| e.to_string())?;
        if !x.is_realized_by(|v| self.dm.get(c, v) <= r) {
            return Err(format!("projected ball B_{r}({c}) does not realize"));
        }
        for cand in self.candidates(&y).map_err(|e| e.to_string())? {
            if let Some(r1) = cand.covering {
                if let Some(&p) = pos.iter().find(|&&p| self.dm.get(cand.vertex, p) > r1) {
                    return Err(format!("positive {p} outside B_{r1}({})", cand.vertex));
                }
            }
            if let Some(r2) = cand.avoiding {
                if let Some(q) = x.negatives().into_iter().find(|&q| self.dm.get(cand.vertex, q) <= r2) {
                    return Err(format!("negative {q} inside B_{r2}({})", cand.vertex));
                }
            }
        }
        Ok(())
    }
}

/// Whether slot `j` of the part starting at `base` refers to the primed
/// half of its strip.
fn slot_half(base: usize, j: usize) -> bool {
    let (i, second) = (j / 2, j % 2 == 1);
    if base == 6 {
        FAR_HALF[i] != second
    } else {
        !second
    }
}

impl Scheme for CfMedianScheme {
    fn id(&self) -> String {
        "cfmedian".into()
    }

    fn compress(&self, x: &Sample) -> Result<CompressedSample> {
        let mut out = CompressedSample::blank(&GROUPS);
        let pos = x.positives();
        if pos.len() <= 1 {
            out.slots[0] = pos.first().map(|&u| (u, Sign::Pos));
            return Ok(out);
        }
        let (up, vp) = self.dm.diametral_pair(&pos).unwrap();
        let emb = self.embedding(up, vp)?;
        let (center, _) = self.projected_center(x, &emb)?;
        let xc = emb.coord(center).unwrap();
        let support = x.support();
        let gc: HashMap<usize, (usize, usize)> = support.iter().map(|&w| (w, self.gate_coord(&emb, w))).collect();
        let signed = |v: usize| (v, x.get(v).unwrap());
        out.slots[0] = Some((up, Sign::Pos));
        out.slots[1] = Some((vp, Sign::Pos));

        // Region bounds: per side, the extreme gate among those beyond x.
        let side = |key: &dyn Fn((usize, usize)) -> (bool, isize)| {
            support
                .iter()
                .copied()
                .filter(|w| key(gc[w]).0)
                .min_by_key(|&w| (key(gc[&w]).1, w))
        };
        let w = [
            side(&|(_, b)| (b >= xc.1, b as isize)),
            side(&|(a, _)| (a >= xc.0, a as isize)),
            side(&|(_, b)| (b <= xc.1, -(b as isize))),
            side(&|(a, _)| (a <= xc.0, -(a as isize))),
        ];
        for (i, wi) in w.iter().enumerate() {
            out.slots[2 + i] = wi.map(signed);
        }
        let strips = Strips {
            bounds: [w[0].map(|v| gc[&v].1), w[1].map(|v| gc[&v].0), w[2].map(|v| gc[&v].1), w[3].map(|v| gc[&v].0)],
        };
        let negs = x.negatives();
        for i in 0..4 {
            let in_half = |v: &usize, first: bool| strips.in_half(i, first, xc, gc[v]);
            let far = pos
                .iter()
                .copied()
                .filter(|v| in_half(v, FAR_HALF[i]))
                .min_by_key(|&v| (std::cmp::Reverse(self.dm.get(center, v)), v));
            let close = pos
                .iter()
                .copied()
                .filter(|v| in_half(v, !FAR_HALF[i]))
                .min_by_key(|&v| {
                    let (a, b) = gc[&v];
                    let off = if i % 2 == 0 { a.abs_diff(xc.0) } else { b.abs_diff(xc.1) };
                    (off, v)
                });
            out.slots[6 + 2 * i] = far.map(signed);
            out.slots[7 + 2 * i] = close.map(signed);
            for (k, first) in [(0, true), (1, false)] {
                out.slots[14 + 2 * i + k] = negs
                    .iter()
                    .copied()
                    .filter(|v| in_half(v, first))
                    .min_by_key(|&v| (self.dm.get(center, v), v))
                    .map(signed);
            }
        }
        Ok(out)
    }

    fn reconstruct(&self, y: &CompressedSample) -> Result<Ball> {
        y.expect_groups(&GROUPS)?;
        match (y.vertex(0), y.vertex(1)) {
            (None, None) if y.support_size() == 0 => return Ok(Ball::empty(self.g.n())),
            (Some(u), None) if y.support_size() == 1 => return Ok(Ball::new(&self.dm, u, 0)),
            (Some(_), Some(_)) => {}
            _ => return Err(Error::MalformedInput(format!("unexpected shape [{y}]"))),
        }
        self.candidates(y)?
            .into_iter()
            .find_map(|c| match (c.covering, c.avoiding) {
                (Some(r1), Some(r2)) if r2 >= r1 => Some(Ball::new(&self.dm, c.vertex, r2)),
                _ => None,
            })
            .ok_or_else(|| Error::MalformedInput("no admissible center".into()))
    }
}
