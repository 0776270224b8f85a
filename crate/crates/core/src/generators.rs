//! Seeded instance generators, one per graph class.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::cfmedian::is_cube_free_median;
use crate::graph::{interval, Graph};
use crate::interval::IntervalRepresentation;
use crate::planar::RotationSystem;
use crate::sample::Sample;
use crate::split::SplitPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Tree,
    Cycle,
    Cactus,
    CfMedian,
    Interval,
    Split,
    PlanarRot,
    Random,
}

impl GraphClass {
    pub const ALL: [GraphClass; 8] = [
        GraphClass::Tree,
        GraphClass::Cycle,
        GraphClass::Cactus,
        GraphClass::CfMedian,
        GraphClass::Interval,
        GraphClass::Split,
        GraphClass::PlanarRot,
        GraphClass::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Tree => "tree",
            GraphClass::Cycle => "cycle",
            GraphClass::Cactus => "cactus",
            GraphClass::CfMedian => "cfmedian",
            GraphClass::Interval => "interval",
            GraphClass::Split => "split",
            GraphClass::PlanarRot => "planar-rot",
            GraphClass::Random => "random",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnsupportedSpec(format!("unknown class {s:?}")))
    }
}

/// What to generate. Knobs a class does not use are ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub class: GraphClass,
    pub n: usize,
    pub seed: u64,
    /// Number of cycles of a cactus (random when unset).
    pub cycles: Option<usize>,
    /// Grid dimensions for cube-free median and planar grids.
    pub grid: Option<(usize, usize)>,
    /// Edge probability for random graphs, kept share of removable edges for
    /// plane graphs.
    pub density: Option<f64>,
}

impl GenSpec {
    pub fn new(class: GraphClass, n: usize, seed: u64) -> Self {
        GenSpec {
            class,
            n,
            seed,
            cycles: None,
            grid: None,
            density: None,
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// A generated graph with its class-specific side data.
#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub intervals: Option<IntervalRepresentation>,
    pub rotation: Option<RotationSystem>,
}

pub fn generate(spec: &GenSpec) -> Result<Generated> {
    if spec.n == 0 {
        return Err(Error::UnsupportedSpec("n must be at least 1".into()));
    }
    let mut rng = spec.rng();
    let mut out = Generated {
        graph: Graph::new(1, &[]).unwrap(),
        intervals: None,
        rotation: None,
    };
    out.graph = match spec.class {
        GraphClass::Tree => random_tree(spec.n, &mut rng),
        GraphClass::Cycle => cycle(spec.n)?,
        GraphClass::Cactus => random_cactus(spec.n, spec.cycles, &mut rng)?,
        GraphClass::CfMedian => match spec.grid {
            Some((r, c)) if r * c >= 1 => grid(r, c),
            Some(_) => return Err(Error::UnsupportedSpec("empty grid".into())),
            None => random_cfmedian(spec.n, &mut rng),
        },
        GraphClass::Interval => {
            let (g, rep) = random_interval(spec.n, &mut rng);
            out.intervals = Some(rep);
            g
        }
        GraphClass::Split => random_split(spec.n, &mut rng),
        GraphClass::PlanarRot => {
            let (g, rot) = match spec.grid {
                Some((r, c)) if r * c >= 1 => planar_grid(r, c),
                Some(_) => return Err(Error::UnsupportedSpec("empty grid".into())),
                None => random_plane_graph(spec.n, spec.density.unwrap_or(0.6), &mut rng),
            };
            out.rotation = Some(rot);
            g
        }
        GraphClass::Random => random_connected(spec.n, spec.density.unwrap_or(0.3), &mut rng),
    };
    Ok(out)
}

/// Uniform labeled tree from a Prüfer sequence.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    if n <= 2 {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        return Graph::new(n, &edges).unwrap();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::UnsupportedSpec("a cycle needs at least 3 vertices".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// The `rows x cols` grid, vertex `i * cols + j` at row `i`, column `j`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::new(rows * cols, &edges).unwrap()
}

/// Glues grid rectangles along convex paths until `n` vertices exist;
/// gluings that break the cube-free median property are resampled.
pub fn random_cfmedian(n: usize, rng: &mut impl Rng) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut size = 1;
    while size < n {
        let g = Graph::new(size, &edges).unwrap();
        let dm = g.distances();
        let left = n - size;
        let v = rng.gen_range(0..size);
        // Targets whose interval with v is a single path short enough to fit.
        let targets: Vec<usize> = (0..size)
            .filter(|&w| {
                let d = dm.get(v, w) as usize;
                d < left && interval(&dm, v, w).len() == d + 1
            })
            .collect();
        let w = targets[rng.gen_range(0..targets.len())];
        let side = g.canonical_path(&dm, v, w);
        let len = side.len();
        let rows = rng.gen_range(1..=(left / len).min(3));
        let mut grown = edges.clone();
        let mut prev = side.clone();
        let mut next_id = size;
        for _ in 0..rows {
            let row: Vec<usize> = (next_id..next_id + len).collect();
            next_id += len;
            for j in 0..len {
                grown.push((prev[j], row[j]));
                if j + 1 < len {
                    grown.push((row[j], row[j + 1]));
                }
            }
            prev = row;
        }
        let candidate = Graph::new(next_id, &grown).unwrap();
        if is_cube_free_median(&candidate, &candidate.distances()) {
            edges = grown;
            size = next_id;
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Connected interval graph: a random sequence of segment openings and
/// closings at integer positions that never leaves a gap.
pub fn random_interval(n: usize, rng: &mut impl Rng) -> (Graph, IntervalRepresentation) {
    let mut seg = vec![(0i64, 0i64); n];
    let mut open: Vec<usize> = Vec::new();
    let mut next = 0;
    for t in 0..2 * n as i64 {
        let can_close = !open.is_empty() && (open.len() >= 2 || next == n);
        if next < n && (!can_close || rng.gen_bool(0.5)) {
            seg[next].0 = t;
            open.push(next);
            next += 1;
        } else {
            let v = open.swap_remove(rng.gen_range(0..open.len()));
            seg[v].1 = t;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if seg[u].0 <= seg[v].1 && seg[v].0 <= seg[u].1 {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::new(n, &edges).expect("segments without gaps give a connected graph");
    (g, IntervalRepresentation::from_integers(&seg))
}

/// Grows a cactus from one vertex by hanging pendant edges and cycles of
/// length at least 3 on random existing vertices.
pub fn random_cactus(n: usize, cycles: Option<usize>, rng: &mut impl Rng) -> Result<Graph> {
    let mut want = cycles.unwrap_or_else(|| rng.gen_range(0..=(n.saturating_sub(1)) / 2));
    if 2 * want > n.saturating_sub(1) {
        return Err(Error::UnsupportedSpec(format!("{want} cycles do not fit in {n} vertices")));
    }
    let mut edges = Vec::new();
    let mut size = 1;
    while size < n {
        let at = rng.gen_range(0..size);
        let left = n - size;
        // Keep two fresh vertices per cycle still to be placed.
        if want > 0 && (left < 2 * want + 1 || rng.gen_bool(0.5)) {
            let spare = left - 2 * (want - 1);
            let len = rng.gen_range(3..=spare.min(6) + 1);
            let fresh: Vec<usize> = (size..size + len - 1).collect();
            edges.push((at, fresh[0]));
            for w in fresh.windows(2) {
                edges.push((w[0], w[1]));
            }
            edges.push((*fresh.last().unwrap(), at));
            size += len - 1;
            want -= 1;
        } else {
            edges.push((at, size));
            size += 1;
        }
    }
    Graph::new(n, &edges)
}

/// A clique on a random subset of the labels; every other vertex is attached
/// to a random nonempty part of it.
pub fn random_split(n: usize, rng: &mut impl Rng) -> Graph {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let size = rng.gen_range(1..=n);
    let mut edges = Vec::new();
    for i in 0..size {
        for j in i + 1..size {
            edges.push((label[i], label[j]));
        }
    }
    for &v in &label[size..] {
        let first = rng.gen_range(0..size);
        for (j, &w) in label[..size].iter().enumerate() {
            if j == first || rng.gen_bool(0.4) {
                edges.push((v, w));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// A concept class over `0..ground` turned into a split graph: the ground set
/// becomes a clique and each concept `C` a vertex adjacent to exactly `C`, so
/// that its radius-1 ball traces `C` on the clique.
#[derive(Debug, Clone)]
pub struct SplitReduction {
    pub graph: Graph,
    /// Clique = ground elements, independent = concept vertices. The clique
    /// is not always a maximum one (a concept equal to the ground set).
    pub partition: SplitPartition,
    pub ground: usize,
}

impl SplitReduction {
    /// Vertex standing for concept `i`.
    pub fn concept_vertex(&self, i: usize) -> usize {
        self.ground + i
    }

    /// Lifts a sample over the ground set to the graph.
    pub fn translate(&self, x: &Sample) -> Result<Sample> {
        if x.n() != self.ground {
            return Err(Error::MalformedInput(format!(
                "sample has {} entries, ground set has {}",
                x.n(),
                self.ground
            )));
        }
        let mut signs = x.signs().to_vec();
        signs.resize(self.graph.n(), None);
        Ok(Sample::from_signs(signs))
    }
}

pub fn concept_to_split_graph(ground: usize, concepts: &[Vec<usize>]) -> Result<SplitReduction> {
    if ground == 0 || concepts.is_empty() {
        return Err(Error::UnsupportedSpec("need a nonempty ground set and concept list".into()));
    }
    let mut edges = Vec::new();
    for a in 0..ground {
        for b in a + 1..ground {
            edges.push((a, b));
        }
    }
    for (i, c) in concepts.iter().enumerate() {
        if c.is_empty() {
            return Err(Error::UnsupportedSpec(format!("concept {i} is empty and would be isolated")));
        }
        let mut c = c.clone();
        c.sort_unstable();
        c.dedup();
        if let Some(&e) = c.iter().find(|&&e| e >= ground) {
            return Err(Error::MalformedInput(format!("concept {i} names element {e} outside the ground set")));
        }
        edges.extend(c.iter().map(|&e| (e, ground + i)));
    }
    Ok(SplitReduction {
        graph: Graph::new(ground + concepts.len(), &edges)?,
        partition: SplitPartition {
            clique: (0..ground).collect(),
            independent: (ground..ground + concepts.len()).collect(),
        },
        ground,
    })
}

/// Wheel with a hub `0` and a rim cycle `1..=rim`, drawn on a polygon.
pub fn wheel(rim: usize) -> (Graph, RotationSystem) {
    let mut edges = Vec::new();
    let mut coords = vec![(0, 0)];
    for i in 1..=rim {
        let a = std::f64::consts::TAU * i as f64 / rim as f64;
        coords.push(((1000.0 * a.cos()).round() as i64, (1000.0 * a.sin()).round() as i64));
        edges.push((0, i));
        edges.push((i, i % rim + 1));
    }
    edges.sort_unstable();
    edges.dedup();
    let g = Graph::new(rim + 1, &edges).unwrap();
    let rot = RotationSystem::from_coordinates(&g, &coords);
    (g, rot)
}

/// [`grid`] with its straight-line drawing.
pub fn planar_grid(rows: usize, cols: usize) -> (Graph, RotationSystem) {
    let g = grid(rows, cols);
    let coords: Vec<(i64, i64)> = (0..rows * cols).map(|v| ((v % cols) as i64, -((v / cols) as i64))).collect();
    let rot = RotationSystem::from_coordinates(&g, &coords);
    (g, rot)
}

/// `levels` concentric squares with matching corners joined.
pub fn stacked_squares(levels: usize) -> (Graph, RotationSystem) {
    let mut edges = Vec::new();
    let mut coords = Vec::new();
    for l in 0..levels {
        let s = (levels - l) as i64;
        coords.extend([(s, s), (s, -s), (-s, -s), (-s, s)]);
        for c in 0..4 {
            let v = 4 * l + c;
            edges.push((v, 4 * l + (c + 1) % 4));
            if l + 1 < levels {
                edges.push((v, v + 4));
            }
        }
    }
    let g = Graph::new(4 * levels, &edges).unwrap();
    let rot = RotationSystem::from_coordinates(&g, &coords);
    (g, rot)
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
}

fn on_segment(a: (i64, i64), b: (i64, i64), p: (i64, i64)) -> bool {
    orient(a, b, p) == 0 && p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Whether two drawn edges meet anywhere except at a shared endpoint.
fn segments_clash(pts: &[(i64, i64)], (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let (pa, pb, pc, pd) = (pts[a], pts[b], pts[c], pts[d]);
    let shared = [a, b].iter().filter(|v| [c, d].contains(v)).count();
    if shared == 2 {
        return true;
    }
    if shared == 1 {
        let (o, x, y) = if a == c || a == d { (pa, pb, if a == c { pd } else { pc }) } else { (pb, pa, if b == c { pd } else { pc }) };
        return on_segment(o, x, y) || on_segment(o, y, x);
    }
    let (o1, o2, o3, o4) = (orient(pa, pb, pc), orient(pa, pb, pd), orient(pc, pd, pa), orient(pc, pd, pb));
    (o1 != o2 && o3 != o4)
        || on_segment(pa, pb, pc)
        || on_segment(pa, pb, pd)
        || on_segment(pc, pd, pa)
        || on_segment(pc, pd, pb)
}

/// Straight-line plane graph on random lattice points: a maximal
/// non-crossing edge set, thinned while staying connected so that about a
/// `keep` fraction of the removable edges survive.
pub fn random_plane_graph(n: usize, keep: f64, rng: &mut impl Rng) -> (Graph, RotationSystem) {
    let side = 3 * n as i64 + 1;
    let mut pts: Vec<(i64, i64)> = Vec::new();
    while pts.len() < n {
        let p = (rng.gen_range(0..side), rng.gen_range(0..side));
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for e in pairs {
        let through_point = (0..n).any(|w| w != e.0 && w != e.1 && on_segment(pts[e.0], pts[e.1], pts[w]));
        if !through_point && edges.iter().all(|&f| !segments_clash(&pts, e, f)) {
            edges.push(e);
        }
    }
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.shuffle(rng);
    let mut alive = vec![true; edges.len()];
    for i in order {
        if rng.gen_bool(keep.clamp(0.0, 1.0)) {
            continue;
        }
        alive[i] = false;
        let rest: Vec<(usize, usize)> = edges.iter().zip(&alive).filter(|p| *p.1).map(|p| *p.0).collect();
        if Graph::new(n, &rest).is_err() {
            alive[i] = true;
        }
    }
    let kept: Vec<(usize, usize)> = edges.iter().zip(&alive).filter(|p| *p.1).map(|p| *p.0).collect();
    let g = Graph::new(n, &kept).unwrap();
    let rot = RotationSystem::from_coordinates(&g, &pts);
    (g, rot)
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.push((a.min(b), a.max(b)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}
