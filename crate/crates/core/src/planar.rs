//! Radius-1 balls of plane graphs, given as a rotation system.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::ball::Ball;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::sample::{CompressedSample, Sample, Sign};
use crate::verify::Scheme;

/// Clockwise cyclic order of the neighbors around every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Unchecked; see [`RotationSystem::validate`].
    pub fn new(order: Vec<Vec<usize>>) -> Self {
        RotationSystem { order }
    }

    /// Rotation of a straight-line drawing: neighbors sorted clockwise by
    /// direction.
    pub fn from_coordinates(g: &Graph, coords: &[(i64, i64)]) -> Self {
        let order = (0..g.n())
            .map(|v| {
                let mut nb = g.neighbors(v).to_vec();
                let dir = |w: usize| (coords[w].0 - coords[v].0, coords[w].1 - coords[v].1);
                nb.sort_by(|&a, &b| angle_cmp(dir(b), dir(a)));
                nb
            })
            .collect();
        RotationSystem { order }
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    /// Number of faces traced by the rotation.
    pub fn face_count(&self) -> usize {
        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        let mut faces = 0;
        for u in 0..self.n() {
            for &v in &self.order[u] {
                if seen.contains(&(u, v)) {
                    continue;
                }
                faces += 1;
                let (mut a, mut b) = (u, v);
                while seen.insert((a, b)) {
                    let rot = &self.order[b];
                    let i = rot.iter().position(|&w| w == a).unwrap();
                    (a, b) = (b, rot[(i + 1) % rot.len()]);
                }
            }
        }
        faces.max(1)
    }

    /// Checks the neighbor sets against `g` and Euler's formula.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::InvalidEmbedding(format!(
                "rotation covers {} vertices, graph has {}",
                self.n(),
                g.n()
            )));
        }
        for v in 0..g.n() {
            let mut rot = self.order[v].clone();
            rot.sort_unstable();
            let mut nb = g.neighbors(v).to_vec();
            nb.sort_unstable();
            if rot != nb {
                return Err(Error::InvalidEmbedding(format!("rotation at {v} does not list its neighbors")));
            }
        }
        let f = self.face_count();
        if g.n() + f != g.m() + 2 {
            return Err(Error::InvalidEmbedding(format!(
                "V - E + F = {} - {} + {f}, not 2",
                g.n(),
                g.m()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, rot) in self.order.iter().enumerate() {
            write!(f, "{v}:")?;
            for w in rot {
                write!(f, " {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Counterclockwise order of directions starting from the positive x-axis.
fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |(x, y): (i64, i64)| u8::from(!(y > 0 || (y == 0 && x > 0)));
    half(a)
        .cmp(&half(b))
        .then_with(|| 0.cmp(&(a.0 * b.1 - a.1 * b.0)))
}

/// Vertices `v` outside `X⁺` adjacent to every positive.
pub fn potential_centers(g: &Graph, x: &Sample) -> Vec<usize> {
    let pos = x.positives();
    (0..g.n())
        .filter(|&v| x.get(v) != Some(Sign::Pos) && pos.iter().all(|&p| g.has_edge(v, p)))
        .collect()
}

/// Whether `hits` (sorted indices into a cyclic list of length `len`) is a
/// run of at most three cyclically consecutive indices.
fn is_short_run(hits: &[usize], len: usize) -> bool {
    if hits.is_empty() {
        return true;
    }
    if hits.len() > 3 {
        return false;
    }
    (0..len).any(|j| (0..hits.len()).all(|i| hits.contains(&((j + i) % len))))
}

const SLOTS: [usize; 1] = [4];

pub struct PlanarUnitScheme {
    g: Graph,
    dm: DistanceMatrix,
    rot: RotationSystem,
}

impl PlanarUnitScheme {
    pub fn new(g: &Graph, rot: &RotationSystem) -> Result<Self> {
        rot.validate(g)?;
        Ok(PlanarUnitScheme {
            g: g.clone(),
            dm: g.distances(),
            rot: rot.clone(),
        })
    }

    fn near(&self, c: usize, v: usize) -> bool {
        self.dm.get(c, v) <= 1
    }

    fn good(&self, x: &Sample, c: usize) -> bool {
        x.is_realized_by(|v| self.near(c, v))
    }

    fn common(&self, vs: &[usize]) -> Vec<usize> {
        self.g.neighbors(vs[0])
            .iter()
            .copied()
            .filter(|&c| vs[1..].iter().all(|&v| self.g.has_edge(c, v)))
            .collect()
    }

    /// Neighbors of `u` clockwise, starting at the smallest id.
    pub fn around(&self, u: usize) -> Vec<usize> {
        let r = self.rot.rotation(u);
        let start = (0..r.len()).min_by_key(|&i| r[i]).unwrap_or(0);
        (0..r.len()).map(|i| r[(start + i) % r.len()]).collect()
    }

    /// Common neighbors of `u < v` in clockwise order around `u`, starting
    /// after `v` when adjacent and at the smallest common neighbor otherwise.
    pub fn pair_order(&self, u: usize, v: usize) -> Vec<usize> {
        let r = self.rot.rotation(u);
        let common: Vec<usize> = r.iter().copied().filter(|&w| self.g.has_edge(w, v)).collect();
        let Some(&first) = common.iter().min() else {
            return common;
        };
        let start = match r.iter().position(|&w| w == v) {
            Some(i) => i + 1,
            None => r.iter().position(|&w| w == first).unwrap(),
        };
        (0..r.len())
            .map(|i| r[(start + i) % r.len()])
            .filter(|&w| self.g.has_edge(w, v))
            .collect()
    }

    /// Neighbors `w_s` of `u` leaving `B_1(t)` clockwise (`w_{s-1}` inside,
    /// `w_s` outside), listed from the first inside neighbor onwards.
    pub fn exits(&self, u: usize, t: usize) -> Vec<usize> {
        let ring = self.around(u);
        let m = ring.len();
        let inside: Vec<bool> = ring.iter().map(|&w| self.near(t, w)).collect();
        let Some(p) = inside.iter().position(|&b| b) else {
            return Vec::new();
        };
        (1..=m)
            .map(|i| (p + i) % m)
            .filter(|&s| !inside[s] && inside[(s + m - 1) % m])
            .map(|s| ring[s])
            .collect()
    }

    fn ball(&self, c: usize) -> Ball {
        Ball::new(&self.dm, c, 1)
    }

    fn encode(entries: &[(usize, Sign)]) -> CompressedSample {
        let mut out = CompressedSample::blank(&SLOTS);
        for (i, &e) in entries.iter().enumerate() {
            out.slots[i] = Some(e);
        }
        out
    }

    fn compress_single(&self, x: &Sample, u: usize) -> Result<CompressedSample> {
        let neg = x.negatives();
        for &t in &neg {
            let w = self.exits(u, t);
            let Some(i) = w.iter().position(|&c| self.good(x, c)) else {
                continue;
            };
            if i == 0 {
                return Ok(Self::encode(&[(u, Sign::Pos), (t, Sign::Neg)]));
            }
            let z = *neg.iter().find(|&&z| self.near(w[i - 1], z)).unwrap();
            return Ok(Self::encode(&[(u, Sign::Pos), (t, Sign::Neg), (z, Sign::Neg)]));
        }
        Err(Error::NotRealizable)
    }

    fn reconstruct_single(&self, u: usize, t: usize, z: Option<usize>) -> Result<Ball> {
        let w = self.exits(u, t);
        let bad = || Error::MalformedInput(format!("no exit around {u} fits -{t}"));
        if w.is_empty() {
            return Err(bad());
        }
        let Some(z) = z else {
            return Ok(self.ball(w[0]));
        };
        let hits: Vec<usize> = (0..w.len()).filter(|&i| self.near(z, w[i])).collect();
        let last = match hits.as_slice() {
            [i] => *i,
            [a, b] if *b == a + 1 => *b,
            [0, b] if *b == w.len() - 1 => 0,
            _ => return Err(bad()),
        };
        Ok(self.ball(w[(last + 1) % w.len()]))
    }

    /// First triple of positives whose common neighbors are exactly the
    /// potential centers `pc` of the whole sample.
    fn spanning_triple(&self, pos: &[usize], pc: &[usize]) -> Option<(usize, usize, usize)> {
        let k = pos.len();
        (0..k)
            .flat_map(|i| (i + 1..k).flat_map(move |j| (j + 1..k).map(move |l| (pos[i], pos[j], pos[l]))))
            .find(|&(a, b, c)| {
                let mut cn = self.common(&[a, b, c]);
                cn.sort_unstable();
                cn == pc
            })
    }

    fn compress_pair(&self, x: &Sample, u: usize, v: usize) -> Result<CompressedSample> {
        let order = self.pair_order(u, v);
        let neg = x.negatives();
        let m = order.len();
        if order.iter().all(|&c| neg.iter().all(|&z| !self.near(c, z))) {
            return Ok(Self::encode(&[(u, Sign::Pos), (v, Sign::Pos)]));
        }
        let s = (0..m)
            .find(|&s| self.good(x, order[s]) && !self.good(x, order[(s + m - 1) % m]))
            .ok_or(Error::NotRealizable)?;
        let t = *neg.iter().find(|&&z| self.near(order[(s + m - 1) % m], z)).unwrap();
        Ok(Self::encode(&[(u, Sign::Pos), (v, Sign::Pos), (t, Sign::Neg)]))
    }

    fn reconstruct_pair(&self, u: usize, v: usize, t: Option<usize>) -> Result<Ball> {
        let order = self.pair_order(u, v);
        let m = order.len();
        let pick = match t {
            None => order.first().copied(),
            Some(t) => (0..m)
                .find(|&s| self.near(t, order[(s + m - 1) % m]) && !self.near(t, order[s]))
                .map(|s| order[s]),
        };
        pick.map(|c| self.ball(c))
            .ok_or_else(|| Error::MalformedInput(format!("no common neighbor of {u} and {v} fits")))
    }

    /// Checks the structural facts the scheme relies on for a realizable
    /// radius-1 sample: at most two potential centers for three or more
    /// guarded positives, short cyclic runs of common neighbors around each
    /// negative, and the run shape of the second negative in a `(t, z)` code.
    pub fn check_invariants(&self, x: &Sample) -> std::result::Result<(), String> {
        let pos = x.positives();
        let neg = x.negatives();
        if pos.len() >= 3 && pos.iter().all(|&p| self.g.neighbors(p).iter().any(|&w| x.get(w) == Some(Sign::Neg))) {
            let pc = potential_centers(&self.g, x);
            if pc.is_empty() || pc.len() > 2 {
                return Err(format!("{} potential centers for {x}", pc.len()));
            }
        }
        if let [u, v] = pos[..] {
            let order = self.pair_order(u, v);
            for &z in &neg {
                let hits: Vec<usize> = (0..order.len()).filter(|&i| self.near(z, order[i])).collect();
                if !is_short_run(&hits, order.len()) {
                    return Err(format!("-{z} meets common neighbors {hits:?} of {order:?}"));
                }
            }
        }
        if let [u] = pos[..] {
            let y = self.compress(x).map_err(|e| e.to_string())?;
            if let [_, Some((t, _)), Some((z, _)), _] = y.slots[..] {
                let w = self.exits(u, t);
                let m = w.len();
                let good = w.iter().position(|&c| self.good(x, c)).ok_or("no good exit")?;
                let prev = (good + m - 1) % m;
                let hits: Vec<usize> = (0..m).filter(|&i| self.near(z, w[i])).collect();
                let expected = [vec![prev], {
                    let mut two = vec![prev, (prev + m - 1) % m];
                    two.sort_unstable();
                    two
                }];
                if !expected.contains(&hits) {
                    return Err(format!("-{z} meets exits {hits:?} of {w:?}, good exit {good}"));
                }
            }
        }
        Ok(())
    }
}

impl Scheme for PlanarUnitScheme {
    fn id(&self) -> String {
        "planar-unit".into()
    }

    fn compress(&self, x: &Sample) -> Result<CompressedSample> {
        let pos = x.positives();
        if pos.is_empty() {
            return Ok(CompressedSample::blank(&SLOTS));
        }
        if let Some(&u) = pos.iter().find(|&&u| self.good(x, u)) {
            return Ok(Self::encode(&[(u, Sign::Pos)]));
        }
        match pos[..] {
            [u] => self.compress_single(x, u),
            [u, v] => self.compress_pair(x, u, v),
            [_, _, _, ..] => {
                let pc = potential_centers(&self.g, x);
                let (a, b, c) = self.spanning_triple(&pos, &pc).ok_or(Error::NotRealizable)?;
                let mut out = vec![(a, Sign::Pos), (b, Sign::Pos), (c, Sign::Pos)];
                if let Some(&z) = x.negatives().iter().find(|&&z| pc.iter().any(|&w| self.near(w, z))) {
                    out.push((z, Sign::Neg));
                }
                Ok(Self::encode(&out))
            }
            [] => unreachable!(),
        }
    }

    fn reconstruct(&self, y: &CompressedSample) -> Result<Ball> {
        y.expect_groups(&SLOTS)?;
        use Sign::{Neg, Pos};
        match y.slots[..] {
            [None, None, None, None] => Ok(Ball::empty(self.g.n())),
            [Some((u, Pos)), None, None, None] => Ok(self.ball(u)),
            [Some((a, Pos)), Some((b, Pos)), Some((c, Pos)), last] => {
                let z = match last {
                    None => None,
                    Some((z, Neg)) => Some(z),
                    Some(_) => return Err(Error::MalformedInput(format!("unexpected code [{y}]"))),
                };
                self.common(&[a, b, c])
                    .into_iter()
                    .find(|&w| z.is_none_or(|z| !self.near(w, z)))
                    .map(|w| self.ball(w))
                    .ok_or_else(|| Error::MalformedInput(format!("no center fits [{y}]")))
            }
            [Some((u, Pos)), Some((v, Pos)), None, None] => self.reconstruct_pair(u, v, None),
            [Some((u, Pos)), Some((v, Pos)), Some((t, Neg)), None] => self.reconstruct_pair(u, v, Some(t)),
            [Some((u, Pos)), Some((t, Neg)), None, None] => self.reconstruct_single(u, t, None),
            [Some((u, Pos)), Some((t, Neg)), Some((z, Neg)), None] => self.reconstruct_single(u, t, Some(z)),
            _ => Err(Error::MalformedInput(format!("unexpected code [{y}]"))),
        }
    }
}


#[cfg(test)]
mod stress {
    use super::*;
    use crate::ball::{enumerate_balls, enumerate_realizable_samples};
    use crate::generators::{generate, GenSpec, GraphClass};
    use crate::verify::{verify_scheme, VerifyOptions};

    #[test]
    fn random_plane_graphs() {
        for seed in 0..120 {
            let n = 2 + (seed as usize % 9);
            let out = generate(&GenSpec::new(GraphClass::PlanarRot, n, seed)).unwrap();
            let rot = out.rotation.unwrap();
            let s = PlanarUnitScheme::new(&out.graph, &rot).unwrap();
            let dm = out.graph.distances();
            let samples = enumerate_realizable_samples(n, &enumerate_balls(&dm, Some(1)), None);
            let rep = verify_scheme(&dm, &s, &VerifyOptions::exact(4).with_radius(1), &samples);
            assert!(rep.passed(), "{:?}\n{}{}", out.graph.edges(), rot, rep);
            for x in &samples {
                assert_eq!(s.check_invariants(x), Ok(()), "{:?}\n{rot}{x}", out.graph.edges());
            }
        }
    }
}
