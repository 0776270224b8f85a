//! Size-4 schemes for balls of interval graphs, all radii or one fixed
//! radius, driven by a segment representation with distinct endpoints.

use std::fmt;

use num_rational::Ratio;

use crate::ball::Ball;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::sample::{CompressedSample, Sample, Sign};
use crate::verify::Scheme;

pub type Endpoint = Ratio<i64>;

/// One segment `[start, end]` per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalRepresentation {
    segments: Vec<(Endpoint, Endpoint)>,
}

impl IntervalRepresentation {
    pub fn new(segments: Vec<(Endpoint, Endpoint)>) -> Self {
        IntervalRepresentation { segments }
    }

    pub fn from_integers(segments: &[(i64, i64)]) -> Self {
        Self::new(segments.iter().map(|&(s, e)| (Ratio::from_integer(s), Ratio::from_integer(e))).collect())
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn segments(&self) -> &[(Endpoint, Endpoint)] {
        &self.segments
    }

    pub fn start(&self, v: usize) -> Endpoint {
        self.segments[v].0
    }

    pub fn end(&self, v: usize) -> Endpoint {
        self.segments[v].1
    }

    /// Checks distinct endpoints, `start <= end`, and that the intersection
    /// graph is `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidRepresentation(m));
        if self.len() != g.n() {
            return bad(format!("{} segments for {} vertices", self.len(), g.n()));
        }
        if let Some(v) = (0..self.len()).find(|&v| self.start(v) > self.end(v)) {
            return bad(format!("segment of {v} starts after it ends"));
        }
        let mut ends: Vec<Endpoint> = self.segments.iter().flat_map(|&(s, e)| [s, e]).collect();
        ends.sort();
        if ends.windows(2).any(|w| w[0] == w[1]) {
            return bad("endpoints are not pairwise distinct".into());
        }
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let meet = self.start(u) <= self.end(v) && self.start(v) <= self.end(u);
                if meet != g.has_edge(u, v) {
                    return bad(format!("segments of {u} and {v} disagree with the graph"));
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self, g: &Graph) -> bool {
        self.check(g).is_ok()
    }
}

impl fmt::Display for IntervalRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, (s, e)) in self.segments.iter().enumerate() {
            writeln!(f, "{v} {s} {e}")?;
        }
        Ok(())
    }
}

/// `(u+, v+)`: the positive ending first and the positive starting last.
pub fn farthest_pair(rep: &IntervalRepresentation, pos: &[usize]) -> (usize, usize) {
    let u = *pos.iter().min_by_key(|&&v| rep.end(v)).expect("nonempty positives");
    let v = *pos.iter().max_by_key(|&&v| rep.start(v)).unwrap();
    (u, v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalMode {
    All,
    Fixed(u32),
}

pub struct IntervalScheme {
    g: Graph,
    dm: DistanceMatrix,
    rep: IntervalRepresentation,
    mode: IntervalMode,
    /// Vertices by increasing end.
    by_end: Vec<usize>,
}

const GROUPS: [usize; 2] = [2, 2];

impl IntervalScheme {
    pub fn new(g: &Graph, rep: IntervalRepresentation, mode: IntervalMode) -> Result<Self> {
        rep.check(g)?;
        let mut by_end: Vec<usize> = (0..g.n()).collect();
        by_end.sort_by_key(|&v| rep.end(v));
        Ok(IntervalScheme {
            g: g.clone(),
            dm: g.distances(),
            rep,
            mode,
            by_end,
        })
    }

    fn radii(&self) -> std::ops::RangeInclusive<u32> {
        match self.mode {
            IntervalMode::All => 1..=self.dm.diameter().max(1),
            IntervalMode::Fixed(r) => r..=r,
        }
    }

    /// Left and right bounders taken from one realizing ball, preferring a
    /// ball with negatives on both sides.
    fn bounders(&self, x: &Sample) -> Result<(Option<usize>, Option<usize>)> {
        let neg = x.negatives();
        let mut first = None;
        for r in self.radii() {
            for c in 0..self.g.n() {
                if !x.is_realized_by(|v| self.dm.get(c, v) <= r) {
                    continue;
                }
                let p = neg
                    .iter()
                    .copied()
                    .filter(|&z| self.rep.end(z) < self.rep.start(c))
                    .max_by_key(|&z| self.rep.end(z));
                let q = neg
                    .iter()
                    .copied()
                    .filter(|&z| self.rep.end(c) < self.rep.start(z))
                    .min_by_key(|&z| self.rep.start(z));
                if p.is_some() && q.is_some() {
                    return Ok((p, q));
                }
                first.get_or_insert((p, q));
            }
        }
        first.ok_or(Error::NotRealizable)
    }

    fn compress_radius_zero(&self, x: &Sample) -> Result<CompressedSample> {
        let mut out = CompressedSample::blank(&GROUPS);
        let pos = x.positives();
        match pos.as_slice() {
            [v] => out.slots[0] = Some((*v, Sign::Pos)),
            [] => {
                let i = self
                    .by_end
                    .iter()
                    .position(|&v| x.get(v) != Some(Sign::Neg))
                    .ok_or(Error::NotRealizable)?;
                if i > 0 {
                    out.slots[2] = Some((self.by_end[i - 1], Sign::Neg));
                }
            }
            _ => return Err(Error::NotRealizable),
        }
        Ok(out)
    }

    fn reconstruct_radius_zero(&self, y: &CompressedSample) -> Result<Ball> {
        let at = match (y.vertex(0), y.vertex(1), y.vertex(2), y.vertex(3)) {
            (Some(v), None, None, None) => v,
            (None, None, None, None) => self.by_end[0],
            (None, None, Some(w), None) => {
                let i = self.by_end.iter().position(|&v| v == w).unwrap();
                *self
                    .by_end
                    .get(i + 1)
                    .ok_or_else(|| Error::MalformedInput(format!("{w} ends last")))?
            }
            _ => return Err(Error::MalformedInput(format!("unexpected shape [{y}]"))),
        };
        Ok(Ball::new(&self.dm, at, 0))
    }
}

impl Scheme for IntervalScheme {
    fn id(&self) -> String {
        match self.mode {
            IntervalMode::All => "interval".into(),
            IntervalMode::Fixed(r) => format!("interval-fixed-r{r}"),
        }
    }

    fn compress(&self, x: &Sample) -> Result<CompressedSample> {
        if self.mode == IntervalMode::Fixed(0) {
            return self.compress_radius_zero(x);
        }
        let mut out = CompressedSample::blank(&GROUPS);
        let pos = x.positives();
        let all = self.mode == IntervalMode::All;
        if all && pos.len() <= 1 {
            out.slots[0] = pos.first().map(|&v| (v, Sign::Pos));
            return Ok(out);
        }
        if !pos.is_empty() {
            let (u, v) = farthest_pair(&self.rep, &pos);
            if u != v {
                out.slots[0] = Some((u, Sign::Pos));
            }
            out.slots[1] = Some((v, Sign::Pos));
        }
        if x.negatives().is_empty() {
            return Ok(out);
        }
        let (p, q) = self.bounders(x)?;
        out.slots[2] = p.map(|v| (v, Sign::Neg));
        out.slots[3] = q.map(|v| (v, Sign::Neg));
        Ok(out)
    }

    fn reconstruct(&self, y: &CompressedSample) -> Result<Ball> {
        y.expect_groups(&GROUPS)?;
        if self.mode == IntervalMode::Fixed(0) {
            return self.reconstruct_radius_zero(y);
        }
        let v = |i: usize| y.vertex(i);
        match (v(0), v(1), v(2), v(3)) {
            (None, None, None, None) => return Ok(Ball::empty(self.g.n())),
            (Some(y1), None, None, None) if self.mode == IntervalMode::All => {
                return Ok(Ball::new(&self.dm, y1, 0));
            }
            (None | Some(_), Some(_), _, _) => {}
            (None, None, _, _) if self.mode != IntervalMode::All => {}
            _ => return Err(Error::MalformedInput(format!("unexpected shape [{y}]"))),
        }
        let rep = &self.rep;
        for r in self.radii() {
            for c in 0..self.g.n() {
                let d = |z: usize| self.dm.get(c, z);
                let ok = [v(0), v(1)].into_iter().flatten().all(|z| d(z) <= r)
                    && [v(2), v(3)].into_iter().flatten().all(|z| d(z) > r)
                    && v(2).is_none_or(|p| rep.end(p) < rep.start(c))
                    && v(3).is_none_or(|q| rep.end(c) < rep.start(q));
                if ok {
                    return Ok(Ball::new(&self.dm, c, r));
                }
            }
        }
        Err(Error::MalformedInput("no ball meets the endpoint constraints".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::{enumerate_balls, enumerate_realizable_samples};
    use crate::verify::{verify_scheme, VerifyOptions};
    use Sign::{Neg, Pos};

    fn p4() -> (Graph, IntervalRepresentation) {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let rep = IntervalRepresentation::from_integers(&[(0, 2), (1, 5), (4, 8), (7, 9)]);
        (g, rep)
    }

    #[test]
    fn validation() {
        let (g, rep) = p4();
        assert!(rep.validate(&g));
        let dup = IntervalRepresentation::from_integers(&[(0, 2), (2, 5), (4, 8), (7, 9)]);
        assert!(!dup.validate(&g));
        let missing = IntervalRepresentation::from_integers(&[(0, 2), (3, 5), (4, 8), (7, 9)]);
        assert!(!missing.validate(&g));
    }

    #[test]
    fn farthest_pairs() {
        let (_, rep) = p4();
        assert_eq!(farthest_pair(&rep, &[1, 2]), (1, 2));
        assert_eq!(farthest_pair(&rep, &[2]), (2, 2));
        assert_eq!(farthest_pair(&rep, &[0, 1, 2]), (0, 2));
    }

    #[test]
    fn examples() {
        let (g, rep) = p4();
        let s = IntervalScheme::new(&g, rep.clone(), IntervalMode::All).unwrap();
        let y = s.compress(&Sample::from_sets(4, &[1, 2], &[3])).unwrap();
        assert_eq!(y.to_string(), "+1 +2 | * -3");
        assert_eq!(s.reconstruct(&y).unwrap().vertices(), vec![0, 1, 2]);
        let y = s.compress(&Sample::from_sets(4, &[2], &[])).unwrap();
        assert_eq!(y.to_string(), "+2 * | * *");
        assert_eq!(s.reconstruct(&y).unwrap().vertices(), vec![2]);

        let s = IntervalScheme::new(&g, rep, IntervalMode::Fixed(0)).unwrap();
        let y = s.compress(&Sample::from_sets(4, &[], &[0])).unwrap();
        assert_eq!(y.entries().collect::<Vec<_>>(), vec![(0, Neg)]);
        assert_eq!(s.reconstruct(&y).unwrap().vertices(), vec![1]);
        let y = s.compress(&Sample::from_sets(4, &[3], &[])).unwrap();
        assert_eq!(y.entries().collect::<Vec<_>>(), vec![(3, Pos)]);
    }

    #[test]
    fn p4_exhaustive_all_modes() {
        let (g, rep) = p4();
        let dm = g.distances();
        let mut modes = vec![IntervalMode::All];
        modes.extend((0..=4).map(IntervalMode::Fixed));
        for mode in modes {
            let radius = match mode {
                IntervalMode::All => None,
                IntervalMode::Fixed(r) => Some(r),
            };
            let samples = enumerate_realizable_samples(4, &enumerate_balls(&dm, radius), None);
            let s = IntervalScheme::new(&g, rep.clone(), mode).unwrap();
            let mut opts = VerifyOptions::exact(4);
            opts.radius = radius;
            let rep = verify_scheme(&dm, &s, &opts, &samples);
            assert!(rep.passed(), "{mode:?}: {rep}");
        }
    }
}
