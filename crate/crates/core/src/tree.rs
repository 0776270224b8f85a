//! Schemes for balls of trees: an unlabeled scheme with metric balls, a
//! labeled scheme for balls of any radius, and two labeled schemes for
//! balls of a fixed radius (ordered slots, and plain labeled sets).

use crate::ball::Ball;
use crate::error::{Error, Result};
use crate::graph::{dfs_sphere_order, phi, DistanceMatrix, Graph, Side, SphereOrder};
use crate::sample::{CompressedSample, Sample, Sign};
use crate::verify::Scheme;

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotTree)
    }
}

/// Vertex at distance `k` from `a` on the (unique) `(a,b)`-path.
fn along(t: &Graph, dm: &DistanceMatrix, a: usize, b: usize, k: u32) -> usize {
    t.canonical_path(dm, a, b)[k as usize]
}

fn positives_entries(vs: &[usize]) -> Vec<(usize, Sign)> {
    vs.iter().map(|&v| (v, Sign::Pos)).collect()
}

/// Diametral pair of `X⁺` as a list: empty, one vertex, or two.
fn diametral(dm: &DistanceMatrix, pos: &[usize]) -> Vec<usize> {
    match dm.diametral_pair(pos) {
        None => vec![],
        Some((u, v)) if u == v => vec![u],
        Some((u, v)) => vec![u, v],
    }
}

/// Unlabeled scheme of size two: a diametral pair of the positives,
/// decoded to the ball centered at the middle of the path between them.
/// For odd distances the center is an edge midpoint and the radius a
/// half-integer, so properness is relative to the metric tree.
pub struct TreeUscs {
    t: Graph,
    dm: DistanceMatrix,
}

impl TreeUscs {
    pub fn new(t: &Graph) -> Result<Self> {
        require_tree(t)?;
        Ok(TreeUscs {
            t: t.clone(),
            dm: t.distances(),
        })
    }

    pub fn compress_set(&self, x: &Sample) -> Vec<usize> {
        diametral(&self.dm, &x.positives())
    }

    pub fn reconstruct_set(&self, y: &[usize]) -> Result<Ball> {
        match *y {
            [] => Ok(Ball::empty(self.t.n())),
            [u] => Ok(Ball::new(&self.dm, u, 0)),
            [u, v] => {
                let d = self.dm.get(u, v);
                let path = self.t.canonical_path(&self.dm, u, v);
                let k = (d / 2) as usize;
                if d.is_multiple_of(2) {
                    Ok(Ball::new(&self.dm, path[k], d / 2))
                } else {
                    Ok(Ball::at_midpoint(&self.dm, path[k], path[k + 1], crate::HalfInt(d)))
                }
            }
            _ => Err(Error::MalformedInput("more than two vertices".into())),
        }
    }
}

impl Scheme for TreeUscs {
    fn id(&self) -> String {
        "tree-uscs".into()
    }

    fn compress(&self, x: &Sample) -> Result<CompressedSample> {
        Ok(CompressedSample::from_entries(&positives_entries(&self.compress_set(x))))
    }

    fn reconstruct(&self, y: &CompressedSample) -> Result<Ball> {
        let mut vs: Vec<usize> = y.entries().map(|e| e.0).collect();
        vs.sort_unstable();
        self.reconstruct_set(&vs)
    }
}

/// Labeled scheme of size two for balls of any radius.
pub struct TreeLscs {
    t: Graph,
    dm: DistanceMatrix,
}

impl TreeLscs {
    pub fn new(t: &Graph) -> Result<Self> {
        require_tree(t)?;
        Ok(TreeLscs {
            t: t.clone(),
            dm: t.distances(),
        })
    }
}

impl Scheme for TreeLscs {
    fn id(&self) -> String {
        "tree-lscs".into()
    }

    fn compress(&self, x: &Sample) -> Result<CompressedSample> {
        let pos = x.positives();
        let (u, v) = match *diametral(&self.dm, &pos) {
            [] | [_] => return Ok(CompressedSample::from_entries(&positives_entries(&pos))),
            [u, v] => (u, v),
            _ => unreachable!(),
        };
        let d = self.dm.get(u, v);
        let r = d.div_ceil(2);
        let bx = Ball::new(&self.dm, along(&self.t, &self.dm, u, v, d / 2), r);
        let by = Ball::new(&self.dm, along(&self.t, &self.dm, u, v, r), r);
        let (fx, fy) = (bx.realizes(x), by.realizes(x));
        if fx && fy {
            return Ok(CompressedSample::from_entries(&[(u, Sign::Pos), (v, Sign::Pos)]));
        }
        // Only one of the two balls realizes X; keep the endpoint on its side
        // and a negative in the other ball at distance 2r from it.
        let (keep, other) = match (fx, fy) {
            (true, false) => (u, &by),
            (false, true) => (v, &bx),
            _ => return Err(Error::NotRealizable),
        };
        let w = x
            .negatives()
            .into_iter()
            .find(|&w| other.contains(w) && self.dm.get(keep, w) == 2 * r)
            .ok_or(Error::NotRealizable)?;
        Ok(CompressedSample::from_entries(&[(keep, Sign::Pos), (w, Sign::Neg)]))
    }

    fn reconstruct(&self, y: &CompressedSample) -> Result<Ball> {
        let pos = y.with_sign(Sign::Pos);
        let neg = y.with_sign(Sign::Neg);
        match (pos.as_slice(), neg.as_slice()) {
            ([], []) => Ok(Ball::empty(self.t.n())),
            ([u], []) => Ok(Ball::new(&self.dm, *u, 0)),
            ([u, v], []) => {
                let r = self.dm.get(*u, *v).div_ceil(2);
                any_ball_containing(&self.dm, r, &pos)
                    .ok_or_else(|| Error::MalformedInput("no ball contains the pair".into()))
            }
            ([u], [w]) => {
                let d = self.dm.get(*u, *w);
                if d % 2 == 1 || d == 0 {
                    return Err(Error::MalformedInput(format!("d({u},{w}) = {d} is not even")));
                }
                let r = d / 2;
                Ok(Ball::new(&self.dm, along(&self.t, &self.dm, *u, *w, r - 1), r))
            }
            _ => Err(Error::MalformedInput(format!("unexpected shape [{y}]"))),
        }
    }
}

/// Smallest-id center whose `r`-ball contains all of `vs`.
fn any_ball_containing(dm: &DistanceMatrix, r: u32, vs: &[usize]) -> Option<Ball> {
    (0..dm.n())
        .find(|&c| vs.iter().all(|&v| dm.get(c, v) <= r))
        .map(|c| Ball::new(dm, c, r))
}

/// Smallest-id center whose `r`-ball misses all of `vs`.
fn any_ball_avoiding(dm: &DistanceMatrix, r: u32, vs: &[usize]) -> Option<Ball> {
    (0..dm.n())
        .find(|&c| vs.iter().all(|&v| dm.get(c, v) > r))
        .map(|c| Ball::new(dm, c, r))
}

/// How fixed-radius schemes treat samples without positives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EmptyPositives {
    /// Compress to nothing and decode to the empty set.
    #[default]
    EmptySet,
    /// Run the general case analysis, so the output is always an `r`-ball.
    Encode,
}

/// How a sample is witnessed for the fixed-radius schemes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixedRadiusCase {
    /// Every `r`-ball containing the positives realizes the sample.
    Covering(Vec<usize>),
    /// Every center on `S_{r+1}(s)` realizes the sample.
    WholeSphere(usize),
    /// `t` designates the realizing center on `S_{r+1}(s)`.
    Designated { s: usize, t: usize, sign: Sign },
}

/// Shared machinery of the two fixed-radius tree schemes.
struct FixedRadius {
    t: Graph,
    dm: DistanceMatrix,
    r: u32,
    spheres: Vec<SphereOrder>,
    empty: EmptyPositives,
}

impl FixedRadius {
    fn new(t: &Graph, r: u32, empty: EmptyPositives) -> Result<Self> {
        require_tree(t)?;
        let spheres = (0..t.n()).map(|s| dfs_sphere_order(t, s, r + 1)).collect();
        Ok(FixedRadius {
            t: t.clone(),
            dm: t.distances(),
            r,
            spheres,
            empty,
        })
    }

    fn realizes(&self, c: usize, x: &Sample) -> bool {
        x.is_realized_by(|v| self.dm.get(c, v) <= self.r)
    }

    fn designated_center(&self, s: usize, t: usize, sign: Sign) -> Result<usize> {
        let side = match sign {
            Sign::Pos => Side::Inside,
            Sign::Neg => Side::Outside,
        };
        phi(&self.dm, &self.spheres[s], t, self.r, side)
    }

    /// Whether `t` is a center designator of `s` for `x`.
    fn designates(&self, x: &Sample, s: usize, t: usize, sign: Sign) -> bool {
        self.designated_center(s, t, sign)
            .is_ok_and(|c| self.realizes(c, x))
    }

    /// The first applicable case of the center-designator case analysis.
    fn classify(&self, x: &Sample) -> Result<FixedRadiusCase> {
        let pos = x.positives();
        let neg = x.negatives();
        let centers: Vec<usize> = (0..self.t.n())
            .filter(|&c| pos.iter().all(|&v| self.dm.get(c, v) <= self.r))
            .collect();
        if centers.is_empty() {
            return Err(Error::NotRealizable);
        }
        if centers.iter().all(|&c| self.realizes(c, x)) {
            return Ok(FixedRadiusCase::Covering(diametral(&self.dm, &pos)));
        }
        for &s in &neg {
            let so = &self.spheres[s];
            if !so.is_empty() && so.order.iter().all(|&c| self.realizes(c, x)) {
                return Ok(FixedRadiusCase::WholeSphere(s));
            }
        }
        for &s in &neg {
            let order = &self.spheres[s].order;
            let k = order.len();
            let Some(i) = (0..k).find(|&i| {
                self.realizes(order[i], x) && !self.realizes(order[(i + 1) % k], x)
            }) else {
                continue;
            };
            let (cx, cy) = (order[i], order[(i + 1) % k]);
            let t = (0..self.t.n())
                .filter_map(|v| match x.get(v) {
                    Some(Sign::Pos) if self.dm.get(cy, v) > self.r => Some((v, Sign::Pos)),
                    Some(Sign::Neg) if self.dm.get(cy, v) <= self.r => Some((v, Sign::Neg)),
                    _ => None,
                })
                .next()
                .expect("a non-realizing neighbor center has a witness");
            debug_assert_eq!(self.designated_center(s, t.0, t.1), Ok(cx));
            return Ok(FixedRadiusCase::Designated {
                s,
                t: t.0,
                sign: t.1,
            });
        }
        Err(Error::NotRealizable)
    }

    fn covering(&self, pos: &[usize]) -> Result<Ball> {
        any_ball_containing(&self.dm, self.r, pos)
            .ok_or_else(|| Error::MalformedInput("no r-ball contains the positives".into()))
    }

    fn on_sphere(&self, s: usize) -> Result<Ball> {
        let c = *self.spheres[s]
            .order
            .iter()
            .min()
            .ok_or_else(|| Error::MalformedInput(format!("sphere around {s} is empty")))?;
        Ok(Ball::new(&self.dm, c, self.r))
    }

    fn centered(&self, s: usize, t: usize, sign: Sign) -> Result<Ball> {
        let c = self
            .designated_center(s, t, sign)
            .map_err(|_| Error::MalformedInput(format!("{t} does not designate a center for {s}")))?;
        Ok(Ball::new(&self.dm, c, self.r))
    }
}

/// Labeled scheme of size two for `r`-balls of a tree, using slot order
/// to tell a negative from its center designator.
pub struct TreeFixedRadius {
    inner: FixedRadius,
}

impl TreeFixedRadius {
    pub fn new(t: &Graph, r: u32) -> Result<Self> {
        Self::with_policy(t, r, EmptyPositives::default())
    }

    pub fn with_policy(t: &Graph, r: u32, empty: EmptyPositives) -> Result<Self> {
        Ok(TreeFixedRadius {
            inner: FixedRadius::new(t, r, empty)?,
        })
    }

    pub fn radius(&self) -> u32 {
        self.inner.r
    }

    pub fn classify(&self, x: &Sample) -> Result<FixedRadiusCase> {
        self.inner.classify(x)
    }
}

impl Scheme for TreeFixedRadius {
    fn id(&self) -> String {
        format!("tree-fixed-r{}", self.inner.r)
    }

    fn compress(&self, x: &Sample) -> Result<CompressedSample> {
        if x.positives().is_empty() && self.inner.empty == EmptyPositives::EmptySet {
            return Ok(CompressedSample::from_entries(&[]));
        }
        let entries = match self.inner.classify(x)? {
            FixedRadiusCase::Covering(pair) => positives_entries(&pair),
            FixedRadiusCase::WholeSphere(s) => vec![(s, Sign::Neg)],
            FixedRadiusCase::Designated { s, t, sign } => vec![(s, Sign::Neg), (t, sign)],
        };
        Ok(CompressedSample::from_entries(&entries))
    }

    fn reconstruct(&self, y: &CompressedSample) -> Result<Ball> {
        let f = &self.inner;
        let e: Vec<(usize, Sign)> = y.entries().collect();
        match e.as_slice() {
            [] if f.empty == EmptyPositives::EmptySet => Ok(Ball::empty(f.t.n())),
            [] => f.covering(&[]),
            [(s, Sign::Neg)] => f.on_sphere(*s),
            [(s, Sign::Neg), (t, sign)] => f.centered(*s, *t, *sign),
            _ if e.iter().all(|p| p.1 == Sign::Pos) && e.len() <= 2 => {
                f.covering(&e.iter().map(|p| p.0).collect::<Vec<_>>())
            }
            _ => Err(Error::MalformedInput(format!("unexpected shape [{y}]"))),
        }
    }
}

/// Labeled scheme of size six for `r`-balls of a tree whose compressed
/// samples are plain sets; vertex ids play the role of the fixed labeling
/// that disambiguates a negative from its designator.
pub struct TreeFixedRadiusSets {
    inner: FixedRadius,
}

impl TreeFixedRadiusSets {
    pub fn new(t: &Graph, r: u32) -> Result<Self> {
        Self::with_policy(t, r, EmptyPositives::default())
    }

    pub fn with_policy(t: &Graph, r: u32, empty: EmptyPositives) -> Result<Self> {
        Ok(TreeFixedRadiusSets {
            inner: FixedRadius::new(t, r, empty)?,
        })
    }

    /// Negative-designator pairs `(s, t)`, both in `X⁻`.
    fn negative_pairs(&self, x: &Sample) -> Vec<(usize, usize)> {
        let neg = x.negatives();
        let mut out = Vec::new();
        for &s in &neg {
            for &t in &neg {
                if s != t && self.inner.designates(x, s, t, Sign::Neg) {
                    out.push((s, t));
                }
            }
        }
        out
    }

    fn encode_designated(&self, x: &Sample) -> Result<Vec<(usize, Sign)>> {
        let f = &self.inner;
        let pos = x.positives();
        let neg = x.negatives();
        for &s in &neg {
            for &t in &pos {
                if f.designates(x, s, t, Sign::Pos) {
                    return Ok(vec![(s, Sign::Neg), (t, Sign::Pos)]);
                }
            }
        }
        let pairs = self.negative_pairs(x);
        let negs = |vs: &[usize]| vs.iter().map(|&v| (v, Sign::Neg)).collect::<Vec<_>>();
        if let Some(&(s, t)) = pairs.iter().find(|(s, t)| s < t) {
            return Ok(negs(&[s, t]));
        }
        let &(s, t) = pairs.first().ok_or(Error::NotRealizable)?;
        if x.support_size() == 2 {
            return Ok(negs(&[s, t]));
        }
        if let Some(&w) = pos.first() {
            return Ok(vec![(s, Sign::Neg), (t, Sign::Neg), (w, Sign::Pos)]);
        }
        // No positives, and every designator pair has t < s.
        for &(s, t) in &pairs {
            if let Some(&p) = neg.iter().find(|&&p| p > s) {
                return Ok(negs(&[s, t, p]));
            }
        }
        if neg.len() == 3 {
            return Ok(negs(&neg));
        }
        // From here on s is the largest negative of every pair.
        for &(s, t) in &pairs {
            let between: Vec<usize> = neg.iter().copied().filter(|&v| t < v && v < s).collect();
            if between.len() >= 2 {
                return Ok(negs(&[s, t, between[0], between[1]]));
            }
        }
        if neg.len() == 4 {
            return Ok(negs(&neg));
        }
        for &(s, t) in &pairs {
            let between: Vec<usize> = neg.iter().copied().filter(|&v| t < v && v < s).collect();
            let below: Vec<usize> = neg.iter().copied().filter(|&v| v < t).collect();
            if between.len() == 1 && below.len() >= 2 {
                return Ok(negs(&[s, t, between[0], below[0], below[1]]));
            }
        }
        if neg.len() == 5 {
            return Ok(negs(&neg));
        }
        // At least six negatives: t is the second largest.
        let others: Vec<usize> = neg.iter().copied().filter(|&v| v != s && v != t).take(4).collect();
        let mut set = vec![s, t];
        set.extend(others);
        Ok(negs(&set))
    }

    /// Decodes `y = φ_s⁻(t)` and falls back to a ball avoiding the whole
    /// support when that center meets it.
    fn designated_or_avoiding(&self, s: usize, t: usize, support: &[usize]) -> Result<Ball> {
        let f = &self.inner;
        if let Ok(c) = f.designated_center(s, t, Sign::Neg) {
            if support.iter().all(|&v| f.dm.get(c, v) > f.r) {
                return Ok(Ball::new(&f.dm, c, f.r));
            }
        }
        any_ball_avoiding(&f.dm, f.r, support)
            .ok_or_else(|| Error::MalformedInput("no r-ball avoids the negatives".into()))
    }
}

impl Scheme for TreeFixedRadiusSets {
    fn id(&self) -> String {
        format!("tree-fixed-r{}-sets", self.inner.r)
    }

    fn compress(&self, x: &Sample) -> Result<CompressedSample> {
        let f = &self.inner;
        if x.positives().is_empty() && f.empty == EmptyPositives::EmptySet {
            return Ok(CompressedSample::from_entries(&[]));
        }
        let mut entries = match f.classify(x)? {
            FixedRadiusCase::Covering(pair) => positives_entries(&pair),
            FixedRadiusCase::WholeSphere(s) => vec![(s, Sign::Neg)],
            FixedRadiusCase::Designated { .. } => self.encode_designated(x)?,
        };
        entries.sort_unstable();
        Ok(CompressedSample::from_entries(&entries))
    }

    fn reconstruct(&self, y: &CompressedSample) -> Result<Ball> {
        let f = &self.inner;
        let pos = y.with_sign(Sign::Pos);
        let mut neg = y.with_sign(Sign::Neg);
        neg.sort_unstable();
        match (pos.len(), neg.len()) {
            (0, 0) if f.empty == EmptyPositives::EmptySet => Ok(Ball::empty(f.t.n())),
            (_, 0) => f.covering(&pos),
            (0, 1) => f.on_sphere(neg[0]),
            (1, 1) => f.centered(neg[0], pos[0], Sign::Pos),
            (0, 2) => self.designated_or_avoiding(neg[0], neg[1], &neg),
            (1, 2) => f.centered(neg[1], neg[0], Sign::Neg),
            (0, 3) => self.designated_or_avoiding(neg[1], neg[0], &neg),
            (0, 4) => self.designated_or_avoiding(neg[3], neg[0], &neg),
            (0, 5) => self.designated_or_avoiding(neg[4], neg[2], &neg),
            (0, 6) => f.centered(neg[5], neg[4], Sign::Neg),
            _ => Err(Error::MalformedInput(format!("unexpected shape [{y}]"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::{enumerate_balls, enumerate_realizable_samples};
    use crate::verify::{verify_scheme, VerifyOptions};
    use crate::Center;

    fn p5() -> Graph {
        Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap()
    }

    fn star() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn entries(c: &CompressedSample) -> Vec<(usize, Sign)> {
        c.entries().collect()
    }

    use Sign::{Neg, Pos};

    #[test]
    fn uscs_examples() {
        let s = TreeUscs::new(&p5()).unwrap();
        assert_eq!(s.compress_set(&Sample::from_sets(5, &[0, 4], &[])), vec![0, 4]);
        assert_eq!(s.compress_set(&Sample::from_sets(5, &[2], &[])), vec![2]);
        assert_eq!(s.compress_set(&Sample::from_sets(5, &[0, 1, 3], &[4])), vec![0, 3]);
        let b = s.reconstruct_set(&[0, 4]).unwrap();
        assert_eq!((b.center_vertex(), b.radius().twice(), b.vertices()), (Some(2), 4, vec![0, 1, 2, 3, 4]));
        let b = s.reconstruct_set(&[0, 3]).unwrap();
        assert_eq!(b.center(), Some(Center::Midpoint(1, 2)));
        assert_eq!(b.radius().to_string(), "3/2");
        assert_eq!(b.vertices(), vec![0, 1, 2, 3]);
        assert!(s.reconstruct_set(&[]).unwrap().is_empty());
    }

    #[test]
    fn lscs_examples() {
        let s = TreeLscs::new(&p5()).unwrap();
        let c = s.compress(&Sample::from_sets(5, &[0, 3], &[4])).unwrap();
        assert_eq!(entries(&c), vec![(0, Pos), (4, Neg)]);
        assert_eq!(s.reconstruct(&c).unwrap().vertices(), vec![0, 1, 2, 3]);
        let c = s.compress(&Sample::from_sets(5, &[0, 4], &[])).unwrap();
        assert_eq!(entries(&c), vec![(0, Pos), (4, Pos)]);
        assert_eq!(s.reconstruct(&c).unwrap().center_vertex(), Some(2));
        let c = s.compress(&Sample::from_sets(5, &[1], &[])).unwrap();
        assert_eq!(entries(&c), vec![(1, Pos)]);
        assert_eq!(s.reconstruct(&c).unwrap().vertices(), vec![1]);
        let odd = CompressedSample::from_entries(&[(0, Pos), (3, Neg)]);
        assert!(matches!(s.reconstruct(&odd), Err(Error::MalformedInput(_))));
    }

    #[test]
    fn fixed_radius_examples() {
        let s = TreeFixedRadius::new(&star(), 1).unwrap();
        let c = s.compress(&Sample::from_sets(4, &[0], &[1])).unwrap();
        assert_eq!(entries(&c), vec![(1, Neg)]);
        assert_eq!(s.reconstruct(&c).unwrap().center_vertex(), Some(2));
        let c = s.compress(&Sample::from_sets(4, &[0], &[1, 2])).unwrap();
        assert_eq!(entries(&c), vec![(1, Neg), (2, Neg)]);
        assert_eq!(s.reconstruct(&c).unwrap().vertices(), vec![0, 3]);

        let s = TreeFixedRadius::new(&p5(), 1).unwrap();
        let c = s.compress(&Sample::from_sets(5, &[1, 2], &[])).unwrap();
        assert_eq!(entries(&c), vec![(1, Pos), (2, Pos)]);
        assert_eq!(s.reconstruct(&c).unwrap().vertices(), vec![0, 1, 2]);
    }

    #[test]
    fn fixed_radius_sets_examples() {
        let s = TreeFixedRadiusSets::new(&star(), 1).unwrap();
        let c = s.compress(&Sample::from_sets(4, &[0], &[1, 2])).unwrap();
        assert_eq!(entries(&c), vec![(1, Neg), (2, Neg)]);
        assert_eq!(s.reconstruct(&c).unwrap().vertices(), vec![0, 3]);
        let c = s.compress(&Sample::from_sets(4, &[], &[1])).unwrap();
        assert!(s.reconstruct(&c).unwrap().is_empty());

        let s = TreeFixedRadiusSets::new(&p5(), 1).unwrap();
        let c = s.compress(&Sample::from_sets(5, &[2], &[0])).unwrap();
        assert_eq!(entries(&c), vec![(0, Neg)]);
        assert_eq!(s.reconstruct(&c).unwrap().center_vertex(), Some(2));
    }

    #[test]
    fn exhaustive_on_small_trees() {
        let trees = [p5(), star(), Graph::new(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap()];
        for t in &trees {
            let dm = t.distances();
            let all = enumerate_realizable_samples(t.n(), &enumerate_balls(&dm, None), None);
            let uscs = TreeUscs::new(t).unwrap();
            let opts = VerifyOptions { proper: false, ..VerifyOptions::exact(2) };
            assert!(verify_scheme(&dm, &uscs, &opts, &all).passed());
            let lscs = TreeLscs::new(t).unwrap();
            let rep = verify_scheme(&dm, &lscs, &VerifyOptions::exact(2), &all);
            assert!(rep.passed(), "{rep}");
            for r in 0..=dm.diameter() + 1 {
                let fam = enumerate_balls(&dm, Some(r));
                let samples = enumerate_realizable_samples(t.n(), &fam, None);
                for policy in [EmptyPositives::EmptySet, EmptyPositives::Encode] {
                    let opts = VerifyOptions::exact(2).with_radius(r);
                    let s = TreeFixedRadius::with_policy(t, r, policy).unwrap();
                    let rep = verify_scheme(&dm, &s, &opts, &samples);
                    assert!(rep.passed(), "{rep}");
                    let opts = VerifyOptions::exact(6).with_radius(r);
                    let s = TreeFixedRadiusSets::with_policy(t, r, policy).unwrap();
                    let rep = verify_scheme(&dm, &s, &opts, &samples);
                    assert!(rep.passed(), "{rep}");
                }
            }
        }
    }
}
