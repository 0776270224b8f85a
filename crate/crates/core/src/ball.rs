//! Balls as concepts and the brute-force oracles over ball families.

use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::DistanceMatrix;
use crate::sample::{HalfInt, Sample, Sign};

/// Where a ball is centered: a vertex, or the midpoint of an edge (metric
/// trees only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Center {
    Vertex(usize),
    Midpoint(usize, usize),
}

/// A ball `B_r(x)` together with its member set, or the empty sentinel.
///
/// Two balls compare equal iff their member sets are equal.
#[derive(Debug, Clone)]
pub struct Ball {
    center: Option<Center>,
    radius: HalfInt,
    members: FixedBitSet,
}

impl Ball {
    pub fn new(dm: &DistanceMatrix, center: usize, radius: u32) -> Self {
        let mut members = FixedBitSet::with_capacity(dm.n());
        for (z, &d) in dm.row(center).iter().enumerate() {
            if d <= radius {
                members.insert(z);
            }
        }
        Ball {
            center: Some(Center::Vertex(center)),
            radius: HalfInt::from_int(radius),
            members,
        }
    }

    /// Ball centered at the midpoint of edge `uv`, with members the vertices
    /// within `radius` of that point.
    pub fn at_midpoint(dm: &DistanceMatrix, u: usize, v: usize, radius: HalfInt) -> Self {
        debug_assert_eq!(dm.get(u, v), 1);
        let mut members = FixedBitSet::with_capacity(dm.n());
        for z in 0..dm.n() {
            let twice = 2 * dm.get(u, z).min(dm.get(v, z)) + 1;
            if twice <= radius.twice() {
                members.insert(z);
            }
        }
        Ball {
            center: Some(Center::Midpoint(u.min(v), u.max(v))),
            radius,
            members,
        }
    }

    /// The sentinel returned for samples without positives.
    pub fn empty(n: usize) -> Self {
        Ball {
            center: None,
            radius: HalfInt(0),
            members: FixedBitSet::with_capacity(n),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.center.is_none()
    }

    pub fn center(&self) -> Option<Center> {
        self.center
    }

    /// Center vertex, `None` for the empty sentinel and midpoint centers.
    pub fn center_vertex(&self) -> Option<usize> {
        match self.center {
            Some(Center::Vertex(v)) => Some(v),
            _ => None,
        }
    }

    pub fn radius(&self) -> HalfInt {
        self.radius
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(v)
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn realizes(&self, x: &Sample) -> bool {
        x.is_realized_by(|v| self.contains(v))
    }
}

impl PartialEq for Ball {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Ball {}

impl Hash for Ball {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

/// One ball per distinct member set, represented by the lexicographically
/// smallest `(radius, center)`, in that order.
pub fn enumerate_balls(dm: &DistanceMatrix, radius: Option<u32>) -> Vec<Ball> {
    let radii = match radius {
        Some(r) => r..=r,
        None => 0..=dm.diameter(),
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in radii {
        for x in 0..dm.n() {
            let b = Ball::new(dm, x, r);
            if seen.insert(b.members.clone()) {
                out.push(b);
            }
        }
    }
    out
}

/// Members of `family` containing every positive and no negative of `x`.
pub fn realizing_balls(x: &Sample, family: &[Ball]) -> Vec<Ball> {
    family.iter().filter(|b| b.realizes(x)).cloned().collect()
}

/// Size of the largest vertex set shattered by `family` (exhaustive).
pub fn vc_dimension(family: &[FixedBitSet], n: usize) -> usize {
    if family.is_empty() {
        return 0;
    }
    let mut best = 0;
    let mut candidates: Vec<Vec<usize>> = vec![Vec::new()];
    // Shattering is hereditary: extend only shattered sets, in increasing
    // order of their last element.
    loop {
        let mut next = Vec::new();
        for y in &candidates {
            let start = y.last().map_or(0, |&l| l + 1);
            for v in start..n {
                let mut z = y.clone();
                z.push(v);
                if shatters(family, &z) {
                    next.push(z);
                }
            }
        }
        if next.is_empty() {
            return best;
        }
        best += 1;
        candidates = next;
    }
}

fn shatters(family: &[FixedBitSet], y: &[usize]) -> bool {
    let k = y.len();
    let mut seen = vec![false; 1 << k];
    let mut count = 0;
    for c in family {
        let trace = y
            .iter()
            .enumerate()
            .filter(|(_, &v)| c.contains(v))
            .fold(0usize, |acc, (i, _)| acc | (1 << i));
        if !seen[trace] {
            seen[trace] = true;
            count += 1;
            if count == 1 << k {
                return true;
            }
        }
    }
    false
}

/// Member sets of a ball family, for [`vc_dimension`].
pub fn member_sets(family: &[Ball]) -> Vec<FixedBitSet> {
    family.iter().map(|b| b.members.clone()).collect()
}

/// Largest graph order for which sample enumeration is exhaustive.
pub const EXHAUSTIVE_LIMIT: usize = 12;

/// Seed used by [`enumerate_realizable_samples`] beyond the exhaustive
/// limit.
pub const DEFAULT_SAMPLE_SEED: u64 = 0x5eed_ba11;

/// Default number of sampled samples beyond the exhaustive limit.
pub const DEFAULT_SAMPLE_COUNT: usize = 10_000;

/// Realizable samples in lexicographic order (exhaustive for
/// `n <= EXHAUSTIVE_LIMIT`, seeded sampling otherwise), truncated at `cap`.
pub fn enumerate_realizable_samples(n: usize, family: &[Ball], cap: Option<usize>) -> Vec<Sample> {
    if n > EXHAUSTIVE_LIMIT {
        let count = cap.unwrap_or(DEFAULT_SAMPLE_COUNT);
        return sample_realizable(n, family, count, DEFAULT_SAMPLE_SEED);
    }
    let mut out = Vec::new();
    let alive: Vec<usize> = (0..family.len()).collect();
    let mut current = Sample::zero(n);
    let cap = cap.unwrap_or(usize::MAX);
    extend(0, &alive, family, &mut current, &mut out, cap);
    out
}

fn extend(
    v: usize,
    alive: &[usize],
    family: &[Ball],
    current: &mut Sample,
    out: &mut Vec<Sample>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    if v == current.n() {
        out.push(current.clone());
        return;
    }
    for sign in [None, Some(Sign::Pos), Some(Sign::Neg)] {
        let next: Vec<usize> = match sign {
            None => alive.to_vec(),
            Some(Sign::Pos) => alive.iter().copied().filter(|&b| family[b].contains(v)).collect(),
            Some(Sign::Neg) => alive.iter().copied().filter(|&b| !family[b].contains(v)).collect(),
        };
        if !next.is_empty() {
            current.set(v, sign);
            extend(v + 1, &next, family, current, out, cap);
            current.set(v, None);
        }
    }
}

/// `count` random realizable samples: a uniform ball of `family`, then each
/// vertex labeled by membership with a per-sample density.
pub fn sample_realizable(n: usize, family: &[Ball], count: usize, seed: u64) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let b = &family[rng.gen_range(0..family.len())];
            let density: f64 = rng.gen();
            let mut x = Sample::zero(n);
            for v in 0..n {
                if rng.gen_bool(density) {
                    x.set(v, Some(if b.contains(v) { Sign::Pos } else { Sign::Neg }));
                }
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn p3() -> DistanceMatrix {
        Graph::new(3, &[(0, 1), (1, 2)]).unwrap().distances()
    }

    fn sets(balls: &[Ball]) -> Vec<Vec<usize>> {
        balls.iter().map(Ball::vertices).collect()
    }

    #[test]
    fn enumerate_small() {
        let balls = enumerate_balls(&p3(), None);
        assert_eq!(
            sets(&balls),
            vec![vec![0], vec![1], vec![2], vec![0, 1], vec![0, 1, 2], vec![1, 2]]
        );
        assert_eq!(balls[4].center_vertex(), Some(1));
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap().distances();
        assert_eq!(enumerate_balls(&k3, None).len(), 4);
        assert_eq!(enumerate_balls(&k3, Some(0)).len(), 3);
    }

    #[test]
    fn realizing() {
        let fam = enumerate_balls(&p3(), None);
        let x = Sample::from_sets(3, &[0], &[2]);
        assert_eq!(sets(&realizing_balls(&x, &fam)), vec![vec![0], vec![0, 1]]);
        let x = Sample::from_sets(3, &[0, 2], &[1]);
        assert!(realizing_balls(&x, &fam).is_empty());
        assert_eq!(realizing_balls(&Sample::zero(3), &fam).len(), 6);
    }

    #[test]
    fn vc_small() {
        assert_eq!(vc_dimension(&member_sets(&enumerate_balls(&p3(), None)), 3), 2);
        let k2 = Graph::new(2, &[(0, 1)]).unwrap().distances();
        assert_eq!(vc_dimension(&member_sets(&enumerate_balls(&k2, None)), 2), 1);
        let mut all = FixedBitSet::with_capacity(3);
        all.insert_range(..);
        assert_eq!(vc_dimension(&[all], 3), 0);
    }

    #[test]
    fn realizable_samples() {
        let k1 = Graph::new(1, &[]).unwrap().distances();
        let s = enumerate_realizable_samples(1, &enumerate_balls(&k1, None), None);
        assert_eq!(s, vec![Sample::zero(1), Sample::from_sets(1, &[0], &[])]);

        let fam = enumerate_balls(&p3(), None);
        let s = enumerate_realizable_samples(3, &fam, None);
        assert_eq!(s[0], Sample::zero(3));
        // 27 sign maps filtered against the six balls of P3
        assert_eq!(s.len(), 25);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(enumerate_realizable_samples(3, &fam, Some(5)).len(), 5);
    }

    #[test]
    fn midpoint_ball() {
        let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap().distances();
        let b = Ball::at_midpoint(&p5, 1, 2, HalfInt(3));
        assert_eq!(b.vertices(), vec![0, 1, 2, 3]);
        assert_eq!(b.center(), Some(Center::Midpoint(1, 2)));
    }
}
